"""The plane-partition <-> N-matrix bijection and the word machinery
built on top of it (strict tableaux, longest-increasing-subsequence
statistics).
"""

from __future__ import annotations

from . import kernels
from .core import Cell, NMatrix, Partition, PlanePartition, Word


def phi(pp: PlanePartition, n: int, m: int) -> NMatrix:
    """Map a plane partition with at most n rows and entries <= m to its
    n x m descent-level-count matrix.
    """
    if pp.n_rows() > n or pp.max_entry() > m:
        raise ValueError("out of domain PP(inf,n,m)")
    return NMatrix(kernels.phi_counts(pp.rows, n, m), n, m)


def phi_inverse(D: NMatrix) -> PlanePartition:
    """The inverse map: the unique plane partition with at most n rows and
    entries <= m whose descent-level-count matrix is D.
    """
    return PlanePartition(kernels.phi_inverse_rows(D.entries, D.n_rows, D.n_cols))


def add_entry_in_row(pp: PlanePartition, level: int, i: int) -> PlanePartition:
    """Single insertion step of the inverse map: fill the leftmost column
    of length < i with the value `level` up to length i.

    Raises ValueError("invalid insertion") if the fill would break
    monotonicity; this cannot happen during a well-ordered inverse scan.
    """
    if level < 1 or i < 1:
        raise ValueError("level and row index must be positive")
    cols = [[pp.entry(r, c) for r in range(1, pp.n_rows() + 1) if pp.entry(r, c)]
            for c in range(1, (len(pp.rows[0]) if pp.rows else 0) + 1)]
    target = None
    for c in cols:
        if len(c) < i:
            target = c
            break
    if target is None:
        target = []
        cols.append(target)
    if target and target[-1] < level:
        raise ValueError("invalid insertion")
    target.extend([level] * (i - len(target)))
    n_rows = max(len(c) for c in cols)
    rows = [[c[r] for c in cols if len(c) > r] for r in range(n_rows)]
    try:
        return PlanePartition(rows)
    except ValueError:
        raise ValueError("invalid insertion") from None


def max_downright_path_weight(D: NMatrix, start: Cell, end: Cell) -> int:
    """Maximum entry sum over monotone down-right paths in D from start
    to end (steps (i,j)->(i+1,j) or (i,j+1)).
    """
    if start.i > end.i or start.j > end.j:
        raise ValueError("empty path set")
    if not (1 <= start.i and 1 <= start.j and end.i <= D.n_rows and end.j <= D.n_cols):
        raise ValueError("path endpoints outside the matrix")
    best_prev: list[int] = []
    for i in range(start.i, end.i + 1):
        best_row = []
        for j in range(start.j, end.j + 1):
            here = D.entry(i, j)
            up = best_prev[j - start.j] if best_prev else None
            left = best_row[-1] if best_row else None
            base = max(v for v in (up, left) if v is not None) if (best_prev or best_row) else 0
            best_row.append(base + here)
        best_prev = best_row
    return best_prev[-1]


def word_to_matrix(w: Word) -> NMatrix:
    """The m x n 0/1 matrix with a single 1 per column, at row w_i in
    column i.
    """
    n = len(w)
    rows = [[0] * n for _ in range(w.m)]
    for pos, letter in enumerate(w):
        rows[letter - 1][pos] = 1
    return NMatrix(rows, w.m, n)


def word_to_strict_tableau(w: Word) -> PlanePartition:
    """The strict tableau with filling [n] associated to a word of
    length n: the inverse map applied to the word's 0/1 matrix.
    """
    return phi_inverse(word_to_matrix(w))


def is_strict_tableau(pp: PlanePartition, n: int) -> bool:
    """True iff pp uses exactly the entries 1..n and each value occupies
    a single column.
    """
    column_of: dict[int, int] = {}
    seen: set[int] = set()
    for i, j in pp.cells():
        v = pp.entry(i, j)
        seen.add(v)
        if v in column_of and column_of[v] != j:
            return False
        column_of[v] = j
    return seen == set(range(1, n + 1)) if n > 0 else not seen


def strict_tableau_to_word(pp: PlanePartition, m: int) -> Word:
    """Read the word back off a strict tableau: the i-th letter is the
    deepest row index in which the value i appears.
    """
    n = pp.max_entry()
    if not is_strict_tableau(pp, n) or pp.n_rows() > m:
        raise ValueError("not a strict tableau")
    letters = [0] * n
    for i, j in pp.cells():
        v = pp.entry(i, j)
        letters[v - 1] = max(letters[v - 1], i)
    return Word(letters, m)


def lis_tail(w: Word, i: int) -> int:
    """L_i(w): length of the longest weakly increasing subsequence of w
    restricted to the top i letters {m-i+1, ..., m}.
    """
    if not 1 <= i <= w.m:
        raise ValueError("letter window out of range")
    return kernels.lis_tail(w.letters, w.m, i)


def greene_shape(w: Word) -> Partition:
    """The partition (L_m(w), ..., L_1(w)), trailing zeros trimmed."""
    vals = [lis_tail(w, i) for i in range(w.m, 0, -1)]
    return Partition(v for v in vals if v > 0)
