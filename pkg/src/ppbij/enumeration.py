"""Exhaustive generators for the combinatorial families (boxed plane
partitions, fillings of a fixed shape, N-matrices, words, strict
tableaux) and exact counters built on them (Kostka numbers, skew Schur
evaluations at all-ones, descent enumeration counts).

All generators are deterministic: depth-first in lexicographic order of a
canonical encoding, so golden tests on listings are order-stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from . import kernels
from .bijection import is_strict_tableau, phi_inverse
from .core import NMatrix, Partition, PlanePartition, Word


@dataclass(frozen=True)
class BoxSpec:
    """A k x n x m bounding box; k=None marks an unbounded row length."""

    k: int | None
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1 or (self.k is not None and self.k < 1):
            raise ValueError("box dimensions must be positive")


def gen_partitions_in_box(k: int, n: int) -> Iterator[Partition]:
    """All partitions with first part <= k and at most n parts.

    Yields C(k+n, n) partitions, the empty one first.
    """
    parts: list[int] = []

    def recurse(cap: int):
        yield Partition(parts)
        if len(parts) < n:
            for v in range(1, cap + 1):
                parts.append(v)
                yield from recurse(v)
                parts.pop()

    yield from recurse(k)


def gen_pp_box(k: int, n: int, m: int, max_volume: int | None = None
               ) -> Iterator[PlanePartition]:
    """All plane partitions in the k x n x m box, optionally restricted
    to volume <= max_volume.
    """
    for rows in kernels.pp_box(k, n, m, max_volume):
        yield PlanePartition(rows)


def gen_pp_exact(k: int, n: int, m: int) -> Iterator[PlanePartition]:
    """Plane partitions in the box whose base shape is exactly k x n."""
    for pp in gen_pp_box(k, n, m):
        if pp.exact_base(k, n, m):
            yield pp


def gen_pp_shape(lam: Partition, m: int) -> Iterator[PlanePartition]:
    """All plane partitions of shape lam with entries in [1, m]."""
    for rows in kernels.pp_shape(lam.parts, m, strict=False):
        yield PlanePartition(rows)


def gen_column_strict(lam: Partition, m: int) -> Iterator[PlanePartition]:
    """All column-strict fillings of lam with entries <= m (the
    combinatorial support of the Schur polynomial in m variables).
    """
    for rows in kernels.pp_shape(lam.parts, m, strict=True):
        yield PlanePartition(rows)


def gen_matrices(n: int, m: int, bound: int,
                 weight: Callable[[int, int], int] | None = None
                 ) -> Iterator[NMatrix]:
    """All n x m N-matrices D with sum(D[i][l] * weight(i, l)) <= bound.

    weight defaults to the constant 1 (a plain total-sum bound) and must
    be positive everywhere, otherwise the family is infinite.
    """
    if weight is None:
        grid = tuple((1,) * m for _ in range(n))
    else:
        grid = tuple(tuple(weight(i, l) for l in range(1, m + 1))
                     for i in range(1, n + 1))
        if any(w <= 0 for row in grid for w in row):
            raise ValueError("weights must be positive")
    for entries in kernels.matrices_weighted(n, m, grid, bound):
        yield NMatrix(entries, n, m)


def gen_words(n: int, m: int) -> Iterator[Word]:
    """All m**n words of length n in the alphabet [m]."""
    for letters in itertools.product(range(1, m + 1), repeat=n):
        yield Word(letters, m)


def gen_strict_tableaux(lam: Partition, n: int) -> Iterator[PlanePartition]:
    """All strict tableaux of shape lam with filling [n]: each value
    1..n occupies exactly one column.
    """
    if lam and not lam.part(1) <= n <= lam.size():
        return
    for pp in gen_pp_shape(lam, max(n, 1) if lam else 1):
        if is_strict_tableau(pp, n):
            yield pp


def f_lambda(lam: Partition, n: int) -> int:
    """The number of strict tableaux of shape lam with filling [n]."""
    return sum(1 for _ in gen_strict_tableaux(lam, n))


def kostka(lam: Partition, alpha: Sequence[int]) -> int:
    """The number of column-strict fillings of lam with content alpha
    (alpha[i-1] copies of the value i).
    """
    alpha = tuple(alpha)
    if lam.size() != sum(alpha):
        return 0
    count = 0
    for pp in gen_column_strict(lam, len(alpha)):
        content = [0] * len(alpha)
        for i, j in pp.cells():
            content[pp.entry(i, j) - 1] += 1
        if tuple(content) == alpha:
            count += 1
    return count


def skew_schur_ones(outer: Partition, inner: Partition, n: int) -> int:
    """The skew Schur evaluation s_{outer/inner}(1^n): the number of
    column-strict fillings of the skew diagram with entries <= n.
    """
    if not outer.contains(inner):
        raise ValueError("inner shape not contained in outer")
    cells = [(i, j)
             for i in range(1, len(outer) + 1)
             for j in range(inner.part(i) + 1, outer.part(i) + 1)]
    if not cells:
        return 1
    grid: dict[tuple[int, int], int] = {}
    count = 0

    def fill(pos: int) -> None:
        nonlocal count
        if pos == len(cells):
            count += 1
            return
        i, j = cells[pos]
        hi = n
        if (i, j - 1) in grid:
            hi = min(hi, grid[(i, j - 1)])
        if (i - 1, j) in grid:
            hi = min(hi, grid[(i - 1, j)] - 1)
        for v in range(1, hi + 1):
            grid[(i, j)] = v
            fill(pos + 1)
        grid.pop((i, j), None)

    fill(0)
    return count


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of `parts` nonnegative integers summing to
    `total`, in lexicographic order.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def gen_matrices_column_sums(n: int, alpha: Sequence[int]) -> Iterator[NMatrix]:
    """All n-row N-matrices whose column sums are exactly alpha."""
    per_column = [list(compositions(a, n)) for a in alpha]
    for choice in itertools.product(*per_column):
        rows = [tuple(col[i] for col in choice) for i in range(n)]
        yield NMatrix(rows, n, len(alpha))


def count_D_alpha(k: int | None, n: int, m: int, alpha: Sequence[int]) -> int:
    """The number of plane partitions in PP(k, n, m) whose value i sits in
    exactly alpha[i-1] columns, for i = 1..m.  k=None means unbounded row
    length; that case is counted through the matrix bijection (matrices
    with column sums alpha), which keeps the family finite.
    """
    alpha = tuple(alpha)
    if len(alpha) != m:
        raise ValueError("alpha must have length m")
    if k is None:
        count = 0
        for D in gen_matrices_column_sums(n, alpha):
            pp = phi_inverse(D)
            assert pp.column_counts(m) == alpha
            count += 1
        return count
    return sum(1 for pp in gen_pp_box(k, n, m) if pp.column_counts(m) == alpha)


def dominates(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """Dominance order on equal-length integer vectors: every prefix sum
    of beta weakly exceeds the matching prefix sum of alpha.
    """
    sa = sb = 0
    for a, b in zip(alpha, beta):
        sa += a
        sb += b
        if sb < sa:
            return False
    return True
