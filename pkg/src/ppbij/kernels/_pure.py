"""Pure-Python kernels for the enumeration and bijection inner loops.

These functions work on plain tuples (rows of a plane partition as a tuple
of tuples, matrices as a tuple of row tuples) so that the compiled backend
in _speed.pyx can share the exact same interface.  Wrapping into the value
types of ppbij.core happens in the calling modules.
"""

BACKEND = "pure"


def row_candidates(bounds, max_sum):
    """All weakly decreasing positive sequences r with r[j] <= bounds[j]
    and sum(r) <= max_sum, in lexicographic order (shorter prefixes first).

    bounds must itself be weakly decreasing.  The empty row is not included.
    """
    out = []
    row = []

    def extend(prev, budget):
        pos = len(row)
        if pos >= len(bounds):
            return
        cap = min(prev, bounds[pos], budget)
        for v in range(1, cap + 1):
            row.append(v)
            out.append(tuple(row))
            extend(v, budget - v)
            row.pop()
    extend(bounds[0] if bounds else 0, max_sum)
    return out


def pp_box(k, n, m, max_volume=None):
    """All plane partitions in the k x n x m box, as row-tuples.

    Bounded by total volume when max_volume is given.  Deterministic
    order: depth-first by rows, rows in lexicographic order.
    """
    if max_volume is None:
        max_volume = k * n * m
    results = []
    rows = []

    def recurse(budget):
        results.append(tuple(rows))
        if len(rows) >= n:
            return
        bounds = rows[-1] if rows else (m,) * k
        for cand in row_candidates(bounds, budget):
            rows.append(cand)
            recurse(budget - sum(cand))
            rows.pop()

    recurse(max_volume)
    return results


def pp_shape(shape, m, strict=False):
    """All fillings of the Young diagram `shape` with entries in [1, m],
    weakly decreasing along rows and (strictly, if strict) down columns.

    Returns row-tuples in deterministic depth-first order; cells are
    filled row-major.
    """
    shape = tuple(shape)
    if not shape:
        return [()]
    if strict and len(shape) > m:
        return []
    n_rows = len(shape)
    grid = [[0] * shape[i] for i in range(n_rows)]
    results = []

    def fill(i, j):
        if i == n_rows:
            results.append(tuple(tuple(r) for r in grid))
            return
        ni, nj = (i, j + 1) if j + 1 < shape[i] else (i + 1, 0)
        hi = m
        if j > 0:
            hi = min(hi, grid[i][j - 1])
        if i > 0 and j < shape[i - 1]:
            above = grid[i - 1][j]
            hi = min(hi, above - 1 if strict else above)
        lo = 1
        for v in range(hi, lo - 1, -1):
            grid[i][j] = v
            fill(ni, nj)
        grid[i][j] = 0

    fill(0, 0)
    return results


def matrices_weighted(n, m, weights, bound):
    """All n x m matrices of nonnegative integers with weighted entry sum
    sum(d[i][l] * weights[i][l]) <= bound, as entry row-tuples.

    weights is an n x m grid of positive integers (pass all ones for a
    plain total-sum bound).  Deterministic row-major order.
    """
    flat_w = [weights[i][j] for i in range(n) for j in range(m)]
    if any(w <= 0 for w in flat_w):
        raise ValueError("weights must be positive")
    cells = n * m
    entries = [0] * cells
    results = []

    def fill(pos, budget):
        if pos == cells:
            results.append(
                tuple(tuple(entries[i * m:(i + 1) * m]) for i in range(n))
            )
            return
        w = flat_w[pos]
        for d in range(budget // w + 1):
            entries[pos] = d
            fill(pos + 1, budget - d * w)
        entries[pos] = 0

    fill(0, bound)
    return results


def phi_counts(rows, n, m):
    """Descent level counts d[i][l] of a plane partition given as row
    tuples; returns an n x m grid (tuple of row tuples).
    """
    d = [[0] * m for _ in range(n)]
    n_rows = len(rows)
    for i in range(n_rows):
        row = rows[i]
        below = rows[i + 1] if i + 1 < n_rows else ()
        for j in range(len(row)):
            v = row[j]
            under = below[j] if j < len(below) else 0
            if v > under:
                d[i][v - 1] += 1
    return tuple(tuple(r) for r in d)


def phi_inverse_rows(entries, n, m):
    """Invert the descent-level-count map: rebuild the unique plane
    partition (row tuples) with at most n rows and entries <= m whose
    count matrix is `entries`.

    Scan order: value column l = m..1, row index i = n..1, one single
    insertion per unit of d[i][l].  Each insertion fills the leftmost
    column of length < i up to length i with the value l.
    """
    cols = []
    for l in range(m, 0, -1):
        for i in range(n, 0, -1):
            for _ in range(entries[i - 1][l - 1]):
                target = None
                for c in cols:
                    if len(c) < i:
                        target = c
                        break
                if target is None:
                    target = []
                    cols.append(target)
                if target and target[-1] < l:
                    raise ValueError("invalid insertion")
                target.extend([l] * (i - len(target)))
    n_rows = max((len(c) for c in cols), default=0)
    return tuple(
        tuple(c[r] for c in cols if len(c) > r) for r in range(n_rows)
    )


def lis_tail(letters, m, i):
    """Length of the longest weakly increasing subsequence of the word
    using only the top i letters {m-i+1, ..., m}.
    """
    lo = m - i + 1
    best = [0] * (m + 1)
    for a in letters:
        if a >= lo:
            prev = 0
            for c in range(lo, a + 1):
                if best[c] > prev:
                    prev = best[c]
            if prev + 1 > best[a]:
                best[a] = prev + 1
    return max(best)
