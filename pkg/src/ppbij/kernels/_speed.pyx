# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: same interface as ppbij.kernels._pure, with typed
inner loops.  Inputs and outputs are plain Python tuples so the two
backends are interchangeable.
"""

BACKEND = "compiled"


def row_candidates(bounds, max_sum):
    """Weakly decreasing positive sequences bounded entrywise by `bounds`
    with sum <= max_sum; lexicographic, empty row excluded.
    """
    cdef list out = []
    cdef list row = []
    cdef tuple b = tuple(bounds)
    _extend_row(out, row, b, b[0] if b else 0, max_sum)
    return out


cdef void _extend_row(list out, list row, tuple bounds, int prev, int budget):
    cdef int pos = len(row)
    cdef int cap, v
    if pos >= len(bounds):
        return
    cap = prev
    if <int>bounds[pos] < cap:
        cap = <int>bounds[pos]
    if budget < cap:
        cap = budget
    for v in range(1, cap + 1):
        row.append(v)
        out.append(tuple(row))
        _extend_row(out, row, bounds, v, budget - v)
        row.pop()


def pp_box(int k, int n, int m, max_volume=None):
    """All plane partitions in the k x n x m box as row tuples,
    volume-bounded when max_volume is given.
    """
    cdef int budget = k * n * m if max_volume is None else <int>max_volume
    cdef list results = []
    cdef list rows = []
    _pp_box_recurse(results, rows, k, n, m, budget)
    return results


cdef void _pp_box_recurse(list results, list rows, int k, int n, int m,
                          int budget):
    cdef tuple bounds
    cdef tuple cand
    results.append(tuple(rows))
    if len(rows) >= n:
        return
    bounds = rows[len(rows) - 1] if rows else (m,) * k
    for cand in row_candidates(bounds, budget):
        rows.append(cand)
        _pp_box_recurse(results, rows, k, n, m, budget - sum(cand))
        rows.pop()


def pp_shape(shape, int m, bint strict=False):
    """All (column-strict if strict) fillings of `shape` with entries in
    [1, m], as row tuples, filled row-major, larger values first.
    """
    cdef tuple sh = tuple(shape)
    if not sh:
        return [()]
    if strict and len(sh) > m:
        return []
    cdef list grid = [[0] * sh[i] for i in range(len(sh))]
    cdef list results = []
    _pp_shape_fill(results, grid, sh, m, strict, 0, 0)
    return results


cdef void _pp_shape_fill(list results, list grid, tuple shape, int m,
                         bint strict, int i, int j):
    cdef int n_rows = len(shape)
    cdef int ni, nj, hi, v, above
    cdef list row
    if i == n_rows:
        results.append(tuple(tuple(r) for r in grid))
        return
    if j + 1 < <int>shape[i]:
        ni = i
        nj = j + 1
    else:
        ni = i + 1
        nj = 0
    hi = m
    row = grid[i]
    if j > 0 and <int>row[j - 1] < hi:
        hi = <int>row[j - 1]
    if i > 0 and j < <int>shape[i - 1]:
        above = <int>(<list>grid[i - 1])[j]
        if strict:
            above -= 1
        if above < hi:
            hi = above
    for v in range(hi, 0, -1):
        row[j] = v
        _pp_shape_fill(results, grid, shape, m, strict, ni, nj)
    row[j] = 0


def matrices_weighted(int n, int m, weights, int bound):
    """All n x m N-matrices with weighted entry sum <= bound."""
    cdef list flat_w = [weights[i][j] for i in range(n) for j in range(m)]
    cdef int w
    for w in flat_w:
        if w <= 0:
            raise ValueError("weights must be positive")
    cdef list entries = [0] * (n * m)
    cdef list results = []
    _matrices_fill(results, entries, flat_w, n, m, 0, bound)
    return results


cdef void _matrices_fill(list results, list entries, list flat_w, int n,
                         int m, int pos, int budget):
    cdef int w, d, i
    if pos == n * m:
        results.append(
            tuple(tuple(entries[i * m:(i + 1) * m]) for i in range(n))
        )
        return
    w = <int>flat_w[pos]
    for d in range(budget // w + 1):
        entries[pos] = d
        _matrices_fill(results, entries, flat_w, n, m, pos + 1, budget - d * w)
    entries[pos] = 0


def phi_counts(rows, int n, int m):
    """Descent level counts of a plane partition given as row tuples."""
    cdef list d = [[0] * m for _ in range(n)]
    cdef int n_rows = len(rows)
    cdef int i, j, v, under
    cdef tuple row, below
    for i in range(n_rows):
        row = rows[i]
        below = rows[i + 1] if i + 1 < n_rows else ()
        for j in range(len(row)):
            v = <int>row[j]
            under = <int>below[j] if j < len(below) else 0
            if v > under:
                (<list>d[i])[v - 1] = <int>(<list>d[i])[v - 1] + 1
    return tuple(tuple(r) for r in d)


def phi_inverse_rows(entries, int n, int m):
    """Rebuild the plane partition whose descent-level-count matrix is
    `entries` (n x m); scan values downward, rows downward, inserting
    into the leftmost short-enough column.
    """
    cdef list cols = []
    cdef list target
    cdef int l, i, r, c, count
    for l in range(m, 0, -1):
        for i in range(n, 0, -1):
            count = <int>entries[i - 1][l - 1]
            for _ in range(count):
                target = None
                for c in range(len(cols)):
                    if len(<list>cols[c]) < i:
                        target = <list>cols[c]
                        break
                if target is None:
                    target = []
                    cols.append(target)
                if len(target) > 0 and <int>target[len(target) - 1] < l:
                    raise ValueError("invalid insertion")
                while len(target) < i:
                    target.append(l)
    cdef int n_rows = 0
    for c in range(len(cols)):
        if len(<list>cols[c]) > n_rows:
            n_rows = len(<list>cols[c])
    return tuple(
        tuple((<list>col)[r] for col in cols if len(<list>col) > r)
        for r in range(n_rows)
    )


def lis_tail(letters, int m, int i):
    """Longest weakly increasing subsequence length over the top i
    letters of the alphabet.
    """
    cdef int lo = m - i + 1
    cdef list best = [0] * (m + 1)
    cdef int a, c, prev, top
    for a in letters:
        if a >= lo:
            prev = 0
            for c in range(lo, a + 1):
                if <int>best[c] > prev:
                    prev = <int>best[c]
            if prev + 1 > <int>best[a]:
                best[a] = prev + 1
    top = 0
    for c in range(m + 1):
        if <int>best[c] > top:
            top = <int>best[c]
    return top
