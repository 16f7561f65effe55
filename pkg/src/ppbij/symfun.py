"""Schur and dual Grothendieck polynomials, their Jacobi-Trudi
determinants, and the specializations used by the verification checks.

Symmetric polynomials are built over explicit value lists: a value is any
monomial MultiPoly (the constant 1, a power q^a, or a formal variable),
so the same code produces combinatorial polynomials, principal
specializations, and mixed lists like (1^{n-1}, z_1, ..., z_m).
"""

from __future__ import annotations

from typing import Sequence

from .core import Partition
from .enumeration import gen_column_strict, gen_pp_shape
from .poly import MultiPoly, VarTable, determinant, elementary_all


def family_vars(table: VarTable, family: str) -> list[MultiPoly]:
    """The variables of a family as monomial polynomials, in order."""
    return [MultiPoly.var(table, family, i)
            for i in range(1, table.arity(family) + 1)]


def ones(table: VarTable, count: int) -> list[MultiPoly]:
    return [MultiPoly.one(table)] * count


def q_powers(table: VarTable, lo: int, hi: int, family: str = "q") -> list[MultiPoly]:
    """The value list (q^lo, q^{lo+1}, ..., q^hi)."""
    return [MultiPoly.var(table, family, 1, power=a) for a in range(lo, hi + 1)]


def _weight(vals: Sequence[MultiPoly], exponents: Sequence[int]) -> MultiPoly:
    table = vals[0].table
    w = MultiPoly.one(table)
    for v, e in zip(vals, exponents):
        if e:
            w = w * v ** e
    return w


def schur_combinatorial(lam: Partition, xs: Sequence[MultiPoly]) -> MultiPoly:
    """The Schur polynomial of shape lam in the values xs, summed over
    column-strict fillings weighted by entry multiplicities.
    """
    if not xs:
        raise ValueError("need at least one value")
    table = xs[0].table
    m = len(xs)
    total = MultiPoly.zero(table)
    for pp in gen_column_strict(lam, m):
        content = [0] * m
        for i, j in pp.cells():
            content[pp.entry(i, j) - 1] += 1
        total = total + _weight(xs, content)
    return total


def schur_specialized(lam: Partition, vals: Sequence[MultiPoly],
                      table: VarTable | None = None) -> MultiPoly:
    """The Schur polynomial evaluated at a value list through the
    dual Jacobi-Trudi determinant det[e_{lam'_i - i + j}(vals)].
    """
    if table is None:
        if not vals:
            raise ValueError("empty value list needs an explicit table")
        table = vals[0].table
    if not lam:
        return MultiPoly.one(table)
    conj = lam.conjugate()
    k = lam.part(1)
    kmax = min(conj.part(1) + k, len(vals))
    e = elementary_all(kmax, vals) if vals else [MultiPoly.one(table)]

    def e_at(idx: int) -> MultiPoly:
        # e_idx vanishes beyond the number of values and for idx < 0
        if idx == 0:
            return MultiPoly.one(table)
        if 0 < idx < len(e):
            return e[idx]
        return MultiPoly.zero(table)

    matrix = [[e_at(conj.part(i) - i + j) for j in range(1, k + 1)]
              for i in range(1, k + 1)]
    return determinant(matrix, table)


def g_combinatorial(lam: Partition, zs: Sequence[MultiPoly]) -> MultiPoly:
    """The dual Grothendieck polynomial of shape lam in the values zs:
    plane partitions of shape lam with entries <= len(zs), weighted by
    column counts.
    """
    if not zs:
        raise ValueError("need at least one value")
    table = zs[0].table
    m = len(zs)
    total = MultiPoly.zero(table)
    for pp in gen_pp_shape(lam, m):
        total = total + _weight(zs, pp.column_counts(m))
    return total


def g_refined(lam: Partition, n: int, m: int,
              table: VarTable | None = None) -> MultiPoly:
    """The two-alphabet refinement: over plane partitions of shape lam
    with entries <= m, each descent cell (i,j) contributes x_i z_{value}.

    Zero when lam has more than n rows.  The default table has families
    x (arity n) and z (arity m).
    """
    if table is None:
        table = VarTable([("x", n), ("z", m)])
    total = MultiPoly.zero(table)
    if len(lam) > n:
        return total
    for pp in gen_pp_shape(lam, m):
        exp = [0] * table.nvars
        for i, j in pp.descent_set():
            exp[table.index("x", i)] += 1
            exp[table.index("z", pp.entry(i, j))] += 1
        total = total + MultiPoly(table, {tuple(exp): 1})
    return total


def g_jacobi_trudi(lam: Partition, zs: Sequence[MultiPoly]) -> MultiPoly:
    """The Jacobi-Trudi determinant for the dual Grothendieck polynomial:
    det[e_{lam'_i - i + j}(1^{lam'_i - 1}, zs)] of size lam_1.
    """
    if not zs:
        raise ValueError("need at least one value")
    table = zs[0].table
    if not lam:
        return MultiPoly.one(table)
    conj = lam.conjugate()
    k = lam.part(1)
    one = MultiPoly.one(table)

    def entry(i: int, j: int) -> MultiPoly:
        idx = conj.part(i) - i + j
        vals = [one] * (conj.part(i) - 1) + list(zs)
        if idx < 0 or idx > len(vals):
            return MultiPoly.zero(table)
        if idx == 0:
            return one
        return elementary_all(idx, vals)[idx]

    matrix = [[entry(i, j) for j in range(1, k + 1)] for i in range(1, k + 1)]
    return determinant(matrix, table)


def square_free_coefficient(p: MultiPoly, family: str = "x") -> int:
    """The coefficient of x_1 x_2 ... x_n (the full square-free monomial
    of the family, every other variable at exponent zero).
    """
    table = p.table
    exp = [0] * table.nvars
    sl = table.family_slice(family)
    for i in range(sl.start, sl.stop):
        exp[i] = 1
    return p.coefficient(tuple(exp))
