"""Exact sparse multivariate polynomial arithmetic over the integers.

Coefficients are Python ints (arbitrary precision); exponent vectors are
dense tuples over a fixed variable table.  A graded-lexicographic order
fixes term iteration everywhere, so printing and serialization are
deterministic.  Nothing here is ever floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence


class VarTable:
    """An ordered list of named variable families with arities.

    Example: VarTable([("x", 2), ("z", 3), ("q", 1)]) flattens to the
    variables x1, x2, z1, z2, z3, q.  A family of arity 1 prints without
    an index.
    """

    __slots__ = ("families", "_offsets", "nvars")

    def __init__(self, families: Iterable[tuple[str, int]]):
        families = tuple((str(name), int(arity)) for name, arity in families)
        names = [name for name, _ in families]
        if len(set(names)) != len(names):
            raise ValueError("family names must be unique")
        if any(arity < 0 for _, arity in families):
            raise ValueError("arities must be nonnegative")
        self.families = families
        self._offsets = {}
        pos = 0
        for name, arity in families:
            self._offsets[name] = pos
            pos += arity
        self.nvars = pos

    def __eq__(self, other) -> bool:
        return isinstance(other, VarTable) and self.families == other.families

    def __hash__(self) -> int:
        return hash(self.families)

    def __repr__(self) -> str:
        return f"VarTable({list(self.families)})"

    def arity(self, family: str) -> int:
        for name, arity in self.families:
            if name == family:
                return arity
        raise KeyError(family)

    def index(self, family: str, i: int = 1) -> int:
        """Flat variable index of family member i (1-based)."""
        if not 1 <= i <= self.arity(family):
            raise IndexError(f"{family}[{i}] out of range")
        return self._offsets[family] + i - 1

    def family_slice(self, family: str) -> slice:
        start = self._offsets[family]
        return slice(start, start + self.arity(family))

    def var_names(self) -> list[str]:
        out = []
        for name, arity in self.families:
            if arity == 1:
                out.append(name)
            else:
                out.extend(f"{name}{i}" for i in range(1, arity + 1))
        return out


@dataclass(frozen=True)
class Truncation:
    """Degree window for series expansions: an optional total-degree cap
    and optional per-family total-degree caps (family name -> cap).
    """

    max_total: int | None = None
    family_caps: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.max_total is not None and self.max_total < 0:
            raise ValueError("max_total must be nonnegative")
        if any(c < 0 for c in self.family_caps.values()):
            raise ValueError("caps must be nonnegative")

    def keeps(self, table: VarTable, exp: tuple[int, ...]) -> bool:
        if self.max_total is not None and sum(exp) > self.max_total:
            return False
        for family, cap in self.family_caps.items():
            if sum(exp[table.family_slice(family)]) > cap:
                return False
        return True


def _grlex_key(exp: tuple[int, ...]):
    return (sum(exp), exp)


class MultiPoly:
    """A sparse polynomial: map from exponent vector to nonzero integer
    coefficient, over a fixed VarTable.
    """

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: Mapping[tuple[int, ...], int] = ()):
        self.table = table
        clean = {}
        for exp, coef in dict(terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != table.nvars:
                raise ValueError("exponent vector has wrong length")
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent")
            if coef:
                clean[exp] = int(coef)
        self.terms = clean

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(table: VarTable) -> "MultiPoly":
        return MultiPoly(table)

    @staticmethod
    def const(table: VarTable, c: int) -> "MultiPoly":
        return MultiPoly(table, {(0,) * table.nvars: c})

    @staticmethod
    def one(table: VarTable) -> "MultiPoly":
        return MultiPoly.const(table, 1)

    @staticmethod
    def var(table: VarTable, family: str, i: int = 1, power: int = 1) -> "MultiPoly":
        exp = [0] * table.nvars
        exp[table.index(family, i)] = power
        return MultiPoly(table, {tuple(exp): 1})

    # -- inspection ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading(self) -> tuple[tuple[int, ...], int]:
        """Leading (exponent, coefficient) in grlex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def single_term(self) -> tuple[tuple[int, ...], int]:
        if len(self.terms) != 1:
            raise ValueError("not a monomial")
        return next(iter(self.terms.items()))

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.table != other.table:
            raise ValueError("mismatched variable tables")

    def __eq__(self, other) -> bool:
        return (isinstance(other, MultiPoly) and self.table == other.table
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.table, frozenset(self.terms.items())))

    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.const(self.table, other)
        self._check(other)
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            c = out.get(exp, 0) + coef
            if c:
                out[exp] = c
            else:
                out.pop(exp, None)
        return MultiPoly(self.table, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.table, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.const(self.table, other)
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly(self.table, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        return self.mul_truncated(other, None)

    __rmul__ = __mul__

    def mul_truncated(self, other: "MultiPoly", trunc: Truncation | None) -> "MultiPoly":
        """Product, dropping result monomials outside the truncation."""
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        table = self.table
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                if trunc is not None and not trunc.keeps(table, exp):
                    continue
                c = out.get(exp, 0) + c1 * c2
                if c:
                    out[exp] = c
                else:
                    del out[exp]
        return MultiPoly(table, out)

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.table)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def truncate(self, trunc: Truncation) -> "MultiPoly":
        return MultiPoly(self.table, {e: c for e, c in self.terms.items()
                                      if trunc.keeps(self.table, e)})

    # -- rendering / serialization ------------------------------------

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.table.var_names()
        parts = []
        for exp, coef in self.sorted_terms():
            factors = [f"{names[i]}" + (f"^{e}" if e > 1 else "")
                       for i, e in enumerate(exp) if e]
            body = "*".join(factors)
            if not body:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(body)
            elif coef == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coef}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "vars": self.table.var_names(),
            "terms": [{"exp": list(exp), "coef": str(coef)}
                      for exp, coef in self.sorted_terms()],
        }

    @staticmethod
    def from_json(data: dict, table: VarTable) -> "MultiPoly":
        if data["vars"] != table.var_names():
            raise ValueError("variable list does not match the table")
        return MultiPoly(table, {tuple(t["exp"]): int(t["coef"])
                                 for t in data["terms"]})


# -- series and specialization helpers --------------------------------


def geometric_factor(mono: MultiPoly, trunc: Truncation) -> MultiPoly:
    """The truncated geometric series 1 + mono + mono^2 + ... for a
    monomial of positive degree.
    """
    exp, coef = mono.single_term()
    deg = sum(exp)
    if deg == 0:
        raise ValueError("non-invertible truncation")
    table = mono.table
    bounds = []
    if trunc.max_total is not None:
        bounds.append(trunc.max_total // deg)
    for family, cap in trunc.family_caps.items():
        fdeg = sum(exp[table.family_slice(family)])
        if fdeg > 0:
            bounds.append(cap // fdeg)
    if not bounds:
        raise ValueError("truncation does not bound the series")
    terms = {}
    c = 1
    for j in range(min(bounds) + 1):
        terms[tuple(e * j for e in exp)] = c
        c *= coef
    return MultiPoly(table, terms)


def product_series(factors: Iterable[tuple[MultiPoly, int]],
                   trunc: Truncation) -> MultiPoly:
    """Truncated expansion of prod 1/(1 - mono)^mult over the given
    (monomial, multiplicity) factors.
    """
    result = None
    for mono, mult in factors:
        if result is None:
            result = MultiPoly.one(mono.table)
        geo = geometric_factor(mono, trunc)
        for _ in range(mult):
            result = result.mul_truncated(geo, trunc)
    if result is None:
        raise ValueError("empty factor list")
    return result


def elementary_eval(k: int, vals: Sequence[MultiPoly]) -> MultiPoly:
    """The elementary symmetric polynomial e_k evaluated at a finite
    multiset of monomial values; e_0 = 1, e_k = 0 for k > len(vals) or
    k < 0.
    """
    if not vals:
        raise ValueError("empty value list needs an explicit table")
    return elementary_all(k, vals)[k] if 0 <= k <= len(vals) else \
        MultiPoly.zero(vals[0].table)


def elementary_all(kmax: int, vals: Sequence[MultiPoly]) -> list[MultiPoly]:
    """[e_0, ..., e_kmax] evaluated at vals, by the one-value-at-a-time
    recurrence.
    """
    table = vals[0].table
    e = [MultiPoly.one(table)] + [MultiPoly.zero(table)] * kmax
    for v in vals:
        for j in range(kmax, 0, -1):
            e[j] = e[j] + e[j - 1] * v
    return e


def exact_div(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """Exact polynomial division (raises if den does not divide num).

    Valid because grlex is a monomial order: the leading term of the
    quotient is the quotient of leading terms.
    """
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    table = num.table
    dexp, dcoef = den.leading()
    quotient: dict[tuple[int, ...], int] = {}
    rem = num
    while not rem.is_zero():
        rexp, rcoef = rem.leading()
        qexp = tuple(a - b for a, b in zip(rexp, dexp))
        if any(e < 0 for e in qexp) or rcoef % dcoef:
            raise ValueError("not exactly divisible")
        qcoef = rcoef // dcoef
        quotient[qexp] = quotient.get(qexp, 0) + qcoef
        rem = rem - den * MultiPoly(table, {qexp: qcoef})
    return MultiPoly(table, quotient)


def determinant(matrix: Sequence[Sequence[MultiPoly]], table: VarTable | None = None
                ) -> MultiPoly:
    """Exact determinant of a square matrix of polynomials.

    Cofactor expansion for dimension <= 4; fraction-free (Bareiss)
    elimination above that to control intermediate swell.
    """
    n = len(matrix)
    if table is None:
        if n == 0:
            raise ValueError("empty matrix needs an explicit table")
        table = matrix[0][0].table
    if n == 0:
        return MultiPoly.one(table)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n <= 4:
        return _det_cofactor([list(row) for row in matrix], table)
    return _det_bareiss([list(row) for row in matrix], table)


def _det_cofactor(m: list[list[MultiPoly]], table: VarTable) -> MultiPoly:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = MultiPoly.zero(table)
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [[m[i][c] for c in range(n) if c != j] for i in range(1, n)]
        term = m[0][j] * _det_cofactor(minor, table)
        total = total + (term if j % 2 == 0 else -term)
    return total


def _det_bareiss(m: list[list[MultiPoly]], table: VarTable) -> MultiPoly:
    n = len(m)
    sign = 1
    prev = MultiPoly.one(table)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next((r for r in range(k + 1, n) if not m[r][k].is_zero()),
                             None)
            if pivot_row is None:
                return MultiPoly.zero(table)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = exact_div(num, prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det
