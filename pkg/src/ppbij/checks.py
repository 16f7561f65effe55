"""Named identity checks.

Each check computes both sides of one identity through disjoint code
paths (exhaustive enumeration / the matrix bijection on one side, a
closed-form product or determinant on the other) and reports exact
equality with a term-level diff.  There are no tolerances anywhere.

Series checks enumerate over a finite window (volume-bounded plane
partitions or weight-bounded matrices); the finiteness argument is
enforced at run time by recomputing with the window enlarged by one step
and requiring identical truncated output.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable, Sequence

from .bijection import greene_shape, phi, phi_inverse, \
    strict_tableau_to_word, word_to_strict_tableau
from .core import NMatrix, Partition, PlanePartition
from .enumeration import compositions, count_D_alpha, dominates, f_lambda, \
    gen_matrices, gen_partitions_in_box, gen_pp_box, gen_pp_exact, gen_words, \
    kostka, skew_schur_ones
from .poly import MultiPoly, Truncation, VarTable, product_series
from .symfun import family_vars, g_combinatorial, g_jacobi_trudi, g_refined, \
    ones, q_powers, schur_specialized, square_free_coefficient


@dataclass
class CheckResult:
    """Outcome of one identity check: pass/fail plus the first differing
    monomial when the two sides disagree.
    """

    check_name: str
    parameters: dict
    passed: bool
    lhs_summary: str
    rhs_summary: str
    first_diff: tuple[str, str, str] | None
    elapsed: float
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "check": self.check_name,
            "parameters": self.parameters,
            "pass": self.passed,
            "lhs": self.lhs_summary,
            "rhs": self.rhs_summary,
            "first_diff": list(self.first_diff) if self.first_diff else None,
            "elapsed": round(self.elapsed, 6),
            "notes": self.notes,
        }


def _poly_diff(label: str, lhs: MultiPoly, rhs: MultiPoly):
    """First differing monomial (ascending graded-lex), or None."""
    exps = sorted(set(lhs.terms) | set(rhs.terms), key=lambda e: (sum(e), e))
    names = lhs.table.var_names()
    for exp in exps:
        a, b = lhs.coefficient(exp), rhs.coefficient(exp)
        if a != b:
            mono = "*".join(
                f"{names[i]}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp) if e) or "1"
            return (f"{label}:{mono}", str(a), str(b))
    return None


def _build(name: str, params: dict, pairs, t0: float,
           notes: list[str] | None = None) -> CheckResult:
    """Assemble a CheckResult from labelled (lhs, rhs) comparisons, which
    may mix MultiPoly and plain integer sides.
    """
    first_diff = None
    lhs_bits, rhs_bits = [], []
    for label, lhs, rhs in pairs:
        if isinstance(lhs, MultiPoly):
            lhs_bits.append(f"{label}: {len(lhs.terms)} terms")
            rhs_bits.append(f"{label}: {len(rhs.terms)} terms")
            if first_diff is None:
                first_diff = _poly_diff(label, lhs, rhs)
        else:
            lhs_bits.append(f"{label}: {lhs}")
            rhs_bits.append(f"{label}: {rhs}")
            if first_diff is None and lhs != rhs:
                first_diff = (label, str(lhs), str(rhs))
    return CheckResult(
        check_name=name,
        parameters=params,
        passed=first_diff is None,
        lhs_summary="; ".join(lhs_bits),
        rhs_summary="; ".join(rhs_bits),
        first_diff=first_diff,
        elapsed=time.perf_counter() - t0,
        notes=notes or [],
    )


_QT = VarTable([("q", 1)])
_TQT = VarTable([("t", 1), ("q", 1)])


def _q(power: int = 1) -> MultiPoly:
    return MultiPoly.var(_QT, "q", 1, power=power)


def _q_series(pps, stat: Callable[[PlanePartition], int]) -> MultiPoly:
    terms: dict[tuple[int, ...], int] = {}
    for pp in pps:
        exp = (stat(pp),)
        terms[exp] = terms.get(exp, 0) + 1
    return MultiPoly(_QT, terms)


def _tq_series(items, pair_stat) -> MultiPoly:
    terms: dict[tuple[int, ...], int] = {}
    for it in items:
        a, b = pair_stat(it)
        terms[(a, b)] = terms.get((a, b), 0) + 1
    return MultiPoly(_TQT, terms)


# -- individual checks -------------------------------------------------


def check_macmahon_box(k: int, n: int, m: int) -> CheckResult:
    """Volume generating polynomial and cardinality of the boxed family
    against the classical product formulas.
    """
    t0 = time.perf_counter()
    pps = list(gen_pp_box(k, n, m))
    lhs_poly = _q_series(pps, PlanePartition.volume)

    deg = k * n * m
    trunc = Truncation(max_total=deg)
    exps = [(i + j + l - 1, i + j + l - 2)
            for i in range(1, k + 1)
            for j in range(1, n + 1)
            for l in range(1, m + 1)]
    rhs_poly = MultiPoly.one(_QT)
    for a, _ in exps:
        rhs_poly = rhs_poly.mul_truncated(MultiPoly.one(_QT) - _q(a), trunc)
    rhs_poly = rhs_poly.mul_truncated(
        product_series([(_q(b), 1) for _, b in exps], trunc), trunc)

    count_rhs = Fraction(1)
    for a, b in exps:
        count_rhs *= Fraction(a, b)
    assert count_rhs.denominator == 1

    return _build("macmahon_box", {"k": k, "n": n, "m": m},
                  [("q_poly", lhs_poly, rhs_poly),
                   ("count", len(pps), int(count_rhs))], t0)


def check_infinite_volume(N: int) -> CheckResult:
    """Coefficients of q^<=N of the unrestricted volume series against
    the infinite product, truncated.
    """
    t0 = time.perf_counter()
    lhs = _q_series(gen_pp_box(N, N, N, max_volume=N), PlanePartition.volume) \
        if N > 0 else MultiPoly.one(_QT)
    trunc = Truncation(max_total=N)
    rhs = product_series([(_q(i), i) for i in range(1, N + 1)], trunc) \
        if N > 0 else MultiPoly.one(_QT)
    return _build("infinite_volume", {"N": N}, [("series", lhs, rhs)], t0)


def check_qschur(k: int, n: int, m: int) -> CheckResult:
    """q-shifted volume polynomial of the box against the principal
    specialization of the rectangular Schur polynomial.  The q-power
    prefactor is moved to the enumeration side so no negative exponents
    appear.
    """
    t0 = time.perf_counter()
    shift = k * math.comb(n + 1, 2)
    lhs = _q_series(gen_pp_box(k, n, m), PlanePartition.volume) * _q(shift) \
        if shift else _q_series(gen_pp_box(k, n, m), PlanePartition.volume)
    rho = Partition.rectangle(k, n)
    rhs = schur_specialized(rho, q_powers(_QT, 1, n + m))
    return _build("qschur", {"k": k, "n": n, "m": m}, [("q_poly", lhs, rhs)], t0)


def _descent_monomial(table: VarTable, pp: PlanePartition) -> tuple[int, ...]:
    exp = [0] * table.nvars
    for i, j in pp.descent_set():
        exp[table.index("x", i)] += 1
        exp[table.index("z", pp.entry(i, j))] += 1
    return tuple(exp)


def check_multivariate(n: int, m: int, N: int) -> CheckResult:
    """The two-alphabet descent generating function over all plane
    partitions with at most n rows and entries <= m, against the product
    over variable pairs; both sides truncated to total degree N.
    """
    t0 = time.perf_counter()
    table = VarTable([("x", n), ("z", m)])
    trunc = Truncation(max_total=N)

    def lhs_at(window: int) -> MultiPoly:
        terms: dict[tuple[int, ...], int] = {}
        for D in gen_matrices(n, m, window):
            exp = _descent_monomial(table, phi_inverse(D))
            if trunc.keeps(table, exp):
                terms[exp] = terms.get(exp, 0) + 1
        return MultiPoly(table, terms)

    lhs = lhs_at(N // 2)
    xs, zs = family_vars(table, "x"), family_vars(table, "z")
    rhs = product_series([(x * z, 1) for x in xs for z in zs], trunc)
    return _build("multivariate", {"n": n, "m": m, "N": N},
                  [("series", lhs, rhs),
                   ("window_stable", lhs, lhs_at(N // 2 + 1))], t0)


def check_cauchy_type(n: int, m: int, N: int) -> CheckResult:
    """Sum of the refined two-alphabet polynomials over shapes with at
    most n rows against the Cauchy-type product, truncated to total
    degree N.

    Every monomial of a shape's polynomial has z-degree at least the
    number of columns and equal x- and z-degree, so shapes with first
    part above N/2 contribute nothing below degree N; the window check
    enforces that cutoff empirically.
    """
    t0 = time.perf_counter()
    table = VarTable([("x", n), ("z", m)])
    trunc = Truncation(max_total=N)

    def lhs_at(width: int) -> MultiPoly:
        total = MultiPoly.zero(table)
        for lam in gen_partitions_in_box(width, n):
            total = total + g_refined(lam, n, m, table)
        return total.truncate(trunc)

    lhs = lhs_at(N // 2)
    xs, zs = family_vars(table, "x"), family_vars(table, "z")
    rhs = product_series([(x * z, 1) for x in xs for z in zs], trunc)
    return _build("cauchy_type", {"n": n, "m": m, "N": N},
                  [("series", lhs, rhs),
                   ("window_stable", lhs, lhs_at(N // 2 + 1))], t0)


def check_gl(n: int, m: int, N: int) -> CheckResult:
    """Sum of dual Grothendieck polynomials over shapes with at most n
    rows against prod 1/(1-z_i)^n, truncated to total degree N.
    """
    t0 = time.perf_counter()
    table = VarTable([("z", m)])
    zs = family_vars(table, "z")
    trunc = Truncation(max_total=N)

    def lhs_at(width: int) -> MultiPoly:
        total = MultiPoly.zero(table)
        for lam in gen_partitions_in_box(width, n):
            total = total + g_combinatorial(lam, zs)
        return total.truncate(trunc)

    lhs = lhs_at(N)
    rhs = product_series([(z, n) for z in zs], trunc)
    return _build("gl", {"n": n, "m": m, "N": N},
                  [("series", lhs, rhs),
                   ("window_stable", lhs, lhs_at(N + 1))], t0)


def check_uh_des(n: int, m: int, N: int) -> CheckResult:
    """Joint (descent count, up-hook volume) distribution over plane
    partitions with at most n rows and entries <= m, against the product
    over cells; q-degree truncated at N.
    """
    t0 = time.perf_counter()
    trunc = Truncation(family_caps={"q": N})

    def lhs_at(window: int) -> MultiPoly:
        pps = (phi_inverse(D) for D in
               gen_matrices(n, m, window, weight=lambda i, l: i + l - 1))
        return _tq_series(
            pps, lambda pp: (pp.descent_count(), pp.up_hook_volume())
        ).truncate(trunc)

    lhs = lhs_at(N)
    t = MultiPoly.var(_TQT, "t")
    factors = [(t * MultiPoly.var(_TQT, "q", 1, power=i + j - 1), 1)
               for i in range(1, m + 1) for j in range(1, n + 1)]
    rhs = product_series(factors, trunc)
    return _build("uh_des", {"n": n, "m": m, "N": N},
                  [("series", lhs, rhs),
                   ("window_stable", lhs, lhs_at(N + 1))], t0)


def check_equidistribution(N: int) -> CheckResult:
    """The unrestricted pair statistics (descents, up-hook volume) and
    (trace, volume) both match the product prod 1/(1-t q^k)^k up to
    q-degree N.
    """
    t0 = time.perf_counter()
    trunc = Truncation(family_caps={"q": N})
    if N == 0:
        one = MultiPoly.one(_TQT)
        return _build("equidistribution", {"N": N}, [("series", one, one)], t0)

    def lhs_uh(window: int) -> MultiPoly:
        pps = (phi_inverse(D) for D in
               gen_matrices(N + 1, N + 1, window,
                            weight=lambda i, l: i + l - 1))
        return _tq_series(
            pps, lambda pp: (pp.descent_count(), pp.up_hook_volume())
        ).truncate(trunc)

    lhs = lhs_uh(N)
    vol_side = _tq_series(gen_pp_box(N, N, N, max_volume=N),
                          lambda pp: (pp.trace(), pp.volume()))
    factors = [(MultiPoly.var(_TQT, "t") *
                MultiPoly.var(_TQT, "q", 1, power=kk), kk)
               for kk in range(1, N + 1)]
    rhs = product_series(factors, trunc)
    return _build("equidistribution", {"N": N},
                  [("uh_vs_product", lhs, rhs),
                   ("vol_vs_product", vol_side, rhs),
                   ("window_stable", lhs, lhs_uh(N + 1))], t0)


def check_uh_restricted(mode: str, bound: int, N: int) -> CheckResult:
    """Up-hook volume series with one dimension fixed: entries <= bound
    (mode 'entries') or at most `bound` rows (mode 'rows'); against
    prod (1 - q^j)^(-min(j, bound)), truncated at q-degree N.
    """
    t0 = time.perf_counter()
    if mode not in ("entries", "rows"):
        raise ValueError("mode must be 'entries' or 'rows'")
    trunc = Truncation(max_total=N)
    n_rows = N if mode == "entries" else bound
    n_cols = bound if mode == "entries" else N

    def lhs_at(window: int) -> MultiPoly:
        pps = (phi_inverse(D) for D in
               gen_matrices(max(n_rows, 1), max(n_cols, 1), window,
                            weight=lambda i, l: i + l - 1))
        return _q_series(pps, PlanePartition.up_hook_volume).truncate(trunc)

    lhs = lhs_at(N)
    rhs = product_series([(_q(j), min(j, bound)) for j in range(1, N + 1)],
                         trunc) if N > 0 else MultiPoly.one(_QT)
    return _build("uh_restricted", {"mode": mode, "bound": bound, "N": N},
                  [("series", lhs, rhs),
                   ("window_stable", lhs, lhs_at(N + 1))], t0)


def check_corner_volume(k: int, n: int, m: int, N: int = 5) -> CheckResult:
    """Corner-volume generating functions: boxed family against the
    Schur specialization with n leading ones; exact-base family with n-1
    leading ones; unbounded-row-length family against the product, up to
    q-degree N.  Also the q=1 slice of the exact-base identity, which
    counts the box with largest entry m-1.
    """
    t0 = time.perf_counter()
    rho = Partition.rectangle(k, n)
    lhs1 = _q_series(gen_pp_box(k, n, m), PlanePartition.corner_volume)
    rhs1 = schur_specialized(rho, ones(_QT, n) + q_powers(_QT, 1, m))
    lhs2 = _q_series(gen_pp_exact(k, n, m), PlanePartition.corner_volume)
    rhs2 = schur_specialized(rho, ones(_QT, n - 1) + q_powers(_QT, 1, m))

    trunc = Truncation(max_total=N)

    def lhs3_at(window: int) -> MultiPoly:
        pps = (phi_inverse(D) for D in
               gen_matrices(n, m, window, weight=lambda i, l: l))
        return _q_series(pps, PlanePartition.corner_volume).truncate(trunc)

    lhs3 = lhs3_at(N)
    rhs3 = product_series([(_q(i), n) for i in range(1, m + 1)], trunc)

    slice_lhs = sum(lhs2.terms.values())
    slice_rhs = sum(1 for _ in gen_pp_box(k, n, m - 1)) if m >= 1 else 1

    return _build("corner_volume", {"k": k, "n": n, "m": m, "N": N},
                  [("box_q1", lhs1, rhs1),
                   ("exact_q2", lhs2, rhs2),
                   ("unbounded_q3", lhs3, rhs3),
                   ("window_stable", lhs3, lhs3_at(N + 1)),
                   ("q2_at_1", slice_lhs, slice_rhs)], t0)


def check_frobenius(n: int, m: int) -> CheckResult:
    """Sum of strict-tableau counts over shapes in the n x m rectangle
    against m^n, plus exhaustive word <-> strict-tableau bijectivity.
    """
    t0 = time.perf_counter()
    total = sum(f_lambda(lam, n) for lam in gen_partitions_in_box(n, m))

    images = set()
    roundtrip_failures = 0
    for w in gen_words(n, m):
        st = word_to_strict_tableau(w)
        sh = st.shape()
        if not (sh.part(1) <= n and len(sh) <= m):
            roundtrip_failures += 1
        if strict_tableau_to_word(st, m) != w:
            roundtrip_failures += 1
        images.add(st)

    return _build("frobenius", {"n": n, "m": m},
                  [("sum_f", total, m ** n),
                   ("distinct_images", len(images), m ** n),
                   ("roundtrip_failures", roundtrip_failures, 0)], t0)


def check_gexp(lam: Partition, n_max: int | None = None) -> CheckResult:
    """Plancherel-type expansion of the dual Grothendieck polynomial:
    the square-free coefficient over n variables equals the strict-
    tableau count f(n), for every n up to the shape's size (factorial
    denominators never materialize).
    """
    t0 = time.perf_counter()
    if n_max is None:
        n_max = lam.size()
    pairs = []
    for n in range(0, n_max + 1):
        if n == 0:
            coef = 1 if not lam else 0
        else:
            table = VarTable([("x", n)])
            g = g_combinatorial(lam, family_vars(table, "x")) if lam else \
                MultiPoly.one(table)
            coef = square_free_coefficient(g, "x")
        pairs.append((f"n={n}", coef, f_lambda(lam, n)))
    return _build("gexp", {"lambda": list(lam.parts), "n_max": n_max}, pairs, t0)


def check_greene(n: int, m: int) -> CheckResult:
    """Exhaustive over all words: the shape of the associated strict
    tableau equals the vector of longest weakly increasing subsequence
    lengths over shrinking tail alphabets.
    """
    t0 = time.perf_counter()
    mismatches = 0
    first = None
    for w in gen_words(n, m):
        sh = word_to_strict_tableau(w).shape()
        gr = greene_shape(w)
        if sh != gr:
            mismatches += 1
            if first is None:
                first = f"word {''.join(map(str, w.letters))}: {sh} != {gr}"
    notes = [first] if first else []
    return _build("greene", {"n": n, "m": m},
                  [("mismatches", mismatches, 0)], t0, notes)


def check_dalpha(k: int, n: int, m: int, N_max: int) -> CheckResult:
    """Descent enumeration counts: permutation symmetry, dominance
    monotonicity, the Kostka/skew-Schur expansion, the unbounded product
    formula, and the binomial chain; exhaustive over content vectors of
    weight at most N_max.

    The printed closed form for the single-value count is reported in
    the notes, never asserted (see the documented discrepancy between
    C(n+N, N) and C(n+N-1, N)).
    """
    t0 = time.perf_counter()
    counts: dict[tuple[int, ...], int] = {}
    for pp in gen_pp_box(k, n, m):
        key = pp.column_counts(m)
        counts[key] = counts.get(key, 0) + 1

    def D(alpha: tuple[int, ...]) -> int:
        return counts.get(alpha, 0)

    rho = Partition.rectangle(k, n)
    shapes = list(gen_partitions_in_box(k, n))
    sym_fail = mono_fail = kostka_fail = product_fail = chain_fail = 0

    alphas_by_weight: dict[int, list[tuple[int, ...]]] = {}
    for w in range(N_max + 1):
        alphas_by_weight[w] = list(compositions(w, m))

    for w, alphas in alphas_by_weight.items():
        for alpha in alphas:
            da = D(alpha)
            sorted_a = tuple(sorted(alpha, reverse=True))
            if da != D(sorted_a):
                sym_fail += 1
            expansion = sum(kostka(lam, alpha) * skew_schur_ones(rho, lam, n)
                            for lam in shapes)
            if da != expansion:
                kostka_fail += 1
            d_inf = count_D_alpha(None, n, m, alpha)
            prod = 1
            for a in alpha:
                prod *= math.comb(n + a - 1, a)
            if d_inf != prod:
                product_fail += 1
        for alpha in alphas:
            for beta in alphas:
                # dominance is compared on the sorted vectors; by the
                # symmetry law the counts only depend on those
                sa = tuple(sorted(alpha, reverse=True))
                sb = tuple(sorted(beta, reverse=True))
                if sb != sa and dominates(sb, sa) and D(alpha) < D(beta):
                    mono_fail += 1

    notes = []
    for N in range(1, min(k, m, N_max) + 1):
        single = tuple([N] + [0] * (m - 1))
        ones_vec = tuple([1] * N + [0] * (m - N))
        lo, mid_hi = D(single), D(ones_vec)
        for alpha in alphas_by_weight[N]:
            if not lo <= D(alpha) <= mid_hi <= n ** N:
                chain_fail += 1
        printed = math.comb(n + N, N)
        shifted = math.comb(n + N - 1, N)
        match = ("C(n+N,N)" if lo == printed else
                 "C(n+N-1,N)" if lo == shifted else "neither binomial")
        notes.append(
            f"D_(N={N},0,...)={lo}; printed C(n+N,N)={printed}, "
            f"C(n+N-1,N)={shifted}: matches {match}")

    return _build("dalpha", {"k": k, "n": n, "m": m, "N_max": N_max},
                  [("symmetry_failures", sym_fail, 0),
                   ("monotonicity_failures", mono_fail, 0),
                   ("kostka_expansion_failures", kostka_fail, 0),
                   ("product_formula_failures", product_fail, 0),
                   ("chain_failures", chain_fail, 0)], t0, notes)


def check_superadditivity(k: int, n: int, m: int,
                          scales: Sequence[int] = (1, 2, 3)) -> CheckResult:
    """Superadditivity of the up-hook and corner volumes, additivity of
    the volume, the scaling laws, the up-hook sandwich, and antinorm
    positivity, exhaustive over all pairs in the box.

    Two monoid structures appear.  The corner volume and the volume are
    checked under the entrywise sum.  The up-hook volume is not
    superadditive entrywise (two copies of the single column (1, 1) sum
    to (2, 2), whose up-hook volume is 3 < 2 + 2); it is checked under
    the sum transported through the descent-level-count bijection, where
    both statistics are linear in the matrix entries.
    """
    t0 = time.perf_counter()
    pps = list(gen_pp_box(k, n, m))
    mats = {pp: phi(pp, n, m) for pp in pps}
    violations = 0
    for p1 in pps:
        for p2 in pps:
            s = p1.add(p2)
            if s.corner_volume() < p1.corner_volume() + p2.corner_volume():
                violations += 1
            if s.volume() != p1.volume() + p2.volume():
                violations += 1
            d1, d2 = mats[p1], mats[p2]
            merged = NMatrix(
                [[d1.entry(i, j) + d2.entry(i, j) for j in range(1, m + 1)]
                 for i in range(1, n + 1)])
            t = phi_inverse(merged)
            if t.up_hook_volume() < p1.up_hook_volume() + p2.up_hook_volume():
                violations += 1
            if t.corner_volume() < p1.corner_volume() + p2.corner_volume():
                violations += 1
    for pp in pps:
        if pp.corner_volume() == 0 and pp:
            violations += 1
        if pp.up_hook_volume() < pp.corner_volume() or \
                pp.volume() < pp.corner_volume():
            violations += 1
        for kk in scales:
            sc = pp.scale(kk)
            if sc.corner_volume() != kk * pp.corner_volume():
                violations += 1
            if sc.up_hook_volume() != \
                    pp.up_hook_volume() + (kk - 1) * pp.corner_volume():
                violations += 1
            if not (kk * pp.corner_volume() <= sc.up_hook_volume()
                    <= kk * pp.up_hook_volume()):
                violations += 1
    return _build("superadditivity",
                  {"k": k, "n": n, "m": m, "scales": list(scales)},
                  [("violations", violations, 0)], t0,
                  ["up-hook superadditivity is taken under the "
                   "matrix-transported sum; entrywise it fails already at "
                   "[[1],[1]] + [[1],[1]]"])


# -- the suite ---------------------------------------------------------

CHECKS: dict[str, Callable[..., CheckResult]] = {
    "macmahon_box": check_macmahon_box,
    "infinite_volume": check_infinite_volume,
    "qschur": check_qschur,
    "multivariate": check_multivariate,
    "cauchy_type": check_cauchy_type,
    "gl": check_gl,
    "uh_des": check_uh_des,
    "equidistribution": check_equidistribution,
    "uh_restricted": check_uh_restricted,
    "corner_volume": check_corner_volume,
    "frobenius": check_frobenius,
    "gexp": check_gexp,
    "greene": check_greene,
    "dalpha": check_dalpha,
    "superadditivity": check_superadditivity,
}


def load_grids() -> dict:
    """The versioned parameter grids for the run_all levels."""
    text = resources.files("ppbij").joinpath("verify_grids.json").read_text()
    return json.loads(text)


def _run_entry(entry: dict) -> CheckResult:
    params = dict(entry["params"])
    if entry["check"] == "gexp":
        params["lam"] = Partition(params.pop("lambda"))
    return CHECKS[entry["check"]](**params)


def run_all(level: str = "small", workers: int = 1) -> list[CheckResult]:
    """Run the whole named-check suite at the given level's parameter
    grid; results come back in declaration order regardless of worker
    count.
    """
    grids = load_grids()
    if level not in grids:
        raise ValueError(f"unknown level {level!r}")
    entries = grids[level]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_entry, entries))
    return [_run_entry(e) for e in entries]
