"""Exact polynomial arithmetic, truncated series, and determinants."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ppbij.poly import MultiPoly, Truncation, VarTable, determinant, \
    elementary_all, elementary_eval, exact_div, geometric_factor, \
    product_series

T2 = VarTable([("x", 1), ("y", 1)])


def poly_strategy(table=T2, max_exp=3, max_coef=5):
    exps = st.tuples(*[st.integers(0, max_exp)] * table.nvars)
    return st.dictionaries(exps, st.integers(-max_coef, max_coef), max_size=4) \
        .map(lambda d: MultiPoly(table, d))


class TestVarTable:
    def test_flattening(self):
        t = VarTable([("x", 2), ("z", 3), ("q", 1)])
        assert t.nvars == 6
        assert t.var_names() == ["x1", "x2", "z1", "z2", "z3", "q"]
        assert t.index("z", 2) == 3
        assert t.family_slice("z") == slice(2, 5)

    def test_duplicate_family_rejected(self):
        with pytest.raises(ValueError):
            VarTable([("x", 1), ("x", 2)])

    def test_index_bounds(self):
        with pytest.raises(IndexError):
            T2.index("x", 2)


class TestTruncation:
    def test_total_cap(self):
        tr = Truncation(max_total=3)
        assert tr.keeps(T2, (1, 2))
        assert not tr.keeps(T2, (2, 2))

    def test_family_cap(self):
        tr = Truncation(family_caps={"y": 1})
        assert tr.keeps(T2, (9, 1))
        assert not tr.keeps(T2, (0, 2))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            Truncation(max_total=-1)


class TestArithmetic:
    @given(poly_strategy(), poly_strategy(), poly_strategy())
    @settings(max_examples=60, deadline=None)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(poly_strategy())
    @settings(max_examples=30, deadline=None)
    def test_additive_inverse(self, a):
        assert (a - a).is_zero()
        assert a + MultiPoly.zero(T2) == a
        assert a * MultiPoly.one(T2) == a

    @given(poly_strategy(), poly_strategy())
    @settings(max_examples=40, deadline=None)
    def test_truncation_homomorphism(self, a, b):
        tr = Truncation(max_total=2)
        assert (a * b).truncate(tr) == \
            a.truncate(tr).mul_truncated(b.truncate(tr), tr)
        assert (a + b).truncate(tr) == a.truncate(tr) + b.truncate(tr)

    def test_powers(self):
        x = MultiPoly.var(T2, "x")
        y = MultiPoly.var(T2, "y")
        assert (x + y) ** 2 == x * x + 2 * x * y + y * y
        assert (x + 1) ** 0 == MultiPoly.one(T2)
        with pytest.raises(ValueError):
            x ** -1

    def test_int_mixing(self):
        x = MultiPoly.var(T2, "x")
        assert 2 * x + 1 == MultiPoly(T2, {(1, 0): 2, (0, 0): 1})
        assert 1 - x == MultiPoly(T2, {(0, 0): 1, (1, 0): -1})

    def test_mismatched_tables_rejected(self):
        other = VarTable([("q", 1)])
        with pytest.raises(ValueError):
            MultiPoly.one(T2) + MultiPoly.one(other)


class TestRendering:
    def test_str_deterministic_order(self):
        x = MultiPoly.var(T2, "x")
        y = MultiPoly.var(T2, "y")
        p = 1 + 2 * y + x * y - x ** 3
        assert str(p) == "-x^3 + x*y + 2*y + 1"
        assert str(MultiPoly.zero(T2)) == "0"

    def test_json_roundtrip(self):
        p = MultiPoly(T2, {(2, 1): 3, (0, 0): -1})
        assert MultiPoly.from_json(p.to_json(), T2) == p

    def test_leading_and_single_term(self):
        p = MultiPoly(T2, {(2, 0): 1, (1, 1): 4})
        assert p.leading() == ((2, 0), 1)
        with pytest.raises(ValueError):
            p.single_term()


class TestSeries:
    def test_geometric_factor(self):
        q = MultiPoly.var(T2, "x")
        geo = geometric_factor(q, Truncation(max_total=3))
        assert geo == MultiPoly(T2, {(d, 0): 1 for d in range(4)})

    def test_geometric_rejects_constant(self):
        with pytest.raises(ValueError, match="non-invertible truncation"):
            geometric_factor(MultiPoly.one(T2), Truncation(max_total=3))

    def test_product_series_matches_direct_expansion(self):
        x = MultiPoly.var(T2, "x")
        tr = Truncation(max_total=4)
        got = product_series([(x, 1), (x * x, 1)], tr)
        # partitions into parts 1 and 2: 1,1,2,2,3
        assert [got.coefficient((d, 0)) for d in range(5)] == [1, 1, 2, 2, 3]

    def test_product_series_multiplicity(self):
        x = MultiPoly.var(T2, "x")
        tr = Truncation(max_total=3)
        assert product_series([(x, 2)], tr) == \
            MultiPoly(T2, {(d, 0): d + 1 for d in range(4)})


class TestElementary:
    def test_against_subsets(self):
        table = VarTable([("z", 4)])
        zs = [MultiPoly.var(table, "z", i) for i in range(1, 5)]
        e = elementary_all(4, zs)
        for k in range(5):
            expect = MultiPoly.zero(table)
            for sub in itertools.combinations(zs, k):
                term = MultiPoly.one(table)
                for v in sub:
                    term = term * v
                expect = expect + term
            assert e[k] == expect

    def test_out_of_range_vanishes(self):
        zs = [MultiPoly.var(T2, "x")]
        assert elementary_eval(2, zs).is_zero()
        assert elementary_eval(0, zs) == MultiPoly.one(T2)


class TestDivision:
    @given(poly_strategy(max_exp=2, max_coef=3), poly_strategy(max_exp=2, max_coef=3))
    @settings(max_examples=40, deadline=None)
    def test_multiply_then_divide(self, a, b):
        if b.is_zero():
            return
        assert exact_div(a * b, b) == a

    def test_inexact_rejected(self):
        x = MultiPoly.var(T2, "x")
        with pytest.raises(ValueError, match="not exactly divisible"):
            exact_div(x + 1, x)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(MultiPoly.one(T2), MultiPoly.zero(T2))


def random_matrix(rng, table, n):
    return [[MultiPoly(table, {(rng.randrange(3), rng.randrange(3)):
                               rng.randrange(-3, 4)})
             for _ in range(n)] for _ in range(n)]


class TestDeterminant:
    def test_permutation_expansion_3x3(self):
        import random
        rng = random.Random(7)
        for _ in range(10):
            m = random_matrix(rng, T2, 3)
            expect = MultiPoly.zero(T2)
            for perm, sign in ((((0, 1, 2)), 1), ((0, 2, 1), -1),
                               ((1, 0, 2), -1), ((1, 2, 0), 1),
                               ((2, 0, 1), 1), ((2, 1, 0), -1)):
                term = MultiPoly.const(T2, sign)
                for i, j in enumerate(perm):
                    term = term * m[i][j]
                expect = expect + term
            assert determinant(m) == expect

    def test_bareiss_agrees_with_cofactor(self):
        import random
        from ppbij.poly import _det_bareiss, _det_cofactor
        rng = random.Random(11)
        for _ in range(5):
            m = random_matrix(rng, T2, 5)
            a = _det_cofactor([row[:] for row in m], T2)
            b = _det_bareiss([row[:] for row in m], T2)
            assert a == b

    def test_singular(self):
        x = MultiPoly.var(T2, "x")
        m = [[x, x], [x, x]]
        assert determinant(m).is_zero()

    def test_empty_matrix(self):
        assert determinant([], T2) == MultiPoly.one(T2)
        with pytest.raises(ValueError):
            determinant([])

    def test_identity(self):
        one, zero = MultiPoly.one(T2), MultiPoly.zero(T2)
        m = [[one if i == j else zero for j in range(5)] for i in range(5)]
        assert determinant(m) == one
