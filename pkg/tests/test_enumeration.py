"""Exhaustive generators and the exact counters built on them."""

import math
from fractions import Fraction

import pytest

from ppbij.core import Partition, PlanePartition
from ppbij.enumeration import BoxSpec, compositions, count_D_alpha, dominates, \
    f_lambda, gen_column_strict, gen_matrices, gen_matrices_column_sums, \
    gen_partitions_in_box, gen_pp_box, gen_pp_exact, gen_pp_shape, \
    gen_strict_tableaux, gen_words, kostka, skew_schur_ones


def box_product(k, n, m) -> int:
    """The classical closed form for the boxed count."""
    prod = Fraction(1)
    for i in range(1, k + 1):
        for j in range(1, n + 1):
            for l in range(1, m + 1):
                prod *= Fraction(i + j + l - 1, i + j + l - 2)
    assert prod.denominator == 1
    return int(prod)


class TestBoxSpec:
    def test_unbounded_marker(self):
        assert BoxSpec(None, 2, 3).k is None

    def test_rejects_bad_dims(self):
        with pytest.raises(ValueError):
            BoxSpec(0, 1, 1)
        with pytest.raises(ValueError):
            BoxSpec(1, 1, 0)


class TestPartitionsInBox:
    def test_count_is_binomial(self):
        for k in range(0, 4):
            for n in range(0, 4):
                got = list(gen_partitions_in_box(k, n))
                assert len(got) == math.comb(k + n, n)
                assert len(set(got)) == len(got)

    def test_all_fit(self):
        for lam in gen_partitions_in_box(3, 2):
            assert lam.part(1) <= 3 and len(lam) <= 2


class TestBoxedPlanePartitions:
    def test_counts_match_product(self):
        for k in range(1, 4):
            for n in range(1, 4):
                for m in range(1, 4):
                    got = list(gen_pp_box(k, n, m))
                    assert len(got) == box_product(k, n, m)
                    assert len(set(got)) == len(got)

    def test_twenty_in_the_222_box(self):
        assert sum(1 for _ in gen_pp_box(2, 2, 2)) == 20

    def test_members_fit(self):
        for pp in gen_pp_box(2, 3, 2):
            assert pp.fits_box(2, 3, 2)

    def test_volume_bound(self):
        full = {pp for pp in gen_pp_box(3, 3, 3) if pp.volume() <= 4}
        assert set(gen_pp_box(3, 3, 3, max_volume=4)) == full

    def test_exact_base_family(self):
        exact = list(gen_pp_exact(2, 2, 2))
        assert all(pp.exact_base(2, 2, 2) for pp in exact)
        # removing the forced base layer is a volume-preserving-minus-kn
        # bijection onto the box with entries one smaller
        assert len(exact) == sum(1 for _ in gen_pp_box(2, 2, 1))


class TestShapeFillings:
    def test_single_cell(self):
        got = list(gen_pp_shape(Partition([1]), 3))
        assert {pp.entry(1, 1) for pp in got} == {1, 2, 3}

    def test_column_strict_is_kostka_refinement(self):
        lam = Partition([2, 1])
        total = sum(kostka(lam, alpha) for alpha in compositions(3, 3))
        assert total == sum(1 for _ in gen_column_strict(lam, 3))

    def test_empty_shape(self):
        assert list(gen_pp_shape(Partition(), 2)) == [PlanePartition()]


class TestMatricesAndWords:
    def test_matrix_count_unweighted(self):
        # entry sum <= 2 over 4 cells: C(4,0)+C(4,1)... via stars and bars
        got = list(gen_matrices(2, 2, 2))
        assert len(got) == sum(math.comb(4 + s - 1, s) for s in range(3))
        assert len(set(got)) == len(got)

    def test_matrix_weighted_bound(self):
        for D in gen_matrices(2, 2, 3, weight=lambda i, l: i + l - 1):
            assert sum(D.entry(i, l) * (i + l - 1)
                       for i in range(1, 3) for l in range(1, 3)) <= 3

    def test_rejects_nonpositive_weight(self):
        with pytest.raises(ValueError):
            list(gen_matrices(1, 2, 3, weight=lambda i, l: l - 1))

    def test_word_count(self):
        assert sum(1 for _ in gen_words(4, 3)) == 81

    def test_column_sum_family(self):
        for D in gen_matrices_column_sums(2, (2, 1)):
            assert D.column_sums() == (2, 1)
        assert sum(1 for _ in gen_matrices_column_sums(2, (2, 1))) == 6


class TestStrictTableaux:
    def test_golden_counts(self):
        assert f_lambda(Partition([2, 1]), 3) == 2
        assert f_lambda(Partition([1]), 1) == 1
        assert f_lambda(Partition(), 0) == 1
        assert f_lambda(Partition([2]), 1) == 0

    def test_sum_over_shapes(self):
        for n in range(1, 4):
            for m in range(1, 4):
                total = sum(f_lambda(lam, n)
                            for lam in gen_partitions_in_box(n, m))
                assert total == m ** n

    def test_members_are_strict(self):
        for st in gen_strict_tableaux(Partition([3, 2]), 4):
            cols = {}
            for i, j in st.cells():
                cols.setdefault(st.entry(i, j), set()).add(j)
            assert all(len(js) == 1 for js in cols.values())


class TestKostka:
    def test_known_values(self):
        assert kostka(Partition([2, 1]), (1, 1, 1)) == 2
        assert kostka(Partition([2, 1]), (2, 1)) == 1
        assert kostka(Partition([3]), (1, 1, 1)) == 1
        assert kostka(Partition([1, 1, 1]), (2, 1)) == 0

    def test_weight_mismatch_is_zero(self):
        assert kostka(Partition([2]), (1,)) == 0

    def test_top_content(self):
        for lam in gen_partitions_in_box(3, 3):
            if lam:
                content = tuple(lam.parts) + (0,) * (3 - len(lam))
                assert kostka(lam, content) == 1


class TestSkewSchurOnes:
    def test_empty_skew(self):
        assert skew_schur_ones(Partition([2, 1]), Partition([2, 1]), 3) == 1

    def test_straight_shape_matches_kostka_sum(self):
        lam = Partition([2, 2])
        expect = sum(kostka(lam, alpha) for alpha in compositions(4, 3))
        assert skew_schur_ones(lam, Partition(), 3) == expect

    def test_containment_required(self):
        with pytest.raises(ValueError):
            skew_schur_ones(Partition([1]), Partition([2]), 2)


class TestCompositions:
    def test_count(self):
        for total in range(0, 5):
            for parts in range(0, 4):
                got = list(compositions(total, parts))
                expect = math.comb(total + parts - 1, parts - 1) if parts \
                    else (1 if total == 0 else 0)
                assert len(got) == expect
                assert all(sum(c) == total and len(c) == parts for c in got)


class TestDAlpha:
    def test_unbounded_equals_wide_box(self):
        # a column count vector of weight N involves at most N columns
        for alpha in compositions(3, 2):
            wide = count_D_alpha(max(sum(alpha), 1), 2, 2, alpha)
            assert count_D_alpha(None, 2, 2, alpha) == wide

    def test_product_formula(self):
        assert count_D_alpha(None, 2, 2, (1, 1)) == 4
        assert count_D_alpha(None, 3, 3, (2, 0, 0)) == 6

    def test_length_validated(self):
        with pytest.raises(ValueError):
            count_D_alpha(2, 2, 2, (1,))

    def test_dominates(self):
        assert dominates((2, 0), (1, 1))
        assert not dominates((1, 1), (2, 0))
        assert dominates((1, 1), (1, 1))
