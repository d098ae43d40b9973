from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hjps import enumeration as en
from hjps.polyring import monomials_of_degree

T1 = [(0, 1), (1, 1), (1, 2), (2, 0)]
T2 = [(0, 2), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (4, 0)]


class TestTriangle:
    def test_r1(self):
        assert en.triangle_lattice_points(1) == T1

    def test_r2(self):
        assert en.triangle_lattice_points(2) == T2

    def test_bad_r(self):
        with pytest.raises(ValueError):
            en.triangle_lattice_points(0)

    def test_exponent_map(self):
        assert en.triangle_to_exponents(1, 0, 1) == (3, 0, 0)
        assert en.triangle_to_exponents(1, 1, 1) == (1, 1, 1)
        assert [en.triangle_to_exponents(1, *p) for p in T1] == [(3, 0, 0), (1, 1, 1), (0, 3, 0), (0, 0, 3)]
        with pytest.raises(ValueError):
            en.triangle_to_exponents(1, 3, 3)

    @pytest.mark.parametrize("r", range(1, 31))
    def test_column_counts(self, r):
        pts = en.triangle_lattice_points(r)
        for x in range(-1, 2 * r + 2):
            assert en.triangle_column_count(r, x) == sum(1 for p in pts if p[0] == x)
        assert en.card_s1(r) == sum(en.triangle_column_count(r, x) for x in range(r + 1))
        assert en.card_s2(r) == sum(en.triangle_column_count(r, x) for x in range(r + 1, 2 * r + 1))


class TestClosedForms:
    @pytest.mark.parametrize("r, s1, s2", [(1, 3, 1), (2, 7, 3), (3, 12, 7), (4, 19, 12)])
    def test_cards(self, r, s1, s2):
        assert en.card_s1(r) == s1
        assert en.card_s2(r) == s2

    @pytest.mark.parametrize("s, value", [(-1, 1), (0, 4), (1, 10), (2, 19), (3, 31), (4, 46)])
    def test_dim_h3(self, s, value):
        assert en.dim_h3(s) == value

    def test_dim_h3_domain(self):
        with pytest.raises(ValueError):
            en.dim_h3(-2)

    @given(st.integers(1, 400))
    def test_sum_is_dimension(self, r):
        assert en.card_s1(r) + en.card_s2(r) == en.dim_h3(r - 1)


class TestPoincare:
    def test_first_terms(self):
        assert en.poincare_coeffs(4) == [1, 4, 10, 19, 31]

    def test_series_vanishes_off_multiples_of_three(self):
        s = en.poincare_series(30)
        assert all(c == 0 for k, c in enumerate(s) if k % 3)

    def test_geometric(self):
        assert en.series_coefficients([1], [1, -1], 5) == [1] * 6

    def test_denominator_guard(self):
        with pytest.raises(ValueError):
            en.series_coefficients([1], [2, 1], 3)


class TestConstraints:
    def test_n3(self):
        c = en.constraint_system(3, 1)
        assert c.weight == 3
        assert c.rows == ((1, -1, 0, 1), (1, 0, 1, -1), (1, 1, -1, 0))

    def test_n4_weight_uses_offset(self):
        assert en.constraint_system(4, 1).weight == 4
        assert en.constraint_system(4, 2).weight == 10
        assert en.weight_target(5, 1) == 10

    def test_offsets(self):
        assert [en.cyclic_offset(n) for n in range(3, 9)] == [0, 2, 0, 3, 0, 4]

    @pytest.mark.parametrize("n, r", [(2, 1), (3, 0)])
    def test_domain(self, n, r):
        with pytest.raises(ValueError):
            en.constraint_system(n, r)

    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            en.ConstraintSystem(((1, 0), (1, 0, 0)))

    def test_satisfied(self):
        c = en.constraint_system(3, 1)
        assert c.satisfied((1, 1, 1))
        assert not c.satisfied((3, 0, 0))


class TestCompositions:
    def test_n3_r1(self):
        assert en.enumerate_compositions(3, 1) == [(0, 1, 2), (1, 1, 1), (1, 2, 0), (2, 0, 1)]

    def test_exponent_map(self):
        assert en.compositions_to_exponents(3, 1, (1, 1, 1)) == (1, 1, 1)
        assert en.compositions_to_exponents(3, 1, (0, 1, 2)) == (3, 0, 0)
        assert en.compositions_to_exponents(3, 2, (2, 1, 3)) == (3, 0, 3)
        with pytest.raises(ValueError):
            en.compositions_to_exponents(3, 1, (3, 0, 0))
        with pytest.raises(ValueError):
            en.compositions_to_exponents(3, 1, (1, 2))

    def test_oracle_n3(self):
        assert en.monomial_filter_oracle(3, 1) == [(0, 0, 3), (0, 3, 0), (1, 1, 1), (3, 0, 0)]
        assert len(en.monomial_filter_oracle(3, 2)) == 10

    def test_oracle_guard(self):
        with pytest.raises(en.EnumerationLimitError):
            en.monomial_filter_oracle(5, 5)

    @pytest.mark.parametrize("n, r", [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1), (6, 1)])
    def test_generating_coefficient_matches_enumeration(self, n, r):
        c = en.constraint_system(n, r)
        assert en.generating_coefficient(c, c.weight) == len(en.enumerate_compositions(n, r))

    def test_generating_coefficient_edges(self):
        c = en.constraint_system(3, 1)
        assert en.generating_coefficient(c, 0) == 1
        assert en.generating_coefficient(c, -1) == 0
        with pytest.raises(en.EnumerationLimitError):
            en.generating_coefficient(en.constraint_system(6, 3), en.weight_target(6, 3), max_nodes=100)

    @pytest.mark.parametrize("n, r", [(3, 2), (4, 2), (5, 1)])
    def test_every_exponent_has_degree_nr(self, n, r):
        for e in en.composition_monomials(n, r):
            assert sum(e) == n * r


class TestCounts:
    @pytest.mark.parametrize(
        "n, r, expected", [(3, 1, 4), (3, 2, 10), (4, 1, 9), (4, 2, 42), (5, 1, 26), (5, 2, 201), (6, 1, 76)]
    )
    def test_frozen_counts(self, n, r, expected):
        assert en.count(n, r, "compositions").count == expected

    @pytest.mark.parametrize("r", range(1, 6))
    def test_all_methods_agree_n3(self, r):
        values = {m: en.count(3, r, m).count for m in en.METHODS}
        assert len(set(values.values())) == 1, values

    def test_method_validation(self):
        with pytest.raises(ValueError):
            en.count(4, 1, "closed-form")
        with pytest.raises(ValueError):
            en.count(3, 1, "magic")
        assert en.count(3, 2, "triangle").method == "triangle-brute"


class TestVertices:
    def test_triangle(self):
        for r in (1, 2, 5):
            assert en.check_polytope_vertices(3, r, [(0, r), (r, 2 * r), (2 * r, 0)])

    def test_n4_r4(self):
        r = 4
        h, t = Fraction(1, 2), Fraction(2, 3)
        pts = [
            (-h, r - h, 2 * r - h),
            (r - t, 2 * r - t, 3 * r - t),
            (r, 2 * r - 1, 3 * r - 1),
            (r, 2 * r, 3 * r - 2),
            (2 * r - h, 3 * r - h, -h),
            (3 * r - h, -h, r - h),
        ]
        assert en.find_vertex_axis_order(4, r, pts) == (0, 1, 2)
        assert en.check_polytope_vertices(4, 4, pts)

    def test_non_vertex(self):
        assert not en.check_polytope_vertices(3, 2, [(1, 2)])
        assert not en.check_polytope_vertices(3, 1, [(Fraction(1, 2), 5)])

    def test_dimension_check(self):
        with pytest.raises(ValueError):
            en.check_polytope_vertices(4, 1, [(0, 1)])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_admissible_set_is_rotation_closed(n):
    mons = set(en.monomial_filter_oracle(n, 1))
    for e in mons:
        assert e[-1:] + e[:-1] in mons


def test_filter_is_subset_of_degree_nr():
    assert set(en.monomial_filter_oracle(4, 1)) <= set(monomials_of_degree(4, 4))
