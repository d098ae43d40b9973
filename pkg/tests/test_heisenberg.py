from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hjps.classify import ast_cubic, dual_sextic, h_basis, sklyanin_casimirs, weighted_cubic, wp112_curve
from hjps.heisenberg import (
    ANY_DEGREE,
    check_degree_signature,
    check_h_invariance,
    check_toric_invariance,
    is_tau_homogeneous,
    is_weighted_homogeneous,
    monomial_tau_degree,
    sigma_derivative_commutation,
    sigma_poly,
    tau_degree,
)
from hjps.jps import BracketTable, bracket_table, jps3_table
from hjps.polyring import Polynomial, parse_poly
from strategies import polynomial_pairs, polynomials


def test_sigma_rotates_exponents():
    assert sigma_poly(parse_poly("x0^2*x1", 3)) == parse_poly("x1^2*x2", 3)
    assert sigma_poly(Polynomial.variable(4, 0)) == Polynomial.variable(4, 1)
    assert sigma_poly(Polynomial.variable(4, 3)) == Polynomial.variable(4, 0)


@pytest.mark.parametrize("gamma", [0, 1, Fraction(-7, 2)])
def test_ast_cubic_is_sigma_fixed(gamma):
    assert sigma_poly(ast_cubic(gamma)) == ast_cubic(gamma)


@pytest.mark.parametrize("n", range(1, 9))
@settings(max_examples=20)
@given(data=st.data())
def test_sigma_order_n(n, data):
    p = data.draw(polynomials(n, max_degree=4))
    q = p
    for _ in range(n):
        q = sigma_poly(q)
    assert q == p
    assert sigma_poly(p, n) == p


@given(polynomial_pairs())
def test_sigma_is_ring_automorphism(ab):
    a, b = ab
    assert sigma_poly(a * b) == sigma_poly(a) * sigma_poly(b)
    assert sigma_poly(a + b) == sigma_poly(a) + sigma_poly(b)


class TestTauDegree:
    def test_monomial(self):
        assert tau_degree(parse_poly("x1*x2^2", 3)) == 2

    def test_zero_is_bottom(self):
        assert tau_degree(Polynomial.zero(3)) is None
        assert is_tau_homogeneous(Polynomial.zero(3))

    def test_q2(self):
        q2 = parse_poly("1/2*x1^2+1/2*x3^2+3*x0*x2", 4)
        assert tau_degree(q2) == 2
        assert is_tau_homogeneous(q2)

    def test_mixed_polynomial_takes_largest_representative(self):
        p = parse_poly("x0+x1+x2", 3)
        assert tau_degree(p) == 2
        assert not is_tau_homogeneous(p)

    @given(polynomials(max_degree=6, max_terms=1))
    def test_shift_identity(self, p):
        # tau(sigma m) = tau(m) + |m| mod n
        for e, _ in p.items():
            shifted = sigma_poly(Polynomial.monomial(e))
            (se,) = [x for x, _ in shifted.items()]
            assert monomial_tau_degree(se) == (monomial_tau_degree(e) + sum(e)) % p.n

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_sigma_preserves_tau_when_degree_divisible(self, n):
        from hjps.polyring import monomials_of_degree

        for e in monomials_of_degree(n, n):
            m = Polynomial.monomial(e)
            assert tau_degree(sigma_poly(m)) == tau_degree(m)


class TestInvariance:
    def test_ast_table(self):
        rep = check_h_invariance(jps3_table(ast_cubic(2)))
        assert rep.sigma_ok and rep.tau_ok and rep.degree_signature_ok
        assert rep.failures == []

    def test_single_cube_fails_sigma_with_witness(self):
        t = jps3_table(parse_poly("x0^3", 3))
        assert t.get(1, 2) == parse_poly("3*x0^2", 3)
        assert t.get(0, 1).is_zero()
        rep = check_h_invariance(t)
        assert not rep.sigma_ok
        assert not rep.ok
        reasons = {(i, j, why) for i, j, why, _ in rep.failures}
        assert (0, 1, "sigma") in reasons
        witness = next(w for i, j, why, w in rep.failures if (i, j, why) == (0, 1, "sigma"))
        assert witness == parse_poly("3*x0^2", 3)

    @pytest.mark.parametrize("k", [1, 0, 3, Fraction(2, 5)])
    def test_sklyanin(self, k):
        rep = check_h_invariance(bracket_table(sklyanin_casimirs(k)))
        assert rep.ok, rep.failures

    def test_failures_empty_iff_all_flags(self):
        t = BracketTable(3, {(0, 1): Polynomial.variable(3, 0)})
        rep = check_h_invariance(t)
        assert not rep.ok and rep.failures


class TestDegreeSignature:
    def test_ast(self):
        assert check_degree_signature(jps3_table(ast_cubic(1)))

    def test_sextic(self):
        assert check_degree_signature(jps3_table(dual_sextic(1, 2, 3, 4)))

    def test_linear_entry(self):
        assert not check_degree_signature(BracketTable(3, {(0, 1): Polynomial.variable(3, 0)}))

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_implied_by_invariance_for_classified_casimirs(self, r):
        for b in h_basis(3, r).orbit_sums():
            t = jps3_table(b)
            if check_h_invariance(t).sigma_ok and check_h_invariance(t).tau_ok:
                assert check_degree_signature(t)


class TestWeighted:
    def test_weighted_cubic(self):
        assert is_weighted_homogeneous(weighted_cubic(1), (2, 1, 3)) == 6

    def test_wp112_curve(self):
        assert is_weighted_homogeneous(wp112_curve(1), (1, 1, 2)) == 4

    def test_mixed(self):
        assert is_weighted_homogeneous(parse_poly("x0+x1^2", 2), (1, 1)) is None

    def test_zero(self):
        assert is_weighted_homogeneous(Polynomial.zero(2), (1, 1)) is ANY_DEGREE

    def test_bad_weights(self):
        with pytest.raises(ValueError):
            is_weighted_homogeneous(Polynomial.zero(2), (0, 1))

    def test_toric(self):
        assert check_toric_invariance(jps3_table(weighted_cubic(1)), (2, 1, 3))
        assert check_toric_invariance(jps3_table(wp112_curve(1)), (1, 1, 2))
        assert not check_toric_invariance(jps3_table(ast_cubic(1)), (1, 2, 3))


class TestSigmaDerivative:
    def test_monomial(self):
        assert sigma_derivative_commutation(parse_poly("x0^2*x1", 3), 0)

    def test_ast(self):
        assert sigma_derivative_commutation(ast_cubic(3), 1)

    @given(polynomials(n=5, max_degree=5, max_terms=10), st.integers(0, 4))
    def test_always_true(self, p, i):
        assert sigma_derivative_commutation(p, i)
