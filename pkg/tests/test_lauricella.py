import math
from fractions import Fraction as F

import mpmath as mp
import pytest

from harmonic_renyi import poly
from harmonic_renyi.exactnum import ScaledRational
from harmonic_renyi.hermite import hermite_coeffs
from harmonic_renyi.lauricella import (
    BudgetExceeded,
    base_poly,
    c0_coefficient,
    cj_coefficient,
    lauricella_F,
    lauricella_F_laplace,
    lauricella_F_naive,
    lauricella_F_real,
    poly_pow,
)


def test_base_poly_examples():
    assert base_poly(0, 0, 2) == [1]
    assert base_poly(2, 0, 2) == [1, -1]
    assert base_poly(1, 1, 3) == [1]
    with pytest.raises(ValueError):
        base_poly(2, 1, 2)


def test_poly_pow_examples():
    assert poly_pow([F(1), F(-1)], 2) == [1, -2, 1]
    assert poly_pow([F(1)], 7) == [1]
    assert poly_pow([F(1), F(-1)], 4) == [1, -4, 6, -4, 1]
    assert poly_pow([1, 2], 0) == [1]


@pytest.mark.parametrize("e", [1, 2, 3, 7, 10])
def test_poly_pow_matches_repeated_product(e):
    p = [F(3, 4), F(-5, 6), F(1, 9)]
    ref = [1]
    for _ in range(e):
        ref = poly.mul(ref, p)
    assert poly_pow(p, e) == ref
    assert len(poly_pow(p, e)) - 1 == e * 2


def test_lauricella_anchor_values():
    assert lauricella_F(0, 2) == 1
    assert lauricella_F(0, 7) == 1
    assert lauricella_F(1, 3) == 1
    # literal sum over k of (1/2)_k (-1)^k C(4,k)
    direct = sum(F(math.prod(range(1, 2 * k, 2)), 2**k) * (-1) ** k * math.comb(4, k) for k in range(5))
    assert direct == F(41, 16)
    assert lauricella_F(2, 2) == F(41, 16)
    assert lauricella_F_naive(2, 2) == F(41, 16)


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("n", range(9))
def test_cross_path(n, q):
    assert lauricella_F(n, q) == lauricella_F_naive(n, q)


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("n", [0, 1, 2, 7, 12, 21])
def test_lauricella_positive(n, q):
    assert lauricella_F(n, q) > 0


def test_exact_mode_rejects_real_q():
    with pytest.raises(ValueError):
        lauricella_F(2, F(3, 2))
    with pytest.raises(ValueError):
        lauricella_F(2, 1)


def test_naive_budget():
    with pytest.raises(BudgetExceeded):
        lauricella_F_naive(20, 4, budget=1000)


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("n", range(9))
def test_real_matches_exact(n, q):
    exact = lauricella_F(n, q)
    val = lauricella_F_real(n, q, 50)
    with mp.workdps(50):
        ref = mp.mpf(exact.numerator) / exact.denominator
        assert abs(val - ref) <= abs(ref) * mp.mpf(10) ** -45


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("n", [0, 3, 6])
def test_laplace_form_matches_exact(n, q):
    # independent route at integer q: the integral representation
    exact = lauricella_F(n, q)
    with mp.workdps(50):
        ref = mp.mpf(exact.numerator) / exact.denominator
        assert abs(lauricella_F_laplace(n, q) - ref) <= abs(ref) * mp.mpf(10) ** -45


def test_real_examples():
    assert lauricella_F_real(0, 0.5) == 1
    assert lauricella_F_real(2, 2.0) == mp.mpf("2.5625")
    with pytest.raises(ValueError):
        lauricella_F_real(2, 1)
    with pytest.raises(ValueError):
        lauricella_F_real(2, -0.5)


def test_c0_examples():
    assert c0_coefficient(0, 2) == ScaledRational.make(1)
    assert c0_coefficient(1, 2) == ScaledRational.make(F(3, 4))
    assert c0_coefficient(2, 2) == ScaledRational.make(F(41, 256))
    for n in range(10):
        assert c0_coefficient(n, 3).pi_exp == 0


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("n", range(6))
def test_cj_zero_index_and_degree_bound(n, q):
    assert ScaledRational.make(cj_coefficient(0, n, q)) == c0_coefficient(n, q)
    assert cj_coefficient(q * n + 1, n, q) == 0
    assert cj_coefficient(q * n + 3, n, q) == 0


def _linearization_rhs(n, q, sign_j):
    nu = n & 1
    a_nq = 2 ** (2 * q * n) * math.factorial((n - nu) // 2) ** (2 * q)
    out = [0]
    for j in range(q * n + 1):
        # H_{2j}(sqrt(q) x): only even powers, so sqrt(q)^{2k} = q^k stays rational
        h = [c * F(q) ** (k // 2) if k % 2 == 0 else 0 for k, c in enumerate(hermite_coeffs(2 * j))]
        s = (-1) ** j if sign_j else 1
        w = F(a_nq, q ** (q * nu)) * s * cj_coefficient(j, n, q) / (4**j * math.factorial(j))
        out = poly.add(out, poly.scale(h, w))
    return out


@pytest.mark.parametrize("n", range(5))
def test_linearization_identity_sign(n):
    lhs = poly_pow(hermite_coeffs(n), 4)
    assert _linearization_rhs(n, 2, True) == lhs
    if n:
        assert _linearization_rhs(n, 2, False) != lhs


def test_c1_value():
    # fixed by the identity above
    assert cj_coefficient(1, 2, 2) == F(-43, 32)
