"""Terminating symmetric Lauricella F_A sums behind the oscillator entropies.

For hyperquantum number ``n`` with parity ``nu`` and ``m = (n - nu) / 2`` the
2q-variate function

    F_q(n) = sum_{j_1..j_2q} (q nu + 1/2)_{|j|} prod_i (-m)_{j_i} / ((nu+1/2)_{j_i} j_i!) q^{-j_i}

depends on the multi-index only through the per-index factor and the total
``k = |j|``.  Hence ``F_q(n) = sum_k (q nu + 1/2)_k [t^k] P(t)^{2q}`` with
``P`` the single-index generating polynomial (:func:`base_poly`).  That
collapse is what :func:`lauricella_F` evaluates; :func:`lauricella_F_naive`
walks the literal multi-sum and exists only to check it.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import mpmath as mp

from . import poly
from .exactnum import ScaledRational, as_fraction, gamma_half, pochhammer
from .hermite import hermite_roots, parity
from .poly import RationalPoly, poly_pow

__all__ = [
    "base_poly",
    "poly_pow",
    "lauricella_F",
    "lauricella_F_naive",
    "lauricella_F_real",
    "c0_coefficient",
    "cj_coefficient",
    "exact_order",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10**7


class BudgetExceeded(ValueError):
    pass


def exact_order(q) -> int:
    """Validate a Renyi order for exact mode and return it as an int."""
    if isinstance(q, bool):
        raise ValueError("q must be an integer >= 2")
    if isinstance(q, float) and q.is_integer():
        q = int(q)
    if isinstance(q, Fraction) and q.denominator == 1:
        q = int(q)
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"exact mode needs an integer order q >= 2, got {q!r}")
    return q


def _split(n: int) -> tuple[int, int]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    nu = parity(n)
    return nu, (n - nu) // 2


def base_poly(n: int, nu: int, q) -> RationalPoly:
    """P(t) = sum_j (-m)_j / ((nu + 1/2)_j j!) (t/q)^j with m = (n - nu)/2."""
    if nu != parity(n):
        raise ValueError("nu must be the parity of n")
    q = as_fraction(exact_order(q))
    m = (n - nu) // 2
    b = Fraction(2 * nu + 1, 2)
    return [pochhammer(-m, j) / (pochhammer(b, j) * math.factorial(j)) / q**j for j in range(m + 1)]


def _pochhammer_table(a: Fraction, kmax: int) -> list[Fraction]:
    out = [Fraction(1)]
    for k in range(kmax):
        out.append(out[-1] * (a + k))
    return out


@lru_cache(maxsize=4096)
def lauricella_F(n: int, q) -> Fraction:
    """Exact F_q(n) via the collapsed single sum over total degree."""
    q = exact_order(q)
    nu, _ = _split(n)
    p = base_poly(n, nu, q)
    den = math.lcm(*(c.denominator for c in p))
    coeffs = poly_pow([int(c * den) for c in p], 2 * q)
    # (q nu + 1/2)_k = num_k / 2^k; sum over the common denominator 2^K den^{2q}
    top = len(coeffs) - 1
    num, total = 1, 0
    for k, c in enumerate(coeffs):
        if k:
            num *= 2 * q * nu + 1 + 2 * (k - 1)
        total += num * c << (top - k)
    return Fraction(total, (1 << top) * den ** (2 * q))


def lauricella_F_naive(n: int, q, budget: int = DEFAULT_BUDGET) -> Fraction:
    """F_q(n) as the literal 2q-fold nested sum (verification oracle)."""
    q = exact_order(q)
    nu, m = _split(n)
    if (m + 1) ** (2 * q) > budget:
        raise BudgetExceeded(f"(m+1)^(2q) = {(m + 1) ** (2 * q)} terms exceeds budget {budget}")
    b = Fraction(2 * nu + 1, 2)
    factors = [
        pochhammer(-m, j) / (pochhammer(b, j) * math.factorial(j)) * Fraction(1, q) ** j
        for j in range(m + 1)
    ]
    lcm = math.lcm(*(f.denominator for f in factors))
    ints = [int(f * lcm) for f in factors]
    poch = _pochhammer_table(Fraction(2 * q * nu + 1, 2), 2 * q * m)
    pden = math.lcm(*(p.denominator for p in poch))
    pint = [int(p * pden) for p in poch]
    total = 0
    for idx in itertools.product(range(m + 1), repeat=2 * q):
        prod = pint[sum(idx)]
        for j in idx:
            prod *= ints[j]
            if not prod:
                break
        total += prod
    return Fraction(total, pden * lcm ** (2 * q))


def _binom_prefactor(n: int, q: int) -> Fraction:
    """(1/2)_{q nu} * binom(m + nu - 1/2, m)^{2q}, a pure rational."""
    nu, m = _split(n)
    # binom(m+nu-1/2, m) = Gamma(m+nu+1/2) / (m! Gamma(nu+1/2)); the sqrt(pi) cancel
    binom = gamma_half(m + nu) / (ScaledRational.make(math.factorial(m)) * gamma_half(nu))
    assert binom.pi_exp == 0 and not binom.radicals
    return pochhammer(Fraction(1, 2), q * nu) * binom.coeff ** (2 * q)


def c0_coefficient(n: int, q) -> ScaledRational:
    """Zeroth linearization coefficient (1/2)_{q nu} binom(...)^{2q} F_q(n)."""
    q = exact_order(q)
    return ScaledRational.make(_binom_prefactor(n, q) * lauricella_F(n, q))


def cj_coefficient(j: int, n: int, q) -> Fraction:
    """j-th coefficient of the expansion of H_n^{2q} in H_{2j}(sqrt(q) x).

    The extra Lauricella variable carries numerator -j, denominator 1/2 and
    argument 1, so its sum terminates at l = j.
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    q = exact_order(q)
    nu, _ = _split(n)
    coeffs = poly_pow(base_poly(n, nu, q), 2 * q)
    a = Fraction(2 * q * nu + 1, 2)
    extra = [pochhammer(-j, l) / (pochhammer(Fraction(1, 2), l) * math.factorial(l)) for l in range(j + 1)]
    poch = _pochhammer_table(a, len(coeffs) + j)
    total = Fraction(0)
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        for l, e in enumerate(extra):
            total += poch[k + l] * c * e
    return _binom_prefactor(n, q) * total


def _lauricella_sum_mp(n: int, q: int):
    # terminating k-sum carried out in floating point at the ambient precision
    nu, m = _split(n)
    qf = mp.mpf(q)
    b = mp.mpf(2 * nu + 1) / 2
    p = [mp.mpf(1)]
    for j in range(1, m + 1):
        p.append(p[-1] * (j - 1 - m) / ((b + j - 1) * j * qf))
    powd = [mp.mpf(1)]
    for _ in range(2 * q):
        powd = poly.mul(powd, p)
    a = qf * nu + mp.mpf(1) / 2
    total, poch = mp.mpf(0), mp.mpf(1)
    for k, c in enumerate(powd):
        if k:
            poch *= a + k - 1
        total += poch * c
    return total


def lauricella_F_laplace(n: int, q):
    """F_q(n) from its Laplace-integral form, valid for every real q > 0.

    Writing (a)_k = Gamma(a+k)/Gamma(a) and summing under the integral gives

        F_q(n) = Gamma(a)^{-1} int_0^inf s^{a-1} e^{-s} |P(s)|^{2q} ds,  a = q nu + 1/2.

    For integer q this reproduces the terminating sum term by term.  The
    integrand has cusps at the zeros of P, s = q x_k^2 with x_k the positive
    zeros of H_n, so the range is split there (in u = sqrt(s)).  Uses the
    ambient precision.
    """
    q = mp.mpf(q)
    nu, m = _split(n)
    b = mp.mpf(2 * nu + 1) / 2
    coeffs = [mp.mpf(1)]
    for j in range(1, m + 1):
        coeffs.append(coeffs[-1] * (j - 1 - m) / ((b + j - 1) * j * q))
    a = q * nu + mp.mpf(1) / 2

    # s = u^2 removes the s^{a-1} endpoint singularity at 0
    def f(u):
        return 2 * u ** (2 * a - 1) * mp.exp(-u * u) * abs(poly.evaluate(coeffs, u * u)) ** (2 * q)

    pts = [mp.mpf(0)]
    if m:
        pts += [mp.sqrt(q) * x for x in hermite_roots(n, mp.mp.dps) if x > 0]
    pts.append(mp.inf)
    return mp.quad(f, pts) / mp.gamma(a)


def lauricella_F_real(n: int, q, precision: int = 50):
    """F_q(n) in high-precision floating point for real q > 0, q != 1.

    Integer q uses the terminating sum; other q use the Laplace-integral form
    (the power P^{2q} is then no longer a polynomial and the formal k-series
    diverges).
    """
    with mp.workdps(precision + 10):
        qm = mp.mpf(q) if not isinstance(q, Fraction) else mp.mpf(q.numerator) / q.denominator
        if qm <= 0 or qm == 1:
            raise ValueError("q must be positive and different from 1")
        if qm == mp.floor(qm):
            val = _lauricella_sum_mp(n, int(qm))
        else:
            val = lauricella_F_laplace(n, qm)
    with mp.workdps(precision):
        return +val
