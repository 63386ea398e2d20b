"""Independent routes to the one-dimensional entropic-moment integral

    I_q(n) = int e^{-q alpha x^2} |H_n(sqrt(alpha) x)|^{2q} dx.

Nothing here touches the Laguerre form or any Lauricella identity: the exact
route expands H_n^{2q} and integrates monomials against the Gaussian, the
numeric routes use quadrature on the raw integrand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import mpmath as mp

from . import poly
from .exactnum import ScaledRational, as_fraction
from .hermite import hermite_coeffs, hermite_eval, hermite_roots
from .lauricella import exact_order


def gaussian_integral(p: Sequence, s=1) -> ScaledRational:
    """int p(x) e^{-s x^2} dx over the real line, exactly.

    Uses int x^{2k} e^{-s x^2} dx = Gamma(k + 1/2) s^{-k-1/2}.
    """
    s = as_fraction(s)
    if s <= 0:
        raise ValueError("s must be positive")
    total = Fraction(0)
    # Gamma(k+1/2)/sqrt(pi) = (2k)! / (4^k k!), built incrementally
    g = Fraction(1)
    for k in range(0, (len(p) + 1) // 2):
        if k:
            g *= Fraction(2 * k - 1, 2)
        c = p[2 * k] if 2 * k < len(p) else 0
        if c:
            total += c * g / s**k
    return ScaledRational.make(total, pi_exp=Fraction(1, 2)) * ScaledRational.make(s) ** Fraction(-1, 2)


@lru_cache(maxsize=1024)
def moment_oracle_exact(n: int, q, alpha=None) -> ScaledRational:
    """Norm^{2q} * I_q(n) for one Cartesian factor, as an exact value.

    Norm^2 = (alpha/pi)^{1/2} / (2^n n!).  alpha stays symbolic unless a
    rational value is given.
    """
    q = exact_order(q)
    if n < 0:
        raise ValueError("n must be nonnegative")
    hq = poly.poly_pow(hermite_coeffs(n), 2 * q)
    # u = sqrt(alpha) x:  I = alpha^{-1/2} int e^{-q u^2} H_n(u)^{2q} du
    integral = gaussian_integral(hq, q) * ScaledRational.make(1, alpha_exp=Fraction(-1, 2))
    norm = ScaledRational.make(
        Fraction(1, 2**n * math.factorial(n)), Fraction(-1, 2), Fraction(1, 2)
    ) ** q
    out = norm * integral
    if alpha is not None:
        out = out.at_alpha(alpha)
    return out


def moment_product_exact(n_vec: Sequence[int], q) -> ScaledRational:
    """Product of the one-dimensional exact factors for a multi-D state."""
    out = ScaledRational.one()
    for n in n_vec:
        out = out * moment_oracle_exact(n, q)
    return out


@dataclass(frozen=True)
class QuadratureRule:
    nodes: tuple
    weights: tuple

    @property
    def order(self) -> int:
        return len(self.nodes)

    def apply(self, f):
        return mp.fsum(w * f(x) for x, w in zip(self.nodes, self.weights))


@lru_cache(maxsize=64)
def gauss_hermite_rule(m: int, dps: int = 50) -> QuadratureRule:
    """m-point rule for weight e^{-x^2}.

    w_i = 2^{m-1} m! sqrt(pi) / (m^2 H_{m-1}(x_i)^2).
    """
    if m < 1:
        raise ValueError("m must be positive")
    nodes = hermite_roots(m, dps + 10)
    with mp.workdps(dps + 10):
        c = mp.mpf(2) ** (m - 1) * mp.factorial(m) * mp.sqrt(mp.pi) / m**2
        weights = [c / hermite_eval(m - 1, x)[0] ** 2 for x in nodes]
    with mp.workdps(dps):
        return QuadratureRule(tuple(+x for x in nodes), tuple(+w for w in weights))


def _norm_power(n: int, q, alpha):
    # (Norm^2)^q with Norm^2 = (alpha/pi)^{1/2} / (2^n n!)
    return (mp.sqrt(alpha / mp.pi) / (mp.mpf(2) ** n * mp.factorial(n))) ** q


def moment_oracle_quadrature(n: int, q, alpha=1, m: Optional[int] = None, dps: int = 50):
    """Norm^{2q} * I_q(n) by an m-point Gauss-Hermite rule.

    After u = sqrt(q alpha) x the integrand is e^{-u^2} times a polynomial of
    degree 2qn, so the rule is exact once m >= q n + 1.
    """
    q = exact_order(q)
    need = q * n + 1
    if m is None:
        m = need
    if m < need:
        raise ValueError(f"m = {m} is below the exactness threshold q*n + 1 = {need}")
    rule = gauss_hermite_rule(m, dps)
    with mp.workdps(dps + 10):
        a = mp.mpf(alpha.numerator) / alpha.denominator if isinstance(alpha, Fraction) else mp.mpf(alpha)
        sq = mp.sqrt(q)
        s = rule.apply(lambda u: hermite_eval(n, u / sq)[0] ** (2 * q))
        val = _norm_power(n, q, a) * s / mp.sqrt(q * a)
    with mp.workdps(dps):
        return +val


class QuadratureError(RuntimeError):
    pass


def _tail_bound(n: int, q, alpha, radius):
    """Upper bound on the integral over |x| > radius (both tails).

    For u >= max(1, largest zero), |H_n(u)| <= S u^n with S the sum of the
    absolute coefficients, so each tail is at most
    alpha^{-1/2} S^{2q} Gamma(qn + 1/2, q U^2) / (2 q^{qn + 1/2}), U = sqrt(alpha) R.
    """
    S = sum(abs(c) for c in hermite_coeffs(n))
    U = mp.sqrt(alpha) * radius
    qn = q * n + mp.mpf(1) / 2
    tail = mp.mpf(S) ** (2 * q) * mp.gammainc(qn, q * U**2) / (2 * q**qn) / mp.sqrt(alpha)
    return 2 * tail


def moment_oracle_real(
    n: int,
    q,
    alpha=1,
    tol=None,
    dps: int = 50,
    radius=None,
    max_degree: int = 10,
):
    """I_q(n) for any real q > 0 by adaptive quadrature split at the zeros of H_n.

    |H_n|^{2q} has non-smooth points at the zeros when 2q is not an even
    integer; they are used as subinterval ends so tanh-sinh sees them only at
    endpoints.  The range is truncated at a radius whose certified tail bound
    is below tol/10 (the radius is doubled until it is).  Returns the value;
    raises QuadratureError if a subinterval misses the tolerance.
    """
    with mp.workdps(dps + 10):
        q = mp.mpf(q.numerator) / q.denominator if isinstance(q, Fraction) else mp.mpf(q)
        if q <= 0:
            raise ValueError("q must be positive")
        a = mp.mpf(alpha.numerator) / alpha.denominator if isinstance(alpha, Fraction) else mp.mpf(alpha)
        if a <= 0:
            raise ValueError("alpha must be positive")
        tol = mp.mpf(10) ** (-(dps - 10)) if tol is None else mp.mpf(tol)
        sa = mp.sqrt(a)
        zeros = [r / sa for r in hermite_roots(n, dps + 10) if r > 0] if n else []
        if radius is None:
            radius = max([1 / sa] + zeros) + 1
            while _tail_bound(n, q, a, radius) >= tol / 10:
                radius *= 2
        else:
            radius = mp.mpf(radius)
            if _tail_bound(n, q, a, radius) >= tol / 10:
                raise QuadratureError("tail bound at the given radius exceeds tol/10")

        def f(x):
            return mp.exp(-q * a * x * x) * abs(hermite_eval(n, sa * x)[0]) ** (2 * q)

        pts = [mp.mpf(0)] + [z for z in zeros if z < radius] + [radius]
        total = mp.mpf(0)
        budget = tol / (2 * len(pts))
        for lo, hi in zip(pts[:-1], pts[1:]):
            val, err = mp.quad(f, [lo, hi], error=True, maxdegree=max_degree)
            if err > budget * max(1, abs(val)):
                raise QuadratureError(f"subinterval [{mp.nstr(lo, 8)}, {mp.nstr(hi, 8)}] error {mp.nstr(err, 3)}")
            total += val
        total *= 2  # even integrand
    with mp.workdps(dps):
        return +total


def renyi_from_oracle(n_vec: Sequence[int], q, alpha=1, dps: int = 50, tol=None):
    """Position entropy rebuilt from moment_oracle_real factors."""
    with mp.workdps(dps + 10):
        qm = mp.mpf(q.numerator) / q.denominator if isinstance(q, Fraction) else mp.mpf(q)
        a = mp.mpf(alpha.numerator) / alpha.denominator if isinstance(alpha, Fraction) else mp.mpf(alpha)
        logw = mp.mpf(0)
        for n in n_vec:
            w = _norm_power(n, qm, a) * moment_oracle_real(n, qm, a, tol=tol, dps=dps + 10)
            logw += mp.log(w)
        val = logw / (1 - qm)
    with mp.workdps(dps):
        return +val
