"""Renyi entropies, entropic moments and uncertainty sums of oscillator states.

Exact-mode results (integer order ``q >= 2``) are returned as
:class:`ExactLogSum` / :class:`ScaledRational` values that keep ``alpha``
symbolic; substitute a rational ``alpha`` with ``.at_alpha`` or evaluate
numerically with ``.evaluate(alpha)``.  Real-order results come from
:func:`renyi_real_q` and are plain mpmath numbers.  For excited states and
non-integer orders those rest on the conjectured extension of the
closed form and are never mixed with exact results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

import mpmath as mp

from .exactnum import ExactLogSum, ScaledRational, as_fraction, half_pochhammer
from .hermite import parity
from .lauricella import c0_coefficient, exact_order, lauricella_F, lauricella_F_real

# relative tolerance for the satisfied/violated verdict of an uncertainty check
UNCERTAINTY_TOL = 1e-12


@dataclass(frozen=True)
class HarmonicState:
    """Stationary state of the D-dimensional isotropic oscillator.

    ``alpha = k**(1/4)`` for the potential ``k r^2 / 2``; it may be a
    Fraction (exact mode) or any positive real.
    """

    n: tuple[int, ...]
    alpha: object = Fraction(1)
    D: int = field(default=-1)

    def __post_init__(self):
        n = tuple(int(x) for x in self.n)
        object.__setattr__(self, "n", n)
        if self.D == -1:
            object.__setattr__(self, "D", len(n))
        if self.D < 1 or self.D != len(n):
            raise ValueError(f"dimension {self.D} does not match {len(n)} quantum numbers")
        if any(x < 0 for x in n):
            raise ValueError("hyperquantum numbers must be nonnegative")
        if isinstance(self.alpha, (int, str)) and not isinstance(self.alpha, bool):
            object.__setattr__(self, "alpha", as_fraction(self.alpha))
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")

    @property
    def N(self) -> int:
        return sum(self.n)

    @property
    def N_O(self) -> int:
        return sum(parity(x) for x in self.n)

    @property
    def N_E(self) -> int:
        return self.D - self.N_O

    def is_ground(self) -> bool:
        return self.N == 0

    def with_alpha(self, alpha) -> "HarmonicState":
        return HarmonicState(self.n, alpha)


def ground_state(D: int, alpha=Fraction(1)) -> HarmonicState:
    return HarmonicState((0,) * D, alpha)


def energy(state: HarmonicState):
    """E_N = (N + D/2) omega with omega = alpha^2 (atomic units)."""
    return (Fraction(2 * state.N + state.D, 2)) * state.alpha**2


def _K(q: Fraction) -> ExactLogSum:
    # [(q - 1/2) log(pi) + (1/2) log(q)] / (q - 1)
    return ExactLogSum.make([(q, Fraction(1, 2) / (q - 1))], (q - Fraction(1, 2)) / (q - 1))


def _Kbar(q: int) -> ExactLogSum:
    # 4^q Gamma(q + 1/2) / (sqrt(pi) q^q) = (2q)! / (q! q^q) by duplication
    ratio = Fraction(math.factorial(2 * q), math.factorial(q) * q**q)
    return ExactLogSum.log(ratio) * Fraction(1, 1 - q)


def _renyi_1d_free(n: int, q: int) -> ExactLogSum:
    """One Cartesian factor of the entropy without the log(alpha) term."""
    qf = Fraction(q)
    out = _K(qf)
    if n & 1:
        out = out + _Kbar(q)
    sign = 1 if n % 2 == 0 else -1
    out = out + ExactLogSum.log_scaled(half_pochhammer(n)) * (sign * qf / (qf - 1))
    return out + ExactLogSum.log(lauricella_F(n, q)) * Fraction(1, 1 - q)


def renyi_position(state: HarmonicState, q) -> ExactLogSum:
    """Exact position-space Renyi entropy R_q[rho_N] for integer q >= 2."""
    q = exact_order(q)
    total = ExactLogSum.log_alpha() * Fraction(-state.D, 2)
    for n in state.n:
        total = total + _renyi_1d_free(n, q)
    return total


def renyi_momentum(state: HarmonicState, q) -> ExactLogSum:
    """Exact momentum-space entropy; the position value with alpha -> 1/alpha."""
    q = exact_order(q)
    total = ExactLogSum.log_alpha() * Fraction(state.D, 2)
    for n in state.n:
        total = total + _renyi_1d_free(n, q)
    return total


def renyi(state: HarmonicState, q, space: str = "position") -> ExactLogSum:
    if space in ("position", "pos"):
        return renyi_position(state, q)
    if space in ("momentum", "mom"):
        return renyi_momentum(state, q)
    raise ValueError(f"unknown space {space!r}")


def entropic_moment_position(
    state: HarmonicState,
    q,
    c0_fn: Callable[[int, int], ScaledRational] = c0_coefficient,
) -> ScaledRational:
    """W_q[rho_N] assembled from the linearization coefficient c_0.

    W_q = Norm^{2q} (pi/alpha)^{D/2} q^{-D/2} prod_i q^{-q nu_i} A_{n_i,q} c_0(n_i, q)
    with A_{n,q} = 2^{2qn} ((n - nu)/2)!^{2q}.  ``c0_fn`` is injectable so the
    verification harness can plant a fault.
    """
    q = exact_order(q)
    D = state.D
    norm_sq = ScaledRational.make(
        Fraction(1, 2**state.N * math.prod(math.factorial(x) for x in state.n)),
        pi_exp=Fraction(-1, 2) * D,
        alpha_exp=Fraction(1, 2) * D,
    )
    out = norm_sq**q * ScaledRational.make(1, Fraction(D, 2), Fraction(-D, 2))
    out = out * ScaledRational.make(q) ** Fraction(-D, 2)
    for n in state.n:
        nu = parity(n)
        a_nq = 2 ** (2 * q * n) * math.factorial((n - nu) // 2) ** (2 * q)
        out = out * ScaledRational.make(Fraction(a_nq, q ** (q * nu))) * c0_fn(n, q)
    return out


def entropic_moment_momentum(state: HarmonicState, q) -> ScaledRational:
    """W_q[gamma_N]; momentum density is the position one with alpha -> 1/alpha."""
    w = entropic_moment_position(state, q)
    return ScaledRational(w.coeff, w.pi_exp, -w.alpha_exp, w.radicals)


def disequilibrium(state: HarmonicState) -> ScaledRational:
    """<rho> = W_2[rho] = exp(-R_2[rho])."""
    return entropic_moment_position(state, 2)


def renyi_ground_state(D: int, q, alpha=None) -> ExactLogSum:
    """(D/2) log(pi q^{1/(q-1)} / alpha), valid for every rational q > 0, q != 1.

    ``alpha`` stays symbolic unless a rational value is supplied.
    """
    q = as_fraction(q)
    if q <= 0 or q == 1:
        raise ValueError("ground-state formula needs q > 0 and q != 1")
    half = Fraction(D, 2)
    out = ExactLogSum.make([(q, half / (q - 1))], half, -half)
    if alpha is not None:
        out = out.at_alpha(alpha)
    return out


def ground_state_limit(D: int, which: str):
    """Ground-state R_0 (log of the support volume) and R_inf (-log max density).

    R_0 is +inf because the support is all of R^D; R_inf = (D/2) log(pi/alpha).
    """
    if which == "0":
        return mp.inf
    if which == "inf":
        return ExactLogSum.make([], Fraction(D, 2), Fraction(-D, 2))
    raise ValueError("which must be '0' or 'inf'")


def _to_mpf(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


def _real_order(q):
    qm = _to_mpf(as_fraction(q) if isinstance(q, str) else q)
    if qm <= 0 or qm == 1:
        raise ValueError("q must be positive and different from 1")
    return qm


def renyi_real_q(state: HarmonicState, q, precision: int = 50, space: str = "position"):
    """Closed-form entropy evaluated in floating point for any real q > 0, q != 1.

    For non-integer q and excited states this is the conjectured extension of
    the integer-q closed form; the ground state is exact for all q.
    """
    with mp.workdps(precision + 10):
        qm = _real_order(q)
        alpha = _to_mpf(state.alpha)
        K = ((qm - mp.mpf(1) / 2) * mp.log(mp.pi) + mp.log(qm) / 2) / (qm - 1)
        # unreduced form, Gamma(q + 1/2) kept
        Kbar = mp.log(4**qm * mp.gamma(qm + mp.mpf(1) / 2) / (mp.sqrt(mp.pi) * qm**qm)) / (1 - qm)
        sign = -1 if space in ("position", "pos") else 1
        if space not in ("position", "pos", "momentum", "mom"):
            raise ValueError(f"unknown space {space!r}")
        val = sign * mp.mpf(state.D) / 2 * mp.log(alpha) + K * state.D + Kbar * state.N_O
        for n in state.n:
            hp = mp.gamma(mp.mpf(n) / 2 + 1) / mp.gamma(mp.mpf(n + 1) / 2)
            val += qm / (qm - 1) * (-1) ** n * mp.log(hp)
            val += mp.log(lauricella_F_real(n, qm, precision + 10)) / (1 - qm)
    with mp.workdps(precision):
        return +val


def tsallis(state: HarmonicState, q, precision: int = 50):
    """T_q = (1 - W_q) / (q - 1) from the exact moment."""
    q = exact_order(q)
    with mp.workdps(precision + 10):
        w = entropic_moment_position(state, q).evaluate(_to_mpf(state.alpha))
        val = (1 - w) / (q - 1)
    with mp.workdps(precision):
        return +val


def tsallis_from_renyi(r, q):
    """T = (1 - e^{(1-q) R}) / (q - 1)."""
    q = _to_mpf(q)
    return (1 - mp.exp((1 - q) * r)) / (q - 1)


def renyi_power(state: HarmonicState, q, precision: int = 50):
    """N_q = exp(R_q): a ScaledRational when the exponents allow, else numeric."""
    r = renyi_position(state, q)
    try:
        return r.exp()
    except ValueError:
        with mp.workdps(precision + 10):
            val = mp.exp(r.evaluate(_to_mpf(state.alpha)))
        with mp.workdps(precision):
            return +val


def entropy_sum(state: HarmonicState, q, qt) -> ExactLogSum:
    """R_q[rho_N] + R_qt[gamma_N] in exact mode; alpha cancels structurally."""
    return renyi_position(state, q) + renyi_momentum(state, qt)


def entropy_sum_real(state: HarmonicState, q, qt, precision: int = 50):
    with mp.workdps(precision + 10):
        val = renyi_real_q(state, q, precision + 10) + renyi_real_q(
            state, qt, precision + 10, space="momentum"
        )
    with mp.workdps(precision):
        return +val


def conjugate_index(q):
    """q* with 1/q + 1/q* = 2, i.e. q / (2q - 1).  Exact for rational input."""
    if isinstance(q, (int, Fraction, str)):
        q = as_fraction(q)
    if q <= Fraction(1, 2):
        raise ValueError("conjugate index needs q > 1/2")
    if q == 1:
        raise ValueError("q = 1 is self-conjugate and excluded")
    return q / (2 * q - 1)


def bb_bound(D: int, q, precision: int = 50):
    """Sharp conjugated-pair bound D log(pi q^{1/(2q-2)} q*^{1/(2q*-2)})."""
    qs = conjugate_index(q)
    with mp.workdps(precision + 10):
        a, b = _to_mpf(q), _to_mpf(qs)
        val = D * (mp.log(mp.pi) + mp.log(a) / (2 * a - 2) + mp.log(b) / (2 * b - 2))
    with mp.workdps(precision):
        return +val


def _exact_if_possible(x):
    return as_fraction(x) if isinstance(x, (int, str, Fraction)) else x


class NotApplicable(ValueError):
    """The requested uncertainty regime does not cover the given orders."""


@dataclass(frozen=True)
class UncertaintyReport:
    sum_value: object
    bound_value: object
    margin: object
    satisfied: bool
    regime: str
    q: object
    qt: object


def zpv_bound(D: int, q, qt, precision: int = 50):
    """Best bound for 1/q + 1/qt >= 2 from conjugated pairs dominated by (q, qt).

    Renyi entropies do not increase with the order, so any conjugated pair
    (p, p*) with p >= q and p* >= qt bounds the sum from below.  The
    conjugated bound grows as p approaches 1, so the closest admissible p wins.
    """
    q, qt = _exact_if_possible(q), _exact_if_possible(qt)
    if q <= 0 or qt <= 0:
        raise ValueError("orders must be positive")
    if 1 / q + 1 / qt < 2:
        raise NotApplicable(f"1/q + 1/qt = {float(1 / q + 1 / qt):.6g} < 2: relation not applicable")
    # admissible p: p >= q, p > 1/2 and p <= qt* (when qt > 1/2)
    lo = q
    hi = conjugate_index(qt) if qt > Fraction(1, 2) and qt != 1 else None
    if qt == 1:
        hi = Fraction(1)
    if lo <= 1 and (hi is None or hi >= 1):
        p = None  # the pair (1, 1): Shannon limit
    elif lo > 1:
        p = lo
    else:
        p = hi
    if p is None or p == 1:
        with mp.workdps(precision):
            return D * mp.log(mp.e * mp.pi)
    return bb_bound(D, p, precision)


def check_uncertainty(
    state: HarmonicState,
    q,
    qt=None,
    regime: str = "conjugated",
    precision: int = 50,
) -> UncertaintyReport:
    """Compare R_q[rho] + R_qt[gamma] with the applicable lower bound."""
    if regime == "conjugated":
        qs = conjugate_index(q)
        if qt is None:
            qt = qs
        elif _to_mpf(qt) != _to_mpf(qs):
            raise NotApplicable(f"qt = {qt} is not the conjugate {qs} of q = {q}")
        bound = bb_bound(state.D, q, precision)
    elif regime == "zpv":
        if qt is None:
            raise ValueError("zpv regime needs qt")
        bound = zpv_bound(state.D, q, qt, precision)
    else:
        raise ValueError(f"unknown regime {regime!r}")
    s = entropy_sum_real(state, q, qt, precision)
    with mp.workdps(precision):
        margin = s - bound
        ok = margin >= -UNCERTAINTY_TOL * max(abs(bound), 1)
    return UncertaintyReport(s, bound, margin, bool(ok), regime, q, qt)

