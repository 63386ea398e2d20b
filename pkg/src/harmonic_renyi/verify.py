"""Cross-checks of the closed forms against the independent oracles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import mpmath as mp

from .lauricella import DEFAULT_BUDGET, c0_coefficient, lauricella_F, lauricella_F_naive
from .oracle import moment_product_exact, renyi_from_oracle
from .renyi import (
    HarmonicState,
    entropic_moment_position,
    renyi_momentum,
    renyi_position,
    renyi_real_q,
)

CONJECTURE_TOL = 1e-8


@dataclass
class Mismatch:
    check: str
    n: tuple
    q: object
    D: int
    got: str
    expected: str

    def describe(self) -> str:
        return f"{self.check}: n={self.n} q={self.q} D={self.D}\n  closed form: {self.got}\n  oracle:      {self.expected}"


@dataclass
class VerifyResult:
    checks: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _faulty_c0(fault):
    fn, fq = fault

    def c0(n, q):
        v = c0_coefficient(n, q)
        return -v if (n, q) == (fn, fq) else v

    return c0


def grid_states(ns: Sequence[int], d_max: int) -> Iterable[HarmonicState]:
    for D in range(1, d_max + 1):
        for n in itertools.product(ns, repeat=D):
            yield HarmonicState(n)


def verify_exact(
    ns: Sequence[int] = range(9),
    qs: Sequence[int] = (2, 3, 4),
    d_max: int = 3,
    fault: Optional[tuple[int, int]] = None,
    budget: int = DEFAULT_BUDGET,
) -> VerifyResult:
    """Exact-mode identities over the grid ``ns^D x qs`` for D <= d_max.

    ``fault=(n, q)`` negates that c_0 on the closed-form side (harness
    self-test).
    """
    res = VerifyResult()
    c0 = _faulty_c0(fault) if fault else c0_coefficient
    for n in ns:
        for q in qs:
            res.checks += 1
            a, b = lauricella_F(n, q), lauricella_F_naive(n, q, budget)
            if a != b:
                res.mismatches.append(Mismatch("lauricella", (n,), q, 1, str(a), str(b)))
    for state in grid_states(ns, d_max):
        for q in qs:
            res.checks += 2
            w = entropic_moment_position(state, q, c0_fn=c0)
            ref = moment_product_exact(state.n, q)
            if w != ref:
                res.mismatches.append(Mismatch("moment", state.n, q, state.D, str(w), str(ref)))
            back = (renyi_position(state, q) * (1 - q)).exp()
            if back != ref:
                res.mismatches.append(Mismatch("exp((1-q)R)", state.n, q, state.D, str(back), str(ref)))
    for n in ns:
        state = HarmonicState((n,))
        for q in qs:
            for a in (Fraction(1, 3), Fraction(5)):
                res.checks += 1
                lhs = renyi_momentum(state, q).at_alpha(a)
                rhs = renyi_position(state, q).at_alpha(1 / a)
                if lhs != rhs:
                    res.mismatches.append(Mismatch("duality", state.n, q, 1, lhs.render(), rhs.render()))
    return res


@dataclass
class ConjectureRow:
    n: int
    q: object
    closed: object
    oracle: object
    diff: object
    ok: bool


def verify_conjecture(
    ns: Sequence[int],
    qs: Sequence,
    alpha=1,
    tol: float = CONJECTURE_TOL,
    dps: int = 50,
) -> list[ConjectureRow]:
    """Real-q closed form against the root-split quadrature oracle, D = 1."""
    rows = []
    for n in ns:
        for q in qs:
            state = HarmonicState((n,), alpha)
            closed = renyi_real_q(state, q, dps)
            ref = renyi_from_oracle((n,), q, alpha, dps)
            with mp.workdps(dps):
                diff = abs(closed - ref)
            rows.append(ConjectureRow(n, q, closed, ref, diff, bool(diff <= tol)))
    return rows
