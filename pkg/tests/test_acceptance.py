"""One test per acceptance criterion; a PASS/FAIL line for each is printed
in the terminal summary (see conftest.py)."""

import math
import time
from fractions import Fraction as F

import mpmath as mp
import pytest

from harmonic_renyi import poly
from harmonic_renyi.hermite import hermite_coeffs
from harmonic_renyi.lauricella import cj_coefficient, lauricella_F, lauricella_F_naive, poly_pow
from harmonic_renyi.renyi import (
    HarmonicState,
    check_uncertainty,
    entropy_sum,
    ground_state,
    renyi_ground_state,
    renyi_momentum,
    renyi_position,
)
from harmonic_renyi.verify import grid_states, verify_conjecture, verify_exact

criterion = pytest.mark.criterion


@criterion(1, "closed form == exact oracle, all states D<=3, n_i<=8, q in {2,3,4} (zero tolerance)")
def test_exact_paths_agree():
    res = verify_exact(range(9), (2, 3, 4), 3)
    assert res.checks > 2 * 810 * 3
    assert res.ok, "\n".join(m.describe() for m in res.mismatches[:5])


@criterion(2, "collapsed Lauricella sum == literal multi-sum for n<=8, q in {2,3,4}; F_2(2) = 41/16 (exact)")
def test_lauricella_cross_path():
    assert lauricella_F(2, 2) == F(41, 16)
    bad = [(n, q) for n in range(9) for q in (2, 3, 4) if lauricella_F(n, q) != lauricella_F_naive(n, q)]
    assert not bad


@criterion(3, "ground state equals (D/2) log(pi q^(1/(q-1)) / alpha), D<=3, alpha in {1/2,1,3}, q in {2,3,4} (exact)")
def test_ground_state():
    for D in (1, 2, 3):
        for q in (2, 3, 4):
            got = renyi_position(ground_state(D), q)
            assert got == renyi_ground_state(D, q)
            for a in (F(1, 2), F(1), F(3)):
                assert got.at_alpha(a) == renyi_ground_state(D, q, a)
                assert renyi_momentum(ground_state(D), q).at_alpha(a) == renyi_ground_state(D, q, 1 / a)


@criterion(4, "R_q[gamma](alpha) = R_q[rho](1/alpha) and alpha-free entropy sum, alpha in {1/3,1,5} (1e-12)")
def test_duality_and_alpha_invariance():
    tol = mp.mpf("1e-12")
    with mp.workdps(40):
        for state in grid_states(range(0, 9, 2), 2):
            for q in (2, 3, 4):
                pos, mom = renyi_position(state, q), renyi_momentum(state, q)
                sums = []
                for a in (F(1, 3), F(1), F(5)):
                    assert abs(mom.evaluate(a) - pos.evaluate(1 / a)) <= tol
                    assert mom.at_alpha(a) == pos.at_alpha(1 / a)
                    sums.append(entropy_sum(state, q, q).evaluate(a))
                assert max(sums) - min(sums) <= tol


@criterion(5, "ground state saturates the conjugated bound, q in {3/4,2,3,5}, D<=3 (1e-12); 20 excited states have margin >= 0")
def test_uncertainty():
    for D in (1, 2, 3):
        for q in (F(3, 4), 2, 3, 5):
            rep = check_uncertainty(ground_state(D), q)
            assert abs(rep.margin) <= 1e-12 * max(1, abs(rep.bound_value))
    excited = [HarmonicState(n) for n in [(1,), (2,), (3,), (5,), (8,), (1, 0), (1, 1), (2, 3), (0, 4), (6, 1),
                                          (1, 0, 0), (1, 1, 1), (2, 0, 1), (3, 2, 1), (0, 0, 7), (4, 4, 4),
                                          (1, 2), (7,), (2, 2, 2), (5, 0, 3)]]
    assert len(excited) == 20
    for i, s in enumerate(excited):
        q = (F(3, 4), 2, 3)[i % 3]
        rep = check_uncertainty(s, q)
        assert rep.satisfied and rep.margin >= 0


@criterion(6, "real-q closed form vs x-space quadrature, n in 0..4, q in {2/3,3/4,1.5,2.5} (1e-8)")
def test_conjecture_agreement():
    rows = verify_conjecture(range(5), (F(2, 3), F(3, 4), F(3, 2), F(5, 2)))
    assert len(rows) == 20
    bad = [(r.n, r.q, mp.nstr(r.diff, 3)) for r in rows if not r.ok]
    assert not bad


@criterion(7, "H_n^{2q} = sum_j (-1)^j c_j H_2j(sqrt(q) x) / (4^j j!) up to A, n<=4, q=2 (exact)")
def test_linearization():
    q = 2
    for n in range(5):
        nu = n & 1
        a_nq = 2 ** (2 * q * n) * math.factorial((n - nu) // 2) ** (2 * q)
        rhs = [0]
        for j in range(q * n + 1):
            h = [c * F(q) ** (k // 2) if k % 2 == 0 else 0 for k, c in enumerate(hermite_coeffs(2 * j))]
            w = F(a_nq, q ** (q * nu)) * (-1) ** j * cj_coefficient(j, n, q) / (4**j * math.factorial(j))
            rhs = poly.add(rhs, poly.scale(h, w))
        assert rhs == poly_pow(hermite_coeffs(n), 2 * q)


@criterion(8, "D=3, n=(50,51,52), q=5 exact entropy in under 10 s")
def test_performance():
    lauricella_F.cache_clear()
    t0 = time.perf_counter()
    r = renyi_position(HarmonicState((50, 51, 52)), 5)
    with mp.workdps(30):
        val = r.evaluate(1)
    elapsed = time.perf_counter() - t0
    assert mp.isfinite(val)
    assert elapsed < 10, f"{elapsed:.2f} s"
