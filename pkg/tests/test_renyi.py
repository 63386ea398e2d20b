from fractions import Fraction as F

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from harmonic_renyi.exactnum import ExactLogSum, ScaledRational, logsum_eval
from harmonic_renyi.oracle import moment_product_exact
from harmonic_renyi.renyi import (
    HarmonicState,
    NotApplicable,
    bb_bound,
    check_uncertainty,
    conjugate_index,
    disequilibrium,
    energy,
    entropic_moment_momentum,
    entropic_moment_position,
    entropy_sum,
    ground_state,
    ground_state_limit,
    renyi_ground_state,
    renyi_momentum,
    renyi_position,
    renyi_power,
    renyi_real_q,
    tsallis,
    tsallis_from_renyi,
    zpv_bound,
)

states = st.lists(st.integers(0, 8), min_size=1, max_size=3).map(lambda n: HarmonicState(tuple(n)))
orders = st.sampled_from([2, 3, 4])
alphas = st.fractions(min_value=F(1, 9), max_value=9, max_denominator=9)


def test_state_validation():
    s = HarmonicState((1, 0, 2))
    assert (s.D, s.N, s.N_O, s.N_E) == (3, 3, 1, 2)
    assert ground_state(2).is_ground()
    with pytest.raises(ValueError):
        HarmonicState((1, 2), D=3)
    with pytest.raises(ValueError):
        HarmonicState((-1,))
    with pytest.raises(ValueError):
        HarmonicState((0,), alpha=0)


def test_energy():
    assert energy(HarmonicState((1, 2), F(1, 2))) == F(4) * F(1, 4)


def test_examples_1d():
    assert logsum_eval(renyi_position(ground_state(1), 2), 1, 6) == "0.918939"
    assert logsum_eval(renyi_position(HarmonicState((1,)), 2), 1, 6) == "1.20662"
    assert logsum_eval(renyi_position(HarmonicState((2,)), 2), 1, 6) == "1.36425"
    assert renyi_position(HarmonicState((2,)), 2).render() == "-1/2·log(α) + 13/2·log(2) - log(41) + 1/2·log(π)"


def test_examples_sum_and_bound():
    assert logsum_eval(entropy_sum(HarmonicState((1,)), 2, 2), 1, 6) == "2.41324"
    assert mp.nstr(bb_bound(1, 2), 7) == "2.099501"
    assert conjugate_index(2) == F(2, 3)
    assert conjugate_index(F(3, 4)) == F(3, 2)
    with pytest.raises(ValueError):
        conjugate_index(1)
    with pytest.raises(ValueError):
        conjugate_index(F(1, 2))


def test_exact_mode_rejects_noninteger_q():
    with pytest.raises(ValueError):
        renyi_position(HarmonicState((1,)), F(3, 2))


@pytest.mark.parametrize("D", [1, 2, 3])
@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("alpha", [F(1, 2), F(1), F(3)])
def test_ground_state_closed_form(D, q, alpha):
    got = renyi_position(ground_state(D), q)
    assert got == renyi_ground_state(D, q)
    assert got.at_alpha(alpha) == renyi_ground_state(D, q, alpha)


@settings(max_examples=60, deadline=None)
@given(states, orders)
def test_moment_matches_oracle(state, q):
    assert entropic_moment_position(state, q) == moment_product_exact(state.n, q)


@settings(max_examples=60, deadline=None)
@given(states, orders)
def test_exp_of_entropy_is_moment(state, q):
    assert (renyi_position(state, q) * (1 - q)).exp() == entropic_moment_position(state, q)


@settings(max_examples=60, deadline=None)
@given(states, orders, alphas)
def test_duality(state, q, a):
    assert renyi_momentum(state, q).at_alpha(a) == renyi_position(state, q).at_alpha(1 / a)
    assert entropic_moment_momentum(state, q).alpha_exp == -entropic_moment_position(state, q).alpha_exp


@settings(max_examples=60, deadline=None)
@given(states, orders, orders)
def test_sum_alpha_free(state, q, qt):
    assert entropy_sum(state, q, qt).alpha_weight == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 8), min_size=2, max_size=3), orders)
def test_additive_over_coordinates(ns, q):
    whole = renyi_position(HarmonicState(tuple(ns)), q)
    parts = ExactLogSum.zero()
    for n in ns:
        parts = parts + renyi_position(HarmonicState((n,)), q)
    assert whole == parts


@settings(max_examples=40, deadline=None)
@given(states)
def test_monotone_in_order(state):
    vals = [renyi_position(state, q).evaluate(1) for q in (2, 3, 4)]
    assert vals[0] >= vals[1] >= vals[2]


@settings(max_examples=30, deadline=None)
@given(states, orders)
def test_tsallis_consistent(state, q):
    t = tsallis(state, q, 30)
    with mp.workdps(40):
        r = renyi_position(state, q).evaluate(1)
        assert mp.almosteq(t, tsallis_from_renyi(r, q), rel_eps=mp.mpf(10) ** -25)


def test_disequilibrium_and_power():
    s = HarmonicState((2,))
    assert disequilibrium(s) == ScaledRational.make(F(41, 128), F(-1, 2), F(1, 2), {2: F(1, 2)})
    p = renyi_power(s, 2)
    assert p * disequilibrium(s) == ScaledRational.make(1)
    # q = 3 moment has an odd root of alpha in N_q, still exact
    assert isinstance(renyi_power(HarmonicState((2,)), 3), ScaledRational)


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("q", [2, 3])
def test_real_q_agrees_with_exact(n, q):
    s = HarmonicState((n,), F(5, 2))
    with mp.workdps(40):
        exact = renyi_position(s, q).evaluate(F(5, 2))
        mom = renyi_momentum(s, q).evaluate(F(5, 2))
        assert abs(renyi_real_q(s, q, 40) - exact) < mp.mpf(10) ** -35
        assert abs(renyi_real_q(s, q, 40, "momentum") - mom) < mp.mpf(10) ** -35


@pytest.mark.parametrize("q", [F(1, 3), F(2, 3), F(3, 2), F(7, 2)])
def test_real_q_ground(q):
    with mp.workdps(40):
        exact = renyi_ground_state(2, q).evaluate(1)
        assert abs(renyi_real_q(ground_state(2), q, 40) - exact) < mp.mpf(10) ** -35


def test_ground_limits():
    assert ground_state_limit(3, "0") == mp.inf
    assert logsum_eval(ground_state_limit(2, "inf"), 1, 10) == mp.nstr(mp.log(mp.pi), 10)


@pytest.mark.parametrize("q", [F(3, 4), F(2), F(3), F(5)])
@pytest.mark.parametrize("D", [1, 2, 3])
def test_ground_saturates(q, D):
    rep = check_uncertainty(ground_state(D), q)
    assert rep.satisfied
    assert abs(rep.margin) <= 1e-12 * max(1, abs(rep.bound_value))


@settings(max_examples=20, deadline=None)
@given(states.filter(lambda s: not s.is_ground()), st.sampled_from([F(3, 4), 2, 3]))
def test_excited_satisfy(state, q):
    rep = check_uncertainty(state, q)
    assert rep.satisfied and rep.margin > 0


def test_conjugated_regime_checks_pair():
    with pytest.raises(NotApplicable):
        check_uncertainty(ground_state(1), 2, qt=2)


def test_zpv():
    with pytest.raises(NotApplicable):
        zpv_bound(1, 3, 3)
    # pair (1, 1) admissible: Shannon bound
    with mp.workdps(50):
        assert mp.almosteq(zpv_bound(2, F(3, 4), F(3, 4)), 2 * mp.log(mp.e * mp.pi), rel_eps=mp.mpf(10) ** -45)
    assert zpv_bound(1, 2, F(2, 3)) == bb_bound(1, 2)
    # q = 2 with qt = 1/2: best pair is (2, 2/3)
    assert zpv_bound(1, 2, F(1, 2)) == bb_bound(1, 2)
    rep = check_uncertainty(HarmonicState((1, 2)), F(3, 4), F(3, 4), regime="zpv")
    assert rep.satisfied
