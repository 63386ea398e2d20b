"""Exact Renyi entropies of D-dimensional harmonic oscillator states."""

from .exactnum import ExactLogSum, ScaledRational, gamma_half, half_pochhammer, logsum_eval, pochhammer
from .hermite import hermite_coeffs, hermite_roots, laguerre_coeffs, parity
from .lauricella import (
    base_poly,
    c0_coefficient,
    cj_coefficient,
    lauricella_F,
    lauricella_F_naive,
    lauricella_F_real,
    poly_pow,
)
from .oracle import (
    gauss_hermite_rule,
    moment_oracle_exact,
    moment_oracle_quadrature,
    moment_oracle_real,
)
from .renyi import (
    HarmonicState,
    UncertaintyReport,
    bb_bound,
    check_uncertainty,
    conjugate_index,
    disequilibrium,
    energy,
    entropic_moment_momentum,
    entropic_moment_position,
    entropy_sum,
    ground_state,
    renyi_ground_state,
    renyi_momentum,
    renyi_position,
    renyi_power,
    renyi_real_q,
    tsallis,
)

__version__ = "0.1.0"
