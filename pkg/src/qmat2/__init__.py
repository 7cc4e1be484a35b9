"""Exact arithmetic in the 2x2 quantum matrix algebra and checks of its power formulas."""

from .algebra import A, B, C, D, AlgebraElement, PBWMonomial, alg_add, alg_mul, embed, gen
from .chebpoly import FPoly, f_eval, f_rec, f_sum
from .closedform import (
    adjoint_power_closed,
    entries_alt,
    entries_closed,
    power_ch1,
    power_ch2,
)
from .coeffring import QCoeff, qc_add, qc_from_v_power, qc_mul, qc_specialize
from .identities import CheckReport, run_suite
from .qmat import GENERIC, IDENTITY, QMatrix2, c_matrix, mat_mul, mat_pow, qadjoint, qdet, tau, tau_prime

__version__ = "0.1.0"
