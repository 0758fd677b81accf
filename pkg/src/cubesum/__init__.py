"""Selmer groups of E_{16n^2} over Q(zeta_3) and cube sums n = x^3 + y^3.

For cube-free n prime to 3 with two distinct prime factors, computes the
F_3-dimension t of the phi-Selmer group both from closed-form criteria and
by direct local-condition enumeration, and turns t into rank bounds and
cube-sum verdicts for y^2 = x^3 - 432 n^2.
"""
from .eisenstein import EisensteinInt, PrimeSplitting, primary_associate, split_prime
from .errors import DomainError, InternalInconsistency, UnreachableCase
from .modular import cubic_symbol, cubic_symbol_inert, is_cube_mod_ell, unit_cubes_mod9
from .profile import TwoPrimeProfile, factor_two_primes, profile_from_factors
from .rank import CubeSumStatus, RankVerdict, consistency_check, rank_verdict, root_number
from .search import CubeSumWitness, CurvePoint, search_cube_sum, witness_to_point
from .selmer import (
    SelmerReport,
    dim_selmer_all_inert,
    dim_selmer_closed,
    dim_selmer_direct,
    local_condition_at_p,
    local_condition_at_q,
    sunit_generators,
)

__version__ = "0.1.0"
