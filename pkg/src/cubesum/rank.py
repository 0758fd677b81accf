"""Rank bounds and rational cube-sum verdicts from the Selmer dimension t.

E_{16n^2} and E_{-432n^2} are 3-isogenous, so they share a rank. With
t = dim Sel we always have rank <= t - 1, and rank = t - 1 (mod 2) whenever
the 3-part of Sha has even F_3-dimension. Sha-evenness is only ever a flag
carried in the verdict, never something computed here.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InternalInconsistency
from .profile import TwoPrimeProfile


class Unconditional(str, Enum):
    RANK_ZERO_PROVEN = "rank_zero"
    NO_UNCONDITIONAL_CLAIM = "none"


class CubeSumStatus(str, Enum):
    PROVEN_NOT_CUBE_SUM = "proven_not"
    CUBE_SUM_IF_SHA_EVEN = "cube_sum_if_sha_even"
    EVEN_RANK_SET_IF_SHA_EVEN = "even_rank_set_if_sha_even"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class RankVerdict:
    n: int
    selmer_dim: int
    rank_upper: int
    rank_parity_if_sha_even: int
    possible_ranks_if_sha_even: tuple
    unconditional: Unconditional
    cube_sum_status: CubeSumStatus
    root_number: int

    @property
    def t(self) -> int:
        return self.selmer_dim

    def to_dict(self) -> dict:
        return {
            "t": self.selmer_dim,
            "rank_upper": self.rank_upper,
            "parity": self.rank_parity_if_sha_even,
            "possible_ranks": list(self.possible_ranks_if_sha_even),
            "unconditional": self.unconditional.value,
            "cube_sum": self.cube_sum_status.value,
            "root_number": self.root_number,
        }


def root_number(profile: TwoPrimeProfile) -> int:
    """Global root number of E_{-432n^2} for cube-free n prime to 3."""
    if profile.n_is_pm1_mod_9:
        return (-1) ** profile.k2
    return (-1) ** (1 + profile.k2)


def _status(t: int, possible: tuple) -> CubeSumStatus:
    if t == 1:
        return CubeSumStatus.PROVEN_NOT_CUBE_SUM
    if 0 not in possible:
        # rank is odd, hence positive, once Sha is even
        return CubeSumStatus.CUBE_SUM_IF_SHA_EVEN
    if len(possible) > 1:
        return CubeSumStatus.EVEN_RANK_SET_IF_SHA_EVEN
    return CubeSumStatus.UNDETERMINED


def rank_verdict(profile: TwoPrimeProfile, selmer) -> RankVerdict:
    t = selmer if isinstance(selmer, int) else selmer.dim
    if not 1 <= t <= profile.num_places + 1:
        raise InternalInconsistency(
            f"n={profile.n}: Selmer dimension {t} outside [1, {profile.num_places + 1}]"
        )
    possible = tuple(range(t - 1, -1, -2))
    return RankVerdict(
        n=profile.n,
        selmer_dim=t,
        rank_upper=t - 1,
        rank_parity_if_sha_even=(t - 1) % 2,
        possible_ranks_if_sha_even=possible,
        unconditional=(
            Unconditional.RANK_ZERO_PROVEN if t == 1 else Unconditional.NO_UNCONDITIONAL_CLAIM
        ),
        cube_sum_status=_status(t, possible),
        root_number=root_number(profile),
    )


def consistency_check(verdict: RankVerdict) -> bool:
    """The root number must match the Selmer parity (-1)^(t-1)."""
    return verdict.root_number == (-1) ** verdict.rank_parity_if_sha_even
