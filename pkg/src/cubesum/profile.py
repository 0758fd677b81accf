"""Validation and classification of n = l1^e1 * l2^e2 into the case grid."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .eisenstein import PrimeSplitting, primary_associate, split_prime
from .errors import DivisibleByThree, NotCubeFree, TooSmall, WrongFactorCount
from .modular import cubic_symbol

TRIAL_LIMIT = 10**6

# Deterministic for every m < 3.3 * 10^24 (Sorenson & Webster); above that a
# composite passes all twelve bases with probability far below 4^-12.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    for p in _MR_BASES:
        if m % p == 0:
            return m == p
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _factor_cofactor(m: int) -> dict[int, int]:
    """Factor m, all of whose prime factors exceed TRIAL_LIMIT."""
    if m == 1:
        return {}
    if is_prime(m):
        return {m: 1}
    r = isqrt(m)
    if r * r == m and is_prime(r):
        return {r: 2}
    from sympy import factorint

    return {int(p): int(e) for p, e in factorint(m).items()}


def factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    m = n
    for p in (2, 3):
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    p = 5
    limit = min(TRIAL_LIMIT, isqrt(m))
    while p <= limit:
        for q in (p, p + 2):  # 6k - 1, 6k + 1
            while m % q == 0:
                factors[q] = factors.get(q, 0) + 1
                m //= q
        if m == 1:
            break
        p += 6
        limit = min(limit, isqrt(m))
    if m > 1 and m <= TRIAL_LIMIT**2 or m > 1 and is_prime(m):
        factors[m] = factors.get(m, 0) + 1
    elif m > 1:
        for q, e in _factor_cofactor(m).items():
            factors[q] = factors.get(q, 0) + e
    return dict(sorted(factors.items()))


@dataclass(frozen=True)
class TwoPrimeProfile:
    """Arithmetic data of n driving every Selmer computation.

    ``primes`` lists (ell, e) with the primes = 1 mod 3 first. With one
    split and one inert prime the split one is always first; otherwise the
    order is ascending, except that two split primes in the form l1 * l2^2
    are swapped to l2^2 * l1 (``relabeled`` records this).
    """
    n: int
    primes: tuple
    k1: int
    k2: int
    n_mod_9: int
    ell_mod_9: tuple
    splittings: dict = field(compare=False)
    symbols: dict = field(compare=False)
    relabeled: bool = False

    @property
    def ells(self) -> tuple:
        return tuple(ell for ell, _ in self.primes)

    @property
    def exponents(self) -> tuple:
        return tuple(e for _, e in self.primes)

    @property
    def num_places(self) -> int:
        """|S_n|: split primes contribute two places above them."""
        return 2 * self.k1 + self.k2

    @property
    def n_is_pm1_mod_9(self) -> bool:
        return self.n_mod_9 in (1, 8)

    def summary(self) -> dict:
        return {
            "primes": [
                {"l": str(ell), "e": e, "mod9": ell % 9, "split": ell % 3 == 1}
                for ell, e in self.primes
            ],
            "k1": self.k1,
            "k2": self.k2,
            "n_mod_9": self.n_mod_9,
        }


def _order_primes(factors: dict[int, int]) -> tuple[list, bool]:
    split = sorted((p, e) for p, e in factors.items() if p % 3 == 1)
    inert = sorted((p, e) for p, e in factors.items() if p % 3 == 2)
    primes = split + inert
    relabeled = False
    if len(split) == 2 and len(inert) == 0 and [e for _, e in primes] == [1, 2]:
        primes.reverse()
        relabeled = True
    return primes, relabeled


def _symbols(primes: list, splittings: dict) -> dict:
    split = [ell for ell, _ in primes if ell % 3 == 1]
    inert = [ell for ell, _ in primes if ell % 3 == 2]
    out = {}
    if len(split) == 1 and len(inert) == 1:
        s = splittings[split[0]]
        out["l2|pi_l1"] = cubic_symbol(inert[0], s.pi)
        out["l2|pi'_l1"] = cubic_symbol(inert[0], s.pi_conj)
    elif len(split) == 2:
        # numerators must be primary: (zeta*pi / q) differs from (pi / q)
        s1, s2 = splittings[split[0]], splittings[split[1]]
        out["pi_l1|pi_l2"] = cubic_symbol(primary_associate(s1.pi), s2.pi)
        out["pi'_l1|pi_l2"] = cubic_symbol(primary_associate(s1.pi_conj), s2.pi)
    return out


def profile_from_factors(factors: dict[int, int], seed=None, two_primes=True) -> TwoPrimeProfile:
    """Build a profile from a factorization {ell: e}.

    With ``two_primes=False`` any number of distinct primes is accepted; the
    direct Selmer enumeration works for those too.
    """
    if not factors:
        raise TooSmall("n = 1 has no prime factors")
    # checked in this order, so 30 reports the factor count and 45 the 3
    if any(e >= 3 for e in factors.values()):
        raise NotCubeFree(f"n is not cube-free: {factors}")
    if two_primes and len(factors) != 2:
        raise WrongFactorCount(f"n has {len(factors)} distinct prime factors, not 2")
    if 3 in factors:
        raise DivisibleByThree("n is divisible by 3")
    n = 1
    for p, e in factors.items():
        n *= p**e
    primes, relabeled = _order_primes(factors)
    splittings = {ell: split_prime(ell, seed) for ell, _ in primes if ell % 3 == 1}
    return TwoPrimeProfile(
        n=n,
        primes=tuple(primes),
        k1=sum(1 for ell, _ in primes if ell % 3 == 1),
        k2=sum(1 for ell, _ in primes if ell % 3 == 2),
        n_mod_9=n % 9,
        ell_mod_9=tuple(ell % 9 for ell, _ in primes),
        splittings=splittings,
        symbols=_symbols(primes, splittings),
        relabeled=relabeled,
    )


def factor_two_primes(n, seed=None) -> TwoPrimeProfile:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TooSmall(f"{n!r} is not an integer")
    if n <= 1:
        raise TooSmall(f"n = {n} must exceed 1")
    return profile_from_factors(factorize(n), seed=seed)


def with_splittings(profile: TwoPrimeProfile, splittings: dict) -> TwoPrimeProfile:
    """Same n with caller-chosen prime elements (for invariance checks).

    The replacement elements need not be primary or follow the pi/pi'
    labeling convention; they only need to generate the same ideals.
    """
    merged = dict(profile.splittings)
    merged.update(splittings)
    return TwoPrimeProfile(
        n=profile.n,
        primes=profile.primes,
        k1=profile.k1,
        k2=profile.k2,
        n_mod_9=profile.n_mod_9,
        ell_mod_9=profile.ell_mod_9,
        splittings=merged,
        symbols=_symbols(list(profile.primes), merged),
        relabeled=profile.relabeled,
    )


__all__ = [
    "TwoPrimeProfile",
    "PrimeSplitting",
    "factor_two_primes",
    "factorize",
    "is_prime",
    "profile_from_factors",
    "with_splittings",
]
