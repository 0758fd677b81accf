"""Property checks over every admissible n built from two primes up to a bound."""
from __future__ import annotations

from .eisenstein import ZETA, PrimeSplitting
from .errors import InternalInconsistency
from .profile import TwoPrimeProfile, is_prime, profile_from_factors, with_splittings
from .rank import consistency_check, rank_verdict
from .selmer import dim_selmer_closed, dim_selmer_direct


def two_prime_factorizations(max_prime: int):
    primes = [p for p in range(2, max_prime + 1) if p != 3 and is_prime(p)]
    for i, l1 in enumerate(primes):
        for l2 in primes[i + 1:]:
            for e1 in (1, 2):
                for e2 in (1, 2):
                    yield {l1: e1, l2: e2}


def _variants(profile: TwoPrimeProfile):
    """Same n with pi/pi' swapped, and with pi replaced by other associates."""
    split = profile.splittings
    if not split:
        return
    yield with_splittings(
        profile, {ell: PrimeSplitting(ell, s.pi_conj, s.pi) for ell, s in split.items()}
    )
    yield with_splittings(
        profile, {ell: PrimeSplitting(ell, ZETA * s.pi, -s.pi_conj) for ell, s in split.items()}
    )
    yield with_splittings(
        profile,
        {ell: PrimeSplitting(ell, -ZETA * ZETA * s.pi_conj, ZETA * s.pi) for ell, s in split.items()},
    )


def check_profile(profile: TwoPrimeProfile) -> list:
    """Violations (as strings) of every invariant for one n; empty if clean."""
    bad = []
    n = profile.n
    try:
        direct = dim_selmer_direct(profile, keep_trace=False).dim
    except InternalInconsistency as exc:
        return [f"n={n}: {exc}"]
    closed = dim_selmer_closed(profile).dim
    t = direct
    if closed != direct:
        bad.append(f"n={n}: closed {closed} != direct {direct}")
    places = profile.num_places
    if not 1 <= t <= places + 1:
        bad.append(f"n={n}: t={t} outside [1, {places + 1}]")
    if not profile.n_is_pm1_mod_9 and t > places:
        bad.append(f"n={n}: t={t} > |S_n| although n != +-1 mod 9")
    want = profile.k2 + (1 if profile.n_is_pm1_mod_9 else 0)
    if (t - want) % 2:
        bad.append(f"n={n}: parity of t={t} differs from expected {want % 2}")
    if not consistency_check(rank_verdict(profile, t)):
        bad.append(f"n={n}: root number disagrees with (-1)^(t-1)")
    for v in _variants(profile):
        d, c = dim_selmer_direct(v, keep_trace=False).dim, dim_selmer_closed(v).dim
        if (d, c) != (direct, closed):
            bad.append(f"n={n}: relabeled splitting gives direct {d}, closed {c}")
    return bad


def _check_factors(factors) -> tuple:
    p = profile_from_factors(factors)
    return p.n, check_profile(p)


def scan(max_prime: int, jobs: int = 1) -> list:
    """[(n, violations)] sorted by n, for every two-prime n with primes <= max_prime."""
    work = list(two_prime_factorizations(max_prime))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_factors, work, chunksize=64))
    else:
        results = [_check_factors(f) for f in work]
    return sorted(results)
