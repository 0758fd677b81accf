"""Acceptance criteria, one test each, with their time limits.

Each test records a single ``CRITERION k: PASS|FAIL`` line; pytest prints
them in an "acceptance criteria" section of its summary. Run
``python3 tests/test_acceptance.py`` for just those lines.
"""
import sys
import time

from conftest import ACCEPTANCE_LINES

from cubesum.audit import scan, two_prime_factorizations
from cubesum.cli import run_reference_cases
from cubesum.eisenstein import conj, primary_associate, split_prime
from cubesum.modular import cubic_symbol
from cubesum.profile import factor_two_primes, is_prime, profile_from_factors
from cubesum.rank import CubeSumStatus, rank_verdict
from cubesum.search import search_cube_sum, witness_to_point
from cubesum.selmer import dim_selmer_closed, dim_selmer_direct


def _report(k, ok, seconds, limit, detail=""):
    timed_ok = limit is None or seconds < limit
    verdict = "PASS" if ok and timed_ok else "FAIL"
    limit_s = f" (limit {limit} s)" if limit else ""
    line = f"CRITERION {k}: {verdict}  {seconds:.2f} s{limit_s}  {detail}"
    ACCEPTANCE_LINES.append(line)
    if __name__ == "__main__":
        print(line, flush=True)
    assert ok, detail
    assert timed_ok, f"took {seconds:.2f} s, limit {limit} s"


def test_criterion_1_worked_examples():
    t0 = time.perf_counter()
    rows = run_reference_cases()
    bad = [c.name + ":" + c.pattern for c, _, _, ok in rows if not ok]
    for case, _, direct, _ in rows:
        if case.t == 1:
            v = rank_verdict(factor_two_primes(case.n), direct)
            if v.cube_sum_status != CubeSumStatus.PROVEN_NOT_CUBE_SUM or v.rank_upper != 0:
                bad.append(case.name)
    dt = time.perf_counter() - t0
    _report(1, not bad and len(rows) == 38, dt, 1.0, f"{len(rows)} cases, failures {bad}")


def test_criterion_2_oracle_equivalence():
    t0 = time.perf_counter()
    count, diffs = 0, []
    for f in two_prime_factorizations(200):
        p = profile_from_factors(f)
        d = dim_selmer_direct(p, keep_trace=False).dim
        c = dim_selmer_closed(p).dim
        count += 1
        if c != d:
            diffs.append((p.n, c, d))
    dt = time.perf_counter() - t0
    _report(2, not diffs and count == 3960, dt, 60.0, f"{count} n, {len(diffs)} disagreements")


def test_criterion_3_invariants():
    t0 = time.perf_counter()
    results = scan(200)
    violations = [m for _, msgs in results for m in msgs]
    dt = time.perf_counter() - t0
    _report(3, not violations and len(results) == 3960, dt, None,
            f"{len(results)} n, {len(violations)} violations {violations[:3]}")


def test_criterion_4_positive_control():
    t0 = time.perf_counter()
    p = factor_two_primes(20)
    dims = (dim_selmer_closed(p).dim, dim_selmer_direct(p).dim)
    w = search_cube_sum(20, 10)
    pt = witness_to_point(w, 20)
    ok = (
        dims == (2, 2)
        and w.as_tuple() == (19, 1, 7)
        and 19**3 + 1**3 == 20 * 7**3
        and pt.v**2 == pt.u**3 - 432 * 20**2
    )
    dt = time.perf_counter() - t0
    _report(4, ok, dt, 1.0, f"dims {dims}, witness {w.as_tuple()}, point ({pt.u}, {pt.v})")


def test_criterion_5_negative_controls():
    t0 = time.perf_counter()
    proven, found = 0, []
    for f in two_prime_factorizations(200):
        p = profile_from_factors(f)
        v = rank_verdict(p, dim_selmer_direct(p, keep_trace=False))
        if v.cube_sum_status == CubeSumStatus.PROVEN_NOT_CUBE_SUM:
            proven += 1
            w = search_cube_sum(p.n, 200)
            if w is not None:
                found.append((p.n, w.as_tuple()))
    fourteen = search_cube_sum(14, 1000)
    dt = time.perf_counter() - t0
    ok = not found and fourteen is None and proven > 0
    _report(5, ok, dt, 30.0, f"{proven} n proven not cube sums, witnesses found {found[:3]}, n=14: {fourteen}")


def test_criterion_6_reciprocity():
    t0 = time.perf_counter()
    prim = []
    for ell in range(7, 500, 6):
        if is_prime(ell):
            s = split_prime(ell)
            prim += [primary_associate(s.pi), primary_associate(s.pi_conj)]
    pairs = bad_rec = bad_conj = 0
    for i, a in enumerate(prim):
        for b in prim[i + 1:]:
            if a.norm() == b.norm():
                continue
            pairs += 1
            ab, ba = cubic_symbol(a, b), cubic_symbol(b, a)
            if ab != ba:
                bad_rec += 1
            if cubic_symbol(conj(a), conj(b)) != (-ab) % 3:
                bad_conj += 1
    dt = time.perf_counter() - t0
    _report(6, pairs > 0 and not bad_rec and not bad_conj, dt, 5.0,
            f"{pairs} pairs, {bad_rec} reciprocity and {bad_conj} conjugation failures")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
