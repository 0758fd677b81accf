"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 n outside the supported domain,
3 internal inconsistency (methods disagree, a fixture or property fails).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .errors import DomainError, InternalInconsistency
from .fixtures import REFERENCE_CASES
from .profile import factor_two_primes
from .rank import rank_verdict
from .search import search_cube_sum, witness_to_point
from .selmer import dim_selmer_closed, dim_selmer_direct

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INCONSISTENT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _seed():
    s = os.environ.get("SEED")
    return int(s) if s not in (None, "") else None


def _profile(n):
    return factor_two_primes(n, seed=_seed())


def _emit(args, report: dict, text: str):
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(text)


def _base(profile) -> dict:
    return {"schema_version": SCHEMA_VERSION, "n": str(profile.n), "profile": profile.summary()}


def _profile_text(p) -> str:
    parts = " * ".join(f"{ell}^{e}" if e > 1 else str(ell) for ell, e in p.primes)
    lines = [
        f"n = {p.n} = {parts}",
        "primes: " + ", ".join(f"({ell}, {e})" for ell, e in p.primes),
        f"k1 = {p.k1} (split), k2 = {p.k2} (inert), |S_n| = {p.num_places}",
        f"residues mod 9: n = {p.n_mod_9}, primes = {p.ell_mod_9}",
    ]
    for ell, s in sorted(p.splittings.items()):
        lines.append(f"{ell} = ({s.pi}) * ({s.pi_conj})")
    for key, val in p.symbols.items():
        lines.append(f"symbol ({key})_3 = zeta^{val}")
    return "\n".join(lines)


def _dump_trace(report, out=None):
    out = out or sys.stderr
    print(f"local-condition trace over generators {report.generators}:", file=out)
    for vec, checks in report.trace:
        flags = " ".join(f"{k}:{'ok' if v else 'no'}" for k, v in checks.items())
        print(f"  {vec}  {flags}", file=out)


def _selmer(profile, method: str):
    """Returns (json fragment, text, direct report or None, closed report or None)."""
    frag, lines = {}, []
    closed = direct = None
    if method in ("closed", "both"):
        closed = dim_selmer_closed(profile)
        frag["closed"] = closed.dim
        lines.append(f"closed form: dim {closed.dim}  [{closed.branch}]")
    if method in ("direct", "both"):
        direct = dim_selmer_direct(profile)
        frag["direct"] = direct.dim
        frag["basis"] = direct.basis_labels()
        lines.append(f"direct enumeration: dim {direct.dim}")
        lines += [f"  {b}" for b in direct.basis_labels()]
    if closed and direct and closed.dim != direct.dim:
        _dump_trace(direct)
        raise InternalInconsistency(
            f"n={profile.n}: closed form gives {closed.dim}, direct enumeration {direct.dim}"
        )
    return frag, "\n".join(lines), direct, closed


def _search_fragment(n, bound):
    w = search_cube_sum(n, bound)
    frag = {"bound": str(bound), "witness": None}
    if w is None:
        return frag, f"no a^3 + b^3 = n c^3 with c <= {bound}"
    pt = witness_to_point(w, n)
    frag["witness"] = {"a": str(w.a), "b": str(w.b), "c": str(w.c)}
    frag["point"] = {"u": str(pt.u), "v": str(pt.v)}
    text = f"{n} = ({w.a}/{w.c})^3 + ({w.b}/{w.c})^3; point (u, v) = ({pt.u}, {pt.v})"
    return frag, text


def cmd_classify(args):
    p = _profile(args.n)
    _emit(args, _base(p), _profile_text(p))


def cmd_selmer(args):
    t0 = time.perf_counter()
    p = _profile(args.n)
    frag, text, _, _ = _selmer(p, args.method)
    report = _base(p) | {"selmer": frag, "timing": {"seconds": round(time.perf_counter() - t0, 6)}}
    _emit(args, report, text)


def _verdict_text(v) -> str:
    return "\n".join([
        f"t = dim Sel = {v.t}",
        f"rank <= {v.rank_upper}; if Sha[3] is even: rank in {set(v.possible_ranks_if_sha_even)}",
        f"root number {v.root_number:+d}",
        f"unconditional: {v.unconditional.value}",
        f"cube sum: {v.cube_sum_status.value}",
    ])


def cmd_rank(args):
    t0 = time.perf_counter()
    p = _profile(args.n)
    frag, text, direct, _ = _selmer(p, "both")
    v = rank_verdict(p, direct)
    report = _base(p) | {"selmer": frag, "verdict": v.to_dict()}
    lines = [text, _verdict_text(v)]
    if args.bound:
        sfrag, stext = _search_fragment(p.n, args.bound)
        if sfrag["witness"] is None and v.t == 1:
            stext += "; none exists at any bound since the rank is 0"
        elif sfrag["witness"] is None:
            stext += " (evidence only, not a proof)"
        report["search"] = sfrag
        lines.append(stext)
    report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    _emit(args, report, "\n".join(lines))


def cmd_search(args):
    if args.n < 1 or args.bound < 1:
        raise DomainError("n and --bound must be positive")
    frag, text = _search_fragment(args.n, args.bound)
    if frag["witness"] is None:
        text += " (evidence only, not a proof)"
    _emit(args, {"schema_version": SCHEMA_VERSION, "n": str(args.n), "search": frag}, text)


def run_reference_cases():
    """[(case, closed, direct, ok)] for every stored example."""
    rows = []
    for case in REFERENCE_CASES:
        p = factor_two_primes(case.n, seed=_seed())
        closed = dim_selmer_closed(p).dim
        direct = dim_selmer_direct(p, keep_trace=False).dim
        v = rank_verdict(p, direct)
        ok = closed == direct == case.t
        if case.known_rank is not None:
            ok = ok and case.known_rank <= v.rank_upper
            ok = ok and case.known_rank % 2 == v.rank_parity_if_sha_even
        rows.append((case, closed, direct, ok))
    return rows


def cmd_worked_examples(args):
    rows = run_reference_cases()
    failed = [r for r in rows if not r[3]]
    if args.json:
        print(json.dumps({
            "schema_version": SCHEMA_VERSION,
            "cases": [
                {"name": c.name, "n": str(c.n), "pattern": c.pattern, "expected_t": c.t,
                 "closed": cl, "direct": d,
                 "known_rank": c.known_rank, "pass": ok}
                for c, cl, d, ok in rows
            ],
        }, indent=2))
    else:
        print(f"{'case':6} {'l1':>4} {'l2':>4} {'form':10} {'n':>12} {'t':>2} {'closed':>6} {'direct':>6} {'rank':>4}")
        for c, cl, d, ok in rows:
            r = "-" if c.known_rank is None else str(c.known_rank)
            print(f"{c.name:6} {c.l1:>4} {c.l2:>4} {c.pattern:10} {c.n:>12} {c.t:>2} "
                  f"{cl:>6} {d:>6} {r:>4}  {'PASS' if ok else 'FAIL'}")
        print(f"{len(rows) - len(failed)}/{len(rows)} passed")
    if failed:
        raise InternalInconsistency(f"{len(failed)} example(s) failed")


def cmd_scan(args):
    from .audit import scan

    results = scan(args.max_prime, jobs=args.jobs)
    violations = [msg for _, msgs in results for msg in msgs]
    if args.json:
        print(json.dumps({
            "schema_version": SCHEMA_VERSION,
            "max_prime": str(args.max_prime),
            "cases": len(results),
            "violations": violations,
        }, indent=2))
    else:
        for msg in violations:
            print(msg)
        print(f"{len(results)} cases, {len(violations)} violations")
    if violations:
        raise InternalInconsistency(f"{len(violations)} violations")


def _positive_int(s):
    try:
        return int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}")


def build_parser():
    parser = _Parser(prog="cubesum", description="Selmer dimensions and cube-sum verdicts for n = l1^a l2^b.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, with_n=True):
        p = sub.add_parser(name, help=help)
        if with_n:
            p.add_argument("n", type=_positive_int)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "factor n and show its residue data")
    p = add("selmer", cmd_selmer, "Selmer dimension")
    p.add_argument("--method", choices=("closed", "direct", "both"), default="both")
    p = add("rank", cmd_rank, "rank bounds and cube-sum verdict")
    p.add_argument("--bound", type=_positive_int, default=0, help="also search with c up to this bound")
    p = add("search", cmd_search, "search for a^3 + b^3 = n c^3")
    p.add_argument("--bound", type=_positive_int, default=100)
    add("paper-examples", cmd_worked_examples, "run the stored worked examples", with_n=False)
    p = add("scan", cmd_scan, "check all invariants over two-prime n", with_n=False)
    p.add_argument("--max-prime", type=_positive_int, default=200)
    p.add_argument("--jobs", type=_positive_int, default=1)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        if exc.hint:
            print(f"hint: {exc.hint}", file=sys.stderr)
        return EXIT_DOMAIN
    except InternalInconsistency as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
