"""Command line front end: ``fermat-delta {delta,verify,galois,graph}``.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 for usage and I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import galois
from .delta import METHODS, delta, expected_term_count
from .graph import clique_graph
from .verify import verify_n
from .wedge import format_wedge

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
GALOIS_CHECKS = ("dims", "invariants", "annihilator", "rho-invariance")


class UsageError(Exception):
    pass


def parse_n_range(text):
    """``"5"``, ``"3..8"`` or ``"3,5,7"`` -> sorted list of ints."""
    out = set()
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                lo, hi = part.split("..")
                out.update(range(int(lo), int(hi) + 1))
            else:
                out.add(int(part))
        except ValueError:
            raise UsageError(f"cannot parse degree range {text!r}") from None
    if not out:
        raise UsageError("empty degree range")
    return sorted(out)


def _check_degrees(ns, max_n):
    for n in ns:
        if n < 3:
            raise UsageError(f"n={n}: the Fermat curve construction needs n >= 3")
        if n > max_n:
            raise UsageError(f"n={n} exceeds the soft limit {max_n}; raise --max-n")


def _check_modulus(m):
    if m is not None and m < 2:
        raise UsageError("--mod must be at least 2")


def _emit(report, fmt, text_lines, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _terms(w):
    return [[*k, c] for k, c in w.terms.items()]


def cmd_delta(args):
    (n,) = [args.n] if isinstance(args.n, int) else parse_n_range(args.n)
    _check_degrees([n], args.max_n)
    _check_modulus(args.mod)
    methods = METHODS if args.method == "all" else (args.method,)
    t0 = time.perf_counter()
    results = {m: delta(n, m, args.mod) for m in methods}
    elapsed = time.perf_counter() - t0
    ref = results[methods[0]]
    agree = all(w == ref for w in results.values())
    report = {
        "command": "delta",
        "parameters": {"n": n, "method": args.method, "mod": args.mod},
        "results": {
            "terms": _terms(ref),
            "term_count": len(ref),
            "expected_term_count": expected_term_count(n),
            "methods": list(methods),
            "agree": agree,
        },
        "passed": agree,
    }
    lines = [f"Delta for n={n}" + (f" (mod {args.mod})" if args.mod else ""),
             format_wedge(ref) or "0",
             f"terms: {len(ref)}"]
    if len(methods) > 1:
        for m in methods:
            lines.append(f"  {m:8s} {len(results[m])} terms")
        lines.append("all methods agree" if agree else "METHODS DISAGREE")
    lines.append(f"time: {elapsed:.3f}s")
    _emit(report, args.format, lines)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args):
    ns = parse_n_range(args.n)
    _check_degrees(ns, args.max_n)
    _check_modulus(args.mod)
    per_n = {}
    lines = []
    ok = True
    for n in ns:
        t0 = time.perf_counter()
        checks = verify_n(n, args.mod)
        elapsed = time.perf_counter() - t0
        per_n[str(n)] = [c.as_dict() for c in checks]
        lines.append(f"n={n}" + (f" (mod {args.mod})" if args.mod else "")
                     + f"  [{elapsed:.2f}s]")
        for c in checks:
            ok &= c.passed
            shown = c.value if not isinstance(c.value, bool) else ""
            label = f"{c.name} = {shown}" if shown != "" else c.name
            lines.append(f"  {label}: {'pass' if c.passed else 'FAIL'}")
    report = {"command": "verify",
              "parameters": {"n": ns, "mod": args.mod},
              "results": per_n, "passed": ok}
    _emit(report, args.format, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_galois(args):
    if not args.action:
        raise galois.ExternalDataRequired(
            "external data required: pass --action FILE with the action matrices")
    checks = parse_checks(args.checks)
    spec = galois.read_action_file(args.action)
    p = spec.p
    results = {"p": p, "generators": spec.names}
    lines = [f"action file {args.action}: p={p}, generators {', '.join(spec.names) or '(none)'}"]
    ok = True
    if "dims" in checks:
        results["ambient_dimension"] = galois.ambient_dimension(p)
        lines.append(f"ambient dimension: {results['ambient_dimension']}")
    if "invariants" in checks:
        results["invariant_dimension"] = galois.invariant_dimension(spec)
        lines.append(f"invariant dimension: {results['invariant_dimension']}")
    if "annihilator" in checks:
        ann = galois.check_annihilator(spec)
        results["annihilator"] = ann
        ok &= ann
        lines.append(f"annihilator: {'pass' if ann else 'FAIL'}")
    if "rho-invariance" in checks:
        inv = galois.rho_invariance(spec)
        results["rho_invariance"] = inv
        ok &= all(inv.values())
        for name, v in inv.items():
            lines.append(f"rho invariant under {name}: {'pass' if v else 'FAIL'}")
    report = {"command": "galois",
              "parameters": {"action": str(args.action), "checks": sorted(checks)},
              "results": results, "passed": ok}
    _emit(report, args.format, lines)
    return EXIT_OK if ok else EXIT_FAIL


def parse_checks(text):
    if text is None:
        return set(GALOIS_CHECKS)
    checks = {c.strip() for c in text.split(",") if c.strip()}
    bad = checks - set(GALOIS_CHECKS)
    if bad:
        raise UsageError(f"unknown checks {sorted(bad)}; choose from {GALOIS_CHECKS}")
    return checks


def cmd_graph(args):
    (n,) = [args.n] if isinstance(args.n, int) else parse_n_range(args.n)
    _check_degrees([n], args.max_n)
    g = clique_graph(n)
    dot = g.to_dot()
    if args.out:
        try:
            Path(args.out).write_text(dot, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
    complete = all(g.level_is_complete(lev) for lev in g.levels())
    report = {"command": "graph",
              "parameters": {"n": n, "out": args.out},
              "results": {"vertices": len(g.vertices), "edges": len(g.edges),
                          "levels": len(g.levels()), "levels_complete": complete},
              "passed": complete}
    lines = [f"n={n}: {len(g.vertices)} vertices, {len(g.edges)} edges, "
             f"{len(g.levels())} levels, every level complete: {complete}"]
    if args.out:
        lines.append(f"wrote {args.out}")
    else:
        lines.append(dot.rstrip())
    _emit(report, args.format, lines)
    return EXIT_OK if complete else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fermat-delta",
        description="Classifying element of the Fermat curve's lower central series.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_mod=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-n", type=int, default=20,
                       help="soft limit on the degree (default 20)")
        if with_mod:
            p.add_argument("--mod", type=int, default=None,
                           help="reduce coefficients mod m (default: exact Z)")

    p = sub.add_parser("delta", help="print Delta for one degree")
    p.add_argument("--n", required=True)
    p.add_argument("--method", choices=METHODS + ("all",), default="formula")
    common(p)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("verify", help="run the structural checks over a degree range")
    p.add_argument("--n", required=True, help="e.g. 5, 3..8 or 3,5,7")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("galois", help="invariants of externally supplied action matrices")
    p.add_argument("--action", help="JSON action file")
    p.add_argument("--checks", help="comma list from " + ",".join(GALOIS_CHECKS))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_galois)

    p = sub.add_parser("graph", help="write the clique graph of Delta as DOT")
    p.add_argument("--n", required=True)
    p.add_argument("--out", help="output .dot path (default: stdout)")
    common(p, with_mod=False)
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, galois.ExternalDataRequired, galois.ActionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # e.g. a composite --mod hitting a non-invertible pivot
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
