"""Command-line surface: verification runs, Gram matrices, and mu scans.

All commands emit a single JSON document (UTF-8, sorted keys) to --out
or stdout.  Identical invocations, including the seed, produce
byte-identical output.  Exit codes: 0 all checks pass, 1 a mathematical
check failed, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction

from . import unitarity, verify
from .form import WordEngine, enumerate_words, word_str


class ConfigError(Exception):
    pass


def _parse_level(text):
    try:
        k, l = (int(p) for p in text.split(","))
    except ValueError:
        raise ConfigError(f"bad level {text!r}; expected k,l") from None
    if k < 0 or l < 0:
        raise ConfigError("level components must be nonnegative")
    return (k, l)


def _parse_pair(text, what):
    try:
        a, b = (int(p) for p in text.split(","))
    except ValueError:
        raise ConfigError(f"bad {what} {text!r}; expected two integers") from None
    return (a, b)


def _parse_theta(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"bad theta {text!r}; expected a rational p/q") from None


def _parse_mu_grid(text):
    try:
        return [float(p) for p in text.split(",")]
    except ValueError:
        raise ConfigError(f"bad mu grid {text!r}; expected comma-separated reals") from None


def _emit(obj, out_path):
    text = json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=1) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify_brackets(args):
    reports = verify.run_all(samples=args.samples, seed=args.seed)
    ok = all(r.ok for r in reports)
    _emit(
        {
            "command": "verify-brackets",
            "seed": args.seed,
            "samples": args.samples,
            "suites": [r.to_json() for r in reports],
            "ok": ok,
        },
        args.out,
    )
    if not ok:
        first = next(r for r in reports if not r.ok)
        print(f"FAILED {first.name}: {first.failures[0]}", file=sys.stderr)
        return 1
    return 0


def cmd_gram(args):
    if args.window is None and args.constraint is None:
        args.window = 1
    constraint = _parse_pair(args.constraint, "constraint") if args.constraint else None
    window = None if constraint is not None else args.window
    engine = WordEngine()
    g = engine.gram(_parse_level(args.level), window=window, constraint=constraint)
    _emit(g.to_json(), args.out)
    return 0


def cmd_form_crosscheck(args):
    budget = sum(_parse_level(args.level))
    window = args.window if args.window is not None else 1
    engine = WordEngine()
    words = []
    for k in range(budget + 1):
        for l in range(budget + 1 - k):
            words.extend(enumerate_words((k, l), window=window))
    mismatches = []
    pairs = 0
    for u, v in itertools.product(words, repeat=2):
        pairs += 1
        a = engine.form_words(u, v)
        b = engine.form_combinatorial(u, v)
        if a != b:
            mismatches.append(
                {"u": word_str(u), "v": word_str(v),
                 "recursive": str(a), "combinatorial": str(b)}
            )
    _emit(
        {
            "command": "form-crosscheck",
            "total_level_budget": budget,
            "window": window,
            "words": len(words),
            "pairs": pairs,
            "mismatches": mismatches[:50],
            "ok": not mismatches,
        },
        args.out,
    )
    if mismatches:
        print(f"FAILED: {len(mismatches)} mismatching pairs; first: "
              f"{mismatches[0]}", file=sys.stderr)
        return 1
    return 0


def cmd_unitarity_scan(args):
    if args.window is None and args.constraint is None:
        args.window = 1
    constraint = _parse_pair(args.constraint, "constraint") if args.constraint else None
    window = None if constraint is not None else args.window
    engine = WordEngine()
    report = unitarity.mu_scan(
        engine,
        _parse_level(args.level),
        _parse_theta(args.theta),
        _parse_mu_grid(args.mu),
        window=window,
        constraint=constraint,
    )
    _emit(report.to_json(), args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qtgl3",
        description="Exact quantum-torus module computations and unitarity scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-brackets",
                       help="run the exact bracket/homomorphism suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_verify_brackets)

    p = sub.add_parser("gram", help="write a Gram matrix as JSON")
    p.add_argument("--level", required=True, help="k,l")
    p.add_argument("--window", type=int, default=None,
                   help="per-argument exponent window (default 1)")
    p.add_argument("--constraint", default=None,
                   help="M,N nonnegative total-exponent budget (alternative to --window)")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_gram)

    p = sub.add_parser("form-crosscheck",
                       help="compare the recursive and combinatorial form evaluators")
    p.add_argument("--level", default="2,1",
                   help="k,l; all word pairs with total level <= k+l are compared")
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_form_crosscheck)

    p = sub.add_parser("unitarity-scan",
                       help="minimum Gram eigenvalues over a mu grid")
    p.add_argument("--level", required=True, help="k,l")
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--constraint", default=None)
    p.add_argument("--theta", required=True, help="rational p/q with q = exp(2*pi*i*theta)")
    p.add_argument("--mu", required=True, help="comma-separated mu grid")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_unitarity_scan)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
