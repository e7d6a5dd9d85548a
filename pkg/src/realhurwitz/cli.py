"""Command-line interface: ``realhurwitz <subcommand> ...``.

Exit codes: 0 success, 1 verification failure or method mismatch,
2 usage error, 3 degenerate branch data, 4 internal invariant breach.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .oracle import (
    DegenerateBranchData,
    LemmaViolation,
    complex_hurwitz_oracle,
    count_fixed_target_factorizations,
    real_hurwitz_oracle,
)
from .perms import Partition, SignSplitting

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_INVARIANT = 4


class UsageError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _signs(text: str) -> SignSplitting:
    try:
        return SignSplitting.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _type_args(p: argparse.ArgumentParser):
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("-l", "--lam", type=_partition, required=True, help="left profile, e.g. 3,1,1")
    p.add_argument("-m", "--mu", type=_partition, required=True, help="right profile")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realhurwitz",
        description="Real double Hurwitz numbers with 3-cycles, computed two ways.")
    parser.add_argument("--json", action="store_true", help="print a single JSON object")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker processes for the factorization search")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("real", help="real double Hurwitz number")
    _type_args(p)
    p.add_argument("--signs", type=_signs, required=True, help="one '+' or '-' per pair")
    p.add_argument("--method", choices=("tropical", "oracle", "both"), default="tropical")

    p = sub.add_parser("complex", help="complex double Hurwitz number with 3-cycles")
    _type_args(p)

    p = sub.add_parser("enhanced", help="enhanced number E_g(λ, μ)")
    _type_args(p)

    p = sub.add_parser("fixed-target", help="factorizations of a d-cycle into 3-cycles")
    p.add_argument("-d", "--degree", type=int, required=True)

    p = sub.add_parser("verify", help="run the acceptance battery")
    p.add_argument("--max-d", type=int, default=6)
    p.add_argument("--max-r", type=int, default=3)

    p = sub.add_parser("export", help="write every enhanced cover class")
    _type_args(p)
    p.add_argument("--signs", type=_signs, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out", help="output file (default: standard output)")
    return parser


def _check_signs(args, r: int):
    if len(args.signs) != r:
        raise UsageError(f"--signs has {len(args.signs)} entries but r = {r}")


def _emit(args, data: dict, text: str):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _cmd_real(args) -> int:
    from .oracle import branch_point_count
    from .tropical.enumerate import real_hurwitz_tropical

    r = branch_point_count(args.genus, args.lam, args.mu)
    _check_signs(args, r)
    data = {"g": args.genus, "lambda": str(args.lam), "mu": str(args.mu), "signs": str(args.signs)}
    parts = []
    if args.method in ("oracle", "both"):
        value = real_hurwitz_oracle(args.genus, args.lam, args.mu, args.signs,
                                    threads=max(1, args.threads)).value
        data["oracle"] = str(value)
        parts.append(f"oracle={value}")
    if args.method in ("tropical", "both"):
        value = real_hurwitz_tropical(args.genus, args.lam, args.mu, args.signs)
        data["tropical"] = str(value)
        parts.append(f"tropical={value}")
    code = EXIT_OK
    if args.method == "both":
        agree = data["oracle"] == data["tropical"]
        data["agree"] = agree
        parts.append("OK" if agree else "MISMATCH")
        code = EXIT_OK if agree else EXIT_MISMATCH
    _emit(args, data, " ".join(parts))
    return code


def _cmd_complex(args) -> int:
    value = complex_hurwitz_oracle(args.genus, args.lam, args.mu).value
    _emit(args, {"g": args.genus, "lambda": str(args.lam), "mu": str(args.mu), "complex": str(value)},
          f"complex={value}")
    return EXIT_OK


def _cmd_enhanced(args) -> int:
    from .enhanced import enumerate_universal

    classes = enumerate_universal(args.genus, args.lam, args.mu)
    e = sum(c.multiplicity for c in classes)
    _emit(args, {"g": args.genus, "lambda": str(args.lam), "mu": str(args.mu),
                 "enhanced": e, "classes": len(classes)},
          f"E={e} classes={len(classes)}")
    return EXIT_OK


def _cmd_fixed_target(args) -> int:
    d = args.degree
    n = count_fixed_target_factorizations(d)
    expected = d ** ((d - 3) // 2)
    _emit(args, {"d": d, "N": n, "expected": expected}, f"N={n} expected={expected}")
    return EXIT_OK if n == expected else EXIT_INVARIANT


def _cmd_verify(args) -> int:
    from .battery import run_all

    echo = None if args.json else print
    results = run_all(args.max_d, args.max_r, echo=echo)
    if args.json:
        print(json.dumps({"results": [
            {"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results]}, sort_keys=True))
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def _cmd_export(args) -> int:
    from .oracle import branch_point_count
    from .tropical.enumerate import enumerate_enhanced_covers
    from .tropical.export import cover_to_dict, to_dot

    r = branch_point_count(args.genus, args.lam, args.mu)
    _check_signs(args, r)
    classes = enumerate_enhanced_covers(args.genus, args.lam, args.mu, args.signs)
    if args.format == "json":
        payload = json.dumps([cover_to_dict(c) for c in classes], indent=2) + "\n"
    else:
        payload = "".join(to_dot(c, f"cover{i}") for i, c in enumerate(classes))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
        msg = f"wrote {len(classes)} classes to {args.out}"
        if args.json:
            print(json.dumps({"classes": len(classes), "path": args.out}))
        else:
            print(msg)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


COMMANDS = {
    "real": _cmd_real,
    "complex": _cmd_complex,
    "enhanced": _cmd_enhanced,
    "fixed-target": _cmd_fixed_target,
    "verify": _cmd_verify,
    "export": _cmd_export,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateBranchData as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except LemmaViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
