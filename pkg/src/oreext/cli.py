"""Command-line front end: ``oreext COMMAND --config CFG [options]``.

Exit status: 0 success, 1 when a check comes out negative, 2 on usage
errors (bad config, bad expression, unsupported combination).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib import resources

from .catalog import build_algebra, builtin_names, load_config
from .certificate import Certificate, replay
from .errors import LawViolation, OreError, ProviderError, UsageError
from .maps import verify_laws
from .ore import commutator, pi_map, x_power_times
from .parser import parse_ring_element
from .rings import Ideal
from .simplicity import (CentralStall, inner_derivation_witness, invariant_ideal_check,
                         is_delta_simple, main_theorem_report, simplicity_witness)
from .structure import (TruncationBound, center, centralizer_of_R, constants,
                        is_maximal_commutative)

log = logging.getLogger("oreext")

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

COMMANDS = ["mul", "commutator", "pi", "centralizer", "center", "constants", "maxcomm",
            "delta-simple", "witness", "replay", "inner-witness", "theorem-report",
            "verify-laws", "examples"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="config file or built-in name (see `examples --list`)")
    common.add_argument("--xdeg", type=int, help="Ore-degree bound N")
    common.add_argument("--ydeg", type=int, help="coefficient-degree bound M")
    common.add_argument("--samples", type=int, help="sample count for sampled checks")
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness")
    common.add_argument("--json", action="store_true", help="emit JSON")

    parser = _Parser(prog="oreext", description="Computations in Ore extensions R[x; sigma, delta].")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    p = sub.add_parser("mul", parents=[common], help="multiply expressions left to right")
    p.add_argument("exprs", nargs="+")
    p = sub.add_parser("commutator", parents=[common], help="ab - ba")
    p.add_argument("a")
    p.add_argument("b")
    p = sub.add_parser("pi", parents=[common], help="coefficients of x^n r")
    p.add_argument("--element", "-r", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    for name in ("centralizer", "center", "constants", "maxcomm", "theorem-report"):
        sub.add_parser(name, parents=[common])
    p = sub.add_parser("delta-simple", parents=[common], help="is R sigma-delta-simple?")
    p.add_argument("--ideal", help="comma-separated generators: check invariance of this ideal instead")
    p.add_argument("--degree-bound", type=int, default=3)
    p = sub.add_parser("witness", parents=[common], help="simplicity certificate for an element")
    p.add_argument("--element", "-b", required=True)
    p = sub.add_parser("replay", parents=[common], help="re-check a certificate file ('-' for stdin)")
    p.add_argument("certificate")
    p = sub.add_parser("inner-witness", parents=[common])
    p.add_argument("--alpha", default="y")
    sub.add_parser("verify-laws", parents=[common])
    p = sub.add_parser("examples", parents=[common], help="golden example corpus")
    p.add_argument("--run", default="all", help="case name or 'all'")
    p.add_argument("--list", action="store_true")
    return parser


# --------------------------------------------------------------------------
# helpers


def _config(args):
    if not args.config:
        raise UsageError(f"{args.command} needs --config")
    return load_config(args.config)


def _spec(args, check=True):
    return build_algebra(_config(args), seed=args.seed, check=check)


def _bound(args, config):
    b = config.get("bounds", {})
    return TruncationBound(
        args.xdeg if args.xdeg is not None else b.get("x_degree", 4),
        args.ydeg if args.ydeg is not None else b.get("coeff_degree", 4),
        args.samples if args.samples is not None else b.get("samples", 20))


# --------------------------------------------------------------------------
# command handlers: each returns (exit code, payload)


def cmd_mul(args):
    spec = _spec(args)
    result = spec.one
    for e in args.exprs:
        result = result * spec(e)
    return EXIT_OK, {"result": str(result)}


def cmd_commutator(args):
    spec = _spec(args)
    return EXIT_OK, {"result": str(commutator(spec(args.a), spec(args.b)))}


def cmd_pi(args):
    spec = _spec(args)
    r = parse_ring_element(args.element, spec.ring)
    if args.n < 0 or (args.m is not None and args.m < 0):
        raise UsageError("n and m must be non-negative")
    out = {"r": str(r), "n": args.n, "x^n r": str(x_power_times(spec, args.n, r))}
    if args.m is not None:
        out["m"] = args.m
        out["value"] = str(pi_map(spec, args.m, args.n, r))
    return EXIT_OK, out


def _subspace(fn):
    def handler(args):
        config = _config(args)
        spec = build_algebra(config, seed=args.seed)
        bound = _bound(args, config)
        report = fn(spec, bound, seed=args.seed) if fn is not constants else fn(spec, bound)
        out = report.to_json()
        out["seed"] = args.seed
        return EXIT_OK, out
    return handler


def cmd_maxcomm(args):
    config = _config(args)
    spec = build_algebra(config, seed=args.seed)
    report = is_maximal_commutative(spec, _bound(args, config), seed=args.seed)
    out = report.to_json()
    out["seed"] = args.seed
    return (EXIT_OK if report.maximal else EXIT_NEGATIVE), out


def cmd_delta_simple(args):
    spec = _spec(args)
    if args.ideal:
        gens = [parse_ring_element(g, spec.ring) for g in args.ideal.split(",")]
        res = invariant_ideal_check(spec, Ideal(spec.ring, gens))
        return (EXIT_OK if res.ok else EXIT_NEGATIVE), res.to_json()
    verdict = is_delta_simple(spec, degree_bound=args.degree_bound)
    return (EXIT_OK if verdict.verdict == "simple" else EXIT_NEGATIVE), verdict.to_json()


def cmd_witness(args):
    spec = _spec(args)
    outcome = simplicity_witness(spec, spec(args.element))
    if isinstance(outcome, CentralStall):
        return EXIT_NEGATIVE, outcome.to_json()
    return EXIT_OK, outcome.to_json()


def cmd_replay(args):
    try:
        if args.certificate == "-":
            text = sys.stdin.read()
        else:
            with open(args.certificate, encoding="utf-8") as fh:
                text = fh.read()
        cert = Certificate.from_json(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from None
    spec = _spec(args) if args.config else None
    result = replay(cert, spec)
    return (EXIT_OK if result.ok else EXIT_NEGATIVE), result.to_json()


def cmd_inner_witness(args):
    spec = _spec(args)
    w = inner_derivation_witness(spec, args.alpha, samples=args.samples or 100, seed=args.seed)
    out = w.to_json()
    out["seed"] = args.seed
    return EXIT_OK, out


def cmd_theorem_report(args):
    config = _config(args)
    spec = build_algebra(config, seed=args.seed)
    out = main_theorem_report(spec, _bound(args, config), seed=args.seed)
    out["seed"] = args.seed
    return EXIT_OK, out


def cmd_verify_laws(args):
    spec = _spec(args, check=False)
    samples = args.samples if args.samples is not None else 100
    try:
        verify_laws(spec.sigma, spec.delta, seed=args.seed, samples=samples)
    except LawViolation as exc:
        return EXIT_NEGATIVE, {"ok": False, "violation": str(exc), "seed": args.seed}
    return EXIT_OK, {"ok": True, "samples": samples, "seed": args.seed}


def _golden():
    text = (resources.files("oreext") / "data" / "golden.json").read_text(encoding="utf-8")
    return json.loads(text)["cases"]


def _lookup(payload, path):
    for part in path.split("."):
        payload = payload[part]
    return payload


def run_case(case) -> tuple[bool, list]:
    """Run one golden case; return (matched, list of mismatch messages)."""
    code, payload = run(case["argv"])
    problems = []
    if code != case.get("exit", 0):
        problems.append(f"exit {code}, expected {case.get('exit', 0)}")
    for path, expected in case.get("expect", {}).items():
        try:
            got = _lookup(payload, path)
        except (KeyError, TypeError):
            got = None
        if got != expected:
            problems.append(f"{path}: got {got!r}, expected {expected!r}")
    for path, items in case.get("expect_contains", {}).items():
        try:
            got = _lookup(payload, path)
        except (KeyError, TypeError):
            got = []
        for item in items:
            if item not in got:
                problems.append(f"{path}: missing {item!r}")
    return not problems, problems


def cmd_examples(args):
    cases = _golden()
    if args.list:
        return EXIT_OK, {"cases": [c["name"] for c in cases], "configs": builtin_names()}
    if args.run != "all":
        cases = [c for c in cases if c["name"] == args.run]
        if not cases:
            raise UsageError(f"no golden case named {args.run!r}")
    results = {}
    for case in cases:
        ok, problems = run_case(case)
        results[case["name"]] = {"ok": ok, "problems": problems}
    all_ok = all(r["ok"] for r in results.values())
    return (EXIT_OK if all_ok else EXIT_NEGATIVE), {"all_ok": all_ok, "cases": results}


HANDLERS = {
    "mul": cmd_mul, "commutator": cmd_commutator, "pi": cmd_pi,
    "centralizer": _subspace(centralizer_of_R), "center": _subspace(center),
    "constants": _subspace(constants), "maxcomm": cmd_maxcomm,
    "delta-simple": cmd_delta_simple, "witness": cmd_witness, "replay": cmd_replay,
    "inner-witness": cmd_inner_witness, "theorem-report": cmd_theorem_report,
    "verify-laws": cmd_verify_laws, "examples": cmd_examples,
}


def run(argv) -> tuple[int, dict]:
    """Parse and execute; returns (exit code, JSON-ready payload)."""
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError(f"missing command; choose one of {', '.join(COMMANDS)}")
        log.info("command=%s seed=%s", args.command, args.seed)
        return HANDLERS[args.command](args)
    except ProviderError as exc:
        return EXIT_NEGATIVE, {"error": str(exc), "coefficient": str(exc.coefficient)}
    except (OreError, ValueError) as exc:
        return EXIT_USAGE, {"error": str(exc)}


def _text(payload, indent=""):
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_text(value, indent + "  "))
        elif isinstance(value, list):
            lines.append(f"{indent}{key}:")
            for item in value:
                if isinstance(item, dict):
                    lines.append(f"{indent}  -")
                    lines.extend(_text(item, indent + "    "))
                else:
                    lines.append(f"{indent}  - {item}")
        else:
            lines.append(f"{indent}{key}: {value}")
    return lines


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    argv = sys.argv[1:] if argv is None else argv
    if argv in ([], ["-h"], ["--help"]):
        build_parser().print_help()
        return EXIT_OK if argv else EXIT_USAGE
    as_json = "--json" in argv
    code, payload = run(argv)
    if code == EXIT_USAGE:
        print(f"oreext: error: {payload['error']}", file=sys.stderr)
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif code != EXIT_USAGE:
        print("\n".join(_text(payload)))
    return code


if __name__ == "__main__":
    sys.exit(main())
