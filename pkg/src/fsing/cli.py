"""Command-line front end.

    fsing run <manifest.toml>        execute a manifest of checks
    fsing corpus [id]                run the built-in example reproductions
    fsing gb|nf|member|...           one-off checks on a ring given by flags

Ring flags: --p, --vars x,y,z, --weights 15,10,6, --relations f g h.
Output: human table by default; --json for the machine report (byte-stable,
no timings unless --timings).  Exit codes: 0 all verdicts ok, 1 mismatch or
domain/resource error, 2 usage or parse error.  The environment variable
FSING_STEP_BUDGET caps reduction work globally.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Any, Sequence

from .corpus import EXAMPLE_IDS, run_corpus
from .errors import DomainError, ParseError, ResourceError, UsageError
from .groebner import Ideal, QuotientRing, normal_form
from .manifest import Bounds, Manifest, load_manifest, run_checks
from .report import CheckRecord, Report
from .ring import WeightedRing


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _ring_from_args(args) -> QuotientRing:
    if args.p is None or args.vars is None:
        raise UsageError("this subcommand needs --p and --vars")
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    weights = _csv_ints(args.weights) if args.weights else None
    ring = WeightedRing(args.p, names, weights)
    relations = [ring.parse(r) for r in (args.relations or [])]
    return QuotientRing(ring, relations)


def _divisor_pairs(text: str) -> list[list[str]]:
    """"VS=-1/2,VT=1/3" -> [["VS", "-1/2"], ["VT", "1/3"]]."""
    pairs = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        label, eq, coeff = part.partition("=")
        if not eq:
            raise UsageError(f"divisor component {part!r} is not label=coefficient")
        pairs.append([label.strip(), coeff.strip()])
    if not pairs:
        raise UsageError("empty divisor")
    return pairs


def _emit(report: Report, args) -> int:
    timings = bool(getattr(args, "timings", False))
    if getattr(args, "json", False):
        print(report.to_json(timings))
    else:
        print(report.human_table())
    return report.exit_code()


def _run_single(Q: QuotientRing, check: dict, args) -> int:
    manifest = Manifest(rings={"cli": Q}, bounds=Bounds())
    check = dict(check, ring="cli")
    manifest.checks.append(check)
    from .manifest import _validate_check  # shared field validation

    _validate_check(1, check, manifest)
    return _emit(run_checks(manifest), args)


def _cmd_run(args) -> int:
    report = run_checks(load_manifest(args.manifest), args.skip_expensive)
    print(report.to_json(args.timings))
    print(report.human_table(), file=sys.stderr)
    return report.exit_code()


def _cmd_corpus(args) -> int:
    report = run_corpus(args.example, args.skip_expensive)
    if args.json:
        print(report.to_json(args.timings))
    else:
        print(report.human_table())
    return report.exit_code()


def _cmd_gb(args) -> int:
    Q = _ring_from_args(args)
    started = time.perf_counter()
    I = Ideal(Q.ring, [Q.ring.parse(t) for t in args.ideal] + list(Q.relations.gens))
    record = CheckRecord(
        name="reduced basis", kind="gb",
        inputs={"ideal": args.ideal, "relations": args.relations or []},
        verdict=[str(g) for g in I.basis],
        seconds=time.perf_counter() - started,
    )
    return _emit(Report([record]), args)


def _cmd_nf(args) -> int:
    Q = _ring_from_args(args)
    started = time.perf_counter()
    I = Ideal(Q.ring, [Q.ring.parse(t) for t in args.ideal] + list(Q.relations.gens))
    record = CheckRecord(
        name="normal form", kind="nf",
        inputs={"element": args.element, "ideal": args.ideal},
        verdict=str(normal_form(Q.ring.parse(args.element), I)),
        seconds=time.perf_counter() - started,
    )
    return _emit(Report([record]), args)


def _cmd_member(args) -> int:
    return _run_single(
        _ring_from_args(args),
        {"kind": "member", "name": "membership", "element": args.element, "ideal": args.ideal},
        args,
    )


def _cmd_fclosure(args) -> int:
    check = {"kind": "fclosure", "name": "frobenius closure",
             "element": args.element, "ideal": args.ideal}
    if args.bound is not None:
        check["levels"] = args.bound
    return _run_single(_ring_from_args(args), check, args)


def _cmd_fedder(args) -> int:
    return _run_single(
        _ring_from_args(args),
        {"kind": "fedder", "name": "f-purity", "route": args.route},
        args,
    )


def _cmd_tc_cert(args) -> int:
    check: dict[str, Any] = {
        "kind": "tc-cert", "name": "tight-closure certificate",
        "element": args.element, "ideal": args.ideal, "mode": args.mode,
    }
    if args.multiplier is not None:
        check["multiplier"] = args.multiplier
    if args.bound is not None:
        check["levels"] = args.bound
    if args.element_exponent is not None:
        check["element_exponent"] = _csv_ints(args.element_exponent)
    if args.ideal_exponent is not None:
        check["ideal_exponent"] = _csv_ints(args.ideal_exponent)
    return _run_single(_ring_from_args(args), check, args)


def _cmd_hilbert(args) -> int:
    check: dict[str, Any] = {"kind": "hilbert", "name": "hilbert series"}
    if args.bound is not None:
        check["trunc"] = args.bound
    return _run_single(_ring_from_args(args), check, args)


def _cmd_ainv(args) -> int:
    return _run_single(_ring_from_args(args), {"kind": "ainv", "name": "a-invariant"}, args)


def _cmd_veronese(args) -> int:
    check: dict[str, Any] = {"kind": "veronese", "name": "veronese slice", "n": args.n}
    if args.bound is not None:
        check["trunc"] = args.bound
    return _run_single(_ring_from_args(args), check, args)


def _cmd_subring_hf(args) -> int:
    check: dict[str, Any] = {
        "kind": "subring-hf", "name": "subring dims",
        "generators": args.generators, "bound": args.bound,
    }
    if args.unit is not None:
        check["unit"] = args.unit
    return _run_single(_ring_from_args(args), check, args)


def _cmd_subring_member(args) -> int:
    check: dict[str, Any] = {
        "kind": "subring-member", "name": "subring ideal membership",
        "generators": args.generators, "element": args.element,
        "ideal": args.ideal, "degree": args.degree, "power": args.power,
    }
    if args.unit is not None:
        check["unit"] = args.unit
    return _run_single(_ring_from_args(args), check, args)


def _cmd_equalgen(args) -> int:
    return _run_single(
        _ring_from_args(args),
        {"kind": "equalgen", "name": "equal-degree generation", "n": args.n, "bound": args.bound},
        args,
    )


def _cmd_present(args) -> int:
    check: dict[str, Any] = {
        "kind": "present", "name": "presentation", "generators": args.generators,
    }
    if args.unit is not None:
        check["unit"] = args.unit
    if args.symbols:
        check["symbols"] = [s.strip() for s in args.symbols.split(",") if s.strip()]
    if args.contains:
        check["contains"] = args.contains
    return _run_single(_ring_from_args(args), check, args)


def _cmd_divisor(args) -> int:
    from .demazure import parse_divisor

    D = parse_divisor(_divisor_pairs(args.divisor))
    manifest = Manifest(divisors={"cli": D})
    check: dict[str, Any] = {"kind": "divisor", "name": "divisor", "divisor": "cli"}
    ops = [
        args.frac and "frac", args.floor is not None and "floor",
        args.profile is not None and "profile", args.veronese is not None and "veronese",
        args.dim is not None and "dim", args.same_class is not None and "same-class",
    ]
    ops = [op for op in ops if op]
    if len(ops) != 1:
        raise UsageError(
            "pick exactly one of --frac, --floor, --profile, --veronese, --dim, --same-class"
        )
    op = ops[0]
    check["op"] = op
    if op == "floor":
        check["n"] = args.floor
    elif op == "profile":
        check["bound"] = args.profile
    elif op == "veronese":
        check["n"] = args.veronese
    elif op == "dim":
        check["n"] = args.dim
    elif op == "same-class":
        manifest.divisors["other"] = parse_divisor(_divisor_pairs(args.same_class))
        check["other"] = "other"
    from .manifest import _validate_check

    _validate_check(1, check, manifest)
    manifest.checks.append(check)
    return _emit(run_checks(manifest), args)


def _cmd_lc_class(args) -> int:
    check: dict[str, Any] = {
        "kind": "lc-class", "name": "local cohomology class",
        "sop": args.sop, "numerator": args.numerator,
        "exponents": _csv_ints(args.exponents),
    }
    ops = [args.degree and "degree", args.frob is not None and "frob", args.iszero and "iszero"]
    ops = [op for op in ops if op]
    if len(ops) != 1:
        raise UsageError("pick exactly one of --degree, --frob, --iszero")
    check["op"] = ops[0]
    if ops[0] == "frob":
        check["e"] = args.frob
    if ops[0] == "iszero" and args.bound is not None:
        check["s_max"] = args.bound
    return _run_single(_ring_from_args(args), check, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fsing",
        description="Exact checks for Frobenius-theoretic ring properties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ring_flags = argparse.ArgumentParser(add_help=False)
    ring_flags.add_argument("--p", type=int, help="characteristic")
    ring_flags.add_argument("--vars", help="comma-separated variable names")
    ring_flags.add_argument("--weights", help="comma-separated positive weights")
    ring_flags.add_argument("--relations", nargs="*", help="defining relations")

    out_flags = argparse.ArgumentParser(add_help=False)
    out_flags.add_argument("--json", action="store_true", help="machine report on stdout")
    out_flags.add_argument("--timings", action="store_true", help="include per-check seconds")

    p = sub.add_parser("run", parents=[out_flags], help="execute a TOML manifest")
    p.add_argument("manifest")
    p.add_argument("--skip-expensive", action="store_true")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("corpus", parents=[out_flags], help="run built-in reproductions")
    p.add_argument("example", nargs="?", choices=EXAMPLE_IDS, metavar="id",
                   help=f"one of: {', '.join(EXAMPLE_IDS)}")
    p.add_argument("--skip-expensive", action="store_true")
    p.set_defaults(func=_cmd_corpus)

    p = sub.add_parser("gb", parents=[ring_flags, out_flags], help="reduced basis")
    p.add_argument("--ideal", nargs="+", required=True)
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("nf", parents=[ring_flags, out_flags], help="normal form")
    p.add_argument("--element", required=True)
    p.add_argument("--ideal", nargs="+", required=True)
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("member", parents=[ring_flags, out_flags], help="ideal membership")
    p.add_argument("--element", required=True)
    p.add_argument("--ideal", nargs="+", required=True)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("fclosure", parents=[ring_flags, out_flags],
                       help="bounded frobenius-closure membership")
    p.add_argument("--element", required=True)
    p.add_argument("--ideal", nargs="+", required=True)
    p.add_argument("--bound", type=int, help="level cap E")
    p.set_defaults(func=_cmd_fclosure)

    p = sub.add_parser("fedder", parents=[ring_flags, out_flags], help="F-purity test")
    p.add_argument("--route", default="auto", choices=["auto", "hypersurface", "colon"])
    p.set_defaults(func=_cmd_fedder)

    p = sub.add_parser("tc-cert", parents=[ring_flags, out_flags],
                       help="bounded tight-closure certificate")
    p.add_argument("--element", required=True)
    p.add_argument("--ideal", nargs="+", required=True)
    p.add_argument("--multiplier")
    p.add_argument("--bound", type=int, help="level cap E")
    p.add_argument("--mode", default="bracket", choices=["bracket", "ordinary"])
    p.add_argument("--element-exponent", help="a,b meaning a*q+b")
    p.add_argument("--ideal-exponent", help="a,b meaning a*q+b")
    p.set_defaults(func=_cmd_tc_cert)

    p = sub.add_parser("hilbert", parents=[ring_flags, out_flags], help="hilbert series")
    p.add_argument("--bound", type=int, help="coefficient truncation")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("ainv", parents=[ring_flags, out_flags], help="a-invariant")
    p.set_defaults(func=_cmd_ainv)

    p = sub.add_parser("veronese", parents=[ring_flags, out_flags],
                       help="veronese slice of the series")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, help="stream truncation")
    p.set_defaults(func=_cmd_veronese)

    p = sub.add_parser("subring-hf", parents=[ring_flags, out_flags],
                       help="graded dims of a generated subring")
    p.add_argument("--generators", nargs="+", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--unit", type=int, help="ambient degree of internal degree 1")
    p.set_defaults(func=_cmd_subring_hf)

    p = sub.add_parser("subring-member", parents=[ring_flags, out_flags],
                       help="membership in a subring ideal, graded piece")
    p.add_argument("--generators", nargs="+", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--ideal", nargs="+", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--unit", type=int)
    p.set_defaults(func=_cmd_subring_member)

    p = sub.add_parser("equalgen", parents=[ring_flags, out_flags],
                       help="veronese generated in equal degree, up to a bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=_cmd_equalgen)

    p = sub.add_parser("present", parents=[ring_flags, out_flags],
                       help="presentation of a generated subring")
    p.add_argument("--generators", nargs="+", required=True)
    p.add_argument("--unit", type=int)
    p.add_argument("--symbols", help="comma-separated symbol names")
    p.add_argument("--contains", nargs="*", help="symbol polynomials to test")
    p.set_defaults(func=_cmd_present)

    p = sub.add_parser("divisor", parents=[out_flags],
                       help="rational divisor arithmetic on the line")
    p.add_argument("divisor", help='components, e.g. "VS=-1/2,VT=1/3,VST=1/5"')
    p.add_argument("--frac", action="store_true")
    p.add_argument("--floor", type=int, metavar="N")
    p.add_argument("--profile", type=int, metavar="N")
    p.add_argument("--veronese", type=int, metavar="N")
    p.add_argument("--dim", type=int, metavar="N")
    p.add_argument("--same-class", metavar="DIVISOR")
    p.set_defaults(func=_cmd_divisor)

    p = sub.add_parser("lc-class", parents=[ring_flags, out_flags],
                       help="top local cohomology classes")
    p.add_argument("--sop", nargs="+", required=True)
    p.add_argument("--numerator", required=True)
    p.add_argument("--exponents", required=True, help="comma-separated positive ints")
    p.add_argument("--degree", action="store_true")
    p.add_argument("--frob", type=int, metavar="E")
    p.add_argument("--iszero", action="store_true")
    p.add_argument("--bound", type=int, help="vanishing-scan cap")
    p.set_defaults(func=_cmd_lc_class)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
