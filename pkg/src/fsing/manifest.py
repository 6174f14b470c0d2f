"""TOML manifests: declared rings, divisors, bounds, and a check list.

Layout:

    [rings.R]
    p = 2
    vars = ["x", "y", "z"]
    weights = [15, 10, 6]          # optional, default all 1
    relations = ["x^2 + y^3 + z^5"] # optional, default none

    [divisors.D]
    components = [["VX", "-1/2"], ["VY", "2/3"]]

    [bounds]                        # optional global bounds
    levels = 4                      # Frobenius level cap
    s_max = 20                      # vanishing-scan cap
    trunc = 60                      # series truncation

    [[check]]
    kind = "fclosure"
    name = "closure of x at p = 2"
    ring = "R"
    element = "x"
    ideal = ["y", "z"]
    expect = "member-at-level-1"

Unknown check kinds and malformed fields are rejected while loading, before
anything runs.  At run time each check is isolated: a resource or domain
error is recorded on that check's row and the remaining checks still run.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .demazure import (
    QDivisor,
    floor_divisor,
    fractional_part,
    parse_divisor,
    same_fregularity_class,
    section_dim,
    section_ring_profile,
    veronese_divisor,
)
from .errors import AlgebraError, ParseError, UsageError
from .frobenius import fedder_fpure, frobenius_closure_member, tc_certificate
from .groebner import Ideal, QuotientRing, quotient_member
from .hilbert import a_invariant, hilbert_series, veronese_series
from .localcoh import CechClass, class_degree, frobenius_class, is_zero_class
from .report import CheckRecord, Report
from .ring import Polynomial, WeightedRing
from .subring import (
    GradedSubalgebra,
    equal_degree_generation_check,
    power_products,
    subring_hilbert_function,
    subring_ideal_member_graded,
    subring_presentation,
)

DEFAULT_LEVELS = 4
DEFAULT_S_MAX = 20
DEFAULT_TRUNC = 60

# kind -> (required fields, optional fields); "name" and "expect" are always allowed
_CHECK_FIELDS: dict[str, tuple[set[str], set[str]]] = {
    "member": ({"ring", "element", "ideal"}, set()),
    "fclosure": ({"ring", "element", "ideal"}, {"levels"}),
    "fedder": ({"ring"}, {"route"}),
    "tc-cert": (
        {"ring", "element", "ideal"},
        {"multiplier", "levels", "mode", "element_exponent", "ideal_exponent"},
    ),
    "hilbert": ({"ring"}, {"trunc"}),
    "ainv": ({"ring"}, set()),
    "veronese": ({"ring", "n"}, {"trunc"}),
    "subring-hf": ({"ring", "generators", "bound"}, {"unit"}),
    "subring-member": (
        {"ring", "generators", "element", "ideal", "degree"},
        {"unit", "power"},
    ),
    "equalgen": ({"ring", "n", "bound"}, set()),
    "present": ({"ring", "generators"}, {"unit", "symbols", "contains"}),
    "divisor": ({"divisor", "op"}, {"n", "bound", "other"}),
    "lc-class": (
        {"ring", "sop", "numerator", "exponents", "op"},
        {"e", "s_max"},
    ),
}

_DIVISOR_OPS = {"floor", "frac", "profile", "veronese", "same-class", "dim"}
_LC_OPS = {"degree", "frob", "iszero"}

# checks that may take minutes; skipped under --skip-expensive
_EXPENSIVE_KINDS = {"present"}


@dataclass
class Bounds:
    levels: int = DEFAULT_LEVELS
    s_max: int = DEFAULT_S_MAX
    trunc: int = DEFAULT_TRUNC


@dataclass
class Manifest:
    rings: dict[str, QuotientRing] = field(default_factory=dict)
    divisors: dict[str, QDivisor] = field(default_factory=dict)
    bounds: Bounds = field(default_factory=Bounds)
    checks: list[dict] = field(default_factory=list)


def _require(cond: bool, message: str):
    if not cond:
        raise UsageError(message)


def _build_ring(name: str, table: dict) -> QuotientRing:
    _require(isinstance(table, dict), f"ring {name!r} must be a table")
    unknown = set(table) - {"p", "vars", "weights", "relations"}
    _require(not unknown, f"ring {name!r} has unknown keys {sorted(unknown)}")
    _require("p" in table and "vars" in table, f"ring {name!r} needs p and vars")
    p = table["p"]
    _require(isinstance(p, int), f"ring {name!r}: p must be an integer")
    names = table["vars"]
    _require(
        isinstance(names, list) and all(isinstance(v, str) for v in names),
        f"ring {name!r}: vars must be a list of strings",
    )
    weights = table.get("weights")
    if weights is not None:
        _require(
            isinstance(weights, list) and all(isinstance(w, int) for w in weights),
            f"ring {name!r}: weights must be a list of integers",
        )
    ring = WeightedRing(p, names, weights)
    rel_texts = table.get("relations", [])
    _require(
        isinstance(rel_texts, list) and all(isinstance(r, str) for r in rel_texts),
        f"ring {name!r}: relations must be a list of strings",
    )
    relations = [ring.parse(r) for r in rel_texts]
    return QuotientRing(ring, relations)


def _build_divisor(name: str, table: dict) -> QDivisor:
    _require(isinstance(table, dict), f"divisor {name!r} must be a table")
    unknown = set(table) - {"components"}
    _require(not unknown, f"divisor {name!r} has unknown keys {sorted(unknown)}")
    comps = table.get("components", [])
    _require(isinstance(comps, list), f"divisor {name!r}: components must be a list")
    for pair in comps:
        _require(
            isinstance(pair, list)
            and len(pair) == 2
            and all(isinstance(x, str) for x in pair),
            f"divisor {name!r}: each component must be [label, coefficient] strings",
        )
    return parse_divisor(comps)


def _validate_check(idx: int, check: Any, manifest: Manifest):
    _require(isinstance(check, dict), f"check #{idx}: must be a table")
    kind = check.get("kind")
    _require(isinstance(kind, str), f"check #{idx}: missing kind")
    if kind not in _CHECK_FIELDS:
        raise UsageError(
            f"check #{idx}: unknown kind {kind!r}; known kinds: "
            + ", ".join(sorted(_CHECK_FIELDS))
        )
    required, optional = _CHECK_FIELDS[kind]
    keys = set(check) - {"kind", "name", "expect"}
    missing = required - keys
    _require(not missing, f"check #{idx} ({kind}): missing fields {sorted(missing)}")
    unknown = keys - required - optional
    _require(not unknown, f"check #{idx} ({kind}): unknown fields {sorted(unknown)}")
    if "ring" in check:
        _require(
            check["ring"] in manifest.rings,
            f"check #{idx} ({kind}): undeclared ring {check['ring']!r}",
        )
    for key in ("divisor", "other"):
        if key in check:
            _require(
                check[key] in manifest.divisors,
                f"check #{idx} ({kind}): undeclared divisor {check[key]!r}",
            )
    if kind == "divisor":
        _require(
            check["op"] in _DIVISOR_OPS,
            f"check #{idx}: unknown divisor op {check['op']!r}",
        )
    if kind == "lc-class":
        _require(
            check["op"] in _LC_OPS,
            f"check #{idx}: unknown lc-class op {check['op']!r}",
        )


def load_manifest_text(text: str) -> Manifest:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ParseError(f"manifest is not valid TOML: {exc}") from exc
    unknown = set(data) - {"rings", "divisors", "bounds", "check"}
    _require(not unknown, f"manifest has unknown top-level keys {sorted(unknown)}")

    manifest = Manifest()
    for name, table in data.get("rings", {}).items():
        manifest.rings[name] = _build_ring(name, table)
    for name, table in data.get("divisors", {}).items():
        manifest.divisors[name] = _build_divisor(name, table)

    bounds = data.get("bounds", {})
    _require(isinstance(bounds, dict), "bounds must be a table")
    unknown = set(bounds) - {"levels", "s_max", "trunc"}
    _require(not unknown, f"bounds has unknown keys {sorted(unknown)}")
    for key in ("levels", "s_max", "trunc"):
        if key in bounds:
            _require(isinstance(bounds[key], int), f"bounds.{key} must be an integer")
            setattr(manifest.bounds, key, bounds[key])

    checks = data.get("check", [])
    _require(isinstance(checks, list), "check must be an array of tables")
    for idx, check in enumerate(checks, start=1):
        _validate_check(idx, check, manifest)
        manifest.checks.append(check)
    return manifest


def load_manifest(path: str) -> Manifest:
    try:
        with open(path, "rb") as fh:
            text = fh.read().decode("utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read manifest {path!r}: {exc}") from exc
    return load_manifest_text(text)


def _parse_in(ring: WeightedRing, text: Any, what: str) -> Polynomial:
    _require(isinstance(text, str), f"{what} must be a string")
    return ring.parse(text)


def _parse_ideal(ring: WeightedRing, texts: Any, what: str) -> list[Polynomial]:
    _require(
        isinstance(texts, list) and all(isinstance(t, str) for t in texts),
        f"{what} must be a list of strings",
    )
    return [ring.parse(t) for t in texts]


def _linear_exponent(spec: Any, p: int, what: str) -> Callable[[int], int]:
    """[a, b] encodes the exponent a*q + b at level e, where q = p^e."""
    _require(
        isinstance(spec, list)
        and len(spec) == 2
        and all(isinstance(x, int) for x in spec),
        f"{what} must be a pair of integers [a, b] meaning a*q + b",
    )
    a, b = spec

    def fn(e: int) -> int:
        return a * p**e + b

    return fn


def _subalgebra(manifest: Manifest, check: dict) -> GradedSubalgebra:
    Q = manifest.rings[check["ring"]]
    gens = _parse_ideal(Q.ring, check["generators"], "generators")
    unit = check.get("unit", 0)
    _require(isinstance(unit, int), "unit must be an integer")
    return GradedSubalgebra(Q, tuple(gens), unit)


def _run_member(manifest: Manifest, check: dict) -> CheckRecord:
    Q = manifest.rings[check["ring"]]
    x = _parse_in(Q.ring, check["element"], "element")
    gens = _parse_ideal(Q.ring, check["ideal"], "ideal")
    verdict = quotient_member(x, Ideal(Q.ring, gens), Q)
    return CheckRecord(
        name="", kind="member",
        inputs={"ring": check["ring"], "element": str(x), "ideal": [str(g) for g in gens]},
        verdict=verdict,
    )


def _run_fclosure(manifest: Manifest, check: dict) -> CheckRecord:
    Q = manifest.rings[check["ring"]]
    x = _parse_in(Q.ring, check["element"], "element")
    gens = _parse_ideal(Q.ring, check["ideal"], "ideal")
    E = check.get("levels", manifest.bounds.levels)
    v = frobenius_closure_member(x, Ideal(Q.ring, gens), Q, E)
    witness = None
    if v.witness is not None:
        witness = {
            "element": str(v.witness.element),
            "ideal": [str(g) for g in v.witness.ideal.gens],
            "q": v.witness.q,
        }
    return CheckRecord(
        name="", kind="fclosure",
        inputs={
            "ring": check["ring"], "element": str(x),
            "ideal": [str(g) for g in gens], "levels": E,
        },
        verdict=v.status, witness=witness,
    )


def _run_fedder(manifest: Manifest, check: dict) -> CheckRecord:
    Q = manifest.rings[check["ring"]]
    route = check.get("route", "auto")
    res = fedder_fpure(Q, route=route)
    return CheckRecord(
        name="", kind="fedder",
        inputs={"ring": check["ring"], "route": route},
        verdict=res.f_pure,
        witness=None if res.witness is None else str(res.witness),
        detail={"route": res.route},
    )


def _run_tc_cert(manifest: Manifest, check: dict) -> CheckRecord:
    Q = manifest.rings[check["ring"]]
    ring = Q.ring
    x = _parse_in(ring, check["element"], "element")
    gens = _parse_ideal(ring, check["ideal"], "ideal")
    c = ring.parse(check["multiplier"]) if "multiplier" in check else ring.one()
    E = check.get("levels", manifest.bounds.levels)
    mode = check.get("mode", "bracket")
    kwargs: dict[str, Any] = {}
    if "element_exponent" in check:
        kwargs["x_exponent"] = _linear_exponent(
            check["element_exponent"], ring.p, "element_exponent"
        )
    if "ideal_exponent" in check:
        kwargs["ideal_exponent"] = _linear_exponent(
            check["ideal_exponent"], ring.p, "ideal_exponent"
        )
    cert = tc_certificate(c, x, Ideal(ring, gens), Q, E, mode, **kwargs)
    return CheckRecord(
        name="", kind="tc-cert",
        inputs={
            "ring": check["ring"], "multiplier": str(c), "element": str(x),
            "ideal": [str(g) for g in gens], "levels": E, "mode": cert.mode,
        },
        verdict=cert.status,
        detail=[
            {"e": lv.e, "passed": lv.passed, "element": str(lv.element)}
            for lv in cert.levels
        ],
    )


def _run_hilbert(manifest: Manifest, check: dict) -> CheckRecord:
    Q = manifest.rings[check["ring"]]
    trunc = check.get("trunc", manifest.bounds.trunc)
    H = hilbert_series(Q)
    return CheckRecord(
        name="", kind="hilbert",
        inputs={"ring": check["ring"], "trunc": trunc},
        verdict={"series": str(H), "coefficients": H.coefficients(trunc)},
    )


def _run_ainv(manifest: Manifest, check: dict) -> CheckRecord:
    Q = manifest.rings[check["ring"]]
    return CheckRecord(
        name="", kind="ainv",
        inputs={"ring": check["ring"]},
        verdict=a_invariant(Q),
    )


def _run_veronese(manifest: Manifest, check: dict) -> CheckRecord:
    Q = manifest.rings[check["ring"]]
    n = check["n"]
    _require(isinstance(n, int), "n must be an integer")
    trunc = check.get("trunc", manifest.bounds.trunc)
    slice_ = veronese_series(hilbert_series(Q), n, trunc)
    return CheckRecord(
        name="", kind="veronese",
        inputs={"ring": check["ring"], "n": n, "trunc": trunc},
        verdict={"a_invariant": slice_.a_invariant, "stream": list(slice_.stream)},
    )


def _run_subring_hf(manifest: Manifest, check: dict) -> CheckRecord:
    A = _subalgebra(manifest, check)
    N = check["bound"]
    _require(isinstance(N, int), "bound must be an integer")
    return CheckRecord(
        name="", kind="subring-hf",
        inputs={
            "ring": check["ring"],
            "generators": [str(g) for g in A.generators],
            "bound": N,
        },
        verdict=subring_hilbert_function(A, N),
    )


def _run_subring_member(manifest: Manifest, check: dict) -> CheckRecord:
    A = _subalgebra(manifest, check)
    ring = A.ambient.ring
    x = _parse_in(ring, check["element"], "element")
    gens = _parse_ideal(ring, check["ideal"], "ideal")
    k = check.get("power", 1)
    _require(isinstance(k, int) and k >= 1, "power must be a positive integer")
    if k > 1:
        gens = power_products(gens, k)
    n = check["degree"]
    _require(isinstance(n, int), "degree must be an integer")
    verdict = subring_ideal_member_graded(A, x, gens, n)
    return CheckRecord(
        name="", kind="subring-member",
        inputs={
            "ring": check["ring"],
            "generators": [str(g) for g in A.generators],
            "element": str(x), "ideal": check["ideal"],
            "power": k, "degree": n,
        },
        verdict=verdict,
    )


def _run_equalgen(manifest: Manifest, check: dict) -> CheckRecord:
    Q = manifest.rings[check["ring"]]
    n, B = check["n"], check["bound"]
    _require(isinstance(n, int) and isinstance(B, int), "n and bound must be integers")
    return CheckRecord(
        name="", kind="equalgen",
        inputs={"ring": check["ring"], "n": n, "bound": B},
        verdict=equal_degree_generation_check(Q, n, B),
    )


def _run_present(manifest: Manifest, check: dict) -> CheckRecord:
    A = _subalgebra(manifest, check)
    symbols = check.get("symbols")
    if symbols is not None:
        _require(
            isinstance(symbols, list) and all(isinstance(s, str) for s in symbols),
            "symbols must be a list of strings",
        )
    P = subring_presentation(A, symbols)
    verdict: dict[str, Any] = {"relations": [str(g) for g in P.basis]}
    if "contains" in check:
        wanted = _parse_ideal(P.ring, check["contains"], "contains")
        verdict["contains_all"] = all(P.member(w) for w in wanted)
    return CheckRecord(
        name="", kind="present",
        inputs={
            "ring": check["ring"],
            "generators": [str(g) for g in A.generators],
            "symbols": list(P.ring.var_names),
        },
        verdict=verdict,
    )


def _run_divisor(manifest: Manifest, check: dict) -> CheckRecord:
    D = manifest.divisors[check["divisor"]]
    op = check["op"]
    inputs: dict[str, Any] = {"divisor": str(D), "op": op}
    if op == "floor":
        n = check.get("n", 1)
        _require(isinstance(n, int), "n must be an integer")
        F = floor_divisor(D, n)
        inputs["n"] = n
        verdict: Any = {
            "components": [[lb, c] for lb, c in F.components],
            "degree": F.degree,
        }
    elif op == "frac":
        F = fractional_part(D)
        verdict = {
            "components": [[lb, str(c)] for lb, c in F.components],
            "degree": str(F.degree()),
        }
    elif op == "profile":
        N = check.get("bound", manifest.bounds.trunc)
        _require(isinstance(N, int), "bound must be an integer")
        inputs["bound"] = N
        verdict = list(section_ring_profile(D, N).dims)
    elif op == "veronese":
        n = check.get("n")
        _require(isinstance(n, int), "veronese op needs integer n")
        V = veronese_divisor(D, n)
        inputs["n"] = n
        verdict = {"components": [[lb, str(c)] for lb, c in V.components]}
    elif op == "same-class":
        _require("other" in check, "same-class op needs other")
        other = manifest.divisors[check["other"]]
        inputs["other"] = str(other)
        verdict = same_fregularity_class(D, other)
    else:  # dim
        n = check.get("n")
        _require(isinstance(n, int), "dim op needs integer n")
        inputs["n"] = n
        verdict = section_dim(D, n)
    return CheckRecord(name="", kind="divisor", inputs=inputs, verdict=verdict)


def _run_lc_class(manifest: Manifest, check: dict) -> CheckRecord:
    Q = manifest.rings[check["ring"]]
    ring = Q.ring
    sop = _parse_ideal(ring, check["sop"], "sop")
    numerator = _parse_in(ring, check["numerator"], "numerator")
    exponents = check["exponents"]
    _require(
        isinstance(exponents, list) and all(isinstance(a, int) for a in exponents),
        "exponents must be a list of integers",
    )
    c = CechClass(Q, tuple(sop), numerator, tuple(exponents))
    op = check["op"]
    inputs = {
        "ring": check["ring"], "class": str(c), "op": op,
    }
    witness = None
    if op == "degree":
        verdict: Any = class_degree(c)
    elif op == "frob":
        e = check.get("e", 1)
        _require(isinstance(e, int), "e must be an integer")
        img = frobenius_class(c, e)
        inputs["e"] = e
        verdict = {"class": str(img), "degree": class_degree(img)}
    else:  # iszero
        s_max = check.get("s_max", manifest.bounds.s_max)
        _require(isinstance(s_max, int), "s_max must be an integer")
        v = is_zero_class(c, s_max)
        inputs["s_max"] = s_max
        verdict = v.status
        witness = v.witness_s
    return CheckRecord(
        name="", kind="lc-class", inputs=inputs, verdict=verdict, witness=witness
    )


_RUNNERS: dict[str, Callable[[Manifest, dict], CheckRecord]] = {
    "member": _run_member,
    "fclosure": _run_fclosure,
    "fedder": _run_fedder,
    "tc-cert": _run_tc_cert,
    "hilbert": _run_hilbert,
    "ainv": _run_ainv,
    "veronese": _run_veronese,
    "subring-hf": _run_subring_hf,
    "subring-member": _run_subring_member,
    "equalgen": _run_equalgen,
    "present": _run_present,
    "divisor": _run_divisor,
    "lc-class": _run_lc_class,
}


def run_checks(manifest: Manifest, skip_expensive: bool = False) -> Report:
    """Execute every check in declaration order; errors stay on their row."""
    report = Report()
    for idx, check in enumerate(manifest.checks, start=1):
        kind = check["kind"]
        name = check.get("name", f"check-{idx}")
        if skip_expensive and kind in _EXPENSIVE_KINDS:
            report.add(CheckRecord(name=name, kind=kind, skipped=True))
            continue
        started = time.perf_counter()
        try:
            record = _RUNNERS[kind](manifest, check)
        except AlgebraError as exc:
            record = CheckRecord(name=name, kind=kind, error=str(exc))
        record.name = name
        record.seconds = time.perf_counter() - started
        if "expect" in check:
            record.expected = check["expect"]
        report.add(record)
    return report


def run_manifest(path: str, skip_expensive: bool = False) -> Report:
    return run_checks(load_manifest(path), skip_expensive)
