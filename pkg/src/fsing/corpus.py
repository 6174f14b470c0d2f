"""Built-in reproductions of the worked examples, with frozen expectations.

Each example is mostly a TOML manifest (exercising the same path as user
manifests) plus a few bespoke cross-route checks that the manifest language
does not express.  Expected values are frozen constants verified against
independent routes; the report's exit code is 0 exactly when every verdict
matches.
"""

from __future__ import annotations

import math
import random
import time
from typing import Any, Callable

from .demazure import fractional_part, parse_divisor, section_ring_profile
from .errors import AlgebraError, UsageError
from .groebner import Ideal, QuotientRing, normal_form, quotient_member
from .hilbert import HilbertSeries, hilbert_series, multiplicity, profile_multiplicity, veronese_series
from .linalg import Echelon
from .localcoh import CechClass, class_degree, frobenius_class, is_zero_class
from .manifest import load_manifest_text, run_checks
from .report import CheckRecord, Report
from .ring import WeightedRing
from .subring import GradedSubalgebra, graded_piece_dim, subring_hilbert_function, subring_presentation

SEED = 20260819


def _timed(
    name: str,
    kind: str,
    fn: Callable[[], Any],
    expected: Any = None,
    inputs: dict | None = None,
    detail: Any = None,
) -> CheckRecord:
    record = CheckRecord(
        name=name, kind=kind, inputs=inputs or {}, expected=expected, detail=detail
    )
    started = time.perf_counter()
    try:
        record.verdict = fn()
    except AlgebraError as exc:
        record.error = str(exc)
    record.seconds = time.perf_counter() - started
    return record


def _from_manifest(toml_text: str, skip_expensive: bool = False) -> list[CheckRecord]:
    return run_checks(load_manifest_text(toml_text), skip_expensive).checks


# ---------------------------------------------------------------- ex3.2

_RING32 = """
[rings.R{p}]
p = {p}
vars = ["x", "y", "z"]
weights = [15, 10, 6]
relations = ["x^2 + y^3 + z^5"]
"""


def _rings32(primes) -> str:
    return "".join(_RING32.format(p=p) for p in primes)


_EX32_TOML = (
    _rings32((2, 3, 5, 7))
    + """
[[check]]
kind = "fclosure"
name = "x in (y,z)^F at p=2"
ring = "R2"
element = "x"
ideal = ["y", "z"]
expect = "member-at-level-1"

[[check]]
kind = "fclosure"
name = "x in (y,z)^F at p=3"
ring = "R3"
element = "x"
ideal = ["y", "z"]
expect = "member-at-level-1"

[[check]]
kind = "fclosure"
name = "x in (y,z)^F at p=5"
ring = "R5"
element = "x"
ideal = ["y", "z"]
expect = "member-at-level-1"

[[check]]
kind = "fclosure"
name = "x in (y,z)^F at p=7"
ring = "R7"
element = "x"
ideal = ["y", "z"]
levels = 2
expect = "non-member-up-to-2"

[[check]]
kind = "ainv"
name = "a-invariant"
ring = "R2"
expect = -1

[[check]]
kind = "hilbert"
name = "series shape"
ring = "R2"
trunc = 20
expect = {series = "(1 - t^30)/((1 - t^15)(1 - t^10)(1 - t^6))"}

[[check]]
kind = "member"
name = "x^2 in (y^2, z^2) at p=2"
ring = "R2"
element = "x^2"
ideal = ["y^2", "z^2"]
expect = true

[[check]]
kind = "lc-class"
name = "degree of [x/(y z^2)]"
ring = "R2"
sop = ["y", "z"]
numerator = "x"
exponents = [1, 2]
op = "degree"
expect = -7

[[check]]
kind = "lc-class"
name = "frobenius image degree doubles"
ring = "R2"
sop = ["y", "z"]
numerator = "x"
exponents = [1, 2]
op = "frob"
e = 1
expect = {degree = -14}

[[check]]
kind = "lc-class"
name = "image class [x^2/(y^2 z^4)] vanishes"
ring = "R2"
sop = ["y", "z"]
numerator = "x^2"
exponents = [2, 4]
op = "iszero"
expect = "zero-with-witness-0"

[[check]]
kind = "member"
name = "vanishing visible at stage s=1 too"
ring = "R2"
element = "x^2*y*z"
ideal = ["y^3", "z^5"]
expect = true
"""
)

# degree-graded basis classes of the top local cohomology with degree in
# [-20, -2]: the ring is free over K[y,z] with basis 1, x
_WINDOW = (
    ("1", (1, 1), -16),
    ("x", (1, 2), -7),
    ("x", (2, 1), -11),
    ("x", (1, 3), -13),
    ("x", (2, 2), -17),
    ("x", (1, 4), -19),
)

# frozen: which window degrees have vanishing Frobenius image, per p
_WINDOW_VANISHING = {2: [-7], 3: [], 5: []}


def _ex32(skip_expensive: bool) -> list[CheckRecord]:
    records = _from_manifest(_EX32_TOML, skip_expensive)
    for p in (2, 3, 5):
        R = WeightedRing(p, ["x", "y", "z"], [15, 10, 6])
        Q = QuotientRing(R, [R.parse("x^2 + y^3 + z^5")])
        y, z = R.var("y"), R.var("z")

        def window(p=p, Q=Q, y=y, z=z, R=R) -> dict:
            vanishing = []
            for num, (i, j), deg in _WINDOW:
                c = CechClass(Q, (y, z), R.parse(num), (i, j))
                if class_degree(c) != deg:
                    raise UsageError(f"window degree bookkeeping is off at {num}")
                if is_zero_class(frobenius_class(c, 1), 20).is_zero:
                    vanishing.append(deg)
            affected = [n for n in range(2, 8) if any(d % n == 0 for d in vanishing)]
            return {"vanishing": vanishing, "affected_veronese": affected}

        records.append(
            _timed(
                f"frobenius kernel on degrees [-20,-2], p={p}",
                "lc-window",
                window,
                expected={
                    "vanishing": _WINDOW_VANISHING[p],
                    "affected_veronese": [7] if p == 2 else [],
                },
                inputs={"p": p, "degrees": [d for _, _, d in _WINDOW]},
            )
        )
    return records


# ---------------------------------------------------------------- ex4.3

_EX43_TOML = """
[divisors.D]
components = [["VS", "-1/2"], ["VT", "1/3"], ["VST", "1/5"]]

[divisors.D7]
components = [["VS", "-7/2"], ["VT", "7/3"], ["VST", "7/5"]]

[divisors.D2]
components = [["VS", "-1"], ["VT", "2/3"], ["VST", "2/5"]]

[[check]]
kind = "divisor"
name = "floor of D"
divisor = "D"
op = "floor"
n = 1
expect = {components = [["VS", -1], ["VST", 0], ["VT", 0]], degree = -1}

[[check]]
kind = "divisor"
name = "floor of 30D"
divisor = "D"
op = "floor"
n = 30
expect = {components = [["VS", -15], ["VST", 6], ["VT", 10]], degree = 1}

[[check]]
kind = "divisor"
name = "fractional part of D"
divisor = "D"
op = "frac"
expect = {components = [["VS", "1/2"], ["VST", "4/5"], ["VT", "2/3"]], degree = "59/30"}

[[check]]
kind = "divisor"
name = "section dim at n=1"
divisor = "D"
op = "dim"
n = 1
expect = 0

[[check]]
kind = "divisor"
name = "section dim at n=6"
divisor = "D"
op = "dim"
n = 6
expect = 1

[[check]]
kind = "divisor"
name = "section dim at n=10"
divisor = "D"
op = "dim"
n = 10
expect = 1

[[check]]
kind = "divisor"
name = "section dim at n=15"
divisor = "D"
op = "dim"
n = 15
expect = 1

[[check]]
kind = "divisor"
name = "section dim at n=30"
divisor = "D"
op = "dim"
n = 30
expect = 2

[[check]]
kind = "divisor"
name = "doubled divisor"
divisor = "D"
op = "veronese"
n = 2
expect = {components = [["VS", "-1"], ["VST", "2/5"], ["VT", "2/3"]]}

[[check]]
kind = "divisor"
name = "7D keeps the fractional part"
divisor = "D"
op = "same-class"
other = "D7"
expect = true

[[check]]
kind = "divisor"
name = "2D changes the fractional part"
divisor = "D"
op = "same-class"
other = "D2"
expect = false
"""


def _ex43(skip_expensive: bool) -> list[CheckRecord]:
    records = _from_manifest(_EX43_TOML, skip_expensive)
    D = parse_divisor([["VS", "-1/2"], ["VT", "1/3"], ["VST", "1/5"]])

    def profile_equals_series() -> bool:
        H = HilbertSeries((1,) + (0,) * 29 + (-1,), (15, 10, 6))
        return list(section_ring_profile(D, 60).dims) == H.coefficients(60)

    records.append(
        _timed(
            "section profile equals hypersurface series to 60",
            "cross-route",
            profile_equals_series,
            expected=True,
            inputs={"divisor": str(D), "weights": [15, 10, 6]},
        )
    )
    return records


# ---------------------------------------------------------------- ex5.3

_RING53 = """
[rings.S{p}]
p = {p}
vars = ["x", "y", "z"]
relations = ["x^3 - y^2*z - y*z^2"]
"""

_EX53_CHECK = """
[[check]]
kind = "subring-hf"
name = "third veronese piece dims at p={p}"
ring = "S{p}"
generators = ["y^3", "y^2*z", "y*z^2", "z^3"]
bound = 8
expect = [1, 4, 7, 10, 13, 16, 19, 22, 25]
"""


def _ex53(skip_expensive: bool) -> list[CheckRecord]:
    toml = "".join(_RING53.format(p=p) for p in (2, 5, 7)) + "".join(
        _EX53_CHECK.format(p=p) for p in (2, 5, 7)
    )
    records = _from_manifest(toml, skip_expensive)

    S = WeightedRing(7, ["x", "y", "z"])
    Q = QuotientRing(S, [S.parse("x^3 - y^2*z - y*z^2")])
    A5 = GradedSubalgebra(
        Q, tuple(S.parse(g) for g in ("x", "y^3", "y^2*z", "y*z^2", "z^3")), 1
    )
    records.append(
        _timed(
            "R_{3n} matches the four-generator subring",
            "cross-route",
            lambda: [graded_piece_dim(A5, 3 * n).rank for n in range(6)],
            expected=[1, 4, 7, 10, 13, 16],
            inputs={"generators": [str(g) for g in A5.generators]},
        )
    )
    A4 = GradedSubalgebra(Q, tuple(S.parse(g) for g in ("y^3", "y^2*z", "y*z^2", "z^3")))
    records.append(
        _timed(
            "generated in equal degree",
            "property",
            lambda: A4.equal_degree,
            expected=True,
        )
    )
    return records


# ---------------------------------------------------------------- ex5.4

_RING54 = """
[rings.R{p}]
p = {p}
vars = ["t", "u", "v", "w"]
weights = [1, 4, 4, 4]
relations = ["t^8 - u*v", "t^4*v - t^4*w - v*w", "u*v - u*w - t^4*w"]
"""

_EX54_HF = """
[[check]]
kind = "subring-hf"
name = "fourth veronese piece dims at p={p}"
ring = "R{p}"
generators = ["t^4", "u", "v", "w"]
bound = 8
expect = [1, 4, 7, 10, 13, 16, 19, 22, 25]
"""

_EX54_PRESENT = """
[[check]]
kind = "present"
name = "presentation carries the three quadrics"
ring = "R7"
generators = ["t^4", "u", "v", "w"]
symbols = ["S", "U", "V", "W"]
contains = ["S^2 - U*V", "S*V - S*W - V*W", "U*V - U*W - S*W"]
expect = {contains_all = true}
"""


def _ex54(skip_expensive: bool) -> list[CheckRecord]:
    toml = (
        "".join(_RING54.format(p=p) for p in (2, 5, 7))
        + "".join(_EX54_HF.format(p=p) for p in (2, 5, 7))
        + _EX54_PRESENT
    )
    records = _from_manifest(toml, skip_expensive)

    def quadric_shape() -> dict:
        S4 = WeightedRing(7, ["t", "u", "v", "w"], [1, 4, 4, 4])
        Q4 = QuotientRing(
            S4,
            [
                S4.parse("t^8 - u*v"),
                S4.parse("t^4*v - t^4*w - v*w"),
                S4.parse("u*v - u*w - t^4*w"),
            ],
        )
        A = GradedSubalgebra(Q4, tuple(S4.parse(g) for g in ("t^4", "u", "v", "w")))
        P = subring_presentation(A, ["S", "U", "V", "W"])
        K2 = WeightedRing(7, ["x", "y"])
        cubic = GradedSubalgebra(
            QuotientRing(K2, []),
            tuple(K2.parse(g) for g in ("x^3", "x^2*y", "x*y^2", "y^3")),
        )
        Pc = subring_presentation(cubic, ["S", "U", "V", "W"])
        return {
            "relations": sorted(g.weighted_degree() for g in P.basis),
            "twisted_cubic": sorted(g.weighted_degree() for g in Pc.basis),
        }

    if skip_expensive:
        records.append(
            CheckRecord(name="presentation shape matches the twisted cubic",
                        kind="cross-route", skipped=True)
        )
    else:
        records.append(
            _timed(
                "presentation shape matches the twisted cubic",
                "cross-route",
                quadric_shape,
                expected={"relations": [2, 2, 2], "twisted_cubic": [2, 2, 2]},
            )
        )
    return records


# ---------------------------------------------------------------- ex6.3

_EX63_TOML = """
[rings.C]
p = 2
vars = ["x0", "x1", "x2", "x3"]
relations = ["x0^3 + x1^3 + x2^3 + x3^3"]

[[check]]
kind = "member"
name = "x0^4 in the bracket of the parameters"
ring = "C"
element = "x0^4"
ideal = ["x1^2", "x2^2", "x3^2"]
expect = true

[[check]]
kind = "member"
name = "x0^2 outside the parameter ideal"
ring = "C"
element = "x0^2"
ideal = ["x1", "x2", "x3"]
expect = false

[[check]]
kind = "fclosure"
name = "x0^2 in the frobenius closure"
ring = "C"
element = "x0^2"
ideal = ["x1", "x2", "x3"]
expect = "member-at-level-1"

[[check]]
kind = "ainv"
name = "a-invariant is 2 - d"
ring = "C"
expect = -1
"""


def _ex63(skip_expensive: bool) -> list[CheckRecord]:
    return _from_manifest(_EX63_TOML, skip_expensive)


# ---------------------------------------------------------------- ex6.5

_EX65_CHECKS = """
[[check]]
kind = "tc-cert"
name = "searched containment at p={p}"
ring = "R{p}"
element = "x^2*y^4*z^7"
ideal = ["x*y^5*z^2", "x*z^8"]
levels = 1
expect = "passes-all-levels-up-to-1"

[[check]]
kind = "member"
name = "element escapes the plain ideal at p={p}"
ring = "R{p}"
element = "x^2*y^4*z^7"
ideal = ["x*y^5*z^2", "x*z^8"]
expect = false
"""

_EX65_TOML = (
    _rings32((2, 3, 5))
    + "".join(_EX65_CHECKS.format(p=p) for p in (2, 3, 5))
    + """
[divisors.D]
components = [["VS", "-1/2"], ["VT", "1/3"], ["VST", "1/5"]]

[divisors.D7]
components = [["VS", "-7/2"], ["VT", "7/3"], ["VST", "7/5"]]

[[check]]
kind = "divisor"
name = "7D stays in the class of D"
divisor = "D"
op = "same-class"
other = "D7"
expect = true
"""
)


def _ex65(skip_expensive: bool) -> list[CheckRecord]:
    records = _from_manifest(_EX65_TOML, skip_expensive)
    D = parse_divisor([["VS", "-1/2"], ["VT", "1/3"], ["VST", "1/5"]])

    def coprime_sweep() -> bool:
        want = fractional_part(D)
        return all(
            fractional_part(n * D) == want
            for n in range(1, 61)
            if math.gcd(n, 30) == 1
        )

    def divisor_sweep() -> bool:
        want = fractional_part(D)
        return all(fractional_part(n * D) != want for n in (2, 3, 5))

    records.append(
        _timed(
            "fractional part fixed for n coprime to 30, n <= 60",
            "property",
            coprime_sweep,
            expected=True,
            inputs={"divisor": str(D)},
        )
    )
    records.append(
        _timed(
            "fractional part moves for n in {2,3,5}",
            "property",
            divisor_sweep,
            expected=True,
            inputs={"divisor": str(D)},
        )
    )
    return records


# ---------------------------------------------------------------- ex6.6

_RING66 = """
[rings.S{p}]
p = {p}
vars = ["a", "b", "c", "t"]
weights = [2, 3, 5, 1]
relations = ["a*b - t^5", "b*c + c*t^3 - b*t^5", "a*c + c*t^2 - a*b*t^2"]

[rings.M{p}]
p = {p}
vars = ["a", "b", "c"]
weights = [2, 3, 5]
relations = ["a*b", "b*c", "c*a"]
"""

_EX66_CHECKS = """
[[check]]
kind = "hilbert"
name = "series of the presented ring at p={p}"
ring = "S{p}"
trunc = 20
expect = {{series = "(1 - t^5 - t^7 - t^8 + 2*t^10)/((1 - t^5)(1 - t^3)(1 - t^2)(1 - t))"}}

[[check]]
kind = "ainv"
name = "negative a-invariant at p={p}"
ring = "S{p}"
expect = -1

[[check]]
kind = "fedder"
name = "square-free quotient is F-pure at p={p}"
ring = "M{p}"
expect = true
"""

_EX66_TOML = (
    "".join(_RING66.format(p=p) for p in (2, 3, 5))
    + "".join(_EX66_CHECKS.format(p=p) for p in (2, 3, 5))
    + """
[divisors.E]
components = [["VS", "1/2"], ["VT", "1/3"], ["VST", "1/5"]]

[divisors.D]
components = [["VS", "-1/2"], ["VT", "1/3"], ["VST", "1/5"]]

[[check]]
kind = "divisor"
name = "E and D share a fractional part"
divisor = "E"
op = "same-class"
other = "D"
expect = true
"""
)

_FEDDER_WITNESS = {2: "a*b*c", 3: "a^2*b^2*c^2", 5: "a^4*b^4*c^4"}


def _ex66(skip_expensive: bool) -> list[CheckRecord]:
    records = _from_manifest(_EX66_TOML, skip_expensive)
    E = parse_divisor([["VS", "1/2"], ["VT", "1/3"], ["VST", "1/5"]])
    profile = list(section_ring_profile(E, 20).dims)
    for p in (2, 3, 5):
        S = WeightedRing(p, ["a", "b", "c", "t"], [2, 3, 5, 1])
        rels = [
            S.parse("a*b - t^5"),
            S.parse("b*c + c*t^3 - b*t^5"),
            S.parse("a*c + c*t^2 - a*b*t^2"),
        ]
        records.append(
            _timed(
                f"presented stream equals the section profile at p={p}",
                "cross-route",
                lambda S=S, rels=rels: hilbert_series(QuotientRing(S, rels)).coefficients(20)
                == profile,
                expected=True,
                inputs={"divisor": str(E)},
            )
        )
        records.append(
            _timed(
                f"killing t leaves the square-free monomials at p={p}",
                "cross-route",
                lambda S=S, rels=rels: [
                    str(g) for g in Ideal(S, rels + [S.var("t")]).basis
                ],
                expected=["t", "a*b", "a*c", "b*c"],
            )
        )
    return records


# ---------------------------------------------------------------- ex7.3

_RING73 = """
[rings.T{p}]
p = {p}
vars = ["s", "t", "x1", "x2", "x3"]
relations = ["s*x1*x2*x3 - t*x1^3 - t*x2^3 - t*x3^3"]
"""

_EX73_DIMS = [1, 6, 18, 37, 63, 96, 136, 183]

_EX73_CHECKS = """
[[check]]
kind = "subring-hf"
name = "graded dims at p={p}"
ring = "T{p}"
generators = ["s*x1", "s*x2", "s*x3", "t*x1", "t*x2", "t*x3"]
bound = 7
expect = [1, 6, 18, 37, 63, 96, 136, 183]

[[check]]
kind = "subring-member"
name = "(t x3)^2 outside the ideal at p={p}"
ring = "T{p}"
generators = ["s*x1", "s*x2", "s*x3", "t*x1", "t*x2", "t*x3"]
element = "t^2*x3^2"
ideal = ["s*x1", "s*x2", "t*x1", "t*x2"]
degree = 2
expect = false

[[check]]
kind = "subring-member"
name = "(t x3)^6 inside the ideal squared at p={p}"
ring = "T{p}"
generators = ["s*x1", "s*x2", "s*x3", "t*x1", "t*x2", "t*x3"]
element = "t^6*x3^6"
ideal = ["s*x1", "s*x2", "t*x1", "t*x2"]
power = 2
degree = 6
expect = true
"""

_EX73_TOML = (
    "".join(_RING73.format(p=p) for p in (2, 3, 5, 7))
    + "".join(_EX73_CHECKS.format(p=p) for p in (2, 3, 5, 7))
    + """
[[check]]
kind = "subring-member"
name = "(t x3)^8 inside the ideal cubed at p=3"
ring = "T3"
generators = ["s*x1", "s*x2", "s*x3", "t*x1", "t*x2", "t*x3"]
element = "t^8*x3^8"
ideal = ["s*x1", "s*x2", "t*x1", "t*x2"]
power = 3
degree = 8
expect = true

[[check]]
kind = "tc-cert"
name = "ordinary-power certificate at p=2"
ring = "T2"
element = "t*x3"
ideal = ["s*x1", "s*x2", "t*x1", "t*x2"]
levels = 2
mode = "ordinary"
element_exponent = [2, 2]
ideal_exponent = [1, 0]
expect = "passes-all-levels-up-to-2"
"""
)


def _ex73(skip_expensive: bool) -> list[CheckRecord]:
    records = _from_manifest(_EX73_TOML, skip_expensive)
    records.append(
        _timed(
            "multiplicity from the dimension profile",
            "cross-route",
            lambda: profile_multiplicity(_EX73_DIMS, 3),
            expected=7,
            inputs={"dims": _EX73_DIMS},
        )
    )
    records.append(
        _timed(
            "multiplicity from the closed-form series",
            "cross-route",
            lambda: multiplicity(HilbertSeries((1, 3, 3), (1, 1, 1)), 3).as_integer(),
            expected=7,
            inputs={"series": str(HilbertSeries((1, 3, 3), (1, 1, 1)))},
        )
    )
    records.append(
        _timed(
            "closed-form stream matches the frozen dims",
            "cross-route",
            lambda: HilbertSeries((1, 3, 3), (1, 1, 1)).coefficients(7),
            expected=_EX73_DIMS,
        )
    )
    return records


# ---------------------------------------------------------------- invariants

def _invariants(skip_expensive: bool) -> list[CheckRecord]:
    rng = random.Random(SEED)
    records = []

    R = WeightedRing(5, ["x", "y", "z"])
    I = Ideal(R, [R.parse("x^2 + y*z"), R.parse("x*y^2 - z^3"), R.parse("y^4 + z^4")])

    def spoly_reduces() -> bool:
        from .ring import monomial_div, monomial_lcm

        basis = [g.monic() for g in I.basis]
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                f, g = basis[i], basis[j]
                lcm = monomial_lcm(f.leading_monomial(), g.leading_monomial())
                spoly = (
                    R.monomial(monomial_div(lcm, f.leading_monomial())) * f
                    - R.monomial(monomial_div(lcm, g.leading_monomial())) * g
                )
                if not normal_form(spoly, I).is_zero():
                    return False
        return True

    def random_poly(ring: WeightedRing, deg: int, terms: int):
        f = ring.zero()
        mons = ring.monomials_of_degree(deg)
        for m in rng.sample(mons, min(terms, len(mons))):
            f = f + ring.monomial(m, rng.randrange(1, ring.p))
        return f

    def nf_idempotent() -> bool:
        for _ in range(40):
            f = random_poly(R, rng.randrange(2, 8), 4)
            r = normal_form(f, I)
            if normal_form(r, I) != r:
                return False
        return True

    def member_vs_rank() -> bool:
        import numpy as np

        def row_of(f, index, width):
            row = np.zeros(width, dtype=np.int64)
            for m, c in f.terms.items():
                row[index[m]] = c
            return row

        for d in range(2, 13):
            mons = R.monomials_of_degree(d)
            index = {m: k for k, m in enumerate(mons)}
            ech = Echelon(R.p, len(mons))
            for g in I.basis:
                gd = g.weighted_degree()
                if gd is None or gd > d:
                    continue
                for m in R.monomials_of_degree(d - gd):
                    ech.add(row_of(R.monomial(m) * g, index, len(mons)))
            for _ in range(8):
                f = random_poly(R, d, 3)
                if I.member(f) != ech.contains(row_of(f, index, len(mons))):
                    return False
        return True

    def floor_identity() -> bool:
        from fractions import Fraction

        from .demazure import QDivisor, floor_identity_holds

        for _ in range(100):
            comps = [
                (f"P{k}", Fraction(rng.randrange(-12, 13), rng.randrange(1, 9)))
                for k in range(rng.randrange(1, 4))
            ]
            D = QDivisor(comps)
            if not all(floor_identity_holds(D, n) for n in range(1, 25)):
                return False
        return True

    def frobenius_additive() -> bool:
        for p in (2, 3):
            ring = WeightedRing(p, ["x", "y", "z"], [15, 10, 6])
            Q = QuotientRing(ring, [ring.parse("x^2 + y^3 + z^5")])
            for _ in range(50):
                d = rng.choice([6, 10, 12, 15, 16, 20])
                f = random_poly(ring, d, 3)
                g = random_poly(ring, d, 3)
                lhs = Q.normal_form((f + g).frobenius_power(p))
                rhs = Q.normal_form(f.frobenius_power(p) + g.frobenius_power(p))
                if lhs != rhs:
                    return False
        return True

    _VERONESE_GENS = {2: ("y", "z"), 3: ("x", "z")}

    def veronese_two_path() -> bool:
        ring = WeightedRing(2, ["x", "y", "z"], [15, 10, 6])
        Q = QuotientRing(ring, [ring.parse("x^2 + y^3 + z^5")])
        H = hilbert_series(Q)
        for n, gens in _VERONESE_GENS.items():
            slice_ = veronese_series(H, n, 12)
            A = GradedSubalgebra(Q, tuple(ring.parse(g) for g in gens), n)
            if subring_hilbert_function(A, 12) != list(slice_.stream):
                return False
        return True

    records.append(_timed("s-polynomials of the basis reduce to zero", "property", spoly_reduces, True))
    records.append(_timed("normal form is idempotent", "property", nf_idempotent, True))
    records.append(_timed("membership agrees with the rank oracle to degree 12", "property", member_vs_rank, True))
    records.append(_timed("floor identity on 100 random divisors", "property", floor_identity, True))
    records.append(_timed("frobenius is additive modulo the relation", "property", frobenius_additive, True))
    records.append(_timed("veronese dims agree along both routes (n=2,3)", "property", veronese_two_path, True))
    return records


# ---------------------------------------------------------------- driver

EXAMPLE_IDS = (
    "ex3.2",
    "ex4.3",
    "ex5.3",
    "ex5.4",
    "ex6.3",
    "ex6.5",
    "ex6.6",
    "ex7.3",
    "invariants",
)

_BUILDERS: dict[str, Callable[[bool], list[CheckRecord]]] = {
    "ex3.2": _ex32,
    "ex4.3": _ex43,
    "ex5.3": _ex53,
    "ex5.4": _ex54,
    "ex6.3": _ex63,
    "ex6.5": _ex65,
    "ex6.6": _ex66,
    "ex7.3": _ex73,
    "invariants": _invariants,
}


def run_corpus(example: str | None = None, skip_expensive: bool = False) -> Report:
    """Run one example's reproductions, or everything when example is None."""
    if example is not None and example not in _BUILDERS:
        raise UsageError(
            f"unknown example {example!r}; known: {', '.join(EXAMPLE_IDS)}"
        )
    ids = (example,) if example is not None else EXAMPLE_IDS
    report = Report()
    for ex_id in ids:
        for record in _BUILDERS[ex_id](skip_expensive):
            record.name = f"{ex_id}/{record.name}"
            report.add(record)
    return report
