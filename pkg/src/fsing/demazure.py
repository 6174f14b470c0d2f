"""Rational-coefficient divisors on the projective line.

Points are opaque labels; only distinctness matters for floors, degrees
and section dimensions.  Coefficients are exact Fractions.  The fractional
part follows the denominator convention: a reduced coefficient with
denominator q > 1 contributes (q-1)/q at its point, and integer
coefficients contribute nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import UsageError

Coefficient = Fraction | int | str


def _as_fraction(c: Coefficient) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    return Fraction(str(c))


@dataclass(frozen=True)
class QDivisor:
    components: tuple[tuple[str, Fraction], ...]

    def __init__(self, components: Iterable[tuple[str, Coefficient]]):
        seen = []
        for label, c in components:
            frac = _as_fraction(c)
            if frac:
                seen.append((str(label), frac))
        labels = [lb for lb, _ in seen]
        if len(set(labels)) != len(labels):
            raise UsageError(f"repeated point labels in {labels}")
        object.__setattr__(self, "components", tuple(sorted(seen)))

    def coefficient(self, label: str) -> Fraction:
        for lb, c in self.components:
            if lb == label:
                return c
        return Fraction(0)

    def labels(self) -> tuple[str, ...]:
        return tuple(lb for lb, _ in self.components)

    def degree(self) -> Fraction:
        return sum((c for _, c in self.components), Fraction(0))

    def scale(self, n: "int | Fraction") -> "QDivisor":
        return QDivisor((lb, c * n) for lb, c in self.components)

    def __add__(self, other: "QDivisor") -> "QDivisor":
        labels = sorted(set(self.labels()) | set(other.labels()))
        return QDivisor((lb, self.coefficient(lb) + other.coefficient(lb)) for lb in labels)

    def __rmul__(self, n: int) -> "QDivisor":
        return self.scale(n)

    def __str__(self) -> str:
        if not self.components:
            return "0"
        return " + ".join(f"({c})[{lb}]" for lb, c in self.components)


@dataclass(frozen=True)
class FloorDivisor:
    """Componentwise floor of a scaled divisor, keeping zero entries."""

    components: tuple[tuple[str, int], ...]

    @property
    def degree(self) -> int:
        return sum(c for _, c in self.components)

    def __str__(self) -> str:
        if not self.components:
            return "0 (degree 0)"
        body = " + ".join(f"({c})[{lb}]" for lb, c in self.components)
        return f"{body} (degree {self.degree})"


def floor_divisor(D: QDivisor, n: int) -> FloorDivisor:
    """Componentwise floor of nD over the points of D."""
    return FloorDivisor(tuple((lb, math.floor(n * c)) for lb, c in D.components))


def fractional_part(D: QDivisor) -> QDivisor:
    """(q-1)/q at every point whose reduced coefficient has denominator q > 1."""
    return QDivisor(
        (lb, Fraction(c.denominator - 1, c.denominator))
        for lb, c in D.components
        if c.denominator > 1
    )


def section_dim(D: QDivisor, n: int) -> int:
    """dim of the degree-n sections on the line: max(0, deg floor(nD) + 1)."""
    return max(0, floor_divisor(D, n).degree + 1)


@dataclass(frozen=True)
class SectionRingProfile:
    dims: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.dims[n]

    def __len__(self) -> int:
        return len(self.dims)


def section_ring_profile(D: QDivisor, N: int) -> SectionRingProfile:
    """Section dimensions for n = 0..N; requires an ample divisor."""
    if D.degree() <= 0:
        raise UsageError(f"divisor is not ample: deg D = {D.degree()} <= 0")
    if N < 0:
        raise UsageError("bound must be non-negative")
    return SectionRingProfile(tuple(section_dim(D, n) for n in range(N + 1)))


def veronese_divisor(D: QDivisor, n: int) -> QDivisor:
    if n < 1:
        raise UsageError("Veronese index must be positive")
    return D.scale(n)


def same_fregularity_class(D1: QDivisor, D2: QDivisor) -> bool:
    """Equal fractional parts.  Rings of sections of divisors in the same
    class share their F-regularity and F-purity status; no claim is made
    about either status on its own.
    """
    if D1.degree() <= 0 or D2.degree() <= 0:
        raise UsageError("both divisors must be ample for the class comparison")
    return fractional_part(D1) == fractional_part(D2)


def floor_identity_holds(D: QDivisor, n: int) -> bool:
    """-floor(-nD) == floor(nD + D') componentwise."""
    Dp = fractional_part(D)
    left = {lb: -c for lb, c in floor_divisor(D, -n).components}
    shifted = D.scale(n) + Dp
    right = {lb: math.floor(shifted.coefficient(lb)) for lb in D.labels()}
    return left == right


def parse_divisor(pairs: Sequence[Sequence[str]]) -> QDivisor:
    """Build a divisor from [[label, coefficient-string], ...] rows."""
    out = []
    for row in pairs:
        if len(row) != 2:
            raise UsageError(f"divisor row {row!r} is not a [label, coefficient] pair")
        out.append((row[0], _as_fraction(row[1])))
    return QDivisor(out)
