"""Classes in the top local cohomology of a graded quotient ring.

A class is a fraction r / (x_1^a_1 ... x_d^a_d) over a homogeneous system
of parameters.  The zero test is a bounded search: the class dies iff
r * (x_1...x_d)^s lands in (x_1^(a_1+s), ..., x_d^(a_d+s)) for some s; for
Cohen-Macaulay rings s = 0 already decides (caller-asserted), the larger
default bound covers representatives that arrive unreduced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError
from .groebner import Ideal, QuotientRing, quotient_member
from .ring import Polynomial

DEFAULT_S_MAX = 20


@dataclass(frozen=True)
class CechClass:
    ring: QuotientRing
    sop: tuple[Polynomial, ...]
    numerator: Polynomial
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sop", tuple(self.sop))
        object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))
        if len(self.sop) != len(self.exponents):
            raise UsageError("one exponent per parameter required")
        if not self.sop:
            raise UsageError("empty system of parameters")
        if any(a < 1 for a in self.exponents):
            raise UsageError("denominator exponents must be positive")
        for f in self.sop:
            if f.ring != self.ring.ring:
                raise UsageError("parameter from a different ring")
            if f.is_zero() or not f.is_homogeneous():
                raise UsageError(f"parameter {f} is not nonzero homogeneous")
        if self.numerator.ring != self.ring.ring:
            raise UsageError("numerator from a different ring")

    def __str__(self) -> str:
        den = " * ".join(
            f"({f})^{a}" if a != 1 else f"({f})" for f, a in zip(self.sop, self.exponents)
        )
        return f"[({self.numerator}) / {den}]"


def class_degree(c: CechClass) -> int:
    """deg r minus the weighted degrees of the denominator."""
    if c.numerator.is_zero():
        raise UsageError("zero numerator has no degree")
    if not c.numerator.is_homogeneous():
        raise UsageError(f"numerator {c.numerator} is not homogeneous")
    return c.numerator.weighted_degree() - sum(
        a * f.weighted_degree() for f, a in zip(c.sop, c.exponents)
    )


def frobenius_class(c: CechClass, e: int = 1) -> CechClass:
    """Apply Frobenius e times: r -> r^(p^e), exponents scale by p^e."""
    if e < 1:
        raise UsageError("iteration count must be at least 1")
    q = c.ring.ring.p**e
    return CechClass(
        c.ring, c.sop, c.numerator.frobenius_power(q), tuple(a * q for a in c.exponents)
    )


@dataclass(frozen=True)
class ZeroClassVerdict:
    is_zero: bool
    witness_s: int | None
    s_max: int

    @property
    def status(self) -> str:
        if self.is_zero:
            return f"zero-with-witness-{self.witness_s}"
        return f"nonzero-up-to-{self.s_max}"

    def __bool__(self) -> bool:
        return self.is_zero


def is_zero_class(c: CechClass, S_max: int = DEFAULT_S_MAX, budget: int | None = None) -> ZeroClassVerdict:
    """Bounded vanishing test with the smallest witness s.

    Once the membership holds at some s it holds at every larger s, so the
    first hit in the upward scan is the minimal witness.
    """
    if S_max < 0:
        raise UsageError("search bound must be non-negative")
    Q = c.ring
    if Q.normal_form(c.numerator, budget).is_zero():
        return ZeroClassVerdict(True, 0, S_max)
    prod = Q.ring.one()
    for f in c.sop:
        prod = prod * f
    for s in range(S_max + 1):
        target = Ideal(
            Q.ring, tuple(f ** (a + s) for f, a in zip(c.sop, c.exponents)), budget
        )
        elem = c.numerator * prod**s
        if quotient_member(elem, target, Q, budget):
            return ZeroClassVerdict(True, s, S_max)
    return ZeroClassVerdict(False, None, S_max)


def shift_representative(c: CechClass) -> CechClass:
    """The same class written over the next denominator:
    r / x^a  ->  r * (x_1...x_d) / x^(a+1)."""
    num = c.numerator
    for f in c.sop:
        num = num * f
    return CechClass(c.ring, c.sop, num, tuple(a + 1 for a in c.exponents))


def subtract(c1: CechClass, c2: CechClass) -> CechClass:
    """c1 - c2 over a common denominator; both must share the sop."""
    if c1.ring != c2.ring or c1.sop != c2.sop:
        raise UsageError("classes live over different data")
    common = tuple(max(a, b) for a, b in zip(c1.exponents, c2.exponents))

    def lifted(c: CechClass) -> Polynomial:
        num = c.numerator
        for f, a, m in zip(c.sop, c.exponents, common):
            if m > a:
                num = num * f ** (m - a)
        return num

    return CechClass(c1.ring, c1.sop, lifted(c1) - lifted(c2), common)
