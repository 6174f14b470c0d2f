"""Bounded Frobenius-closure search, F-purity tests, tight-closure certificates.

All verdicts here are one-sided: a membership found at level e certifies
closure membership, while a failed bounded search is only "not found up
to the bound", never a disproof.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import UsageError
from .groebner import Ideal, QuotientRing, bracket_power, ideal_power, quotient_member
from .ring import Polynomial

DEFAULT_MAX_LEVEL = 4


@dataclass(frozen=True)
class ContainmentWitness:
    """A replayable membership fact: element lies in ideal modulo the relations."""

    element: Polynomial
    ideal: Ideal
    q: int

    def replay(self, Q: QuotientRing, budget: int | None = None) -> bool:
        return quotient_member(self.element, self.ideal, Q, budget)


@dataclass(frozen=True)
class ClosureVerdict:
    is_member: bool
    level: int | None
    max_level: int
    witness: ContainmentWitness | None

    @property
    def status(self) -> str:
        if self.is_member:
            return f"member-at-level-{self.level}"
        return f"non-member-up-to-{self.max_level}"


def frobenius_closure_member(
    x: Polynomial,
    J: Ideal,
    Q: QuotientRing,
    E: int = DEFAULT_MAX_LEVEL,
    budget: int | None = None,
) -> ClosureVerdict:
    """Search for the smallest e <= E with x^(p^e) in the e-th bracket power of J.

    Enlarging E can only turn a non-member verdict into a member verdict,
    never the reverse.
    """
    if E < 1:
        raise UsageError("level bound E must be at least 1")
    if x.ring != Q.ring:
        raise UsageError("element lives in a different ring than the quotient")
    p = Q.ring.p
    for e in range(1, E + 1):
        q = p**e
        xq = x.frobenius_power(q)
        Jq = bracket_power(J, q, budget)
        if quotient_member(xq, Jq, Q, budget):
            return ClosureVerdict(True, e, E, ContainmentWitness(xq, Jq, q))
    return ClosureVerdict(False, None, E, None)


@dataclass(frozen=True)
class FedderResult:
    f_pure: bool
    witness: Polynomial | None
    route: str  # "trivial" | "hypersurface" | "colon"

    def __bool__(self) -> bool:
        return self.f_pure


def _outside_bracket(f: Polynomial, p: int) -> Polynomial:
    """Drop every term divisible by some variable to the p-th power.

    The dropped terms lie in (x_1^p, ..., x_n^p); since that is an ideal,
    pruning mid-product does not change membership of the final result.
    """
    kept = {m: c for m, c in f.terms.items() if all(e < p for e in m)}
    return Polynomial(f.ring, kept)


def _power_outside_bracket(f: Polynomial, k: int, p: int) -> Polynomial:
    """f^k reduced modulo the monomial ideal (x_1^p, ..., x_n^p)."""
    result = f.ring.one()
    base = _outside_bracket(f, p)
    while k:
        if k & 1:
            result = _outside_bracket(result * base, p)
        k >>= 1
        if k:
            base = _outside_bracket(base * base, p)
    return result


def fedder_fpure(
    Q: QuotientRing,
    p: int | None = None,
    route: str = "auto",
    budget: int | None = None,
) -> FedderResult:
    """F-purity of Q = S/I at the maximal ideal of all the variables.

    True iff (I^[p] : I) is not contained in m^[p].  A principal I = (f)
    takes the fast path: f^(p-1) expanded with term pruning, nonzero
    remainder iff F-pure.  The witness is an element of the colon (or a
    surviving expansion term) outside m^[p].
    """
    ring = Q.ring
    if p is None:
        p = ring.p
    elif p != ring.p:
        raise UsageError(f"characteristic mismatch: ring has p = {ring.p}, asked for {p}")
    I = Q.relations
    if I.is_zero():
        return FedderResult(True, ring.one(), "trivial")
    if route == "auto":
        route = "hypersurface" if len(I.basis) == 1 else "colon"
    if route == "hypersurface":
        if len(I.basis) != 1:
            raise UsageError("hypersurface route needs a principal relation ideal")
        f = I.basis[0]
        rem = _power_outside_bracket(f, p - 1, p)
        if rem.is_zero():
            return FedderResult(False, None, "hypersurface")
        m, c = rem.leading_term()
        return FedderResult(True, ring.monomial(m, c), "hypersurface")
    if route != "colon":
        raise UsageError(f"unknown route {route!r}")
    colon = ideal_quotient_bracket(I, p, budget)
    for g in colon.basis:
        # membership in the monomial ideal m^[p] is term by term, so g lies
        # outside it exactly when some term of g survives the pruning
        if not _outside_bracket(g, p).is_zero():
            return FedderResult(True, g, "colon")
    return FedderResult(False, None, "colon")


def ideal_quotient_bracket(I: Ideal, p: int, budget: int | None = None) -> Ideal:
    """(I^[p] : I), the colon ideal behind the F-purity criterion."""
    from .groebner import ideal_quotient

    return ideal_quotient(bracket_power(I, p, budget), I, budget)


@dataclass(frozen=True)
class LevelCheck:
    e: int
    element: Polynomial
    target: Ideal
    passed: bool


@dataclass(frozen=True)
class TightClosureCertificate:
    multiplier: Polynomial
    element: Polynomial
    ideal: Ideal
    mode: str
    levels: tuple[LevelCheck, ...]

    @property
    def passed(self) -> bool:
        return all(lv.passed for lv in self.levels)

    @property
    def status(self) -> str:
        if self.passed:
            return f"passes-all-levels-up-to-{len(self.levels)}"
        failed = [lv.e for lv in self.levels if not lv.passed]
        return f"fails-at-levels-{','.join(str(e) for e in failed)}"


def tc_certificate(
    c: Polynomial,
    x: Polynomial,
    I: Ideal,
    Q: QuotientRing,
    E: int = DEFAULT_MAX_LEVEL,
    mode: str = "bracket",
    x_exponent: Callable[[int], int] | None = None,
    ideal_exponent: Callable[[int], int] | None = None,
    budget: int | None = None,
) -> TightClosureCertificate:
    """Check c * x^(p^e) in I^[p^e] for e = 1..E (bracket mode), or the
    caller-configured containments c * x^a(e) in I^k(e) (ordinary mode).

    A full pass is consistent with x lying in the tight closure of I; it is
    never a proof.  The caller asserts c avoids every minimal prime; only
    c != 0 in Q is checked here.
    """
    if E < 1:
        raise UsageError("level bound E must be at least 1")
    if Q.is_zero_elem(c, budget):
        raise UsageError("multiplier is zero in the quotient ring")
    if mode == "ordinary-power":
        mode = "ordinary"
    if mode not in ("bracket", "ordinary"):
        raise UsageError(f"unknown mode {mode!r}")
    if mode == "ordinary" and (x_exponent is None or ideal_exponent is None):
        raise UsageError("ordinary mode needs x_exponent and ideal_exponent functions")
    p = Q.ring.p
    levels = []
    for e in range(1, E + 1):
        if mode == "bracket":
            q = p**e
            elem = c * x.frobenius_power(q)
            target = bracket_power(I, q, budget)
        else:
            a = x_exponent(e)
            k = ideal_exponent(e)
            if a <= 0 or k <= 0:
                raise UsageError(f"exponent functions must stay positive, got ({a}, {k}) at e = {e}")
            elem = c * x**a
            target = ideal_power(I, k, budget)
        levels.append(LevelCheck(e, elem, target, quotient_member(elem, target, Q, budget)))
    return TightClosureCertificate(c, x, I, mode, tuple(levels))
