"""Exact Hilbert series of graded quotients and what they carry.

Series are stored as an integer numerator N(t) over the product
prod_i (1 - t^(w_i)) determined by the variable weights.  Graded pieces of
the top local cohomology module come from re-expanding the same rational
function as a Laurent series at infinity; the a-invariant and multiplicity
fall out of the numerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .errors import DomainError, UsageError
from .groebner import Ideal, QuotientRing
from .ring import Monomial, WeightedRing, monomial_gcd, monomial_div, monomial_divides

DEFAULT_TRUNC = 120

IntPoly = tuple[int, ...]  # coefficient tuple indexed by degree, no trailing zeros


def _trim(cs: Sequence[int]) -> IntPoly:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _poly_shift_mul(a: IntPoly, shift: int, scale: int = 1) -> IntPoly:
    return _trim((0,) * shift + tuple(c * scale for c in a))


def _poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _mult_at_one(a: IntPoly) -> tuple[int, IntPoly]:
    """Multiplicity of the root t = 1 and the cofactor a / (1-t)^mult."""
    mult = 0
    cur = a
    while cur and sum(cur) == 0:
        # divide by (1 - t): quotient coefficients are prefix sums
        acc = 0
        q = []
        for c in cur[:-1]:
            acc += c
            q.append(acc)
        cur = _trim(q)
        mult += 1
    return mult, cur


def _poly_str(cs: IntPoly, var: str = "t") -> str:
    if not cs:
        return "0"
    parts = []
    for i, c in enumerate(cs):
        if not c:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            tpow = var if i == 1 else f"{var}^{i}"
            body = tpow if abs(c) == 1 else f"{abs(c)}*{tpow}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class HilbertSeries:
    numerator: IntPoly
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "numerator", _trim(self.numerator))
        if any(w <= 0 for w in self.weights):
            raise UsageError("weights must be positive")

    @property
    def numerator_degree(self) -> int:
        if not self.numerator:
            raise DomainError("zero numerator has no degree")
        return len(self.numerator) - 1

    def pole_order(self) -> int:
        """Order of the pole at t = 1."""
        mult, _ = _mult_at_one(self.numerator)
        return len(self.weights) - mult

    def coefficients(self, trunc: int) -> list[int]:
        """Dimension stream for degrees 0..trunc inclusive."""
        if trunc < 0:
            raise UsageError("truncation must be non-negative")
        cs = [0] * (trunc + 1)
        for i, c in enumerate(self.numerator[: trunc + 1]):
            cs[i] = c
        for w in self.weights:
            for i in range(w, trunc + 1):
                cs[i] += cs[i - w]
        return cs

    def __str__(self) -> str:
        num = _poly_str(self.numerator)
        if len(self.numerator) > 1:
            num = f"({num})"
        dens = []
        for w in sorted(self.weights, reverse=True):
            dens.append(f"(1 - t^{w})" if w != 1 else "(1 - t)")
        return f"{num}/({''.join(dens)})" if len(dens) > 1 else f"{num}/{dens[0]}"


def monomial_numerator(I: "Ideal | Sequence", R: WeightedRing) -> IntPoly:
    """Hilbert numerator of R/I for a monomial ideal I.

    Divide and conquer on a chosen generator g:
    N(I) = N(I - g) - t^deg(g) * N((I - g) : g), with N(0) = 1.
    """
    gens = I.basis if isinstance(I, Ideal) else tuple(I)
    mons: list[Monomial] = []
    for g in gens:
        if hasattr(g, "terms"):
            if g.is_zero():
                continue
            if not g.is_monomial():
                raise UsageError(f"generator {g} is not a monomial")
            (m,) = g.terms
        else:
            m = tuple(g)
        mons.append(m)
    memo: dict[frozenset, IntPoly] = {}
    degree = R.monomial_degree
    orderkey = R.order.key

    def minimalize(ms: Sequence[Monomial]) -> frozenset:
        ms = sorted(set(ms), key=orderkey)
        kept: list[Monomial] = []
        for m in ms:
            if not any(monomial_divides(k, m) for k in kept):
                kept.append(m)
        return frozenset(kept)

    def rec(ms: frozenset) -> IntPoly:
        if not ms:
            return (1,)
        got = memo.get(ms)
        if got is not None:
            return got
        g = max(ms, key=orderkey)
        rest = ms - {g}
        colon = minimalize([monomial_div(m, monomial_gcd(m, g)) for m in rest])
        out = _poly_sub(rec(frozenset(rest)), _poly_shift_mul(rec(colon), degree(g)))
        memo[ms] = out
        return out

    start = minimalize(mons)
    if any(all(e == 0 for e in m) for m in start):
        raise UsageError("monomial ideal contains 1; the quotient is zero")
    return rec(start)


def hilbert_series(Q: QuotientRing) -> HilbertSeries:
    """Series of Q as N(t) over the weight denominator.

    Fast path: generators whose leading monomials are pairwise coprime form
    a regular sequence, giving N = prod (1 - t^deg).  Otherwise N comes from
    the initial ideal of the reduced basis.
    """
    R = Q.ring
    gens = [g for g in Q.relations.gens if not g.is_zero()]
    leads = [g.leading_monomial() for g in gens]
    if len(set(leads)) == len(leads) and all(
        all(e == 0 for e in monomial_gcd(a, b))
        for i, a in enumerate(leads)
        for b in leads[i + 1 :]
    ):
        num: IntPoly = (1,)
        for g in gens:
            d = g.weighted_degree()
            num = _poly_mul(num, _trim([1] + [0] * (d - 1) + [-1]))
        return HilbertSeries(num, R.weights)
    init = [R.monomial(m) for m in Q.relations.leading_monomials()]
    return HilbertSeries(monomial_numerator(init, R), R.weights)


@dataclass(frozen=True)
class LocalCohomologyTable:
    """Graded dimensions of the top local cohomology module, j_min <= j <= a."""

    dims: dict[int, int]
    j_min: int
    a_invariant: int

    def dim_at(self, j: int) -> int:
        if j > self.a_invariant:
            return 0
        if j < self.j_min:
            raise UsageError(f"degree {j} below the computed cutoff {self.j_min}")
        return self.dims.get(j, 0)


def hd_graded_dims(H: HilbertSeries, d: int, j_min: int) -> LocalCohomologyTable:
    """Graded dims of H_m^d from the Laurent expansion at infinity.

    Valid when the ring is Cohen-Macaulay of dimension d (caller asserts);
    the pole order of H at t = 1 must equal d.  Each factor expands as
    1/(1 - t^w) = -sum_{k>=1} t^(-wk), and dim[H^d]_j is (-1)^d times the
    t^j coefficient.
    """
    n = len(H.weights)
    mult, _ = _mult_at_one(H.numerator)
    if n - mult != d:
        raise UsageError(
            f"pole order {n - mult} at t = 1 disagrees with the asserted dimension {d}"
        )
    N = H.numerator
    a = len(N) - 1 - sum(H.weights)
    dims: dict[int, int] = {}
    if j_min > a:
        return LocalCohomologyTable(dims, j_min, a)
    # P[m] = number of ways m = sum k_i w_i with every k_i >= 1
    M = (len(N) - 1) - j_min
    P = [0] * (M + 1)
    P[0] = 1
    for w in H.weights:
        new = [0] * (M + 1)
        for m in range(w, M + 1):
            new[m] = P[m - w] + new[m - w]
        P = new
    sign = -1 if (n + d) % 2 else 1
    for j in range(j_min, a + 1):
        total = 0
        for s, c in enumerate(N):
            if c and 0 <= s - j <= M:
                total += c * P[s - j]
        val = sign * total
        if val < 0:
            raise DomainError(
                f"negative graded dimension {val} at degree {j}; "
                "the Cohen-Macaulay assertion does not hold"
            )
        dims[j] = val
    return LocalCohomologyTable(dims, j_min, a)


def a_invariant(Q: QuotientRing) -> int:
    """deg N - sum of weights: the top degree of the highest local cohomology."""
    H = hilbert_series(Q)
    return H.numerator_degree - sum(H.weights)


@dataclass(frozen=True)
class MultiplicityResult:
    value: Fraction
    weighted_normalization: bool

    def as_integer(self) -> int:
        if self.value.denominator != 1:
            raise DomainError(f"multiplicity {self.value} is not an integer")
        return int(self.value)


def multiplicity(H: HilbertSeries, d: int) -> MultiplicityResult:
    """lim_{t->1} (1-t)^d H(t); an integer under the standard grading."""
    n = len(H.weights)
    mult, cofactor = _mult_at_one(H.numerator)
    if n - mult != d:
        raise UsageError(
            f"pole order {n - mult} at t = 1 disagrees with the asserted dimension {d}"
        )
    value = Fraction(sum(cofactor), prod(H.weights))
    return MultiplicityResult(value, any(w != 1 for w in H.weights))


@dataclass(frozen=True)
class VeroneseSlice:
    stream: tuple[int, ...]
    a_invariant: int


def veronese_series(
    H: HilbertSeries,
    n: int,
    trunc: int = DEFAULT_TRUNC,
    scan_limit: int = 10_000,
) -> VeroneseSlice:
    """Every n-th coefficient of H, plus the a-invariant of the n-th
    Veronese in its own grading: the largest j divisible by n with a nonzero
    graded piece of H_m^d, divided by n.
    """
    if n < 1:
        raise UsageError("Veronese index must be positive")
    cs = H.coefficients(n * trunc)
    stream = tuple(cs[i * n] for i in range(trunc + 1))
    d = H.pole_order()
    a = H.numerator_degree - sum(H.weights)
    table = hd_graded_dims(H, d, min(a, 0) - scan_limit)
    j = a - (a % n)
    while j >= table.j_min:
        if table.dim_at(j):
            return VeroneseSlice(stream, j // n)
        j -= n
    raise DomainError(
        f"no nonzero graded piece in degrees divisible by {n} within {scan_limit} of the top"
    )


def profile_multiplicity(dims: Sequence[int], d: int) -> int:
    """Multiplicity read off a dimension profile of a ring of dimension d.

    The (d-1)-st finite difference of the eventual Hilbert polynomial is the
    constant (d-1)! times its leading coefficient, i.e. the multiplicity.
    The tail of the differenced sequence must have stabilized.
    """
    if d < 1:
        raise UsageError("dimension must be at least 1")
    diffs = list(dims)
    for _ in range(d - 1):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    if len(diffs) < 3 or not (diffs[-1] == diffs[-2] == diffs[-3]):
        raise DomainError("profile too short for the difference table to stabilize")
    return diffs[-1]
