"""Graded subalgebras of quotient rings, handled by linear algebra.

A subalgebra is presented by homogeneous ambient generators together with a
grading unit g: internal degree 1 corresponds to ambient degree g.  Graded
pieces are vector spaces spanned by normal forms of generator words; ranks,
membership and Hilbert functions reduce to row reduction over F_p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

import numpy as np

from .errors import ResourceError, UsageError
from .groebner import Ideal, QuotientRing, buchberger
from .linalg import Echelon
from .ring import BlockOrder, Monomial, Polynomial, WeightedRing

DEFAULT_WORD_CAP = 10**6
DEFAULT_GENERATOR_CAP = 8


@dataclass(frozen=True)
class GradedPieceBasis:
    degree: int
    representatives: tuple[Polynomial, ...]
    rank: int


@dataclass(frozen=True)
class GradedSubalgebra:
    ambient: QuotientRing
    generators: tuple[Polynomial, ...]
    grading_unit: int = 0  # 0 asks for the gcd of the generator degrees
    _pieces: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        Q = self.ambient
        gens = []
        degs = []
        for g in self.generators:
            if g.ring != Q.ring:
                raise UsageError("generator from a different ring")
            nf = Q.normal_form(g)
            if nf.is_zero():
                raise UsageError(f"generator {g} is zero in the quotient")
            if not nf.is_homogeneous():
                raise UsageError(f"generator {g} is not homogeneous")
            gens.append(nf)
            degs.append(nf.weighted_degree())
        if not gens:
            raise UsageError("at least one generator required")
        unit = self.grading_unit
        if unit == 0:
            unit = gcd(*degs) if len(degs) > 1 else degs[0]
        if unit < 1:
            raise UsageError("grading unit must be positive")
        for d in degs:
            if d % unit:
                raise UsageError(
                    f"generator degree {d} is not a multiple of the grading unit {unit}"
                )
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "grading_unit", unit)
        object.__setattr__(self, "_internal_degrees", tuple(d // unit for d in degs))

    @property
    def internal_degrees(self) -> tuple[int, ...]:
        return self._internal_degrees

    @property
    def equal_degree(self) -> bool:
        return len(set(self._internal_degrees)) == 1

    def word_count(self, n: int, cap: int = DEFAULT_WORD_CAP) -> int:
        """Number of degree-n monomial words in the generators, clipped at cap."""
        counts = [0] * (n + 1)
        counts[0] = 1
        for d in self._internal_degrees:
            for m in range(d, n + 1):
                counts[m] = min(cap + 1, counts[m] + counts[m - d])
        return counts[n]

    def _columns(self, n: int) -> tuple[list[Monomial], dict[Monomial, int]]:
        cols = self.ambient.standard_monomials(n * self.grading_unit)
        return cols, {m: i for i, m in enumerate(cols)}


def _row_of(f: Polynomial, index: dict[Monomial, int], width: int) -> np.ndarray:
    row = np.zeros(width, dtype=np.int64)
    for m, c in f.terms.items():
        row[index[m]] = c
    return row


def _poly_of(row: np.ndarray, cols: list[Monomial], ring: WeightedRing) -> Polynomial:
    return Polynomial(ring, {cols[j]: int(c) for j, c in enumerate(row) if c})


def graded_piece_dim(
    A: GradedSubalgebra,
    n: int,
    word_cap: int = DEFAULT_WORD_CAP,
    budget: int | None = None,
) -> GradedPieceBasis:
    """Rank and reduced basis of the degree-n piece of A.

    Built degree by degree: the piece in degree n is spanned by generator
    times piece in degree n - deg(generator), which spans the same space as
    all degree-n words.
    """
    if n < 0:
        raise UsageError("internal degree must be non-negative")
    for m in range(n + 1):
        if m in A._pieces:
            continue
        if A.word_count(m, word_cap) > word_cap:
            raise ResourceError(
                f"more than {word_cap} generator words in degree {m}"
            )
        Q = A.ambient
        if m == 0:
            A._pieces[0] = GradedPieceBasis(0, (Q.ring.one(),), 1)
            continue
        cols, index = A._columns(m)
        ech = Echelon(Q.ring.p, len(cols))
        reps: list[Polynomial] = []
        for g, d in zip(A.generators, A.internal_degrees):
            if d > m:
                continue
            for b in A._pieces[m - d].representatives:
                nf = Q.normal_form(g * b, budget)
                if nf.is_zero():
                    continue
                ech.add(_row_of(nf, index, len(cols)))
        reps = [_poly_of(row, cols, Q.ring) for row in ech.rows()]
        A._pieces[m] = GradedPieceBasis(m, tuple(reps), ech.rank)
    return A._pieces[n]


def subring_hilbert_function(
    A: GradedSubalgebra,
    N: int,
    word_cap: int = DEFAULT_WORD_CAP,
    budget: int | None = None,
) -> list[int]:
    """Dimension of every piece of A from degree 0 through N."""
    if N < 0:
        raise UsageError("bound must be non-negative")
    return [graded_piece_dim(A, n, word_cap, budget).rank for n in range(N + 1)]


def power_products(gens: Sequence[Polynomial], k: int) -> list[Polynomial]:
    """Generators of the k-th ordinary power: all k-fold products."""
    if k < 1:
        raise UsageError("power must be at least 1")
    out = []
    for combo in itertools.combinations_with_replacement(gens, k):
        f = combo[0]
        for g in combo[1:]:
            f = f * g
        out.append(f)
    return out


def subring_ideal_member_graded(
    A: GradedSubalgebra,
    x: Polynomial,
    ideal_gens: Sequence[Polynomial],
    n: int,
    word_cap: int = DEFAULT_WORD_CAP,
    budget: int | None = None,
) -> bool:
    """Is x in the A-ideal generated by ideal_gens, in internal degree n?

    The degree-n slice of the ideal is spanned by generator times basis of
    the complementary piece; membership is a rank comparison against that
    span.
    """
    Q = A.ambient
    g = A.grading_unit
    xnf = Q.normal_form(x, budget)
    if xnf.is_zero():
        return True
    if not xnf.is_homogeneous() or xnf.weighted_degree() != n * g:
        raise UsageError(
            f"element is not homogeneous of internal degree {n} (ambient {n * g})"
        )
    cols, index = A._columns(n)
    ech = Echelon(Q.ring.p, len(cols))
    for h in ideal_gens:
        hnf = Q.normal_form(h, budget)
        if hnf.is_zero():
            continue
        if not hnf.is_homogeneous() or hnf.weighted_degree() % g:
            raise UsageError(f"ideal generator {h} is not homogeneous in the subring")
        e = hnf.weighted_degree() // g
        if e > n:
            continue
        for b in graded_piece_dim(A, n - e, word_cap, budget).representatives:
            nf = Q.normal_form(hnf * b, budget)
            if not nf.is_zero():
                ech.add(_row_of(nf, index, len(cols)))
    return ech.contains(_row_of(xnf, index, len(cols)))


def equal_degree_generation_check(
    Q: QuotientRing,
    n: int,
    B: int,
    budget: int | None = None,
) -> bool:
    """Do products of the ambient pieces R_n and R_(i-1)n span R_in for
    every 2 <= i <= B?  True exactly when the n-th Veronese is generated by
    its degree-n part, verified up to the bound.
    """
    if n < 1:
        raise UsageError("Veronese index must be positive")
    if B < 2:
        raise UsageError("bound must be at least 2")
    low = Q.standard_monomials(n)
    for i in range(2, B + 1):
        cols = Q.standard_monomials(i * n)
        if not cols:
            continue
        mid = Q.standard_monomials((i - 1) * n)
        index = {m: j for j, m in enumerate(cols)}
        ech = Echelon(Q.ring.p, len(cols))
        for u in low:
            for v in mid:
                nf = Q.normal_form(Q.ring.monomial(u) * Q.ring.monomial(v), budget)
                if not nf.is_zero():
                    ech.add(_row_of(nf, index, len(cols)))
        if ech.rank != len(cols):
            return False
    return True


def subring_presentation(
    A: GradedSubalgebra,
    symbols: Sequence[str] | None = None,
    max_generators: int = DEFAULT_GENERATOR_CAP,
    budget: int | None = None,
) -> Ideal:
    """Relations among generator symbols: the kernel of the symbol ring
    mapping onto A, by eliminating the ambient variables from the graph
    ideal.  The returned ideal lives in a fresh ring graded by the
    generators' internal degrees.
    """
    m = len(A.generators)
    if m > max_generators:
        raise UsageError(
            f"{m} generators exceed the presentation guard ({max_generators})"
        )
    ring = A.ambient.ring
    if symbols is None:
        symbols = tuple(f"u{i}" for i in range(m))
    symbols = tuple(symbols)
    if len(symbols) != m or len(set(symbols)) != m:
        raise UsageError("need one distinct symbol per generator")
    if set(symbols) & set(ring.var_names):
        raise UsageError("symbols clash with ambient variable names")
    nv = ring.nvars
    big = ring.extend(
        symbols,
        tuple(d * A.grading_unit for d in A.internal_degrees),
        BlockOrder(list(range(nv)), nv + m),
    )
    graph = []
    for i, g in enumerate(A.generators):
        graph.append(big.var(symbols[i]) - ring.lift(g, big))
    for rel in A.ambient.relations.gens:
        graph.append(ring.lift(rel, big))
    basis = buchberger(graph, big, budget)
    pres_ring = WeightedRing(ring.field, symbols, A.internal_degrees)
    kept = []
    for f in basis:
        if all(all(e == 0 for e in mon[:nv]) for mon in f.terms):
            kept.append(Polynomial(pres_ring, {mon[nv:]: c for mon, c in f.terms.items()}))
    return Ideal(pres_ring, tuple(kept), budget)


def evaluate_in_ambient(A: GradedSubalgebra, f: Polynomial) -> Polynomial:
    """Image of a symbol-ring polynomial under symbol -> generator, reduced."""
    if len(f.ring.var_names) != len(A.generators):
        raise UsageError("symbol ring does not match the generator count")
    Q = A.ambient
    total = Q.ring.zero()
    for mon, c in f.terms.items():
        part = Q.ring.constant(c)
        for g, e in zip(A.generators, mon):
            if e:
                part = part * g**e
        total = total + part
    return Q.normal_form(total)
