"""Buchberger's algorithm and ideal arithmetic over weighted rings.

Every Ideal eagerly computes its reduced monic Groebner basis, which is
canonical for the ring's order, so ideal equality is basis equality and
normal forms are unique.  Pair selection follows the normal strategy
(smallest lcm first) with the coprime-lead and chain criteria; the work
is metered by a step budget (FSING_STEP_BUDGET in the environment, or
the `budget` argument) and overruns raise ResourceError instead of
spinning forever.
"""

from __future__ import annotations

import os
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import DomainError, ResourceError, UsageError
from .ring import (
    BlockOrder,
    Monomial,
    Polynomial,
    WeightedRing,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

DEFAULT_STEP_BUDGET = 2_000_000


def _step_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("FSING_STEP_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"FSING_STEP_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_STEP_BUDGET


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps: int):
        self.left = steps

    def spend(self, n: int = 1):
        self.left -= n
        if self.left < 0:
            raise ResourceError(
                "step budget exhausted (raise FSING_STEP_BUDGET to allow more work)"
            )


def _reduce_terms(
    terms: dict[Monomial, int],
    basis: Sequence[Polynomial],
    ring: WeightedRing,
    budget: _Budget,
) -> dict[Monomial, int]:
    """Full normal form of a term dict against a list of reducers."""
    key = ring.order.key
    p = ring.p
    inv = ring.field.inv
    leads = [(g.leading_monomial(), g) for g in basis]
    remaining = dict(terms)
    out: dict[Monomial, int] = {}
    while remaining:
        m = max(remaining, key=key)
        c = remaining.pop(m)
        hit = None
        for lm, g in leads:
            if monomial_divides(lm, m):
                hit = (lm, g)
                break
        if hit is None:
            out[m] = c
            continue
        budget.spend()
        lm, g = hit
        shift = monomial_div(m, lm)
        factor = (c * inv(g.terms[lm])) % p
        for mg, cg in g.terms.items():
            if mg == lm:
                continue
            mm = monomial_mul(mg, shift)
            v = (remaining.get(mm, 0) - factor * cg) % p
            if v:
                remaining[mm] = v
            else:
                remaining.pop(mm, None)
    return out


def normal_form(f: Polynomial, basis: "Ideal | Sequence[Polynomial]", budget: int | None = None) -> Polynomial:
    """Unique remainder of f modulo a reduced basis (or an Ideal's basis)."""
    if isinstance(basis, Ideal):
        if basis.ring != f.ring:
            raise UsageError("polynomial and ideal live in different rings")
        basis = basis.basis
    ring = f.ring
    b = _Budget(_step_budget(budget))
    return Polynomial(ring, _reduce_terms(f.terms, [g for g in basis if g], ring, b))


def _spoly(f: Polynomial, g: Polynomial, ring: WeightedRing) -> Polynomial:
    lf, cf = f.leading_term()
    lg, cg = g.leading_term()
    lcm = monomial_lcm(lf, lg)
    mf = ring.monomial(monomial_div(lcm, lf), ring.field.inv(cf))
    mg = ring.monomial(monomial_div(lcm, lg), ring.field.inv(cg))
    return mf * f - mg * g


def buchberger(
    gens: Sequence[Polynomial],
    ring: WeightedRing | None = None,
    budget: int | None = None,
) -> tuple[Polynomial, ...]:
    """Reduced monic Groebner basis, deterministic for a fixed input order."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise UsageError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise UsageError("generators live in different rings")
    b = _Budget(_step_budget(budget))
    key = ring.order.key

    G: list[Polynomial] = [g.monic() for g in gens if not g.is_zero()]
    if not G:
        return ()
    leads = [g.leading_monomial() for g in G]

    def coprime(i: int, j: int) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(leads[i], leads[j]))

    pending: dict[tuple[int, int], Monomial] = {}
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            pending[(i, j)] = monomial_lcm(leads[i], leads[j])

    while pending:
        (i, j) = min(pending, key=lambda ij: (key(pending[ij]), ij))
        lcm = pending.pop((i, j))
        if coprime(i, j):
            continue
        # Chain criterion: a third lead dividing the lcm whose two pairs
        # were both treated already lets this pair be skipped.
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if monomial_divides(leads[k], lcm):
                a = (min(i, k), max(i, k))
                c = (min(j, k), max(j, k))
                if a not in pending and c not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(G[i], G[j], ring)
        h = Polynomial(ring, _reduce_terms(s.terms, G, ring, b))
        if h.is_zero():
            continue
        h = h.monic()
        G.append(h)
        leads.append(h.leading_monomial())
        t = len(G) - 1
        for k in range(t):
            pending[(k, t)] = monomial_lcm(leads[k], leads[t])

    # Minimalize: drop elements whose lead is divisible by another kept lead.
    order_idx = sorted(range(len(G)), key=lambda i: key(leads[i]))
    kept: list[Polynomial] = []
    kept_leads: list[Monomial] = []
    for i in order_idx:
        if any(monomial_divides(lm, leads[i]) for lm in kept_leads):
            continue
        kept.append(G[i])
        kept_leads.append(leads[i])

    # Tail-reduce to the canonical reduced basis (iterate to a fixpoint).
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1 :]
            nf = Polynomial(ring, _reduce_terms(kept[i].terms, others, ring, b))
            nf = nf.monic()
            if nf.terms != kept[i].terms:
                kept[i] = nf
                changed = True

    kept.sort(key=lambda g: key(g.leading_monomial()))
    return tuple(kept)


class Ideal:
    """An ideal presented by generators, with its reduced basis attached."""

    __slots__ = ("ring", "gens", "basis")

    def __init__(
        self,
        ring: WeightedRing,
        gens: Iterable[Polynomial],
        budget: int | None = None,
    ):
        self.ring = ring
        self.gens = tuple(gens)
        for g in self.gens:
            if g.ring != ring:
                raise UsageError("generator from a different ring")
        self.basis = buchberger(self.gens, ring, budget) if self.gens else ()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Ideal)
            and other.ring == self.ring
            and other.basis == self.basis
        )

    def __hash__(self) -> int:
        return hash((self.ring.p, self.basis))

    def __repr__(self) -> str:
        inside = ", ".join(str(g) for g in self.basis) or "0"
        return f"Ideal({inside})"

    def is_zero(self) -> bool:
        return not self.basis

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0] == self.ring.one()

    def normal_form(self, f: Polynomial, budget: int | None = None) -> Polynomial:
        return normal_form(f, self, budget)

    def member(self, f: Polynomial, budget: int | None = None) -> bool:
        return normal_form(f, self, budget).is_zero()

    def plus(self, other: "Ideal | Sequence[Polynomial]") -> "Ideal":
        og = other.gens if isinstance(other, Ideal) else tuple(other)
        return Ideal(self.ring, self.gens + tuple(og))

    def contains(self, other: "Ideal") -> bool:
        return all(self.member(g) for g in other.basis)

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_monomial() for g in self.basis)


def ideal_member(f: Polynomial, I: Ideal, budget: int | None = None) -> bool:
    """f in I, decided by normal form against the reduced basis."""
    if f.ring != I.ring:
        raise UsageError("polynomial and ideal live in different rings")
    return I.member(f, budget)


_AUX_NAMES = ("aux_t", "aux_t1", "aux_t2", "aux_t3")


def _fresh_aux_name(ring: WeightedRing) -> str:
    for name in _AUX_NAMES:
        if name not in ring.var_names:
            return name
    raise UsageError("could not pick a fresh auxiliary variable name")


def elim_intersection(I: Ideal, J: Ideal, budget: int | None = None) -> Ideal:
    """I ∩ J via a single auxiliary variable and a block elimination order.

    Generators t*I + (1-t)*J are saturated in t; the basis elements free
    of t generate the intersection.  Inputs are treated as ungraded.
    """
    ring = I.ring
    if J.ring != ring:
        raise UsageError("ideals live in different rings")
    if I.is_zero() or J.is_zero():
        return Ideal(ring, ())
    n = ring.nvars
    aux = _fresh_aux_name(ring)
    big = ring.extend((aux,), (1,), BlockOrder([n], n + 1))
    t = big.var(aux)
    one = big.one()
    gens = [t * ring.lift(g, big) for g in I.gens if g] + [
        (one - t) * ring.lift(g, big) for g in J.gens if g
    ]
    basis = buchberger(gens, big, budget)
    kept = []
    for g in basis:
        if all(m[n] == 0 for m in g.terms):
            kept.append(Polynomial(ring, {m[:n]: c for m, c in g.terms.items()}))
    return Ideal(ring, kept, budget)


def _exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly; internal error otherwise."""
    ring = f.ring
    p = ring.p
    inv = ring.field.inv
    key = ring.order.key
    lg, cg = g.leading_term()
    cg_inv = inv(cg)
    remaining = dict(f.terms)
    quot: dict[Monomial, int] = {}
    while remaining:
        m = max(remaining, key=key)
        c = remaining.pop(m)
        if not monomial_divides(lg, m):
            raise DomainError("exact division failed; quotient is not a polynomial")
        shift = monomial_div(m, lg)
        factor = (c * cg_inv) % p
        quot[shift] = factor
        for mg, cgg in g.terms.items():
            if mg == lg:
                continue
            mm = monomial_mul(mg, shift)
            v = (remaining.get(mm, 0) - factor * cgg) % p
            if v:
                remaining[mm] = v
            else:
                remaining.pop(mm, None)
    return Polynomial(ring, quot)


def ideal_quotient(I: Ideal, J: "Ideal | Polynomial", budget: int | None = None) -> Ideal:
    """Colon ideal I : J = {f : f*J ⊆ I}."""
    ring = I.ring
    if isinstance(J, Polynomial):
        J = Ideal(ring, (J,))
    if J.ring != ring:
        raise UsageError("ideals live in different rings")
    gens = [g for g in J.gens if not g.is_zero()]
    if not gens:
        # (I : 0) is the whole ring.
        return Ideal(ring, (ring.one(),))
    result: Ideal | None = None
    for g in gens:
        inter = elim_intersection(I, Ideal(ring, (g,)), budget)
        quots = [_exact_divide(h, g) for h in inter.basis]
        Qg = Ideal(ring, quots, budget)
        result = Qg if result is None else elim_intersection(result, Qg, budget)
    return result


def bracket_power(I: Ideal, q: int, budget: int | None = None) -> Ideal:
    """Frobenius power I^[q], q a power of the characteristic."""
    gens = tuple(g.frobenius_power(q) for g in I.gens)
    return Ideal(I.ring, gens, budget)


def ideal_power(I: Ideal, k: int, budget: int | None = None) -> Ideal:
    """Ordinary power I^k via k-fold products of generators."""
    if k < 0:
        raise UsageError(f"ideal power wants k >= 0, got {k}")
    if k == 0:
        return Ideal(I.ring, (I.ring.one(),))
    gens = []
    for combo in combinations_with_replacement(I.gens, k):
        f = combo[0]
        for h in combo[1:]:
            f = f * h
        gens.append(f)
    return Ideal(I.ring, gens, budget)


class QuotientRing:
    """R/I for a homogeneous ideal I in a weighted ring R.

    Elements are represented by ambient polynomials; normal form against
    the relation basis is the canonical representative.
    """

    __slots__ = ("ring", "relations")

    def __init__(self, ring: WeightedRing, relations: "Ideal | Sequence[Polynomial]"):
        self.ring = ring
        if not isinstance(relations, Ideal):
            relations = Ideal(ring, tuple(relations))
        if relations.ring != ring:
            raise UsageError("relations live in a different ring")
        for g in relations.gens:
            if not g.is_homogeneous():
                raise UsageError(f"relation {g} is not homogeneous for weights {ring.weights}")
        if relations.is_unit():
            raise UsageError("relations generate the unit ideal; the quotient is zero")
        self.relations = relations

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QuotientRing)
            and other.ring == self.ring
            and other.relations == self.relations
        )

    def __hash__(self) -> int:
        return hash((self.ring.p, self.relations.basis))

    def __repr__(self) -> str:
        return f"{self.ring!r} / {self.relations!r}"

    def normal_form(self, f: Polynomial, budget: int | None = None) -> Polynomial:
        return normal_form(f, self.relations, budget)

    def is_zero_elem(self, f: Polynomial, budget: int | None = None) -> bool:
        return self.normal_form(f, budget).is_zero()

    def member(
        self,
        f: Polynomial,
        J: "Ideal | Sequence[Polynomial]",
        budget: int | None = None,
    ) -> bool:
        gens = J.gens if isinstance(J, Ideal) else tuple(J)
        combined = Ideal(self.ring, tuple(gens) + self.relations.gens, budget)
        return combined.member(f, budget)

    def standard_monomials(self, degree: int) -> list[Monomial]:
        """Basis monomials of the degree piece: those outside the initial ideal."""
        leads = self.relations.leading_monomials()
        return [
            m
            for m in self.ring.monomials_of_degree(degree)
            if not any(monomial_divides(lm, m) for lm in leads)
        ]


def quotient_member(
    f: Polynomial,
    J: "Ideal | Sequence[Polynomial]",
    Q: QuotientRing,
    budget: int | None = None,
) -> bool:
    """f ∈ J·Q, i.e. membership modulo the defining relations."""
    if f.ring != Q.ring:
        raise UsageError("polynomial lives in a different ring than the quotient")
    return Q.member(f, J, budget)
