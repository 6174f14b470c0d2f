"""Weighted polynomial rings over prime fields.

A monomial is an exponent tuple; a polynomial is an immutable sparse map
from monomials to nonzero residues mod p.  Rings carry positive integer
variable weights, and the default term order compares weighted degree
first with graded reverse lexicographic tie-break in the declared
variable order.  Block orders (front variables dominate, both blocks
compared by unweighted degree then grevlex) serve elimination.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import ResourceError, UsageError
from .field import FieldElement, PrimeField

Monomial = tuple[int, ...]

# Exponents are unbounded in Python, but anything past this bound signals
# a runaway computation rather than a desk-scale instance.
MAX_EXPONENT = 2**31


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b, i.e. componentwise a <= b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b | a."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


class MonomialOrder:
    """Total multiplicative well-order on monomials, exposed as a sort key."""

    def key(self, m: Monomial):
        raise NotImplementedError

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)


class WeightedGrevlexOrder(MonomialOrder):
    """Weighted degree first, then graded reverse lex on raw exponents.

    Ties in weighted degree are broken grevlex-style in the declared
    variable order: among monomials of equal weighted degree the one
    whose trailing variable exponents are smaller wins, so e.g. with
    weights (15, 10, 6) the degree-30 monomials sort x^2 > y^3 > z^5.
    """

    __slots__ = ("weights",)

    def __init__(self, weights: Sequence[int]):
        self.weights = tuple(weights)

    def key(self, m: Monomial):
        w = self.weights
        deg = 0
        for e, wi in zip(m, w):
            deg += e * wi
        return (deg, tuple(-e for e in reversed(m)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightedGrevlexOrder) and other.weights == self.weights

    def __hash__(self) -> int:
        return hash(("wgrevlex", self.weights))

    def __repr__(self) -> str:
        return f"WeightedGrevlexOrder{self.weights}"


class BlockOrder(MonomialOrder):
    """Elimination order: the front variable block dominates the back.

    Both blocks are compared by total (unweighted) degree with grevlex
    tie-break, so any monomial containing a front variable exceeds every
    monomial free of them; a Groebner basis under this order intersects
    down to the subring in the back variables.
    """

    __slots__ = ("front", "nvars")

    def __init__(self, front: Iterable[int], nvars: int):
        self.front = tuple(sorted(set(front)))
        self.nvars = nvars
        if any(i < 0 or i >= nvars for i in self.front):
            raise UsageError("front variable index out of range")

    def key(self, m: Monomial):
        fr = [m[i] for i in self.front]
        back_idx = [i for i in range(self.nvars) if i not in self.front]
        bk = [m[i] for i in back_idx]
        return (
            sum(fr),
            tuple(-e for e in reversed(fr)),
            sum(bk),
            tuple(-e for e in reversed(bk)),
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BlockOrder)
            and other.front == self.front
            and other.nvars == self.nvars
        )

    def __hash__(self) -> int:
        return hash(("block", self.front, self.nvars))

    def __repr__(self) -> str:
        return f"BlockOrder(front={self.front}, nvars={self.nvars})"


class WeightedRing:
    """F_p[x_1..x_n] with positive integer weights deg(x_i) = w_i."""

    __slots__ = ("field", "p", "var_names", "weights", "order", "_var_index")

    def __init__(
        self,
        p: int | PrimeField,
        var_names: Sequence[str],
        weights: Sequence[int] | None = None,
        order: MonomialOrder | None = None,
    ):
        self.field = p if isinstance(p, PrimeField) else PrimeField(p)
        self.p = self.field.p
        self.var_names = tuple(var_names)
        if len(set(self.var_names)) != len(self.var_names):
            raise UsageError(f"duplicate variable names in {self.var_names}")
        for name in self.var_names:
            if not name.isidentifier():
                raise UsageError(f"variable name {name!r} is not an identifier")
        if weights is None:
            weights = (1,) * len(self.var_names)
        self.weights = tuple(int(w) for w in weights)
        if len(self.weights) != len(self.var_names):
            raise UsageError("one weight per variable required")
        if any(w <= 0 for w in self.weights):
            raise UsageError(f"weights must be positive, got {self.weights}")
        self.order = order if order is not None else WeightedGrevlexOrder(self.weights)
        self._var_index = {n: i for i, n in enumerate(self.var_names)}

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeightedRing)
            and other.p == self.p
            and other.var_names == self.var_names
            and other.weights == self.weights
            and other.order == self.order
        )

    def __hash__(self) -> int:
        return hash((self.p, self.var_names, self.weights, self.order))

    def __repr__(self) -> str:
        ws = ",".join(f"{n}:{w}" for n, w in zip(self.var_names, self.weights))
        return f"F_{self.p}[{ws}]"

    # -- constructors -------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: 1})

    def constant(self, c: int) -> "Polynomial":
        c %= self.p
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str) -> "Polynomial":
        try:
            i = self._var_index[name]
        except KeyError:
            raise UsageError(f"no variable {name!r} in {self!r}") from None
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.var(n) for n in self.var_names]

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        if len(exps) != self.nvars:
            raise UsageError("exponent tuple length mismatch")
        if any(e < 0 for e in exps):
            raise UsageError("negative exponent")
        coeff %= self.p
        return Polynomial(self, {tuple(exps): coeff} if coeff else {})

    def parse(self, text: str) -> "Polynomial":
        from .parser import parse_poly

        return parse_poly(self, text)

    def monomial_degree(self, m: Monomial) -> int:
        d = 0
        for e, w in zip(m, self.weights):
            d += e * w
        return d

    def with_order(self, order: MonomialOrder) -> "WeightedRing":
        return WeightedRing(self.field, self.var_names, self.weights, order)

    def extend(
        self,
        names: Sequence[str],
        weights: Sequence[int],
        order: MonomialOrder | None = None,
    ) -> "WeightedRing":
        """New ring with extra variables appended after the current ones."""
        return WeightedRing(
            self.field,
            self.var_names + tuple(names),
            self.weights + tuple(weights),
            order,
        )

    def lift(self, f: "Polynomial", big: "WeightedRing") -> "Polynomial":
        """Reinterpret f in an extension ring that starts with f's variables."""
        if big.var_names[: self.nvars] != self.var_names:
            raise UsageError("target ring does not extend this one")
        pad = (0,) * (big.nvars - self.nvars)
        return Polynomial(big, {m + pad: c for m, c in f.terms.items()})

    def monomials_of_degree(self, d: int) -> list[Monomial]:
        """All exponent tuples of weighted degree exactly d, order-sorted descending."""
        out: list[Monomial] = []

        def rec(i: int, remaining: int, prefix: tuple[int, ...]):
            if i == self.nvars - 1:
                w = self.weights[i]
                if remaining % w == 0:
                    out.append(prefix + (remaining // w,))
                return
            w = self.weights[i]
            for e in range(remaining // w + 1):
                rec(i + 1, remaining - e * w, prefix + (e,))

        if d < 0:
            return []
        rec(0, d, ())
        out.sort(key=self.order.key, reverse=True)
        return out


class Polynomial:
    """Immutable sparse polynomial; coefficients are residues in [1, p)."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: WeightedRing, terms: dict[Monomial, int]):
        self.ring = ring
        self.terms = terms  # owned; never mutated after construction
        self._hash = None

    # -- inspection ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise UsageError("zero polynomial has no leading monomial")
        key = self.ring.order.key
        return max(self.terms, key=key)

    def leading_coefficient(self) -> int:
        return self.terms[self.leading_monomial()]

    def leading_term(self) -> tuple[Monomial, int]:
        m = self.leading_monomial()
        return m, self.terms[m]

    def constant_coefficient(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def weighted_degree(self) -> int | None:
        """Max weighted degree of the support; None for the zero polynomial."""
        if not self.terms:
            return None
        degsum = self.ring.monomial_degree
        return max(degsum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degsum = self.ring.monomial_degree
        it = iter(self.terms)
        d = degsum(next(it))
        return all(degsum(m) == d for m in it)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- arithmetic ----------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise UsageError(f"polynomials from {self.ring!r} and {other.ring!r} do not mix")

    def __add__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self.ring.constant(other.value if isinstance(other, FieldElement) else other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self.ring.constant(other.value if isinstance(other, FieldElement) else other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            other = other.value
        if isinstance(other, int):
            c = other % self.ring.p
            if c == 0:
                return self.ring.zero()
            p = self.ring.p
            return Polynomial(self.ring, {m: (v * c) % p for m, v in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        p = self.ring.p
        out: dict[Monomial, int] = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = monomial_mul(m1, m2)
                v = (out.get(m, 0) + c1 * c2) % p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise UsageError(f"polynomial power needs a non-negative integer, got {n!r}")
        if n == 0:
            return self.ring.one()
        result = None
        base = self
        k = n
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def frobenius_power(self, q: int) -> "Polynomial":
        """self^q for q a power of the characteristic, term by term.

        Valid over F_p because (a + b)^p = a^p + b^p and c^p = c.
        """
        p = self.ring.p
        e = 0
        qq = q
        while qq > 1 and qq % p == 0:
            qq //= p
            e += 1
        if qq != 1 or q < 1:
            raise UsageError(f"{q} is not a power of the characteristic {p}")
        if self.terms and max(max(m) for m in self.terms) * q > MAX_EXPONENT:
            raise ResourceError("exponent cap exceeded in Frobenius power")
        return Polynomial(self.ring, {tuple(x * q for x in m): c for m, c in self.terms.items()})

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        c = self.leading_coefficient()
        if c == 1:
            return self
        return self * self.ring.field.inv(c)

    # -- equality and text ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.ring.p, frozenset(self.terms.items())))
            )
        return self._hash

    def __setattr__(self, name, value):
        # Write-once construction; afterwards the value is frozen.
        if name in ("ring", "terms") and hasattr(self, "terms"):
            raise AttributeError("Polynomial is immutable")
        object.__setattr__(self, name, value)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.var_names
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(c)] + factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<{self} over F_{self.ring.p}>"


def weighted_degree(f: Polynomial) -> int | None:
    """Weighted degree of a polynomial; None for zero."""
    return f.weighted_degree()
