"""Prime fields F_p with exact modular arithmetic.

Elements are canonical residues in [0, p).  Inverses use Fermat's little
theorem, so the characteristic must be prime; PrimeField checks this by
trial division at construction time and refuses p >= 2^31 so that every
intermediate product stays well inside machine-word range even when the
coefficients are later handed to vectorized integer routines.
"""

from __future__ import annotations

from .errors import DomainError, UsageError

MAX_CHARACTERISTIC = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """The field F_p.  Instances with equal p compare and hash equal."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int):
            raise UsageError(f"characteristic must be an integer, got {p!r}")
        if p >= MAX_CHARACTERISTIC:
            raise UsageError(f"characteristic {p} too large (need p < 2^31)")
        if not _is_prime(p):
            raise UsageError(f"characteristic {p} is not prime")
        self.p = p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value % self.p)

    # Raw residue arithmetic; used by the polynomial layer, which stores
    # coefficients as plain ints for speed.
    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise DomainError(f"0 has no inverse in F_{self.p}")
        # Fermat: a^(p-2) * a = a^(p-1) = 1.
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))


class FieldElement:
    """A residue a + pZ with operator overloading.

    Mixed arithmetic with plain ints is allowed; mixing elements of
    different fields is a usage error rather than a silent coercion.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: PrimeField, value: int):
        self.field = field
        self.value = value % field.p

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise UsageError(
                    f"elements of F_{self.field.p} and F_{other.field.p} do not mix"
                )
            return other
        if isinstance(other, int):
            return FieldElement(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return FieldElement(self.field, -self.value)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FieldElement(self.field, pow(self.value, n, self.field.p))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"


def ff_inverse(a: "FieldElement | int", field: PrimeField | None = None):
    """Inverse of a nonzero element; DomainError on zero.

    Accepts either a FieldElement or a plain residue plus its field.
    """
    if isinstance(a, FieldElement):
        return a.inverse()
    if field is None:
        raise UsageError("ff_inverse needs the field when given a plain int")
    return field.inv(a)
