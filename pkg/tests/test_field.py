"""Prime field arithmetic tests."""

import random

import pytest

from fsing.errors import DomainError, UsageError
from fsing.field import MAX_CHARACTERISTIC, FieldElement, PrimeField, ff_inverse


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 101, 2**31 - 1])
def test_basic_arithmetic(p):
    F = PrimeField(p)
    a = F(5)
    b = F(p - 2)
    assert (a + b).value == (5 + p - 2) % p
    assert (a - b).value == (5 - (p - 2)) % p
    assert (a * b).value == (5 * (p - 2)) % p
    assert (-a).value == (-5) % p
    assert a + F(0) == a
    assert a * F(1) == a


@pytest.mark.parametrize("p", [2, 3, 5, 7, 31, 127])
def test_inverse_all_units(p):
    F = PrimeField(p)
    for k in range(1, p):
        inv = F(k).inverse()
        assert (F(k) * inv).value == 1
        assert ff_inverse(k, F) == inv


def test_zero_has_no_inverse():
    F = PrimeField(7)
    with pytest.raises(DomainError):
        F(0).inverse()


@pytest.mark.parametrize("p", [1, 4, 6, 9, 15, 2**31 + 1])
def test_rejects_non_prime_or_oversized(p):
    with pytest.raises(UsageError):
        PrimeField(p)


def test_max_characteristic_is_exclusive_bound():
    # largest prime below 2**31 is fine, anything at or above the cap is not
    assert MAX_CHARACTERISTIC == 2**31
    PrimeField(2**31 - 1)
    with pytest.raises(UsageError):
        PrimeField(2**31 + 11)


def test_division_and_powers():
    F = PrimeField(13)
    a = F(9)
    b = F(4)
    assert (a / b) * b == a
    assert a ** 12 == F(1)  # Fermat
    assert a ** 0 == F(1)


def test_random_field_identities():
    rng = random.Random(20260819)
    F = PrimeField(10007)
    for _ in range(200):
        x = F(rng.randrange(10007))
        y = F(rng.randrange(10007))
        z = F(rng.randrange(10007))
        assert (x + y) * z == x * z + y * z
        assert x + (-x) == F(0)
        if y.value != 0:
            assert (x / y) * y == x


def test_elements_compare_by_value_and_field():
    F = PrimeField(5)
    G = PrimeField(7)
    assert F(3) == F(8)  # reduced mod p
    assert F(3) != G(3)
    assert isinstance(F(3), FieldElement)
