"""Q-divisors on the projective line and their section rings."""

import random
from fractions import Fraction

import pytest

from fsing.demazure import (
    QDivisor,
    floor_divisor,
    floor_identity_holds,
    fractional_part,
    parse_divisor,
    same_fregularity_class,
    section_dim,
    section_ring_profile,
    veronese_divisor,
)
from fsing.errors import UsageError


@pytest.fixture
def D():
    return parse_divisor([("VS", "-1/2"), ("VT", "1/3"), ("VW", "1/5")])


def test_parse_and_degree(D):
    assert D.degree() == Fraction(1, 30)
    assert D.labels() == ("VS", "VT", "VW")
    assert D.coefficient("VT") == Fraction(1, 3)


def test_floor_divisor(D):
    f1 = floor_divisor(D, 1)
    assert f1.components == (("VS", -1), ("VT", 0), ("VW", 0))
    assert f1.degree == -1
    f30 = floor_divisor(D, 30)
    assert f30.components == (("VS", -15), ("VT", 10), ("VW", 6))
    assert f30.degree == 1


def test_fractional_part(D):
    frac = fractional_part(D)
    assert frac.coefficient("VS") == Fraction(1, 2)
    assert frac.coefficient("VT") == Fraction(2, 3)
    assert frac.coefficient("VW") == Fraction(4, 5)
    # fractional parts are fixed points of taking fractional part again
    assert fractional_part(frac).coefficient("VS") == Fraction(1, 2)


def test_section_dims(D):
    assert section_dim(D, 1) == 0
    for n in (6, 10, 15):
        assert section_dim(D, n) == 1
    assert section_dim(D, 30) == 2
    # deg floor(nD) + 1 when nonnegative
    assert section_dim(D, 30) == floor_divisor(D, 30).degree + 1


def test_profile_matches_section_dims(D):
    profile = section_ring_profile(D, 12)
    assert profile.dims[0] == 1
    assert list(profile.dims) == [1] + [section_dim(D, n) for n in range(1, 13)]


def test_veronese_divisor(D):
    V = veronese_divisor(D, 2)
    assert V.coefficient("VS") == -1
    assert V.coefficient("VT") == Fraction(2, 3)
    assert V.coefficient("VW") == Fraction(2, 5)
    # veronese compatibility: sections of the scaled divisor match
    for n in range(1, 13):
        for m in range(1, 13):
            assert section_dim(veronese_divisor(D, n), m) == section_dim(D, n * m)


def test_same_fregularity_class(D):
    assert same_fregularity_class(D, D.scale(7))
    assert not same_fregularity_class(D, D.scale(2))
    # integral shifts leave the class unchanged
    E = parse_divisor([("VS", "1/2"), ("VT", "1/3"), ("VW", "-4/5")])
    assert same_fregularity_class(D, E)
    assert fractional_part(D).coefficient("VW") == fractional_part(E).coefficient(
        "VW"
    )


def test_floor_identity(D):
    # -floor(-nD) == floor(nD + D') where D' cancels the fractional drift
    for n in range(1, 25):
        assert floor_identity_holds(D, n)


def test_floor_identity_random_divisors():
    rng = random.Random(20260819)
    labels = ("P0", "P1", "P2", "P3")
    for _ in range(100):
        pairs = []
        for lab in labels[: rng.randrange(1, 5)]:
            num = rng.randrange(-12, 13)
            den = rng.randrange(1, 12)
            pairs.append((lab, "{}/{}".format(num, den)))
        D = parse_divisor(pairs)
        for n in range(1, 25):
            assert floor_identity_holds(D, n)


def test_section_dim_never_negative():
    E = parse_divisor([("VS", "-3/2")])
    for n in range(1, 20):
        assert section_dim(E, n) == max(0, floor_divisor(E, n).degree + 1)
        assert section_dim(E, n) >= 0


def test_parse_rejects_duplicate_labels():
    with pytest.raises(UsageError):
        parse_divisor([("VS", "1/2"), ("VS", "1/3")])
