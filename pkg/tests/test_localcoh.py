"""Cech-style local cohomology classes and bounded vanishing tests."""

import pytest

from fsing.errors import UsageError
from fsing.groebner import QuotientRing
from fsing.localcoh import (
    CechClass,
    class_degree,
    frobenius_class,
    is_zero_class,
    shift_representative,
    subtract,
)
from fsing.ring import WeightedRing


def quintic_class(p=2, exponents=(1, 2), numerator="x"):
    R = WeightedRing(p, ("x", "y", "z"), (15, 10, 6))
    Q = QuotientRing(R, [R.parse("x^2 + y^3 + z^5")])
    c = CechClass(Q, (R.var("y"), R.var("z")), R.parse(numerator), exponents)
    return R, Q, c


def test_class_degree():
    # deg(x) - deg(y) - 2 deg(z) = 15 - 10 - 12 = -7
    _, _, c = quintic_class()
    assert class_degree(c) == -7


def test_degree_of_shifted_representatives_is_stable():
    _, _, c = quintic_class()
    s = shift_representative(c)
    assert class_degree(s) == class_degree(c)
    assert s.exponents == (2, 3)
    ss = shift_representative(s)
    assert class_degree(ss) == -7


def test_frobenius_action_multiplies_data():
    _, _, c = quintic_class(p=2)
    fc = frobenius_class(c)
    assert fc.exponents == (2, 4)
    assert class_degree(fc) == -14
    fc2 = frobenius_class(c, e=2)
    assert fc2.exponents == (4, 8)
    assert class_degree(fc2) == -28


def test_frobenius_rejects_bad_iteration():
    _, _, c = quintic_class()
    with pytest.raises(UsageError):
        frobenius_class(c, e=0)


def test_nonzero_class_survives_scan():
    # the socle representative x / (y z^2) at p = 2 is a nonzero class
    _, _, c = quintic_class(p=2)
    v = is_zero_class(c, S_max=20)
    assert not v.is_zero
    assert v.witness_s is None
    assert v.status == "nonzero-up-to-20"


def test_frobenius_image_vanishes_at_two():
    # x^2 = -(y^3 + z^5) makes the numerator divisible enough at p = 2
    _, _, c = quintic_class(p=2)
    v = is_zero_class(frobenius_class(c), S_max=20)
    assert v.is_zero
    assert v.status == "zero-with-witness-0"


def test_zero_witness_is_minimal():
    # the scan must return the smallest working s, so replaying containment
    # at any smaller s must fail
    R, Q, c = quintic_class(p=2)
    v = is_zero_class(frobenius_class(c), S_max=20)
    assert v.witness_s == 0
    from fsing.groebner import Ideal, quotient_member

    fc = frobenius_class(c)
    target = Ideal(R, tuple(f**a for f, a in zip(fc.sop, fc.exponents)))
    assert quotient_member(fc.numerator, target, Q)


def test_witness_growth_bound_under_shift():
    # rewriting over a deeper denominator cannot raise the witness beyond
    # the shift amount: s-witness of shifted class <= witness + 1
    _, _, c = quintic_class(p=2)
    fc = frobenius_class(c)
    v = is_zero_class(fc, S_max=20)
    vs = is_zero_class(shift_representative(fc), S_max=20)
    assert vs.is_zero
    assert vs.witness_s <= v.witness_s + 1


def test_shifted_representative_has_same_vanishing():
    _, _, c = quintic_class(p=2)
    for cls in (c, frobenius_class(c)):
        direct = is_zero_class(cls, S_max=10)
        shifted = is_zero_class(shift_representative(cls), S_max=10)
        assert direct.is_zero == shifted.is_zero


def test_subtract_self_is_zero():
    _, _, c = quintic_class(p=2)
    d = subtract(c, c)
    assert is_zero_class(d, S_max=5).is_zero


def test_subtract_mixed_denominators():
    _, _, c = quintic_class(p=2)
    s = shift_representative(c)
    d = subtract(c, s)
    assert is_zero_class(d, S_max=5).is_zero


def test_subtract_rejects_mismatched_sop():
    R, Q, c = quintic_class(p=2)
    other = CechClass(Q, (R.var("y"), R.var("x")), R.var("z"), (1, 1))
    with pytest.raises(UsageError):
        subtract(c, other)


def test_validation_errors():
    R = WeightedRing(2, ("x", "y", "z"), (15, 10, 6))
    Q = QuotientRing(R, [R.parse("x^2 + y^3 + z^5")])
    with pytest.raises(UsageError):
        CechClass(Q, (R.var("y"), R.var("z")), R.var("x"), (1,))  # arity
    with pytest.raises(UsageError):
        CechClass(Q, (R.var("y"), R.var("z")), R.var("x"), (0, 1))  # positivity
    with pytest.raises(UsageError):
        CechClass(Q, (), R.var("x"), ())  # empty sop
    with pytest.raises(UsageError):
        is_zero_class(CechClass(Q, (R.var("y"),), R.var("x"), (1,)), S_max=-1)


def test_degree_requires_homogeneous_numerator():
    R = WeightedRing(2, ("x", "y", "z"), (15, 10, 6))
    Q = QuotientRing(R, [R.parse("x^2 + y^3 + z^5")])
    c = CechClass(Q, (R.var("y"), R.var("z")), R.parse("x + z"), (1, 1))
    with pytest.raises(UsageError):
        class_degree(c)
