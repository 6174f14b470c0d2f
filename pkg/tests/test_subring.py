"""Finitely generated graded subalgebras: dimensions, membership, presentations."""

import pytest

from fsing.errors import ResourceError, UsageError
from fsing.groebner import Ideal, QuotientRing
from fsing.ring import WeightedRing
from fsing.subring import (
    GradedSubalgebra,
    equal_degree_generation_check,
    evaluate_in_ambient,
    graded_piece_dim,
    power_products,
    subring_hilbert_function,
    subring_ideal_member_graded,
    subring_presentation,
)


def veronese_cubics(p=7):
    # cubic Veronese of K[y, z]: a twisted-cubic cone
    R = WeightedRing(p, ("y", "z"), None)
    Q = QuotientRing(R, [])
    gens = tuple(R.parse(t) for t in ("y^3", "y^2*z", "y*z^2", "z^3"))
    return R, Q, GradedSubalgebra(Q, gens)


def test_twisted_cubic_hilbert_function():
    _, _, A = veronese_cubics()
    assert subring_hilbert_function(A, 8) == [3 * n + 1 for n in range(9)]


def test_equal_degree_detection():
    R, Q, A = veronese_cubics()
    assert A.equal_degree
    assert A.grading_unit == 3
    assert A.internal_degrees == (1, 1, 1, 1)
    # mixed-degree generators are graded by ambient weighted degree
    B = GradedSubalgebra(Q, (R.parse("y^2"), R.parse("z^3")))
    assert not B.equal_degree
    assert B.internal_degrees == (2, 3)


def test_graded_piece_spans_expected_monomials():
    _, _, A = veronese_cubics()
    piece = graded_piece_dim(A, 2)
    assert piece.rank == 7
    degrees = {f.weighted_degree() for f in piece.representatives}
    assert degrees == {6}


def test_membership_in_subring_ideal():
    _, _, A = veronese_cubics()
    R = A.ambient.ring
    # (y^3) * A picks up y^3 * z^3 in degree 2 but not z^6
    gens = [R.parse("y^3")]
    assert subring_ideal_member_graded(A, R.parse("y^3*z^3"), gens, 2)
    assert not subring_ideal_member_graded(A, R.parse("z^6"), gens, 2)


def test_presentation_of_twisted_cubic():
    _, _, A = veronese_cubics()
    P = subring_presentation(A, symbols=("a", "b", "c", "d"))
    texts = {str(g) for g in P.gens}
    assert texts == {"c^2 + 6*b*d", "b*c + 6*a*d", "b^2 + 6*a*c"}
    # soundness: every relation evaluates to zero on the actual generators
    for g in P.gens:
        assert evaluate_in_ambient(A, g).is_zero()


def test_presentation_relations_vanish_on_random_combinations():
    _, _, A = veronese_cubics(5)
    P = subring_presentation(A, symbols=("a", "b", "c", "d"))
    S = P.ring
    # products of relations stay relations
    prod = P.gens[0] * P.gens[1] + S.parse("a") * P.gens[2]
    assert evaluate_in_ambient(A, prod).is_zero()


def test_presentation_symbol_count_must_match():
    _, _, A = veronese_cubics()
    with pytest.raises(UsageError):
        subring_presentation(A, symbols=("a", "b"))


def test_power_products():
    R = WeightedRing(5, ("x", "y"), None)
    pp = power_products([R.parse("x"), R.parse("y")], 3)
    assert {str(f) for f in pp} == {"x^3", "x^2*y", "x*y^2", "y^3"}
    with pytest.raises(UsageError):
        power_products([R.parse("x")], 0)


def test_equal_degree_generation_check_true():
    # Veronese pieces of a hypersurface ring are generated in one step
    R = WeightedRing(7, ("x", "y", "z"), (15, 10, 6))
    Q = QuotientRing(R, [R.parse("x^2 + y^3 + z^5")])
    assert equal_degree_generation_check(Q, 30, 3)


def test_equal_degree_generation_check_false():
    # the degree-2 piece of the weighted quintic is empty, but degree 6
    # holds z, so equal-degree pieces cannot generate the n=2 Veronese
    R = WeightedRing(7, ("x", "y", "z"), (15, 10, 6))
    Q = QuotientRing(R, [R.parse("x^2 + y^3 + z^5")])
    assert not equal_degree_generation_check(Q, 2, 3)


def test_word_cap_limits_enumeration():
    _, _, A = veronese_cubics()
    with pytest.raises(ResourceError):
        subring_hilbert_function(A, 8, word_cap=3)


def test_subalgebra_of_quotient_ring():
    # the four cubics inside K[x,y,z]/(x^3 - y^2 z - y z^2) (cube-root cover)
    R = WeightedRing(7, ("x", "y", "z"), None)
    Q = QuotientRing(R, [R.parse("x^3 - y^2*z - y*z^2")])
    A = GradedSubalgebra(Q, tuple(R.parse(t) for t in ("y^3", "y^2*z", "y*z^2", "z^3")))
    assert subring_hilbert_function(A, 6) == [3 * n + 1 for n in range(7)]
