"""Groebner bases, normal forms, and ideal operations."""

import os
import random
import subprocess
import sys

import pytest

from fsing.errors import ResourceError, UsageError
from fsing.groebner import (
    DEFAULT_STEP_BUDGET,
    Ideal,
    QuotientRing,
    bracket_power,
    buchberger,
    elim_intersection,
    ideal_member,
    ideal_power,
    ideal_quotient,
    normal_form,
    quotient_member,
)
from fsing.linalg import Echelon
from fsing.ring import WeightedRing


def spoly(f, g, ring):
    from fsing.ring import monomial_div, monomial_lcm

    lmf, lmg = f.leading_monomial(), g.leading_monomial()
    lcm = monomial_lcm(lmf, lmg)
    mf = ring.monomial(monomial_div(lcm, lmf), 1)
    mg = ring.monomial(monomial_div(lcm, lmg), 1)
    return mf * f.monic() - mg * g.monic()


def rand_poly(ring, rng, max_exp=3, terms=4):
    f = ring.zero()
    n = len(ring.var_names)
    for _ in range(rng.randrange(1, terms + 1)):
        exps = tuple(rng.randrange(max_exp) for _ in range(n))
        f = f + ring.monomial(exps, rng.randrange(1, ring.p))
    return f


def test_basis_is_reduced_and_monic():
    R = WeightedRing(7, ("x", "y"), None)
    I = Ideal(R, [R.parse("x^2 + y^2"), R.parse("x*y")])
    basis = I.basis
    for g in basis:
        assert g.leading_coefficient() == 1
        # no term of g is divisible by another basis element's leading monomial
        others = [h for h in basis if h is not g]
        for mono, _ in g.terms.items():
            for h in others:
                from fsing.ring import monomial_divides

                assert not monomial_divides(h.leading_monomial(), mono)


def test_spolynomials_reduce_to_zero():
    rng = random.Random(20260819)
    R = WeightedRing(5, ("x", "y", "z"), None)
    for _ in range(10):
        gens = [rand_poly(R, rng) for _ in range(3)]
        gens = [g for g in gens if not g.is_zero()]
        basis = buchberger(gens, R)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                s = spoly(basis[i], basis[j], R)
                assert normal_form(s, basis).is_zero()


def test_normal_form_is_idempotent():
    rng = random.Random(4)
    R = WeightedRing(7, ("x", "y"), None)
    I = Ideal(R, [R.parse("x^3 + y"), R.parse("y^2 + x")])
    for _ in range(40):
        f = rand_poly(R, rng, max_exp=5)
        r = I.normal_form(f)
        assert I.normal_form(r) == r
        assert I.member(f - r)


def test_membership_known_cases():
    R = WeightedRing(7, ("x", "y", "z"), (15, 10, 6))
    I = Ideal(R, [R.parse("y^2"), R.parse("z^2")])
    assert I.member(R.parse("x^2 + y^3 + z^5") - R.parse("x^2"))
    assert not I.member(R.parse("y + z"))
    assert I.member(R.parse("y^2*z + 3*z^5"))


def test_membership_agrees_with_linear_algebra():
    # graded membership cross-check: in a standard-graded ring, f of degree d
    # is in I iff it lies in the span of {m * g : g in gens, deg(m*g) = d}
    rng = random.Random(99)
    R = WeightedRing(5, ("x", "y", "z"), None)
    gens = [R.parse("x*y + z^2"), R.parse("y^2 + x*z")]
    I = Ideal(R, gens)
    for degree in range(2, 9):
        mons = R.monomials_of_degree(degree)
        index = {m: i for i, m in enumerate(mons)}
        ech = Echelon(5, len(mons))

        def row_of(f):
            row = [0] * len(mons)
            for mono, coeff in f.terms.items():
                row[index[mono]] = int(coeff)
            return row

        for g in gens:
            shift = degree - g.weighted_degree()
            if shift < 0:
                continue
            for m in R.monomials_of_degree(shift):
                ech.add(row_of(R.monomial(m, 1) * g))
        for _ in range(6):
            mono = mons[rng.randrange(len(mons))]
            f = R.monomial(mono, rng.randrange(1, 5))
            for m2 in rng.sample(mons, min(2, len(mons))):
                f = f + R.monomial(m2, rng.randrange(5))
            assert I.member(f) == ech.contains(row_of(f))


def test_elimination_intersection():
    R = WeightedRing(7, ("x", "y"), None)
    I = Ideal(R, [R.parse("x")])
    J = Ideal(R, [R.parse("y")])
    K = elim_intersection(I, J)
    assert K.member(R.parse("x*y"))
    assert not K.member(R.parse("x"))
    assert not K.member(R.parse("y"))


def test_ideal_quotient():
    R = WeightedRing(7, ("x", "y"), None)
    I = Ideal(R, [R.parse("x*y")])
    Q = ideal_quotient(I, R.parse("x"))
    assert Q.member(R.parse("y"))
    assert not Q.member(R.parse("x"))


def test_bracket_power_vs_frobenius():
    R = WeightedRing(3, ("x", "y"), None)
    I = Ideal(R, [R.parse("x + y"), R.parse("x*y")])
    B = bracket_power(I, 9)
    for g in I.gens:
        assert B.member(g.frobenius_power(9))
    assert not B.member(R.parse("x + y"))


def test_bracket_power_rejects_non_p_power():
    R = WeightedRing(3, ("x",), None)
    I = Ideal(R, [R.parse("x")])
    with pytest.raises(UsageError):
        bracket_power(I, 4)


def test_ideal_power():
    R = WeightedRing(5, ("x", "y"), None)
    I = Ideal(R, [R.parse("x"), R.parse("y")])
    I2 = ideal_power(I, 2)
    assert I2.member(R.parse("x^2 + 3*x*y"))
    assert not I2.member(R.parse("x"))


def test_ideal_plus_and_unit_detection():
    R = WeightedRing(5, ("x", "y"), None)
    I = Ideal(R, [R.parse("x")])
    J = I.plus([R.parse("x + 1")])
    assert J.is_unit()
    assert not I.is_unit()
    assert Ideal(R, []).is_zero()


def test_quotient_ring_normal_forms():
    R = WeightedRing(7, ("x", "y", "z"), (15, 10, 6))
    Q = QuotientRing(R, [R.parse("x^2 + y^3 + z^5")])
    # x^2 = -(y^3 + z^5) in the quotient
    assert Q.is_zero_elem(R.parse("x^2 + y^3 + z^5"))
    assert Q.normal_form(R.parse("x^2")) == Q.normal_form(R.parse("-y^3 - z^5"))
    assert not Q.is_zero_elem(R.parse("x"))


def test_quotient_member():
    R = WeightedRing(7, ("x", "y", "z"), (15, 10, 6))
    Q = QuotientRing(R, [R.parse("x^2 + y^3 + z^5")])
    J = [R.parse("y^2"), R.parse("z^2")]
    assert quotient_member(R.parse("x^2"), J, Q)       # x^2 = -(y^3+z^5) mod rel
    assert not quotient_member(R.parse("x"), J, Q)


def test_standard_monomials():
    R = WeightedRing(7, ("x", "y", "z"), (15, 10, 6))
    Q = QuotientRing(R, [R.parse("x^2 + y^3 + z^5")])
    # degree 30: x^2, y^3, z^5 modulo one relation leaves dimension 2
    assert len(Q.standard_monomials(30)) == 2


def test_step_budget_exhaustion_raises():
    R = WeightedRing(5, ("x", "y", "z"), None)
    gens = [R.parse("x^4 + y^3*z"), R.parse("y^4 + x*z^3"), R.parse("z^4 + x^3*y")]
    with pytest.raises(ResourceError):
        buchberger(gens, R, budget=1)


def test_env_step_budget_is_honored():
    # FSING_STEP_BUDGET applies when no explicit budget is passed
    code = (
        "from fsing.ring import WeightedRing\n"
        "from fsing.groebner import buchberger\n"
        "from fsing.errors import ResourceError\n"
        "R = WeightedRing(5, ('x','y','z'), None)\n"
        "gens = [R.parse('x^4 + y^3*z'), R.parse('y^4 + x*z^3'),\n"
        "        R.parse('z^4 + x^3*y')]\n"
        "try:\n"
        "    buchberger(gens, R)\n"
        "except ResourceError:\n"
        "    print('budget-hit')\n"
    )
    env = dict(os.environ, FSING_STEP_BUDGET="1")
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    )
    assert out.stdout.strip() == "budget-hit"
    assert DEFAULT_STEP_BUDGET == 2_000_000
