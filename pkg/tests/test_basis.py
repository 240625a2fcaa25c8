import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lecycle import basis as B
from lecycle.basis import Ideal
from lecycle.parser import parse
from lecycle.poly import DEGREVLEX, LEX, Polynomial, Ring, elimination_order

R2 = Ring(["x", "y"])
R3 = Ring(["x", "y", "z"])


def I(ring, *texts):
    return Ideal(ring, [parse(t, ring) for t in texts])


def P(ring, text):
    return parse(text, ring)


def test_groebner_small():
    assert B.groebner(I(R2, "x"), LEX) == [P(R2, "x")]
    assert sorted(map(str, B.groebner(I(R2, "x+y", "x-y"), LEX))) == ["x", "y"]
    assert sorted(map(str, B.groebner(I(R2, "x*y", "x^2")))) == ["x*y", "x^2"]


def test_normal_form():
    assert B.normal_form(P(R2, "x^2"), [P(R2, "x")], LEX).is_zero()
    assert B.normal_form(P(R2, "y"), [P(R2, "x")], LEX) == P(R2, "y")
    gb = B.groebner(I(R2, "x^2 - y", "y^2"))
    assert B.normal_form(P(R2, "x^2 + y"), gb) == P(R2, "2*y")


def test_membership():
    assert B.membership(P(R2, "x^2"), I(R2, "x"))
    assert not B.membership(P(R2, "y"), I(R2, "x"))
    assert not B.membership(P(R2, "x*y"), I(R2, "x^2+y^2", "x^2-y^2"))
    assert I(R2, "x^2+y^2", "x^2-y^2") == I(R2, "x^2", "y^2")


def test_radical_containment():
    assert B.radical_containment(P(R2, "x"), I(R2, "x^2"))
    assert not B.radical_containment(P(R2, "y"), I(R2, "x^2"))
    assert B.radical_containment(P(R2, "x+y"), I(R2, "(x+y)^3*x", "(x+y)^3*y"))


def test_colon():
    assert B.colon(I(R2, "x*y"), P(R2, "x")) == I(R2, "y")
    assert B.colon(I(R2, "x^2", "x*y"), P(R2, "x")) == I(R2, "x", "y")
    J = I(R2, "x^2+y", "x*y^3")
    assert B.colon(J, R2.one()) == J


def test_saturate():
    assert B.saturate(I(R3, "x*y", "x*z"), I(R3, "x")).ideal == I(R3, "y", "z")
    assert B.saturate(I(R2, "x"), I(R2, "y")).ideal == I(R2, "x")
    assert B.saturate(I(R2, "x^2*y"), I(R2, "y")).ideal == I(R2, "x^2")
    assert B.saturate(I(R2, "x", "y"), I(R2, "x", "y")).ideal.is_unit()


def test_saturate_by_element_agrees():
    J = I(R3, "x^2*y", "x*z^3")
    assert B.saturate_by_element(J, P(R3, "x")) == B.saturate(J, I(R3, "x")).ideal


def test_eliminate():
    assert B.eliminate(I(R2, "x-y"), [0]).is_zero()
    assert B.eliminate(I(R2, "x-y", "x"), [0]) == I(R2, "y")
    Rw = Ring(["w", "x"])
    assert B.eliminate(I(Rw, "w*x-1", "x"), [0]).is_unit()


def test_intersect():
    assert B.intersect(I(R2, "x"), I(R2, "y")) == I(R2, "x*y")
    assert B.intersect(I(R2, "x^2"), Ideal.unit(R2)) == I(R2, "x^2")


def test_dimension():
    assert B.dimension(I(R3, "x")) == 2
    assert B.dimension(I(R3, "x", "y", "z")) == 0
    assert B.dimension(Ideal.unit(R3)) == -1
    T = Ring(["t", "x", "y"])
    assert B.dimension(I(T, "3*x^2+t*y", "3*y^2+t*x", "x*y")) == 1


def test_local_dim_at_origin():
    assert B.local_dim_at_origin(I(R2, "2*x", "3*y^2")) == 2
    assert B.local_dim_at_origin(I(R2, "x - x^2", "y")) == 1
    assert B.local_dim_at_origin(I(R2, "x^2", "x*y", "y^2")) == 3
    assert B.local_dim_at_origin(I(R2, "x*y")) == math.inf
    # global count of (x^2 - y, y^2 - x) is 4, but only one point sits at the origin
    J = I(R2, "x^2 - y", "y^2 - x")
    assert B.local_dim_at_origin(J) == 1
    global_leads = [g.leading_monomial(DEGREVLEX) for g in B.groebner(J)]
    assert B.count_staircase(global_leads, 2).dimension == 4


def test_local_dim_ignores_far_components():
    assert B.local_dim_at_origin(I(R2, "x*(x-1)", "y")) == 1
    assert B.local_dim_at_origin(I(R2, "x - 1", "y")) == 0


def test_curve_certificate_and_fallback():
    assert B._curve_through_origin(I(R3, "x*y", "z"))
    # the line lies inside the test hyperplane x + 2y = 0, so Mora decides
    line = I(R2, "x + 2*y")
    assert not B._curve_through_origin(line)
    assert B.local_dim_at_origin(line) == math.inf
    # a far curve plus an isolated point at 0
    assert not B._curve_through_origin(I(R2, "x*(y - 1)", "y*(y - 1)"))
    assert B.local_dim_at_origin(I(R2, "x*(y - 1)", "y*(y - 1)")) == 1


def test_gcd_and_squarefree():
    assert B.gcd(P(R2, "x^2*y"), P(R2, "x*y^3")) == P(R2, "x*y")
    assert B.squarefree_part(P(R2, "x^3*(x+y)^2")) == P(R2, "x^2 + x*y")


def test_local_tools():
    J = I(R2, "x*(y-1)")
    assert B.local_dimension(J) == 1
    assert B.local_radical_containment(P(R2, "x"), J)
    assert not B.radical_containment(P(R2, "x"), J)


# properties

small_exps = st.tuples(st.integers(0, 4), st.integers(0, 4))


@settings(max_examples=50, deadline=None)
@given(st.lists(small_exps, min_size=1, max_size=4))
def test_monomial_staircase_count(gens):
    # brute force: count exponents in a box not divisible by any generator
    ideal = Ideal(R2, [Polynomial(R2, {e: 1}) for e in gens])
    expected = sum(1 for a in range(12) for b in range(12)
                   if not any(a >= e[0] and b >= e[1] for e in gens))
    has_x = any(e[1] == 0 for e in gens)
    has_y = any(e[0] == 0 for e in gens)
    got = B.local_dim_at_origin(ideal)
    if has_x and has_y:
        assert got == expected
    else:
        assert got == math.inf


polys2 = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
                         st.integers(-3, 3), min_size=1, max_size=3).map(lambda d: Polynomial(R3, d))


@settings(max_examples=25, deadline=None)
@given(st.lists(polys2, min_size=1, max_size=3))
def test_dimension_independent_of_order(gens):
    ideal = Ideal(R3, gens)
    assert B.dimension_in(ideal, DEGREVLEX) == B.dimension_in(ideal, LEX)
    assert B.dimension_in(ideal, elimination_order(1)) == B.dimension_in(ideal, DEGREVLEX)


@settings(max_examples=25, deadline=None)
@given(st.lists(polys2, min_size=1, max_size=3), polys2)
def test_membership_of_combination(gens, h):
    ideal = Ideal(R3, gens)
    assert B.membership(h * gens[0], ideal)


@pytest.mark.parametrize("order", [LEX, DEGREVLEX, elimination_order(1)])
def test_basis_is_reduced(order):
    ideal = I(R3, "x^2*y - z", "x*y^2 - x", "y*z - 1")
    gb = B.groebner(ideal, order)
    lms = [g.leading_monomial(order) for g in gb]
    for g in gb:
        assert g.terms[g.leading_monomial(order)] == 1
        for m in g.terms:
            assert not any(h is not g and all(a >= b for a, b in zip(m, h.leading_monomial(order))) for h in gb)
    assert len(set(lms)) == len(lms)
