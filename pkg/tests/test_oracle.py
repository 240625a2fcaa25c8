"""The independent path agrees with hand values and with the main path."""

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from lecycle import basis as B
from lecycle import oracle
from lecycle.basis import Ideal
from lecycle.corpus import parse_entry
from lecycle.parser import parse
from lecycle.poly import Polynomial, Ring

x, y, z = sp.symbols("x y z")


def test_weighted_formula():
    assert oracle.weighted_homogeneous_milnor([Fraction(1, 2), Fraction(1, 3)], 1) == 2
    assert oracle.milnor_by_weights("x^3+y^4", "xy") == 6
    assert oracle.milnor_by_weights("x^2+y^3+z^5", "xyz") == 8
    assert oracle.milnor_by_weights("x^5+y^5+x^2*y^2", "xy") is None


def test_truncated_length():
    assert oracle.truncated_length([2 * x, 3 * y ** 2], [x, y]) == 2
    assert oracle.truncated_length([x - x ** 2, y], [x, y]) == 1
    assert oracle.truncated_length([x ** 2 - y, y ** 2 - x], [x, y]) == 1
    assert oracle.truncated_length([x * y], [x, y]) is None
    assert oracle.truncated_length([x - 1, y], [x, y]) == 0


def test_isolation_test():
    assert oracle.isolated_at_origin([x * (x - 1), y], [x, y])
    assert not oracle.isolated_at_origin([x * y], [x, y])


def test_saturation_matches_main_path():
    R = Ring(["t", "x", "y"])
    t, X, Y = sp.symbols("t x y")
    f = X ** 3 + Y ** 3 + t * X * Y
    partials = [sp.diff(f, v) for v in (t, X, Y)]
    sat = oracle.saturate(partials[1:], partials, [t, X, Y])
    mine = B.saturate(Ideal(R, [parse(str(p).replace("**", "^"), R) for p in partials[1:]]),
                      Ideal(R, [parse(str(p).replace("**", "^"), R) for p in partials])).ideal
    assert Ideal(R, [parse(str(g).replace("**", "^"), R) for g in sat]) == mine


def test_expectations_cubic_family():
    e = parse_entry("variables = t, x, y\nf = x^3+y^3+t*x*y\nseeds = 1,2,3,4,5,6,7,8\n"
                    "samples = 1,0,0; 2,0,0; -1,0,0\n")
    exp = oracle.expectations(e)
    assert exp["mu0"] == 4 and exp["lambdas"] == [6, 1] and exp["generic_le"] == 1
    assert exp["dagger_lhs"] == exp["dagger_rhs"] == [1, 1, 1]
    assert not any(exp[k] for k in ("c1", "c2", "c4", "c5"))


def test_expectations_choose_random_frame():
    e = parse_entry("variables = x, y\nf = x^2*y^2\nframe = random\nseeds = 1,2,3,4,5,6,7,8\n")
    exp = oracle.expectations(e)
    assert exp["frame"] == 1 and exp["lambdas"] == [3, 2]


R3 = Ring(["x", "y", "z"])
polys = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
                        st.integers(-3, 3), min_size=1, max_size=3).map(lambda d: Polynomial(R3, d))


def to_sympy(p):
    return sp.sympify(str(p).replace("^", "**"), locals={"x": x, "y": y, "z": z})


@settings(max_examples=30, deadline=None)
@given(st.lists(polys, min_size=1, max_size=3))
def test_reduced_basis_matches_sympy(gens):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    mine = sorted(str(g) for g in B.groebner(Ideal(R3, gens)))
    theirs = sp.groebner([to_sympy(g) for g in gens], x, y, z, order="grevlex")
    theirs = sorted(str(parse(str(sp.expand(g / sp.Poly(g, x, y, z).LC(order="grevlex"))).replace("**", "^"), R3))
                    for g in theirs.exprs)
    assert mine == theirs


@settings(max_examples=30, deadline=None)
@given(st.lists(polys, min_size=2, max_size=3))
def test_local_length_matches_truncation(gens):
    ideal = Ideal(R3, gens)
    mine = B.local_dim_at_origin(ideal)
    theirs = oracle.truncated_length([to_sympy(g) for g in gens], [x, y, z])
    assert (mine if mine != float("inf") else None) == theirs


@pytest.mark.parametrize("text,mu", [("x^2+y^2", 1), ("x^3+y^3", 4), ("x^2+y^5", 4)])
def test_weights_against_truncation(text, mu):
    f = sp.sympify(text.replace("^", "**"))
    assert oracle.truncated_length([sp.diff(f, x), sp.diff(f, y)], [x, y]) == mu
    assert oracle.milnor_by_weights(text, "xy") == mu
