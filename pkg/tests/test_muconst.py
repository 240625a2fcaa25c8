import pytest

from lecycle.cycles import Germ, Smoothness, build_polar_tower
from lecycle.errors import InputError, SampleOnY
from lecycle.lenumbers import choose_admissible_tower, generic_le_number
from lecycle.muconst import SAMPLING_CAVEAT, evaluate_criteria, run_main_theorem
from lecycle.parser import parse

SEEDS = list(range(1, 9))
TUXY = ["t", "u", "x", "y"]


def family(variables, text):
    g = Germ.from_text(variables, text)
    return g, build_polar_tower(g), generic_le_number(g, SEEDS)


def test_cusp_family_all_true():
    _, tower, gen = family("txy", "x^2+y^3")
    v = evaluate_criteria(tower, [(-1, 0, 0), (1, 0, 0), (2, 0, 0)], gen)
    assert v.all_true and v.mu0 == 2
    assert v.c1_mu_constant_sampled and v.c5_gamma_zero and v.consistent
    assert v.c3_simple_family


def test_cubic_family_all_false():
    _, tower, gen = family("txy", "x^3+y^3+t*x*y")
    v = evaluate_criteria(tower, [(1, 0, 0), (2, 0, 0)], gen)
    assert v.mu0 == 4 and v.sample_milnor == [1, 1] and v.generic_le == 1
    assert not any([v.c1_mu_constant_sampled, v.c2_mu_equals_generic_le, v.c4_mu_equals_le_in_frame,
                    v.c5_gamma_zero])
    assert v.consistent and v.c3_simple_family is False


def test_plane_family_all_true():
    _, tower, gen = family(TUXY, "x^2+y^2")
    v = evaluate_criteria(tower, [(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)], gen)
    assert v.all_true and v.mu0 == 1


def test_no_samples_leaves_c1_open():
    _, tower, gen = family("txy", "x^2+y^3")
    v = evaluate_criteria(tower, [], gen)
    assert v.c1_mu_constant_sampled is None and v.consistent


def test_sample_must_be_critical():
    _, tower, gen = family("txy", "x^2+y^3")
    with pytest.raises(InputError):
        evaluate_criteria(tower, [(0, 1, 0)], gen)


def test_main_theorem_constant_plane():
    g, tower, gen = family(TUXY, "x^2+y^2")
    R = g.ring
    samples = [(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)]
    run = run_main_theorem(tower, [parse("t", R), parse("u", R)], samples, gen)
    assert run.y_dim == 0
    assert run.hypothesis_surrogate and run.status == "holds" and run.implication_ok
    assert run.conclusion.all_true and run.conclusion.mu0 == 1
    assert SAMPLING_CAVEAT in run.caveats

    # Y empty gives the same verdict
    empty = run_main_theorem(tower, [R.one()], samples, gen)
    assert empty.status == "holds" and empty.y_dim == -1
    assert empty.conclusion.as_json() == run.conclusion.as_json()


def test_main_theorem_sampling_false_positive():
    g, tower, gen = family("txy", "x^3+y^3+t*x*y")
    run = run_main_theorem(tower, [g.ring.one()], [(0, 0, 0), (1, 0, 0), (2, 0, 0)], gen)
    assert run.hypothesis_surrogate and run.surrogate_mu0 == 1
    assert run.status == "violated-at-surrogate-level" and not run.implication_ok
    assert SAMPLING_CAVEAT in run.caveats
    assert any("not certified" in c for c in run.caveats)
    assert any("s <= 1" in c for c in run.caveats)
    # the origin is never used as a sample
    assert [c["point"][0] for c in run.sample_checks] == ["1", "2"]


def test_main_theorem_vacuous_when_singular():
    g = Germ.from_text("xy", "x^2*y^2")
    tower, _ = choose_admissible_tower(g, True, SEEDS)
    gen = generic_le_number(g, SEEDS)
    run = run_main_theorem(tower, [g.ring.one()], [(1, 0), (2, 0), (0, 1)], gen)
    assert run.smooth_certificate.status is Smoothness.SINGULAR
    assert run.status == "vacuous" and run.implication_ok
    assert not run.conclusion.c5_gamma_zero


def test_sample_on_y():
    g, tower, gen = family(TUXY, "x^2+y^2")
    with pytest.raises(SampleOnY):
        run_main_theorem(tower, [parse("t", g.ring)], [(0, 1, 0, 0)], gen)
