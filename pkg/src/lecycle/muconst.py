"""Evaluate the equivalent μ-constancy criteria and run the codimension-two scenario.

Criteria, all in the coordinates of a chosen frame z:

* c1 - the slice Milnor number at every declared sample of Σf equals μ at 0;
* c2 - μ at 0 equals the generic Lê number (minimum over random frames);
* c4 - μ at 0 equals λ^s_{f,z}(0);
* c5 - the polar cycle Γ^s_{f,z} is zero near 0.

They must agree.  A simple μ-constant family (c3) is reported as derived
from c1, a smoothness certificate for Σf and a regular-point check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import basis as B
from .basis import Ideal
from .cycles import (JacobianData, PolarTower, Smoothness, SmoothCertificate, gamma_s_report,
                     sigma_smooth_at_origin)
from .errors import InconsistentCriteria, InputError, SampleOnY
from .lenumbers import GenericLeNumber, _slice_milnor_frame, le_number
from .poly import apply_frame, format_qq, partial, qq, rank

SAMPLING_CAVEAT = (
    "SAMPLING-ONLY: constancy off Y is checked at finitely many declared points, "
    "not at every point of the critical locus"
)
SURROGATE_CAVEAT = (
    "stalk cohomology is replaced by slice Milnor numbers at smooth transversal sample points"
)


@dataclass
class Verdict:
    c1_mu_constant_sampled: bool | None
    c2_mu_equals_generic_le: bool
    c4_mu_equals_le_in_frame: bool
    c5_gamma_zero: bool
    consistent: bool
    mu0: int
    sample_points: list
    sample_milnor: list
    le_top: int
    generic_le: int
    c3_simple_family: bool | None = None
    c3_note: str = "derived from c1, smoothness of Σf and a regular point of G on Σf"

    @property
    def all_true(self):
        return self.consistent and self.c2_mu_equals_generic_le

    def as_json(self):
        return {
            "c1": self.c1_mu_constant_sampled,
            "c2": self.c2_mu_equals_generic_le,
            "c3_derived": self.c3_simple_family,
            "c4": self.c4_mu_equals_le_in_frame,
            "c5": self.c5_gamma_zero,
            "consistent": self.consistent,
            "mu0": self.mu0,
            "le_top": self.le_top,
            "generic_le": self.generic_le,
            "samples": [[format_qq(c) for c in p] for p in self.sample_points],
            "sample_milnor": self.sample_milnor,
        }


def _regular_point_of_projection(tower: PolarTower, cert: SmoothCertificate) -> bool:
    """Does (z_0, ..., z_{s-1}) restricted to Σf have full rank at 0?"""
    n = tower.ring.n_plus_1
    s = tower.s
    origin = (0,) * n
    rows = [[partial(w, i).evaluate(origin) for i in range(n)] for w in cert.witness]
    rows += [[int(i == j) for i in range(n)] for j in range(s)]
    return rank(rows) == n


def evaluate_criteria(tower: PolarTower, sample_points: Sequence, generic: GenericLeNumber,
                      strict: bool = True) -> Verdict:
    """Evaluate c1, c2, c4, c5 for the frame of ``tower``.

    ``sample_points`` are points of Σf in the original coordinates.  With
    ``strict`` an inconsistent verdict raises InconsistentCriteria.
    """
    s = tower.s
    g = tower.germ
    n = g.n_plus_1
    origin = (qq(0),) * n
    mu0 = _slice_milnor_frame(g, origin, s)
    samples = [tuple(qq(c) for c in p) for p in sample_points]
    sample_mu = []
    for p in samples:
        zp = tower.frame.to_frame_coords(p)
        if any(d.evaluate(zp) != 0 for d in tower.partials):
            raise InputError(f"sample {[format_qq(c) for c in p]} is not on Σf")
        sample_mu.append(_slice_milnor_frame(g, zp, s))
    c1 = all(m == mu0 for m in sample_mu) if samples else None
    c2 = mu0 == generic.value
    lam_top = le_number(tower, s)
    c4 = mu0 == lam_top
    c5 = gamma_s_report(tower).gamma_zero
    flags = [c for c in (c1, c2, c4, c5) if c is not None]
    consistent = all(flags) or not any(flags)

    c3 = None
    if c1 is not None:
        cert = sigma_smooth_at_origin(_framed_jacobian(tower))
        c3 = bool(c1 and cert.status is Smoothness.SMOOTH and _regular_point_of_projection(tower, cert))

    verdict = Verdict(c1, c2, c4, c5, consistent, mu0, samples, sample_mu, lam_top, generic.value, c3)
    if strict and not consistent:
        raise InconsistentCriteria(f"criteria disagree: {verdict.as_json()}")
    return verdict


def _framed_jacobian(tower: PolarTower):
    return JacobianData(tower.partials, tower.jacobian_ideal, tower.s, True)


@dataclass
class MainTheoremRun:
    smooth_certificate: SmoothCertificate
    hypothesis_surrogate: bool
    y_locus: Ideal | None
    y_dim: int
    surrogate_mu0: int | None
    conclusion: Verdict
    implication_ok: bool
    status: str
    caveats: list = field(default_factory=list)
    sample_checks: list = field(default_factory=list)

    def as_json(self):
        return {
            "smooth_certificate": self.smooth_certificate.as_json(),
            "hypothesis_surrogate": self.hypothesis_surrogate,
            "y_ideal": None if self.y_locus is None else [str(g) for g in self.y_locus.generators],
            "y_dim": self.y_dim,
            "surrogate_mu0": self.surrogate_mu0,
            "implication_ok": self.implication_ok,
            "status": self.status,
            "samples": self.sample_checks,
            "caveats": list(self.caveats),
        }


def run_main_theorem(tower: PolarTower, y_generators: Sequence, samples_off_y: Sequence,
                     generic: GenericLeNumber) -> MainTheoremRun:
    """Hypothesis surrogate off Y in, μ-constancy criteria at 0 out.

    The surrogate holds when Y ∩ Σf has dimension at most s - 2, Σf is
    certified smooth at every sample, and all samples share one slice
    Milnor number.  The origin is never used as a sample.
    """
    s = tower.s
    ring = tower.ring
    frame = tower.frame
    jd = _framed_jacobian(tower)

    y_ideal = Ideal(ring, list(y_generators)) if y_generators else Ideal.unit(ring)
    y_framed = Ideal(ring, [apply_frame(p, frame) for p in y_ideal.generators])
    y_dim = B.dimension(y_framed + tower.jacobian_ideal)
    y_ok = y_dim <= s - 2

    caveats = [SAMPLING_CAVEAT, SURROGATE_CAVEAT]
    checks = []
    mus = set()
    smooth_everywhere = True
    for p in samples_off_y:
        p = tuple(qq(c) for c in p)
        if not any(p):
            continue
        if all(g.evaluate(p) == 0 for g in y_ideal.generators):
            raise SampleOnY(f"sample {[format_qq(c) for c in p]} lies on Y")
        zp = frame.to_frame_coords(p)
        cert = sigma_smooth_at_origin(jd, zp)
        mu = _slice_milnor_frame(tower.germ, zp, s)
        smooth_everywhere &= cert.status is Smoothness.SMOOTH
        mus.add(mu)
        checks.append({"point": [format_qq(c) for c in p], "slice_milnor": mu,
                       "smooth": cert.status.value})
    hypothesis = bool(checks) and y_ok and smooth_everywhere and len(mus) == 1
    surrogate_mu0 = next(iter(mus)) if len(mus) == 1 else None

    origin_cert = sigma_smooth_at_origin(jd)
    conclusion = evaluate_criteria(tower, [], generic, strict=False)
    conclusion_true = (conclusion.consistent and conclusion.c2_mu_equals_generic_le
                       and conclusion.mu0 == surrogate_mu0)
    if hypothesis and origin_cert.status is Smoothness.SMOOTH:
        implication_ok = conclusion_true
        status = "holds" if implication_ok else "violated-at-surrogate-level"
        if not implication_ok:
            caveats.append(
                "surrogate hypothesis certified only at sample points; the true hypothesis "
                "(constancy at every point off Y, including limits at 0) is not certified"
            )
    else:
        implication_ok = True
        status = "vacuous"
    if s <= 1:
        caveats.append("s <= 1: Y is necessarily empty")
    return MainTheoremRun(origin_cert, hypothesis, y_ideal, y_dim, surrogate_mu0, conclusion,
                          implication_ok, status, caveats, checks)
