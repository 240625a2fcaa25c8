"""Jacobian data, the relative polar tower and set-level tests on the critical locus.

Everything is computed in the coordinates of a :class:`~lecycle.poly.Frame`:
the germ is first pulled back by the frame, and points given in the
original coordinates are converted with ``frame.to_frame_coords``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

from . import basis as B
from .basis import Ideal
from .errors import AdmissibilityError, InputError, InternalError
from .parser import parse
from .poly import DEGREVLEX, Frame, Polynomial, Ring, apply_frame, format_qq, partial, qq, rank, restrict, translate


@dataclass(frozen=True)
class Germ:
    """Polynomial germ ``f: (C^{n+1}, 0) -> (C, 0)``."""

    ring: Ring
    f: Polynomial
    expected_s: int | None = None

    def __post_init__(self):
        if self.f.ring != self.ring:
            raise InputError("germ polynomial lives in a different ring")
        if self.f.is_constant():
            raise InputError("f is constant")
        if self.f.constant_term() != 0:
            raise InputError("f(0) must be 0")

    @classmethod
    def from_text(cls, variables, text, expected_s=None):
        ring = Ring(variables)
        return cls(ring, parse(text, ring), expected_s)

    @property
    def n_plus_1(self):
        return self.ring.n_plus_1

    def in_frame(self, frame: Frame) -> "Germ":
        return Germ(self.ring, apply_frame(self.f, frame), self.expected_s)


@dataclass
class JacobianData:
    partials: list
    jacobian_ideal: Ideal
    sigma_dim: int
    f_in_radical: bool


def jacobian(germ: Germ) -> JacobianData:
    """Partials, J(f) and dim Σf; reports (does not enforce) Σf ⊆ V(f)."""
    partials = [partial(germ.f, i) for i in range(germ.n_plus_1)]
    J = Ideal(germ.ring, partials)
    s = B.dimension(J)
    if germ.expected_s is not None and germ.expected_s != s:
        raise InputError(f"declared s = {germ.expected_s} but dim Σf = {s}")
    return JacobianData(partials, J, s, B.radical_containment(germ.f, J))


def slice_ideal_at(I: Ideal, zp, k: int) -> Ideal:
    """Translate ``I`` so that ``zp`` is the origin and cut by ``z_0 = ... = z_{k-1} = 0``."""
    ring = I.ring
    gens = [translate(g, zp) for g in I.basis()] if any(zp) else list(I.basis())
    if k:
        values = {i: 0 for i in range(k)}
        gens = [restrict(g, values) for g in gens]
        gens += [ring.var(i) for i in range(k)]
    return Ideal(ring, gens)


def local_length(I: Ideal, zp, k: int):
    """Length at ``zp`` of ``I + (z_0 - p_0, ..., z_{k-1} - p_{k-1})``; may be ``math.inf``."""
    return B.local_dim_at_origin(slice_ideal_at(I, zp, k))


@dataclass
class PolarLevel:
    """One level of the tower: ``gamma = saturate(incoming, J)``."""

    k: int
    incoming: Ideal
    gamma: Ideal
    iterations: int
    incoming_dim: int
    gamma_dim: int


@dataclass
class PolarTower:
    """Relative polar ideals Γ^s ⊇ ... of the germ pulled back by ``frame``.

    ``level(k)`` holds the ideal whose cycle intersected with V(∂f/∂z_k)
    gives Γ^k plus Λ^k; level 0 is only built on demand.
    """

    frame: Frame
    germ: Germ  # already in frame coordinates
    s: int
    partials: list
    jacobian_ideal: Ideal
    c_ideal: Ideal
    levels: dict = field(default_factory=dict)

    @property
    def ring(self):
        return self.germ.ring

    def gamma(self, k: int) -> Ideal:
        return self.level(k).gamma

    def level(self, k: int) -> PolarLevel:
        if k not in self.levels:
            if not 0 <= k <= self.s:
                raise InputError(f"tower level {k} outside 0..{self.s}")
            if k == self.s:
                incoming = self.c_ideal
            else:
                incoming = self.gamma(k + 1) + self.partials[k]
            sat = B.saturate(incoming, self.jacobian_ideal)
            self.levels[k] = PolarLevel(
                k, incoming, sat.ideal, sat.iterations,
                B.dimension(incoming), B.dimension(sat.ideal),
            )
        return self.levels[k]

    def as_json(self):
        out = {
            "s": self.s,
            "frame": self.frame.as_json(),
            "C_ideal": self.c_ideal.as_strings(),
            "C_dim": B.dimension(self.c_ideal),
            "levels": {},
        }
        for k in sorted(self.levels, reverse=True):
            lv = self.levels[k]
            out["levels"][str(k)] = {
                "gamma": lv.gamma.as_strings(),
                "gamma_dim": lv.gamma_dim,
                "incoming_dim": lv.incoming_dim,
                "saturation_iterations": lv.iterations,
            }
        return out


def build_polar_tower(germ: Germ, frame: Frame | None = None, s: int | None = None) -> PolarTower:
    """Build C and Γ^s, ..., Γ^1 in the coordinates given by ``frame``.

    Raises AdmissibilityError when ``C`` is not of dimension ``s``.
    """
    frame = frame or Frame.identity(germ.n_plus_1)
    g = germ.in_frame(frame)
    partials = [partial(g.f, i) for i in range(g.n_plus_1)]
    J = Ideal(g.ring, partials)
    if s is None:
        s = B.dimension(J)
    if s < 0:
        raise InputError("f has no critical points")
    C = Ideal(g.ring, partials[s:])
    dim_c = B.dimension(C)
    if dim_c != s:
        raise AdmissibilityError(f"dim C = {dim_c}, expected {s} (frame seed {frame.seed})")
    tower = PolarTower(frame, g, s, partials, J, C)
    for k in range(s, 0, -1):
        tower.level(k)
    return tower


@dataclass(frozen=True)
class GammaZeroReport:
    gamma_zero: bool
    by_saturation: bool
    by_set_equality: bool
    global_set_equality: bool


def gamma_s_report(tower: PolarTower) -> GammaZeroReport:
    """Decide Γ^s = 0 near 0 by two routes and fail loudly if they disagree.

    Route one: 0 is not on V(Γ^s), with Γ^s from iterated colon.
    Route two: every ∂f/∂z_i (i < s) vanishes on the germ of V(C) at 0,
    i.e. 0 is not on V(C : (∂f/∂z_i)^∞), each computed in one elimination.
    """
    origin = (0,) * tower.ring.n_plus_1
    top = tower.gamma(tower.s) if tower.s > 0 else tower.level(0).gamma
    by_sat = local_length(top, origin, 0) == 0
    by_set = True
    for i in range(tower.s):
        g = tower.partials[i]
        if g.is_zero() or B.membership(g, tower.c_ideal):
            continue
        if B.local_dim_at_origin(B.saturate_by_element(tower.c_ideal, g)) != 0:
            by_set = False
            break
    if by_sat != by_set:
        raise InternalError("Γ^s = 0 test disagrees between saturation and set equality")
    global_eq = all(B.radical_containment(tower.partials[i], tower.c_ideal) for i in range(tower.s))
    return GammaZeroReport(by_sat, by_sat, by_set, global_eq)


def gamma_s_is_zero(tower: PolarTower) -> bool:
    return gamma_s_report(tower).gamma_zero


# smoothness of the critical locus


class Smoothness(enum.Enum):
    SMOOTH = "certified-smooth"
    SINGULAR = "certified-singular"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SmoothCertificate:
    status: Smoothness
    witness: tuple = ()
    reason: str = ""

    def as_json(self):
        return {"status": self.status.value, "witness": [str(w) for w in self.witness],
                "reason": self.reason}


def _jacobian_matrix_at_origin(polys, n):
    origin = (0,) * n
    rows = []
    for p in polys:
        rows.append([partial(p, i).evaluate(origin) for i in range(n)])
    return rows


def _minors(polys, n, size):
    """Ideal generators: all size x size minors of the Jacobian matrix of ``polys``."""
    mat = [[partial(p, i) for i in range(n)] for p in polys]
    out = []
    for cols in itertools.combinations(range(n), size):
        sub = [[mat[r][c] for c in cols] for r in range(len(polys))]
        out.append(_det(sub))
    return out


def _det(m):
    if len(m) == 1:
        return m[0][0]
    total = None
    for j, a in enumerate(m[0]):
        if a.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = a * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else m[0][0].ring.zero()


def _candidates(J: Ideal, s: int, limit: int, project: bool):
    ring = J.ring
    n = ring.n_plus_1
    pool = list(J.basis())
    # projections to coordinate (s+1)-spaces are costly in dense coordinates
    for keep in itertools.combinations(range(n), s + 1) if project else ():
        drop = [i for i in range(n) if i not in keep]
        pool.extend(B.eliminate(J, drop).basis())
    pool = [p for p in pool if not p.is_zero() and not p.is_constant()]
    pool += [B.gcd(a, b) for a, b in itertools.combinations(pool[:8], 2)]
    seen = {}
    for p in pool:
        if p.is_zero() or p.is_constant():
            continue
        q = B.squarefree_part(p)
        lm = q.leading_monomial(DEGREVLEX)
        q = q.scale(1 / q.terms[lm])
        seen.setdefault(str(q), q)
    cands = sorted(seen.values(), key=lambda p: (p.degree(), len(p.terms), str(p)))
    cands = [p for p in cands if p.constant_term() == 0 and B.local_radical_containment(p, J)]
    return cands[:limit]


def sigma_smooth_at_origin(jd: JacobianData, point=None, max_candidates: int = 10) -> SmoothCertificate:
    """Three-valued smoothness certificate for Σf at ``point`` (default: origin).

    Looks for polynomials g_1..g_c (c = codim Σf) cutting out the same germ
    as J(f) at the point.  Independent gradients there certify smoothness;
    a generically reduced complete intersection with dependent gradients
    certifies a singular point.  All tests are local at the point.
    """
    J = jd.jacobian_ideal
    ring = J.ring
    n = ring.n_plus_1
    s = jd.sigma_dim
    point = tuple(qq(c) for c in (point or (0,) * n))
    if any(p.evaluate(point) != 0 for p in jd.partials):
        raise InputError(f"point {[format_qq(c) for c in point]} is not on Σf")
    Jp = Ideal(ring, [translate(g, point) for g in J.basis()])
    if s <= 0:
        if B.local_dim_at_origin(Jp) == math.inf:
            return SmoothCertificate(Smoothness.INCONCLUSIVE, reason="critical point not isolated")
        return SmoothCertificate(Smoothness.SMOOTH, tuple(ring.gens()), "isolated point")
    c = n - s
    # first try cheap candidates for a smooth certificate only
    for project in (False, True):
        cert = _search(Jp, _candidates(Jp, s, max_candidates, project), s, c, singular=project)
        if cert is not None:
            return cert
    return SmoothCertificate(Smoothness.INCONCLUSIVE, reason="no certificate found")


def _search(Jp: Ideal, cands, s: int, c: int, singular: bool):
    n = Jp.ring.n_plus_1
    tried = 0
    for combo in itertools.combinations(cands, c):
        tried += 1
        if tried > 400:
            break
        K = Ideal(Jp.ring, list(combo))
        # independent gradients make K a smooth germ of dimension s
        smooth = rank(_jacobian_matrix_at_origin(combo, n)) == c
        if not smooth and (not singular or B.local_dimension(K) != s):
            continue
        if not all(B.local_radical_containment(g, K) for g in Jp.basis()):
            continue
        if smooth:
            return SmoothCertificate(Smoothness.SMOOTH, combo, "independent gradients")
        singular_locus = K + _minors(combo, n, c)
        if B.local_dimension(singular_locus) < s:
            return SmoothCertificate(Smoothness.SINGULAR, combo,
                                     "reduced complete intersection with dependent gradients")
    return None
