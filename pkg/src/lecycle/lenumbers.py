"""Milnor numbers, Lê numbers and the generic Lê number.

Intersection numbers are lengths of local quotients.  Cycle differences
(Lê cycle = C minus the polar part, and the same one level down) are taken
on those integers, never on ideals::

    λ^k(p) = L_k(A_k) - L_k(Γ^k)

where ``A_s = C``, ``A_k = Γ^{k+1} + (∂f/∂z_k)``, ``Γ^k`` is ``A_k``
saturated by J(f), and ``L_k`` is the length at p after cutting with
``z_0 - p_0, ..., z_{k-1} - p_{k-1}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from . import basis as B
from .basis import Ideal
from .cycles import Germ, PolarTower, build_polar_tower, jacobian, local_length
from .errors import AdmissibilityError, InfiniteLength, InputError, NegativeResult
from .poly import Frame, format_qq, partial, qq, restrict, translate

MAX_FRAME_TRIES = 8


def _finite(value, what):
    if value == math.inf:
        raise InfiniteLength(f"{what}: non-isolated (infinite local length)")
    return int(value)


def _origin(n):
    return (qq(0),) * n


def milnor_number(germ: Germ, p: Sequence | None = None) -> int:
    """μ of ``f`` at ``p`` (default 0): length of J(f) translated to the origin."""
    p = tuple(qq(c) for c in (p or _origin(germ.n_plus_1)))
    gens = [translate(partial(germ.f, i), p) for i in range(germ.n_plus_1)]
    return _finite(B.local_dim_at_origin(Ideal(germ.ring, gens)), "milnor_number")


def _slice_milnor_frame(g: Germ, zp, s: int) -> int:
    """μ at ``zp`` of ``g`` restricted to ``z_0 = zp_0, ..., z_{s-1} = zp_{s-1}``."""
    ring = g.ring
    restricted = restrict(g.f, {i: zp[i] for i in range(s)})
    moved = translate(restricted, tuple(0 if i < s else zp[i] for i in range(ring.n_plus_1)))
    gens = [partial(moved, i) for i in range(s, ring.n_plus_1)]
    gens += [ring.var(i) for i in range(s)]
    return _finite(B.local_dim_at_origin(Ideal(ring, gens)), "slice_milnor")


def slice_milnor(germ: Germ, frame: Frame | None, p: Sequence | None = None, s: int | None = None) -> int:
    """Milnor number at ``p`` of the restriction of f to the frame slice through ``p``.

    ``p`` is given in the original coordinates.
    """
    frame = frame or Frame.identity(germ.n_plus_1)
    if s is None:
        s = jacobian(germ).sigma_dim
    p = tuple(qq(c) for c in (p or _origin(germ.n_plus_1)))
    zp = frame.to_frame_coords(p)
    return _slice_milnor_frame(germ.in_frame(frame), zp, s)


def _lengths(tower: PolarTower, k: int, zp):
    lv = tower.level(k)
    a = local_length(lv.incoming, zp, k)
    g = local_length(lv.gamma, zp, k)
    return a, g


def le_number(tower: PolarTower, k: int, p: Sequence | None = None) -> int:
    """λ^k_{f,z}(p) for ``p`` in the original coordinates."""
    n = tower.ring.n_plus_1
    p = tuple(qq(c) for c in (p or _origin(n)))
    return _le_number_frame(tower, k, tower.frame.to_frame_coords(p))


def _le_number_frame(tower, k, zp):
    if not 0 <= k <= tower.s:
        raise InputError(f"k = {k} outside 0..{tower.s}")
    a, g = _lengths(tower, k, zp)
    if a == math.inf or g == math.inf:
        raise InfiniteLength(f"λ^{k}: improper intersection at {tuple(map(format_qq, zp))}")
    value = int(a) - int(g)
    if value < 0:
        raise NegativeResult(f"λ^{k} = {a} - {g} < 0")
    return value


@dataclass
class LeProfile:
    """Lê numbers at a point; ``lambdas[k]`` is λ^k."""

    point: tuple
    frame: Frame
    lambdas: tuple
    slice_milnor: int | None
    admissible: bool = True

    @property
    def d(self):
        return len(self.lambdas) - 1

    def as_json(self):
        return {
            "point": [format_qq(c) for c in self.point],
            "frame": self.frame.as_json(),
            "lambdas": list(self.lambdas),
            "slice_milnor": self.slice_milnor,
            "admissible": self.admissible,
        }


def le_profile(tower: PolarTower, p: Sequence | None = None) -> LeProfile:
    """All Lê numbers λ^s..λ^0 at ``p`` plus the slice Milnor number there.

    ``d = dim_p Σf`` is taken to be ``s``: corpus germs have pure-dimensional Σf.
    """
    n = tower.ring.n_plus_1
    p = tuple(qq(c) for c in (p or _origin(n)))
    zp = tower.frame.to_frame_coords(p)
    if any(d.evaluate(zp) != 0 for d in tower.partials):
        # off Σf the profile is empty
        return LeProfile(p, tower.frame, (), None)
    lambdas = tuple(_le_number_frame(tower, k, zp) for k in range(tower.s + 1))
    mu = _slice_milnor_frame(tower.germ, zp, tower.s)
    return LeProfile(p, tower.frame, lambdas, mu)


@dataclass(frozen=True)
class DaggerResult:
    point: tuple
    lhs: int
    rhs: int
    polar_term: int
    le_term: int

    @property
    def ok(self):
        return self.lhs == self.rhs

    def as_json(self):
        return {"point": [format_qq(c) for c in self.point], "lhs": self.lhs, "rhs": self.rhs,
                "polar": self.polar_term, "le": self.le_term, "ok": self.ok}


def dagger_check(tower: PolarTower, q: Sequence) -> DaggerResult:
    """Slice Milnor number at q against (Γ^s · slice)_q + (Λ^s · slice)_q."""
    q = tuple(qq(c) for c in q)
    zq = tower.frame.to_frame_coords(q)
    lhs = _slice_milnor_frame(tower.germ, zq, tower.s)
    s = tower.s
    polar = _finite(local_length(tower.gamma(s) if s else tower.level(0).gamma, zq, s), "dagger polar term")
    le = _le_number_frame(tower, s, zq)
    return DaggerResult(q, lhs, polar + le, polar, le)


@dataclass
class GenericLeNumber:
    value: int
    frames_tried: list
    stable: bool
    per_frame: dict = field(default_factory=dict)

    def as_json(self):
        return {"value": self.value, "seeds": list(self.frames_tried), "stable": self.stable,
                "per_frame": {str(k): v for k, v in self.per_frame.items()}}


def generic_le_number(germ: Germ, seeds: Sequence[int], s: int | None = None, bound: int = 7) -> GenericLeNumber:
    """Minimum of λ^s_{f,z}(0) over admissible random frames from ``seeds``.

    ``stable`` is set when both halves of the seed list give the same minimum.
    """
    seeds = list(seeds)
    if len(seeds) < 4:
        raise InputError("generic_le_number needs at least 4 seeds")
    if s is None:
        s = jacobian(germ).sigma_dim
    values = {}
    for seed in seeds:
        frame = Frame.random(germ.n_plus_1, seed, bound)
        try:
            tower = build_polar_tower(germ, frame, s)
            values[seed] = le_number(tower, s)
        except (AdmissibilityError, InfiniteLength):
            values[seed] = None
    good = [v for v in values.values() if v is not None]
    if not good:
        raise AdmissibilityError("no admissible frame among the seeds")
    half = len(seeds) // 2
    a = [values[x] for x in seeds[:half] if values[x] is not None]
    b = [values[x] for x in seeds[half:] if values[x] is not None]
    stable = bool(a) and bool(b) and min(a) == min(b)
    return GenericLeNumber(min(good), seeds, stable, values)


def euler_consistency(profile: LeProfile, mu_constant: bool | None = None, mu_circ: int | None = None) -> bool:
    """λ-level consequences of the Lê number chain complex.

    Non-negativity always; for d = 0, λ^0 = μ; when the family is known to
    be μ-constant, λ^k = 0 below the top and λ^d equals the transversal μ.
    """
    lam = profile.lambdas
    if any(v < 0 for v in lam):
        return False
    if not lam:
        return True
    d = len(lam) - 1
    if d == 0 and profile.slice_milnor is not None and lam[0] != profile.slice_milnor:
        return False
    if mu_constant:
        if any(lam[k] for k in range(d)):
            return False
        if mu_circ is not None and lam[d] != mu_circ:
            return False
    return True


def choose_admissible_tower(germ: Germ, identity_first: bool, seeds: Sequence[int], s: int | None = None,
                            points: Sequence = ()):
    """First frame (identity, then seeded random ones) whose tower and lengths are finite.

    Returns ``(tower, tried)`` where ``tried`` lists ``"identity"`` and seeds.
    At most ``MAX_FRAME_TRIES`` frames are tried.
    """
    if s is None:
        s = jacobian(germ).sigma_dim
    n = germ.n_plus_1
    candidates = ([None] if identity_first else []) + list(seeds)
    tried = []
    for seed in candidates[:MAX_FRAME_TRIES]:
        frame = Frame.identity(n) if seed is None else Frame.random(n, seed)
        tried.append("identity" if seed is None else seed)
        try:
            tower = build_polar_tower(germ, frame, s)
            for p in [_origin(n), *points]:
                le_profile(tower, p)
            return tower, tried
        except (AdmissibilityError, InfiniteLength):
            continue
    raise AdmissibilityError(f"no admissible frame after {len(tried)} tries: {tried}")
