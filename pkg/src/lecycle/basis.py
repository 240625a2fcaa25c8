"""Groebner bases, local standard bases and the ideal operations built on them.

Global orders use Buchberger's algorithm with the Gebauer-Moeller pair
criteria and the normal selection strategy.  The local order (1 is the
largest monomial) uses Mora's tangent-cone normal form with ecart-based
reducer selection; its standard bases give vector-space dimensions of
quotients of the local ring at the origin.

The low-level routines work on plain ``{exponent: coefficient}`` dicts;
:class:`Ideal` and the module-level operations wrap them.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import gmpy2

from .errors import InputError
from .poly import DEGREVLEX, LOCAL, QQ, MonomialOrder, Polynomial, Ring, elimination_order

# raw dict helpers


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def _sub_mul(f, c, shift, g):
    """In place: ``f -= c * x^shift * g``."""
    for e, v in g.items():
        ee = tuple(x + y for x, y in zip(e, shift))
        nv = f.get(ee, 0) - c * v
        if nv:
            f[ee] = nv
        else:
            f.pop(ee, None)


def _monic(f, key):
    lm = max(f, key=key)
    inv = 1 / f[lm]
    if inv == 1:
        return lm, f
    return lm, {e: c * inv for e, c in f.items()}


def _deg(f):
    return max(sum(e) for e in f)


class _Desc:
    """Heap wrapper turning Python's min-heap into a max-heap on order keys."""

    __slots__ = ("k", "m")

    def __init__(self, k, m):
        self.k = k
        self.m = m

    def __lt__(self, other):
        return self.k > other.k


def _reduce(f, basis, key, full=True):
    """Remainder of ``f`` on division by monic ``basis`` = [(lm, terms), ...]."""
    f = dict(f)
    rem = {}
    heap = [_Desc(key(m), m) for m in f]
    heapq.heapify(heap)
    queued = set(f)
    while heap:
        m = heapq.heappop(heap).m
        queued.discard(m)
        c = f.get(m)
        if c is None:
            continue
        for lm, g in basis:
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                for e, v in g.items():
                    ee = tuple(x + y for x, y in zip(e, shift))
                    nv = f.get(ee, 0) - c * v
                    if nv:
                        f[ee] = nv
                        if ee not in queued:
                            queued.add(ee)
                            heapq.heappush(heap, _Desc(key(ee), ee))
                    else:
                        f.pop(ee, None)
                break
        else:
            rem[m] = c
            del f[m]
            if not full:
                rem.update(f)
                break
    return rem


# fraction-free arithmetic for Buchberger and Mora: primitive integer
# polynomials avoid the gcd in every rational operation


def _primitive(f, key):
    """``(lm, g)`` with ``g`` a primitive integer multiple of ``f`` and positive leading coefficient."""
    den = 1
    for c in f.values():
        den = gmpy2.lcm(den, QQ(c).denominator)
    ints = {e: QQ(c).numerator * (den // QQ(c).denominator) for e, c in f.items()}
    cont = 0
    for c in ints.values():
        cont = gmpy2.gcd(cont, c)
        if cont == 1:
            break
    lm = max(ints, key=key)
    if ints[lm] < 0:
        cont = -cont
    if cont != 1:
        ints = {e: c // cont for e, c in ints.items()}
    return lm, ints


def _reduce_zz(f, basis, key):
    """A positive-scalar multiple of the full remainder of ``f`` by ``basis`` = [(lm, g)]."""
    f = dict(f)
    rem = {}
    heap = [_Desc(key(m), m) for m in f]
    heapq.heapify(heap)
    queued = set(f)
    while heap:
        m = heapq.heappop(heap).m
        queued.discard(m)
        c = f.get(m)
        if c is None:
            continue
        for lm, g in basis:
            if _divides(lm, m):
                a = g[lm]
                d = gmpy2.gcd(a, c)
                mf, mg = a // d, c // d
                if mf != 1:
                    for e in f:
                        f[e] *= mf
                    for e in rem:
                        rem[e] *= mf
                shift = tuple(x - y for x, y in zip(m, lm))
                for e, v in g.items():
                    ee = tuple(x + y for x, y in zip(e, shift))
                    nv = f.get(ee, 0) - mg * v
                    if nv:
                        f[ee] = nv
                        if ee not in queued:
                            queued.add(ee)
                            heapq.heappush(heap, _Desc(key(ee), ee))
                    else:
                        f.pop(ee, None)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def _spoly_zz(lm1, f, lm2, g):
    lcm = _lcm(lm1, lm2)
    a, b = f[lm1], g[lm2]
    d = gmpy2.gcd(a, b)
    s1 = tuple(x - y for x, y in zip(lcm, lm1))
    s2 = tuple(x - y for x, y in zip(lcm, lm2))
    s = {tuple(x + y for x, y in zip(e, s1)): v * (b // d) for e, v in f.items()}
    mg = a // d
    for e, v in g.items():
        ee = tuple(x + y for x, y in zip(e, s2))
        nv = s.get(ee, 0) - mg * v
        if nv:
            s[ee] = nv
        else:
            s.pop(ee, None)
    return s


def _to_monic(lm, g):
    inv = QQ(1, g[lm])
    return {e: QQ(c) * inv for e, c in g.items()}


def groebner_raw(polys, key, nvars):
    """Reduced Groebner basis of the dicts ``polys`` (global order ``key``).

    Pairs are picked by smallest lcm (the normal strategy); sugar selection
    was tried and blew up coefficients on lex and elimination orders.

    Returns a list of monic dicts sorted by decreasing leading monomial;
    ``[{0: 1}]`` for the unit ideal and ``[]`` for the zero ideal.
    """
    one = (0,) * nvars
    P = []  # (lm, terms)
    G = []  # indices of active basis elements
    B = []  # pairs (i, j, lcm)

    def update(h):
        lm_h = P[h][0]
        C = [(g, _lcm(lm_h, P[g][0])) for g in G]
        D = []
        while C:
            g1, l1 = C.pop()
            if _coprime(lm_h, P[g1][0]) or (
                not any(_divides(l2, l1) for _, l2 in C)
                and not any(_divides(l2, l1) for _, l2 in D)
            ):
                D.append((g1, l1))
        E = [(g, l) for g, l in D if not _coprime(lm_h, P[g][0])]
        keep = []
        for (i, j, l) in B:
            if (_divides(lm_h, l) and _lcm(P[i][0], lm_h) != l and _lcm(lm_h, P[j][0]) != l):
                continue
            keep.append((i, j, l))
        for g, l in E:
            keep.append((h, g, l))
        B[:] = keep
        G[:] = [g for g in G if not _divides(lm_h, P[g][0])] + [h]

    start = []
    for p in polys:
        if p:
            lm, m = _primitive(p, key)
            if lm == one:
                return [{one: QQ(1)}]
            start.append((lm, m))
    if not start:
        return []
    start.sort(key=lambda t: key(t[0]))
    for lm, m in start:
        P.append((lm, m))
        update(len(P) - 1)

    while B:
        idx = min(range(len(B)), key=lambda k: key(B[k][2]))
        i, j, _ = B.pop(idx)
        s = _spoly_zz(P[i][0], P[i][1], P[j][0], P[j][1])
        # smallest leading monomials first as reducers
        h = _reduce_zz(s, sorted(((P[g][0], P[g][1]) for g in G), key=lambda r: key(r[0])), key)
        if not h:
            continue
        lm, h = _primitive(h, key)
        if lm == one:
            return [{one: QQ(1)}]
        P.append((lm, h))
        update(len(P) - 1)

    # minimal basis, then interreduce
    items = [(P[g][0], P[g][1]) for g in G]
    minimal = []
    for lm, g in sorted(items, key=lambda t: key(t[0])):
        if not any(_divides(l2, lm) for l2, _ in minimal):
            minimal.append((lm, g))
    reduced = []
    for k, (lm, g) in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r = _reduce_zz(g, others, key)
        reduced.append((lm, _to_monic(*_primitive(r, key))))
    reduced.sort(key=lambda t: key(t[0]), reverse=True)
    return [g for _, g in reduced]


def _ecart(f, lm):
    return _deg(f) - sum(lm)


def _nf_mora(f, basis, key):
    """Mora's weak normal form of ``f`` against ``basis`` = [(lm, terms, ecart)]."""
    h = dict(f)
    T = list(basis)
    while h:
        m = max(h, key=key)
        cands = [t for t in T if _divides(t[0], m)]
        if not cands:
            return h
        lm, g, ec = min(cands, key=lambda t: t[2])
        eh = _ecart(h, m)
        if ec > eh:
            T.append((m, dict(h), eh))
        c = h[m] / g[lm]
        _sub_mul(h, c, tuple(a - b for a, b in zip(m, lm)), g)
    return h


def _nf_mora_zz(f, basis, key):
    """Integer version of :func:`_nf_mora`; the result is a nonzero scalar multiple."""
    h = dict(f)
    T = list(basis)
    while h:
        m = max(h, key=key)
        cands = [t for t in T if _divides(t[0], m)]
        if not cands:
            return h
        lm, g, ec = min(cands, key=lambda t: t[2])
        eh = _ecart(h, m)
        if ec > eh:
            T.append((m, dict(h), eh))
        a, c = g[lm], h[m]
        d = gmpy2.gcd(a, c)
        mf, mg = a // d, c // d
        if mf != 1:
            for e in h:
                h[e] *= mf
        _sub_mul(h, mg, tuple(x - y for x, y in zip(m, lm)), g)
    return h


def standard_basis_raw(polys, key, nvars):
    """Standard basis for a local order (Mora's tangent cone algorithm).

    Returns a list of (lm, terms) with monic terms; ``[(1, {1: 1})]`` when the
    ideal generates the unit ideal of the local ring.  Works internally on
    primitive integer polynomials.
    """
    one = (0,) * nvars
    S = []
    for p in polys:
        if p:
            lm, m = _primitive(p, key)
            if lm == one:
                return [(one, {one: QQ(1)})]
            S.append((lm, m, _ecart(m, lm)))
    pairs = [(i, j) for i in range(len(S)) for j in range(i)]

    def pair_key(pr):
        return sum(_lcm(S[pr[0]][0], S[pr[1]][0]))

    while pairs:
        pairs.sort(key=pair_key, reverse=True)
        i, j = pairs.pop()
        lmi, fi, _ = S[i]
        lmj, fj, _ = S[j]
        s = _spoly_zz(lmi, fi, lmj, fj)
        h = _nf_mora_zz(s, S, key)
        if not h:
            continue
        lm, h = _primitive(h, key)
        if lm == one:
            return [(one, {one: QQ(1)})]
        S.append((lm, h, _ecart(h, lm)))
        n = len(S) - 1
        pairs.extend((n, k) for k in range(n))
    return [(lm, _to_monic(lm, g)) for lm, g, _ in S]


# staircase counting


@dataclass(frozen=True)
class StaircaseReport:
    """Standard monomials of a leading ideal; ``dimension`` is ``math.inf`` if unbounded."""

    standard_monomials: tuple | None
    dimension: float

    @property
    def finite(self) -> bool:
        return self.dimension != math.inf


def count_staircase(leading: Sequence[tuple], nvars: int) -> StaircaseReport:
    """Count monomials outside the monomial ideal generated by ``leading``."""
    leading = [tuple(m) for m in leading]
    if any(not any(m) for m in leading):
        return StaircaseReport((), 0)
    bounds = []
    for i in range(nvars):
        pure = [m[i] for m in leading if m[i] and all(not a for k, a in enumerate(m) if k != i)]
        if not pure:
            return StaircaseReport(None, math.inf)
        bounds.append(min(pure))
    std = tuple(
        e for e in itertools.product(*(range(b) for b in bounds))
        if not any(_divides(m, e) for m in leading)
    )
    return StaircaseReport(std, len(std))


# Ideal


def _fresh_names(ring: Ring, base: str, count: int = 1):
    names = []
    k = 0
    while len(names) < count:
        name = f"{base}{k}" if k else base
        if name not in ring.variables and name not in names:
            names.append(name)
        k += 1
    return names


class Ideal:
    """Ideal of a polynomial ring given by generators, with cached bases per order."""

    def __init__(self, ring: Ring, generators: Sequence[Polynomial]):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.const(g)
            if g.ring != ring:
                raise InputError(f"generator {g} lives in {g.ring}, not {ring}")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens) if gens else (ring.zero(),)
        self._cache = {}

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.generators)

    def _raw_gens(self):
        return [g.terms for g in self.generators if not g.is_zero()]

    def basis(self, order: MonomialOrder = DEGREVLEX) -> list:
        if order not in self._cache:
            n = self.ring.n_plus_1
            if order.is_global:
                raw = groebner_raw(self._raw_gens(), order.key, n)
            else:
                raw = [g for _, g in standard_basis_raw(self._raw_gens(), order.key, n)]
            self._cache[order] = [Polynomial(self.ring, g) for g in raw]
        return self._cache[order]

    def is_unit(self) -> bool:
        b = self.basis()
        return len(b) == 1 and b[0].is_constant() and not b[0].is_zero()

    def __add__(self, other):
        if isinstance(other, Polynomial):
            other = [other]
        if isinstance(other, Ideal):
            other = other.generators
        return Ideal(self.ring, list(self.generators) + list(other))

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.basis() == other.basis()

    def __hash__(self):
        return hash((self.ring, tuple(self.basis())))

    def __contains__(self, g):
        return membership(g, self)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"

    def as_strings(self, order: MonomialOrder = DEGREVLEX) -> list:
        return [str(g) for g in self.basis(order)]


def groebner(I: Ideal, order: MonomialOrder = DEGREVLEX) -> list:
    """Reduced Groebner basis (global order) as a list of Polynomials."""
    if not order.is_global:
        raise InputError("groebner() needs a global order; use standard_basis()")
    return I.basis(order)


def standard_basis(I: Ideal) -> list:
    return I.basis(LOCAL)


def normal_form(g: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX):
    """Remainder of ``g``; for the local order this is Mora's weak normal form."""
    key = order.key
    if order.is_global:
        raw = []
        for b in basis:
            if not b.is_zero():
                raw.append(_monic(b.terms, key))
        return Polynomial(g.ring, _reduce(g.terms, raw, key))
    raw = []
    for b in basis:
        if not b.is_zero():
            lm = max(b.terms, key=key)
            raw.append((lm, b.terms, _ecart(b.terms, lm)))
    return Polynomial(g.ring, _nf_mora(g.terms, raw, key))


def membership(g: Polynomial, I: Ideal) -> bool:
    if g.is_zero():
        return True
    return normal_form(g, I.basis(DEGREVLEX)).is_zero()


def _lift(p: Polynomial, ring: Ring, k: int) -> Polynomial:
    """Embed ``p`` into ``ring`` which has ``k`` extra leading variables."""
    pad = (0,) * k
    return Polynomial(ring, {pad + e: c for e, c in p.terms.items()})


def _drop(p: Polynomial, ring: Ring, k: int) -> Polynomial:
    return Polynomial(ring, {e[k:]: c for e, c in p.terms.items()})


def radical_containment(g: Polynomial, I: Ideal) -> bool:
    """True iff ``g`` vanishes on V(I): ``1 in I + (1 - w*g)`` with a new variable w."""
    if g.is_zero():
        return True
    ring = I.ring
    (w,) = _fresh_names(ring, "_w")
    big = ring.extend([w])
    wv = big.var(0)
    gens = [_lift(p, big, 1) for p in I.generators] + [big.one() - wv * _lift(g, big, 1)]
    return Ideal(big, gens).is_unit()


def eliminate(I: Ideal, variables) -> Ideal:
    """``I`` intersected with the subring that omits ``variables`` (names or indices)."""
    ring = I.ring
    idx = sorted({ring.index(v) if isinstance(v, str) else v for v in variables})
    if not idx:
        return Ideal(ring, I.basis())
    rest = [i for i in range(ring.n_plus_1) if i not in idx]
    perm = idx + rest
    k = len(idx)
    key = elimination_order(k).key
    raw = [{tuple(e[i] for i in perm): c for e, c in g.terms.items()} for g in I.generators if not g.is_zero()]
    basis = groebner_raw(raw, key, ring.n_plus_1)
    inv = [0] * len(perm)
    for pos, i in enumerate(perm):
        inv[i] = pos
    kept = []
    for b in basis:
        if all(not any(e[:k]) for e in b):
            kept.append(Polynomial(ring, {tuple(e[inv[i]] for i in range(len(perm))): c for e, c in b.items()}))
    return Ideal(ring, kept)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` as the t-free part of ``t*I + (1 - t)*J``."""
    ring = I.ring
    if I.is_unit():
        return Ideal(ring, J.basis())
    if J.is_unit():
        return Ideal(ring, I.basis())
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    (t,) = _fresh_names(ring, "_t")
    big = ring.extend([t])
    tv = big.var(0)
    gens = [tv * _lift(f, big, 1) for f in I.basis()]
    gens += [(big.one() - tv) * _lift(g, big, 1) for g in J.basis()]
    raw = groebner_raw([g.terms for g in gens], elimination_order(1).key, big.n_plus_1)
    kept = [_drop(Polynomial(big, b), ring, 1) for b in raw if all(e[0] == 0 for e in b)]
    return Ideal(ring, kept)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient ``f / g``; raises if ``g`` does not divide ``f``."""
    key = DEGREVLEX.key
    lm_g = max(g.terms, key=key)
    lc_g = g.terms[lm_g]
    rem = dict(f.terms)
    quot = {}
    while rem:
        m = max(rem, key=key)
        if not _divides(lm_g, m):
            raise ArithmeticError(f"{g} does not divide {f}")
        shift = tuple(a - b for a, b in zip(m, lm_g))
        c = rem[m] / lc_g
        quot[shift] = c
        _sub_mul(rem, c, shift, g.terms)
    return Polynomial(f.ring, quot)


def colon(I: Ideal, g: Polynomial) -> Ideal:
    """``I : (g) = {h : h*g in I}``, from ``I ∩ (g)`` divided by g."""
    if g.is_zero():
        raise InputError("colon by the zero polynomial")
    if membership(g, I):
        return Ideal.unit(I.ring)
    inter = intersect(I, Ideal(I.ring, [g]))
    return Ideal(I.ring, [divide_exact(h, g) for h in inter.generators if not h.is_zero()])


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    """``I : J`` as the intersection of ``I : g`` over the generators g of J."""
    result = None
    for g in J.generators:
        if g.is_zero() or membership(g, I):
            continue
        q = colon(I, g)
        result = q if result is None else intersect(result, q)
        if result.basis() == I.basis():
            break
    if result is None:
        return Ideal.unit(I.ring)
    return result


class Saturation(NamedTuple):
    ideal: Ideal
    iterations: int


def saturate(I: Ideal, J: Ideal) -> Saturation:
    """``I : J^∞`` by iterated colon until the reduced basis repeats.

    ``iterations`` counts colon steps including the final certifying one.
    """
    if J.is_zero():
        raise InputError("saturation by the zero ideal")
    cur = Ideal(I.ring, I.basis())
    steps = 0
    while True:
        nxt = colon_ideal(cur, J)
        steps += 1
        if nxt.basis() == cur.basis():
            return Saturation(cur, steps)
        cur = Ideal(I.ring, nxt.basis())


def dimension(I: Ideal) -> int:
    """Krull dimension of V(I) in affine space; -1 for the unit ideal.

    Largest set of variables independent modulo the degrevlex leading ideal.
    """
    basis = I.basis(DEGREVLEX)
    n = I.ring.n_plus_1
    if I.is_zero():
        return n
    leading = [b.leading_monomial(DEGREVLEX) for b in basis]
    return _dimension_from_leading(leading, n)


def dimension_in(I: Ideal, order: MonomialOrder) -> int:
    """Same as :func:`dimension` but through the leading ideal for ``order``."""
    basis = groebner(I, order)
    n = I.ring.n_plus_1
    if I.is_zero():
        return n
    return _dimension_from_leading([b.leading_monomial(order) for b in basis], n)


def _dimension_from_leading(leading, n):
    if any(not any(m) for m in leading):
        return -1
    supports = [frozenset(i for i, a in enumerate(m) if a) for m in leading]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def staircase(I: Ideal) -> StaircaseReport:
    """Standard monomials of I in the local ring at the origin."""
    if I.is_zero():
        return StaircaseReport(None, math.inf)
    key = LOCAL.key
    sb = standard_basis_raw(I._raw_gens(), key, I.ring.n_plus_1)
    return count_staircase([lm for lm, _ in sb], I.ring.n_plus_1)


def _curve_through_origin(I: Ideal) -> bool:
    """Cheap certificate that V(I) has a positive-dimensional component through 0.

    0 lies on the closure of V(I) minus V(g) for a linear form g exactly when
    such a component meets 0 and is not inside V(g).  False means "unknown".
    """
    ring = I.ring
    if all(p.constant_term() == 0 for p in I.generators) and dimension(I) > 0:
        g = ring.zero()
        for i in range(ring.n_plus_1):
            g = g + ring.var(i).scale(i + 1)
        sat = saturate_by_element(I, g)
        return all(p.constant_term() == 0 for p in sat.generators)
    return False


def local_dim_at_origin(I: Ideal):
    """dim_Q of the local quotient at 0; 0 if 0 is not on V(I); ``math.inf`` if not isolated."""
    if I.is_zero() or _curve_through_origin(I):
        return math.inf
    return staircase(I).dimension


def saturate_by_element(I: Ideal, g: Polynomial) -> Ideal:
    """``I : g^∞`` in one elimination: the w-free part of ``I + (1 - w*g)``."""
    if g.is_zero():
        raise InputError("saturation by the zero polynomial")
    ring = I.ring
    (w,) = _fresh_names(ring, "_w")
    big = ring.extend([w])
    wv = big.var(0)
    gens = [_lift(p, big, 1) for p in I.generators] + [big.one() - wv * _lift(g, big, 1)]
    raw = groebner_raw([p.terms for p in gens if not p.is_zero()], elimination_order(1).key, big.n_plus_1)
    kept = [_drop(Polynomial(big, b), ring, 1) for b in raw if all(e[0] == 0 for e in b)]
    return Ideal(ring, kept)


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic (degrevlex) greatest common divisor via ``lcm = (a) ∩ (b)``."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.is_constant() or b.is_constant():
        return a.ring.one()
    inter = intersect(Ideal(a.ring, [a]), Ideal(a.ring, [b])).basis()
    (lcm,) = inter
    g = divide_exact(a * b, lcm)
    lm = g.leading_monomial(DEGREVLEX)
    return g.scale(1 / g.terms[lm])


def squarefree_part(h: Polynomial) -> Polynomial:
    """``h`` divided by ``gcd(h, dh/dx_0, ..., dh/dx_n)`` (characteristic zero)."""
    from .poly import partial

    if h.is_constant():
        return h
    g = h
    for i in sorted(h.variables_used()):
        g = gcd(g, partial(h, i))
        if g.is_constant():
            break
    q = divide_exact(h, g)
    lm = q.leading_monomial(DEGREVLEX)
    return q.scale(1 / q.terms[lm])


def local_dimension(I: Ideal) -> int:
    """Krull dimension of the germ of V(I) at 0; -1 when 0 is not on V(I).

    Read off the leading ideal of a standard basis for the local degree order.
    """
    if I.is_zero():
        return I.ring.n_plus_1
    sb = standard_basis_raw(I._raw_gens(), LOCAL.key, I.ring.n_plus_1)
    return _dimension_from_leading([lm for lm, _ in sb], I.ring.n_plus_1)


def local_radical_containment(g: Polynomial, I: Ideal) -> bool:
    """True iff ``g`` vanishes on the germ of V(I) at 0, i.e. 0 is not on V(I : g^∞)."""
    if g.is_zero():
        return True
    if g.constant_term() != 0:
        return local_dim_at_origin(I) == 0
    return local_dim_at_origin(saturate_by_element(I, g)) == 0
