"""Independent recomputation of corpus expectations.

Nothing here touches the package's own polynomial or basis code.
Polynomials are sympy expressions, saturations go through sympy's
Groebner bases with one Rabinowitsch variable per generator (not the
iterated colon of the main path), and local lengths come from ranks of
truncated Macaulay matrices: ``dim R/(I + m^N)`` for growing N, which
stabilises exactly when the origin is an isolated point of V(I).

Only the random frame matrices are shared with the main path, since both
must look at the same coordinates.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import reduce

import sympy as sp
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import ProductOrder, grevlex

from .poly import Frame

MAX_ORDER = 60


def weighted_homogeneous_milnor(weights, degree) -> Fraction:
    """Milnor number of an isolated weighted-homogeneous singularity: prod(d/w_i - 1)."""
    out = Fraction(1)
    for w in weights:
        out *= Fraction(degree) / Fraction(w) - 1
    return out


def quasi_homogeneous_weights(text: str, variables):
    """Weights w_i with <w, a> = 1 on every exponent vector a of f, or None if not unique."""
    syms = sp.symbols(list(variables))
    f = _parse(text, syms)
    exps = sp.Poly(f, *syms).monoms()
    w = sp.symbols(f"w0:{len(syms)}")
    sol = sp.solve([sum(wi * a for wi, a in zip(w, e)) - 1 for e in exps], w, dict=True)
    if len(sol) != 1 or len(sol[0]) != len(w):
        return None
    return [Fraction(str(sol[0][wi])) for wi in w]


def milnor_by_weights(text: str, variables) -> int | None:
    w = quasi_homogeneous_weights(text, variables)
    if w is None or any(x <= 0 for x in w):
        return None
    mu = weighted_homogeneous_milnor(w, 1)
    return int(mu) if mu.denominator == 1 else None


def _parse(text, syms):
    local = {str(s): s for s in syms}
    return sp.expand(parse_expr(text, local_dict=local,
                                transformations=standard_transformations + (convert_xor,)))


# local length by truncation


def truncated_length(exprs, syms, max_order: int = MAX_ORDER):
    """Length of the local ring at 0 modulo ``exprs``; None when it never stabilises."""
    exprs = [sp.expand(e) for e in exprs]
    if not isolated_at_origin(exprs, syms):
        return None
    polys = [sp.Poly(e, *syms, domain="QQ") for e in exprs if e != 0]
    polys = [(p.terms(), min(sum(m) for m, _ in p.terms())) for p in polys]
    n = len(syms)
    prev = 0  # R / m^0 = 0
    for N in range(1, max_order + 1):
        monos = [m for d in range(N) for m in _monomials_of_degree(n, d)]
        index = {m: i for i, m in enumerate(monos)}
        rows = {}
        r = 0
        for terms, order in polys:
            if order >= N:
                continue
            for d in range(N - order):
                for a in _monomials_of_degree(n, d):
                    row = {}
                    for e, c in terms:
                        ee = tuple(x + y for x, y in zip(e, a))
                        if sum(ee) < N:
                            row[index[ee]] = sp.QQ.convert(c)
                    if row:
                        rows[r] = row
                        r += 1
        rk = DomainMatrix(rows, (max(r, 1), len(monos)), sp.QQ).rank() if rows else 0
        dim = len(monos) - rk
        if dim == prev:
            return dim
        prev = dim
    return None


def isolated_at_origin(exprs, syms) -> bool:
    """0 is isolated in (or absent from) V(exprs) iff (I : m^∞) + m is the unit ideal."""
    gens = [e for e in exprs if e != 0]
    if not gens:
        return False
    if any(e.subs({z: 0 for z in syms}) != 0 for e in gens):
        return True
    sat = reduce(lambda a, b: _intersect(a, b, syms), [_saturate_element(gens, z, syms) for z in syms])
    return _is_unit(_groebner(list(sat) + list(syms), syms))


def _monomials_of_degree(n, d):
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


# ideal operations via sympy


def _groebner(gens, syms, order="grevlex"):
    gens = [g for g in gens if sp.expand(g) != 0]
    if not gens:
        return []
    return list(sp.groebner(gens, *syms, order=order, domain="QQ").exprs)


def _is_unit(gb):
    return len(gb) == 1 and gb[0].is_number and gb[0] != 0


def _contains(gb, g, syms):
    if not gb:
        return sp.expand(g) == 0
    return sp.groebner(gb, *syms, order="grevlex", domain="QQ").contains(g)


# one extra variable in front, eliminated by a block order
ELIM_ONE = ProductOrder((grevlex, lambda m: m[:1]), (grevlex, lambda m: m[1:]))


def _saturate_element(gens, g, syms):
    w = sp.Dummy("w")
    gb = sp.groebner(list(gens) + [1 - w * g], w, *syms, order=ELIM_ONE, domain="QQ")
    return [e for e in gb.exprs if not e.has(w)]


def _intersect(a, b, syms):
    if _is_unit(a):
        return b
    if _is_unit(b):
        return a
    t = sp.Dummy("t")
    gb = sp.groebner([t * f for f in a] + [(1 - t) * g for g in b], t, *syms, order=ELIM_ONE, domain="QQ")
    return [e for e in gb.exprs if not e.has(t)]


def saturate(gens, jac, syms):
    """``(gens) : (jac)^∞`` as the intersection of the saturations by each generator."""
    gb = _groebner(gens, syms)
    parts = [_saturate_element(gb, g, syms) for g in jac
             if sp.expand(g) != 0 and not _contains(gb, g, syms)]
    if not parts:
        return [sp.Integer(1)]
    return _groebner(reduce(lambda x, y: _intersect(x, y, syms), parts), syms)


def dimension(gens, syms) -> int:
    gb = _groebner(gens, syms)
    if not gb:
        return len(syms)
    if _is_unit(gb):
        return -1
    leads = [sp.Poly(g, *syms).monoms(order="grevlex")[0] for g in gb]
    supports = [{i for i, a in enumerate(m) if a} for m in leads]
    for size in range(len(syms), -1, -1):
        for sub in itertools.combinations(range(len(syms)), size):
            if not any(sup <= set(sub) for sup in supports):
                return size
    return 0


# Lê numbers


class OracleGerm:
    def __init__(self, variables, text):
        self.syms = sp.symbols(list(variables))
        self.f = _parse(text, self.syms)

    def in_frame(self, matrix):
        syms = self.syms
        images = {x: sum(sp.Rational(str(c)) * z for c, z in zip(row, syms)) for x, row in zip(syms, matrix)}
        return sp.expand(self.f.subs(images, simultaneous=True))


def _frame_point(matrix, p):
    m = sp.Matrix([[sp.Rational(str(c)) for c in row] for row in matrix])
    return list(m.solve(sp.Matrix([sp.Rational(str(c)) for c in p])))


def _length_at(gens, syms, zp, k):
    """Length at ``zp`` of (gens) cut by z_0 - zp_0, ..., z_{k-1} - zp_{k-1}."""
    moved = {z: z + c for z, c in zip(syms, zp)}
    cut = {z: 0 for z in syms[:k]}
    exprs = [sp.expand(sp.expand(g.subs(moved, simultaneous=True)).subs(cut)) for g in gens]
    rest = syms[k:]
    if not rest:
        return 0 if any(e != 0 for e in exprs) else None
    return truncated_length(exprs, rest)


class OracleTower:
    def __init__(self, fz, syms, s):
        self.syms = syms
        self.s = s
        self.partials = [sp.expand(sp.diff(fz, z)) for z in syms]
        self.fz = fz
        self.incoming = {}
        self.gamma = {}
        self.c_dim = dimension(self.partials[s:], syms)

    def level(self, k):
        if k not in self.gamma:
            if k == self.s:
                inc = self.partials[self.s:]
            else:
                inc = self.level(k + 1) + [self.partials[k]]
            self.incoming[k] = inc
            self.gamma[k] = saturate(inc, self.partials, self.syms)
        return self.gamma[k]

    def le_number(self, k, zp):
        gamma = self.level(k)
        a = _length_at(self.incoming[k], self.syms, zp, k)
        g = _length_at(gamma, self.syms, zp, k)
        if a is None or g is None:
            return None
        return a - g

    def slice_milnor(self, zp):
        s = self.s
        cut = {z: c for z, c in zip(self.syms[:s], zp[:s])}
        fs = sp.expand(self.fz.subs(cut, simultaneous=True))
        moved = {z: z + c for z, c in zip(self.syms[s:], zp[s:])}
        fs = sp.expand(fs.subs(moved, simultaneous=True))
        rest = self.syms[s:]
        return truncated_length([sp.diff(fs, z) for z in rest], rest)


def _tower_for(germ, matrix, s):
    fz = germ.in_frame(matrix)
    tower = OracleTower(fz, germ.syms, s)
    if tower.c_dim != s:
        return None
    return tower


def expectations(entry) -> dict:
    """Recompute the pinned outputs of a corpus entry independently."""
    germ = OracleGerm(entry.variables, entry.f)
    syms = germ.syms
    n = len(syms)
    s = dimension([sp.diff(germ.f, z) for z in syms], syms)
    origin = [0] * n

    candidates = (["identity"] if entry.frame == "identity" else []) + list(entry.seeds)
    chosen = tower = None
    for cand in candidates[:8]:
        matrix = _identity(n) if cand == "identity" else Frame.random(n, cand).matrix
        tw = _tower_for(germ, matrix, s)
        if tw is None:
            continue
        points = [origin] + [_frame_point(matrix, p) for p in entry.samples]
        if all(tw.le_number(k, zp) is not None for zp in points for k in range(s + 1)) and \
                all(tw.slice_milnor(zp) is not None for zp in points):
            chosen, tower = cand, tw
            break
    if tower is None:
        raise RuntimeError(f"{entry.name}: oracle found no admissible frame")
    matrix = _identity(n) if chosen == "identity" else Frame.random(n, chosen).matrix

    lambdas = [tower.le_number(k, origin) for k in range(s + 1)]
    mu0 = tower.slice_milnor(origin)
    top = tower.level(s)
    gamma_zero = _length_at(top, syms, origin, 0) == 0

    sample_mu, dagger_rhs = [], []
    for p in entry.samples:
        zp = _frame_point(matrix, p)
        sample_mu.append(tower.slice_milnor(zp))
        dagger_rhs.append(_length_at(tower.level(s), syms, zp, s) + tower.le_number(s, zp))

    generic = []
    for seed in entry.seeds:
        tw = _tower_for(germ, Frame.random(n, seed).matrix, s)
        value = tw.le_number(s, origin) if tw is not None else None
        if value is not None:
            generic.append(value)
    generic_le = min(generic)

    out = {
        "s": s,
        "frame": chosen,
        "mu0": mu0,
        "lambdas": lambdas,
        "c2": mu0 == generic_le,
        "c4": mu0 == lambdas[s],
        "c5": gamma_zero,
        "generic_le": generic_le,
    }
    if entry.samples:
        out["c1"] = all(m == mu0 for m in sample_mu)
        out["dagger_lhs"] = sample_mu
        out["dagger_rhs"] = dagger_rhs
    return out


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]
