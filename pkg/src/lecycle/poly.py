"""Exact multivariate polynomials over the rationals.

A :class:`Polynomial` is an immutable mapping from exponent tuples to
non-zero rational coefficients, tied to a :class:`Ring` that names the
variables.  Monomials are plain tuples of non-negative ints.
"""

from __future__ import annotations

import random
import functools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as QQ

from .errors import InputError

Monomial = tuple  # tuple[int, ...]


def qq(value) -> QQ:
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to the coefficient type."""
    if isinstance(value, str):
        return QQ(value.strip())
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return QQ(int(value.numerator), int(value.denominator))
    return QQ(value)


def format_qq(c) -> str:
    c = qq(c)
    if c.denominator == 1:
        return str(int(c.numerator))
    return f"{int(c.numerator)}/{int(c.denominator)}"


@dataclass(frozen=True)
class Ring:
    """Polynomial ring over Q in the named variables."""

    variables: tuple

    def __init__(self, variables: Iterable[str]):
        names = tuple(str(v).strip() for v in variables)
        if len(names) < 2:
            raise InputError("a ring needs at least two variables (n >= 1)")
        if len(set(names)) != len(names):
            raise InputError(f"duplicate variable names in {names}")
        for v in names:
            if not v.isidentifier():
                raise InputError(f"bad variable name {v!r}")
        object.__setattr__(self, "variables", names)

    @property
    def n_plus_1(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def extend(self, names: Sequence[str], front: bool = True) -> "Ring":
        """Ring with extra variables, placed first by default."""
        names = tuple(names)
        return Ring(names + self.variables if front else self.variables + names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.n_plus_1: qq(c)})

    def var(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.index(i)
        e = [0] * self.n_plus_1
        e[i] = 1
        return Polynomial(self, {tuple(e): QQ(1)})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.n_plus_1)]

    def __repr__(self):
        return f"Ring({', '.join(self.variables)})"


def _revlex(e):
    return tuple(-x for x in reversed(e))


def _make_key(kind: str, block: int) -> Callable:
    if kind == "lex":
        return lambda e: e
    if kind == "degrevlex":
        raw = lambda e: (sum(e), _revlex(e))  # noqa: E731
    elif kind == "elim":
        k = block
        raw = lambda e: (sum(e[:k]), _revlex(e[:k]), sum(e[k:]), _revlex(e[k:]))  # noqa: E731
    elif kind == "neg-degrevlex-local":
        raw = lambda e: (-sum(e), _revlex(e))  # noqa: E731
    else:
        raise ValueError(f"unknown monomial order {kind!r}")
    # keys are compared over and over during division
    return functools.lru_cache(maxsize=1 << 18)(raw)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by a sort key (larger key = larger monomial).

    ``elim`` is a block order with degrevlex on each block that eliminates
    the first ``block`` variables.  ``neg-degrevlex-local`` makes 1 the
    largest monomial and is used for computations in the local ring at 0.
    """

    kind: str
    block: int = 0
    key: Callable = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "key", _make_key(self.kind, self.block))

    @property
    def is_global(self) -> bool:
        return self.kind != "neg-degrevlex-local"

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")
LOCAL = MonomialOrder("neg-degrevlex-local")


def elimination_order(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


_CANONICAL_KEY = DEGREVLEX.key


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = {e: (c if type(c) is QQ else qq(c)) for e, c in terms.items() if c != 0}
        self._hash = None

    # construction helpers

    @classmethod
    def from_terms(cls, ring, pairs):
        acc = {}
        for c, e in pairs:
            e = tuple(e)
            acc[e] = acc.get(e, 0) + qq(c)
        return cls(ring, acc)

    def _new(self, terms):
        p = Polynomial.__new__(Polynomial)
        p.ring = self.ring
        p.terms = terms
        p._hash = None
        return p

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise InputError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return self._new(t)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, 0) + c1 * c2
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return self._new(t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InputError("only non-negative integer powers are allowed")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        c = qq(c)
        if c == 0:
            return self.ring.zero()
        return self._new({e: v * c for e, v in self.terms.items()})

    # comparison

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, QQ)) or hasattr(other, "denominator"):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset((e, str(c)) for e, c in self.terms.items())))
        return self._hash

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.n_plus_1, QQ(0))

    def variables_used(self) -> set:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def sorted_terms(self, order: MonomialOrder | None = None):
        key = order.key if order is not None else _CANONICAL_KEY
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder):
        return max(self.terms, key=order.key)

    def evaluate(self, point: Sequence):
        point = [qq(p) for p in point]
        total = QQ(0)
        for e, c in self.terms.items():
            v = c
            for p, a in zip(point, e):
                if a:
                    v *= p ** a
            total += v
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                name if a == 1 else f"{name}^{a}"
                for name, a in zip(self.ring.variables, e) if a
            )
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if not mono:
                body = format_qq(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_qq(mag)}*{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def partial(f: Polynomial, i) -> Polynomial:
    """Formal partial derivative with respect to variable ``i`` (index or name)."""
    if isinstance(i, str):
        i = f.ring.index(i)
    if not 0 <= i < f.ring.n_plus_1:
        raise InputError(f"variable index {i} out of range")
    t = {}
    for e, c in f.terms.items():
        if e[i]:
            d = list(e)
            d[i] -= 1
            t[tuple(d)] = c * e[i]
    return Polynomial(f.ring, t)


def substitute(f: Polynomial, images: Sequence[Polynomial], ring: Ring | None = None) -> Polynomial:
    """Replace variable ``i`` by ``images[i]`` (all living in ``ring``)."""
    ring = ring or f.ring
    powers = [{0: ring.one()} for _ in images]

    def power(i, a):
        cache = powers[i]
        if a not in cache:
            k = max(cache)
            p = cache[k]
            while k < a:
                p = p * images[i]
                k += 1
                cache[k] = p
        return cache[a]

    total = {}
    for e, c in f.terms.items():
        term = ring.const(c)
        for i, a in enumerate(e):
            if a:
                term = term * power(i, a)
        for m, v in term.terms.items():
            s = total.get(m, 0) + v
            if s:
                total[m] = s
            else:
                total.pop(m, None)
    return Polynomial(ring, total)


def translate(f: Polynomial, p: Sequence) -> Polynomial:
    """Return ``f(z + p)``, which moves the point ``p`` to the origin."""
    if len(p) != f.ring.n_plus_1:
        raise InputError(f"point {p} has wrong length for {f.ring}")
    p = [qq(c) for c in p]
    if not any(p):
        return f
    images = [f.ring.var(i) + c for i, c in enumerate(p)]
    return substitute(f, images)


def restrict(f: Polynomial, values: dict) -> Polynomial:
    """Substitute constants for the variables indexed by the keys of ``values``."""
    t = {}
    for e, c in f.terms.items():
        v = c
        d = list(e)
        for i, val in values.items():
            if d[i]:
                v *= qq(val) ** d[i]
                d[i] = 0
        if v:
            k = tuple(d)
            s = t.get(k, 0) + v
            if s:
                t[k] = s
            else:
                t.pop(k, None)
    return Polynomial(f.ring, t)


# frames


def _solve(matrix, rhs):
    """Gaussian elimination over Q; returns None when the matrix is singular."""
    n = len(matrix)
    a = [[qq(x) for x in row] + [qq(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]


def rank(rows) -> int:
    """Rank of a rational matrix given as a list of rows."""
    a = [[qq(x) for x in row] for row in rows]
    if not a:
        return 0
    r = 0
    ncols = len(a[0])
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col] / a[r][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


@dataclass(frozen=True)
class Frame:
    """Linear coordinate change: variable ``i`` is replaced by ``sum_j M[i][j] z_j``.

    A point with original coordinates ``x`` has frame coordinates
    ``z = M^{-1} x``.
    """

    matrix: tuple
    seed: int | None = None

    def __post_init__(self):
        m = tuple(tuple(qq(x) for x in row) for row in self.matrix)
        n = len(m)
        if any(len(row) != n for row in m):
            raise InputError("frame matrix must be square")
        if rank(m) != n:
            raise InputError("frame matrix is singular")
        object.__setattr__(self, "matrix", m)

    @property
    def size(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, n: int) -> "Frame":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def random(cls, n: int, seed: int, bound: int = 7) -> "Frame":
        rng = random.Random(seed)
        while True:
            m = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
            if rank(m) == n:
                return cls(tuple(map(tuple, m)), seed)

    def is_identity(self) -> bool:
        return all(x == (i == j) for i, row in enumerate(self.matrix) for j, x in enumerate(row))

    def __matmul__(self, other: "Frame") -> "Frame":
        n = self.size
        prod = [[sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)]
        return Frame(tuple(map(tuple, prod)))

    def to_frame_coords(self, point: Sequence) -> tuple:
        if len(point) != self.size:
            raise InputError(f"point of length {len(point)} has wrong length for a {self.size}-frame")
        z = _solve(self.matrix, point)
        return tuple(z)

    def from_frame_coords(self, z: Sequence) -> tuple:
        return tuple(sum(a * qq(b) for a, b in zip(row, z)) for row in self.matrix)

    def as_json(self):
        return {
            "seed": self.seed,
            "matrix": [[format_qq(x) for x in row] for row in self.matrix],
        }


def apply_frame(f: Polynomial, frame: Frame) -> Polynomial:
    """Substitute each variable by the linear form in the matching frame row."""
    ring = f.ring
    if frame.size != ring.n_plus_1:
        raise InputError("frame size does not match the ring")
    if frame.is_identity():
        return f
    images = []
    for row in frame.matrix:
        images.append(Polynomial(ring, {
            tuple(int(i == j) for i in range(ring.n_plus_1)): c
            for j, c in enumerate(row) if c
        }))
    return substitute(f, images)
