"""The distribution monad and its algebras on polytopes."""

from __future__ import annotations

import random
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Optional, Sequence

from .polyhedra import QPolytope, contains, dd_convert, dot, qvec, vadd, vscale, zeros


class Distribution(Mapping):
    """Finitely supported probability weights; points are kept in sorted order.

    Points may be any hashable, sortable value: vectors, or other
    distributions when nesting.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, weights: Mapping):
        items = []
        for x, w in weights.items():
            w = Fraction(w)
            if w <= 0:
                raise ValueError(f"weight {w} at {x!r} is not positive")
            items.append((x, w))
        if sum(w for _, w in items) != 1:
            raise ValueError("weights do not sum to 1")
        items.sort(key=lambda kv: _sort_key(kv[0]))
        self._items = tuple(items)
        self._hash = hash(self._items)

    @classmethod
    def from_pairs(cls, pairs):
        acc: dict = {}
        for x, w in pairs:
            acc[x] = acc.get(x, Fraction(0)) + Fraction(w)
        return cls({x: w for x, w in acc.items() if w != 0})

    def __getitem__(self, x):
        for y, w in self._items:
            if y == x:
                return w
        raise KeyError(x)

    def __iter__(self):
        return (x for x, _ in self._items)

    def __len__(self):
        return len(self._items)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, Distribution):
            return self._items == other._items
        return NotImplemented

    def __lt__(self, other):
        return _sort_key(self) < _sort_key(other)

    @property
    def support(self):
        return tuple(x for x, _ in self._items)

    def __repr__(self):
        body = ", ".join(f"{_fmt(x)}: {w}" for x, w in self._items)
        return "{" + body + "}"


def _sort_key(x):
    if isinstance(x, Distribution):
        return (1, tuple((_sort_key(y), w) for y, w in x._items))
    return (0, x)


def _fmt(x):
    if isinstance(x, tuple):
        return "(" + ",".join(str(a) for a in x) + ")"
    return repr(x)


def d_unit(x) -> Distribution:
    if isinstance(x, (list, tuple)) and not isinstance(x, Distribution):
        x = qvec(x)
    return Distribution({x: 1})


def d_pushforward(f: Callable, phi: Distribution) -> Distribution:
    return Distribution.from_pairs((f(x), w) for x, w in phi.items())


def d_flatten(Phi: Distribution) -> Distribution:
    return Distribution.from_pairs((x, W * w) for inner, W in Phi.items() for x, w in inner.items())


def barycenter(phi: Distribution):
    pts = phi.support
    acc = zeros(len(pts[0]))
    for x, w in phi.items():
        acc = vadd(acc, vscale(w, x))
    return acc


def em_eval(P: QPolytope, phi: Distribution):
    """The algebra map of ``P``: a formal convex combination becomes a point."""
    for x in phi:
        if not contains(P, x):
            raise ValueError(f"support point {_fmt(x)} is outside the polytope")
    return barycenter(phi)


@dataclass(frozen=True)
class AffineMap:
    matrix: tuple
    offset: tuple

    def __post_init__(self):
        if any(len(r) != len(self.matrix[0]) for r in self.matrix):
            raise ValueError("ragged matrix")
        if len(self.matrix) != len(self.offset):
            raise ValueError("offset does not match the matrix")

    @classmethod
    def linear(cls, matrix):
        m = tuple(qvec(r) for r in matrix)
        return cls(m, zeros(len(m)))

    def __call__(self, x):
        return tuple(dot(r, x) + b for r, b in zip(self.matrix, self.offset))


# random sampling


def random_weights(rng: random.Random, k: int, max_den: int = 64) -> list:
    """Positive rational weights with common denominator at most ``max_den``."""
    den = rng.randint(k, max_den)
    cuts = sorted(rng.sample(range(1, den), k - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [den])]
    return [Fraction(p, den) for p in parts]


def random_point(rng: random.Random, P: QPolytope):
    verts = dd_convert(P).vertices
    k = rng.randint(1, min(len(verts), 6))
    chosen = rng.sample(verts, k)
    return barycenter(Distribution.from_pairs(zip(chosen, random_weights(rng, k))))


def random_distribution(rng: random.Random, sample_point: Callable, max_support: int = 6) -> Distribution:
    pts = []
    k = rng.randint(1, max_support)
    for _ in range(4 * k):
        p = sample_point()
        if p not in pts:
            pts.append(p)
        if len(pts) == k:
            break
    return Distribution.from_pairs(zip(pts, random_weights(rng, len(pts))))


class EMLawReport(NamedTuple):
    passed: bool
    trials: int
    law: Optional[str]
    counterexample: Optional[object]


def check_em_laws(P: QPolytope, trials: int, seed=0) -> EMLawReport:
    """Sample both algebra laws exactly on ``trials`` random instances."""
    P = dd_convert(P)
    if not P.vertices:
        raise ValueError("the polytope is empty")
    rng = random.Random(seed)
    alpha = lambda phi: em_eval(P, phi)  # noqa: E731
    for _ in range(trials):
        x = random_point(rng, P)
        if alpha(d_unit(x)) != x:
            return EMLawReport(False, trials, "unit", x)
        Phi = random_distribution(
            rng, lambda: random_distribution(rng, lambda: random_point(rng, P)), max_support=4
        )
        if alpha(d_pushforward(alpha, Phi)) != alpha(d_flatten(Phi)):
            return EMLawReport(False, trials, "multiplication", Phi)
    return EMLawReport(True, trials, None, None)


def mix(t, phi: Distribution, psi: Distribution) -> Distribution:
    """``t phi + (1 - t) psi`` as a distribution."""
    t = Fraction(t)
    if t == 1:
        return phi
    if t == 0:
        return psi
    return Distribution.from_pairs([(x, t * w) for x, w in phi.items()]
                                   + [(x, (1 - t) * w) for x, w in psi.items()])


def as_points(seq: Sequence) -> list:
    return [qvec(x) for x in seq]
