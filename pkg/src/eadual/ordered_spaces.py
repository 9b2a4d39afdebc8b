"""Ordered vector spaces at finite dimension.

Polyhedral order-unit and base-norm spaces sit on :class:`QCone`.  The
three non-closed planar cones used to separate the archimedean conditions
cannot be written as a ``QCone``; they are given as finite unions of sign
systems (:class:`PredicateCone`), and the same decision procedure handles
both kinds.

The decision procedure rests on one observation.  For a cone ``C`` with
order unit ``u`` the set ``S = {a : a <= u/n for all n}`` equals
``{a : eps*u - a in C for all small eps > 0}``, and for a sign system the
"small eps" condition is again a sign system, row by row.  Every question
in the appendix ("is there a nonzero infinitesimal?" and so on) is then
feasibility of a finite union of homogeneous sign systems, which double
description settles exactly.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

from .polyhedra import (
    INFINITE, ZERO_ON_RAY, DimensionMismatch, GaugeSymbol, QCone, QPolytope,
    _double_description, _to_int_row, contains, dd_convert, dot, gauge, is_zero,
    qvec, unit_vector, vadd, vneg, vscale, vsub, zeros,
)

RADIAL_NOTE = "polytopal balls are radially compact; bounded and compact coincide here"


class InvalidSpace(ValueError):
    pass


# ---------------------------------------------------------------------------
# polyhedral spaces


@dataclass(frozen=True)
class PolyhedralOUS:
    """Order-unit space ``(Q^dim, cone, unit)`` with a closed polyhedral cone."""

    cone: QCone
    unit: tuple

    def __post_init__(self):
        C = dd_convert(self.cone)
        object.__setattr__(self, "cone", C)
        object.__setattr__(self, "unit", qvec(self.unit))
        if len(self.unit) != C.dim:
            raise DimensionMismatch("unit does not match the cone dimension")
        if C.lines:
            raise InvalidSpace("cone is not pointed")
        if C.equalities:
            raise InvalidSpace("cone is not generating")
        for h in C.halfspaces:
            if dot(h, self.unit) <= 0:
                raise InvalidSpace("unit is not a strong order unit")

    @property
    def dim(self) -> int:
        return self.cone.dim

    def order_unit_bound(self, a) -> Fraction:
        """Least ``alpha >= 0`` with ``a <= alpha*u``."""
        return max([Fraction(0)] + [dot(h, a) / dot(h, self.unit) for h in self.cone.halfspaces])

    @cached_property
    def ball(self) -> QPolytope:
        """``[-u, u]``."""
        hs = []
        for h in self.cone.halfspaces:
            k = dot(h, self.unit)
            hs.append((h, k))
            hs.append((vneg(h), k))
        if not hs:
            return QPolytope(0, ((),), (), ())
        return dd_convert(QPolytope(self.dim, halfspaces=tuple(hs), equalities=()))

    def positive(self, v) -> bool:
        return contains(self.cone, v)


@dataclass(frozen=True)
class PolyhedralBNS:
    """Base-norm space ``(Q^dim, cone, trace)``; the trace acts by dot product."""

    cone: QCone
    trace: tuple

    def __post_init__(self):
        C = dd_convert(self.cone)
        object.__setattr__(self, "cone", C)
        object.__setattr__(self, "trace", qvec(self.trace))
        if len(self.trace) != C.dim:
            raise DimensionMismatch("trace does not match the cone dimension")
        if C.lines:
            raise InvalidSpace("cone is not pointed")
        for g in C.generators:
            if dot(self.trace, g) <= 0:
                raise InvalidSpace(f"trace is not strictly positive on generator {g}")

    @property
    def dim(self) -> int:
        return self.cone.dim

    def positive(self, v) -> bool:
        return contains(self.cone, v)

    @classmethod
    def zero_space(cls) -> "PolyhedralBNS":
        return cls(QCone(0, (), (), (), ()), ())


def zero_ous() -> PolyhedralOUS:
    return PolyhedralOUS(QCone(0, (), (), (), ()), ())


def base_of(E: PolyhedralBNS) -> QPolytope:
    if not E.cone.generators:
        return QPolytope.empty(E.dim)
    pts = [vscale(1 / dot(E.trace, g), g) for g in E.cone.generators]
    return dd_convert(QPolytope.from_vertices(pts, E.dim))


def unit_ball_of(E: PolyhedralBNS) -> QPolytope:
    B = base_of(E)
    if not B.vertices:
        raise ValueError("the base is empty")
    return dd_convert(QPolytope.from_vertices(list(B.vertices) + [vneg(v) for v in B.vertices], E.dim))


class IntervalEA:
    """The unit interval ``[0, u]`` with its partial sum, kept symbolic."""

    def __init__(self, space: PolyhedralOUS):
        self.space = space

    @property
    def unit(self):
        return self.space.unit

    @property
    def zero(self):
        return zeros(self.space.dim)

    def contains(self, a) -> bool:
        a = tuple(a)
        return self.space.positive(a) and self.space.positive(vsub(self.unit, a))

    def _check(self, a):
        if not self.contains(a):
            raise ValueError(f"{a} is not in the unit interval")

    def orth(self, a):
        self._check(a)
        return vsub(self.unit, a)

    def orthogonal(self, a, b) -> bool:
        self._check(a)
        self._check(b)
        return self.space.positive(vsub(self.unit, vadd(a, b)))

    def sum(self, a, b):
        """``a + b`` when ``a + b <= u``, else ``None``."""
        return vadd(a, b) if self.orthogonal(a, b) else None

    def leq(self, a, b) -> bool:
        return self.space.positive(vsub(b, a))

    @cached_property
    def polytope(self) -> QPolytope:
        hs = []
        for h in self.space.cone.halfspaces:
            hs.append((vneg(h), Fraction(0)))
            hs.append((h, dot(h, self.unit)))
        if not hs:
            return QPolytope(0, ((),), (), ())
        return dd_convert(QPolytope(self.space.dim, halfspaces=tuple(hs), equalities=()))


def unit_interval(space: PolyhedralOUS) -> IntervalEA:
    return IntervalEA(space)


# ---------------------------------------------------------------------------
# sign systems


@dataclass(frozen=True)
class SignPiece:
    """``{x : g.x >= 0 (ge), g.x > 0 (gt), g.x == 0 (eq)}``."""

    ge: tuple = ()
    gt: tuple = ()
    eq: tuple = ()

    def contains(self, x) -> bool:
        return (all(dot(g, x) >= 0 for g in self.ge) and all(dot(g, x) > 0 for g in self.gt)
                and all(dot(g, x) == 0 for g in self.eq))

    def __and__(self, other: "SignPiece") -> "SignPiece":
        return SignPiece(self.ge + other.ge, self.gt + other.gt, self.eq + other.eq)

    def negated(self) -> "SignPiece":
        return SignPiece(*(tuple(vneg(g) for g in rows) for rows in (self.ge, self.gt, self.eq)))

    def complement(self) -> "PredicateCone":
        out = [SignPiece(gt=(vneg(g),)) for g in self.ge]
        out += [SignPiece(ge=(vneg(g),)) for g in self.gt]
        out += [SignPiece(gt=(vscale(s, g),)) for g in self.eq for s in (1, -1) if not is_zero(g)]
        return PredicateCone(tuple(out))

    def feasible_point(self, dim: int):
        """A point of the piece, or ``None``; found by double description."""
        eqs = [_to_int_row(g) for g in self.eq if not is_zero(g)]
        ineqs = sorted({_to_int_row(g) for g in self.ge + self.gt})
        for g in self.gt:
            if is_zero(g):
                return None
        rays, _ = _double_description(dim, ineqs, eqs)
        rays = [tuple(Fraction(x) for x in r) for r in rays]
        point = zeros(dim)
        for g in self.gt:
            r = next((r for r in rays if dot(g, r) > 0), None)
            if r is None:
                return None
            point = vadd(point, r)
        return point


@dataclass(frozen=True)
class PredicateCone:
    pieces: tuple

    def contains(self, x) -> bool:
        return any(p.contains(x) for p in self.pieces)

    def negated(self) -> "PredicateCone":
        return PredicateCone(tuple(p.negated() for p in self.pieces))

    def __and__(self, other: "PredicateCone") -> "PredicateCone":
        return PredicateCone(tuple(p & q for p in self.pieces for q in other.pieces))

    def complement(self) -> "PredicateCone":
        out = PredicateCone((SignPiece(),))
        for p in self.pieces:
            out = out & p.complement()
        return out

    def feasible_point(self, dim: int):
        for p in self.pieces:
            x = p.feasible_point(dim)
            if x is not None:
                return x
        return None

    @classmethod
    def from_qcone(cls, C: QCone) -> "PredicateCone":
        C = dd_convert(C)
        return cls((SignPiece(ge=tuple(C.halfspaces), eq=tuple(C.equalities)),))


def nonzero(dim: int) -> PredicateCone:
    return PredicateCone(tuple(SignPiece(gt=(vscale(s, unit_vector(dim, i)),))
                               for i in range(dim) for s in (1, -1)))


def eventually_below(C: PredicateCone, u) -> PredicateCone:
    """``{a : eps*u - a in C for all sufficiently small eps > 0}``."""
    out = []
    for p in C.pieces:
        ge, gt = [], []
        dropped = False
        for g in p.ge:
            (ge if dot(g, u) >= 0 else gt).append(vneg(g))
        for g in p.gt:
            (ge if dot(g, u) > 0 else gt).append(vneg(g))
        for g in p.eq:
            if dot(g, u) != 0:
                dropped = True
                break
        if not dropped:
            out.append(SignPiece(tuple(ge), tuple(gt), tuple(p.eq)))
    return PredicateCone(tuple(out))


# ---------------------------------------------------------------------------
# the appendix planes


class Variant(enum.Enum):
    LexPlane = "LexPlane"
    OpenHalfPlane = "OpenHalfPlane"
    OpenQuadrant = "OpenQuadrant"


_X, _Y = (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))
_ORIGIN = SignPiece(eq=(_X, _Y))

_VARIANTS = {
    Variant.LexPlane: (PredicateCone((SignPiece(ge=(_X,), eq=(_Y,)), SignPiece(gt=(_Y,)))), (0, 1)),
    Variant.OpenHalfPlane: (PredicateCone((SignPiece(gt=(_Y,)), _ORIGIN)), (0, 1)),
    Variant.OpenQuadrant: (PredicateCone((_ORIGIN, SignPiece(gt=(_X, _Y)))), (1, 1)),
}


@dataclass(frozen=True)
class PredicateOUS2:
    """One of the three planar order-unit spaces with a non-closed cone."""

    variant: Variant

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))

    dim = 2

    @property
    def cone(self) -> PredicateCone:
        return _VARIANTS[self.variant][0]

    @property
    def unit(self):
        return qvec(_VARIANTS[self.variant][1])

    def positive(self, v) -> bool:
        return self.cone.contains(tuple(Fraction(a) for a in v))

    def norm_closed_form(self, v) -> Fraction:
        x, y = (abs(Fraction(a)) for a in v)
        return max(x, y) if self.variant is Variant.OpenQuadrant else y


# ---------------------------------------------------------------------------
# generic queries


def _check_dim(space, *vs):
    for v in vs:
        if len(v) != space.dim:
            raise DimensionMismatch(f"vector of dimension {len(v)} in a {space.dim}-dimensional space")


def order_leq(space, x, y) -> bool:
    x, y = qvec(x), qvec(y)
    _check_dim(space, x, y)
    return space.positive(vsub(y, x))


def norm(space, x):
    """Order-unit norm or base norm; ``ZERO_ON_RAY`` flags a seminorm kernel."""
    x = qvec(x)
    _check_dim(space, x)
    if isinstance(space, PredicateOUS2):
        v = space.norm_closed_form(x)
        return ZERO_ON_RAY if v == 0 and not is_zero(x) else v
    if isinstance(space, PolyhedralOUS):
        ball = space.ball
    elif isinstance(space, PolyhedralBNS):
        if not space.cone.generators:
            if is_zero(x):
                return Fraction(0)
            raise ValueError("the zero space only contains 0")
        ball = unit_ball_of(space)
    else:
        raise TypeError(f"not an ordered space: {space!r}")
    value = gauge(ball, x)
    if value is INFINITE:
        raise ValueError(f"{x} is outside the span of the unit ball")
    return value


def norm_value(v) -> Fraction:
    """Numeric value of a norm result (the seminorm kernel reads as 0)."""
    return Fraction(0) if v is ZERO_ON_RAY else v


def positive_cone(space) -> PredicateCone:
    if isinstance(space, PredicateOUS2):
        return space.cone
    return PredicateCone.from_qcone(space.cone)


class ArchKind(enum.Enum):
    Archimedean = "Archimedean"
    AlmostArchimedeanOnly = "AlmostArchimedeanOnly"
    NoInfinitesimalsOnly = "NoInfinitesimalsOnly"
    HasInfinitesimals = "HasInfinitesimals"

    def __str__(self):
        return self.value


class ArchClass(NamedTuple):
    kind: ArchKind
    witness: Optional[tuple]


class Decision(NamedTuple):
    holds: bool
    witness: Optional[tuple]


def _candidates(dim: int):
    """Small test vectors, axis directions first."""
    axes = [vscale(s, unit_vector(dim, i)) for i in range(dim) for s in (1, -1)]
    yield from axes
    for v in itertools.product((1, -1, 0), repeat=dim):
        v = qvec(v)
        if not is_zero(v) and v not in axes:
            yield v


def _witness(region: PredicateCone, dim: int):
    for v in _candidates(dim):
        if region.contains(v):
            return v
    return region.feasible_point(dim)


def _below_unit(space) -> PredicateCone:
    return eventually_below(positive_cone(space), space.unit)


def is_archimedean(space) -> Decision:
    """``a <= u/n`` for every n forces ``a <= 0``; a witness refutes it."""
    S = _below_unit(space)
    bad = S & positive_cone(space).negated().complement()
    w = _witness(bad, space.dim)
    return Decision(w is None, w)


def is_almost_archimedean(space) -> Decision:
    S = _below_unit(space)
    bad = S & S.negated() & nonzero(space.dim)
    w = _witness(bad, space.dim)
    return Decision(w is None, w)


def has_no_nonzero_infinitesimals(space) -> Decision:
    S = _below_unit(space)
    bad = S & positive_cone(space) & nonzero(space.dim)
    w = _witness(bad, space.dim)
    return Decision(w is None, w)


def automatic_linearity(space) -> Decision:
    """Whether positive unital additive maps into ``space`` must be linear.

    This is the almost archimedean condition.
    """
    return is_almost_archimedean(space)


def classify_archimedean(space) -> ArchClass:
    inf = has_no_nonzero_infinitesimals(space)
    if not inf.holds:
        return ArchClass(ArchKind.HasInfinitesimals, inf.witness)
    almost = is_almost_archimedean(space)
    if not almost.holds:
        return ArchClass(ArchKind.NoInfinitesimalsOnly, almost.witness)
    arch = is_archimedean(space)
    if not arch.holds:
        return ArchClass(ArchKind.AlmostArchimedeanOnly, arch.witness)
    return ArchClass(ArchKind.Archimedean, None)


def orthant_ous(dim: int, unit: Optional[Sequence] = None) -> PolyhedralOUS:
    return PolyhedralOUS(QCone.orthant(dim), unit if unit is not None else (1,) * dim)


def simplex_bns(dim: int) -> PolyhedralBNS:
    return PolyhedralBNS(QCone.orthant(dim), (1,) * dim)


__all__ = [
    "ArchClass", "ArchKind", "Decision", "GaugeSymbol", "IntervalEA", "InvalidSpace",
    "PolyhedralBNS", "PolyhedralOUS", "PredicateCone", "PredicateOUS2", "RADIAL_NOTE",
    "SignPiece", "Variant", "automatic_linearity", "base_of", "classify_archimedean",
    "eventually_below", "has_no_nonzero_infinitesimals", "is_almost_archimedean",
    "is_archimedean", "nonzero", "norm", "norm_value", "order_leq", "orthant_ous",
    "positive_cone", "simplex_bns", "unit_ball_of", "unit_interval", "zero_ous",
]
