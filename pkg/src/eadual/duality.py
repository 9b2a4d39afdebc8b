"""Signed state and effect spaces, the unit and counit, and map extension.

Coordinates
-----------
``Stat±(A)`` lives in the linear span of the state polytope inside
``Q^|A|``.  The span gets the reduced row echelon basis of the state
vertices, so a state's coordinates are its values at the pivot elements.

``Eff±(X)`` is the space of affine functionals on ``X``.  ``X`` is charted
by ``y = (x - v0)[pivots]``, where ``v0`` is its lexicographically least
vertex and the pivots come from the echelon basis of ``X - v0``.  A
functional ``(c, b)`` acts by ``c.y + b``; the unit is ``(0, ..., 0, 1)``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, NamedTuple, Optional, Sequence

from .convexity import AffineMap, random_weights
from .effect_algebras import FiniteEffectAlgebra, StatePolytope, state_polytope
from .ordered_spaces import (
    InvalidSpace, PolyhedralBNS, PolyhedralOUS, base_of, unit_interval, zero_ous,
)
from .polyhedra import (
    QCone, QPolytope, affine_dependencies, contains, dd_convert, dot, dual_cone,
    inverse, is_zero, matmul, matvec, qvec, rank, row_basis, transpose, vadd,
    vneg, vscale, vsub, zeros,
)


class ExtensionError(ValueError):
    pass


class NotAffineError(ExtensionError):
    def __init__(self, relation, message="vertex images break an affine relation"):
        self.relation = relation
        super().__init__(f"{message}: {relation}")


class NotAdditiveError(ExtensionError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"oracle not additive at {witness}")


class UnitMismatchError(ExtensionError):
    pass


class OracleError(ExtensionError):
    pass


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class DualityReport:
    injective: bool
    order_embedding: bool
    surjective: bool
    surjective_reason: str = ""
    injective_witness: Optional[tuple] = None
    order_witness: Optional[tuple] = None
    notes: tuple = ()

    @property
    def iso(self) -> bool:
        return self.injective and self.order_embedding and self.surjective


# ---------------------------------------------------------------------------
# signed state spaces


@dataclass(frozen=True)
class SignedStateSpace:
    algebra: FiniteEffectAlgebra
    states: StatePolytope
    basis: tuple
    pivots: tuple
    space: PolyhedralBNS

    def coords(self, phi):
        """Span coordinates of a value vector ``phi``."""
        return tuple(phi[p] for p in self.pivots)

    def ambient(self, c):
        out = zeros(len(self.algebra))
        for ci, row in zip(c, self.basis):
            out = vadd(out, vscale(ci, row))
        return out


def stat_pm(A: FiniteEffectAlgebra, states: Optional[StatePolytope] = None) -> SignedStateSpace:
    """``Stat±(A)`` with base ``Stat(A)`` and trace ``phi -> phi(1)``."""
    S = states if states is not None else state_polytope(A)
    verts = S.polytope.vertices
    if not verts:
        return SignedStateSpace(A, S, (), (), PolyhedralBNS.zero_space())
    basis, piv = row_basis(list(verts), len(A))
    one = A.index(A.one)
    gens = [tuple(v[p] for p in piv) for v in verts]
    trace = tuple(row[one] for row in basis)
    space = PolyhedralBNS(QCone.from_generators(gens, dim=len(basis)), trace)
    return SignedStateSpace(A, S, basis, tuple(piv), space)


# ---------------------------------------------------------------------------
# signed effect spaces


@dataclass(frozen=True)
class SignedEffectSpace:
    carrier: QPolytope
    origin: tuple
    directions: tuple
    pivots: tuple
    space: PolyhedralOUS

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def unit(self):
        return self.space.unit

    def chart(self, x):
        d = vsub(x, self.origin)
        y = tuple(d[p] for p in self.pivots)
        back = self.origin
        for yi, row in zip(y, self.directions):
            back = vadd(back, vscale(yi, row))
        if back != tuple(x):
            raise ValueError(f"{tuple(x)} is outside the affine hull of the carrier")
        return y

    def lift(self, x):
        """``(chart(x), 1)``: evaluation at ``x`` as a functional on effects."""
        return self.chart(x) + (Fraction(1),)

    def evaluate(self, effect, x) -> Fraction:
        return dot(effect, self.lift(x))

    def effect_of(self, fn: Callable) -> tuple:
        """Coordinates of an affine function of the ambient point."""
        b = Fraction(fn(self.origin))
        c = []
        for row in self.directions:
            c.append(Fraction(fn(vadd(self.origin, row))) - b)
        return tuple(c) + (b,)

    def effects(self) -> QPolytope:
        """``F(X)`` as the polytope ``[0, u]``."""
        return unit_interval(self.space).polytope


def eff_pm(X: QPolytope) -> SignedEffectSpace:
    """``Eff±(X)``: affine functionals on ``X`` with the constant 1 as unit."""
    X = dd_convert(X)
    if not X.vertices:
        raise ValueError("the convex set is empty")
    v0 = X.vertices[0]
    dirs, piv = row_basis([vsub(v, v0) for v in X.vertices], X.dim)
    hs = [tuple(vsub(v, v0)[p] for p in piv) + (Fraction(1),) for v in X.vertices]
    cone = dd_convert(QCone.from_halfspaces(hs, dim=len(dirs) + 1))
    unit = zeros(len(dirs)) + (Fraction(1),)
    space = PolyhedralOUS(cone, unit)
    # strong order unit on every generator
    for g in space.cone.generators:
        assert space.positive(vsub(vscale(space.order_unit_bound(g), unit), g))
    return SignedEffectSpace(X, v0, dirs, tuple(piv), space)


# ---------------------------------------------------------------------------
# dual spaces and restriction maps


def dual_ous_to_bns(A: PolyhedralOUS) -> PolyhedralBNS:
    return PolyhedralBNS(dual_cone(A.cone), A.unit)


def dual_bns_to_ous(E: PolyhedralBNS) -> PolyhedralOUS:
    if E.dim == 0:
        return zero_ous()
    D = dual_cone(E.cone)
    if D.lines:
        raise InvalidSpace("the cone is not generating, so its dual is not pointed")
    return PolyhedralOUS(D, E.trace)


class RhoReport(NamedTuple):
    matrix: tuple
    inverse: tuple
    effects: SignedEffectSpace
    bijective: bool
    positive: bool
    positive_inverse: bool
    unital: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.positive and self.positive_inverse and self.unital


def restrict_rho(E: PolyhedralBNS) -> RhoReport:
    """Restriction of functionals on ``E`` to affine maps on its base."""
    B = base_of(E)
    if not B.vertices:
        raise ValueError("the base is empty")
    eff = eff_pm(B)
    R = tuple(eff.directions) + (eff.origin,)
    if len(R) != E.dim or rank(list(R), E.dim) != E.dim:
        raise ValueError("degenerate base: it does not span the space")
    Rinv = inverse(R)
    Estar = dual_bns_to_ous(E)
    pos = all(eff.space.positive(matvec(R, g)) for g in Estar.cone.generators)
    pos_inv = all(Estar.positive(matvec(Rinv, g)) for g in eff.space.cone.generators)
    unital = matvec(R, E.trace) == eff.unit
    return RhoReport(R, Rinv, eff, True, pos, pos_inv, unital)


def effect_pullback(src: SignedEffectSpace, tgt: SignedEffectSpace, f: AffineMap) -> tuple:
    """Matrix of ``e -> e . f`` from effects on ``tgt`` to effects on ``src``."""
    rows = []
    for j in range(tgt.dim):
        def fn(x, j=j):
            return dot(_unit_row(tgt.dim, j), tgt.lift(f(x)))
        rows.append(src.effect_of(fn))
    return transpose(rows)


def _unit_row(n, j):
    return tuple(Fraction(int(i == j)) for i in range(n))


# ---------------------------------------------------------------------------
# counit


class CounitResult(NamedTuple):
    images: dict
    values: dict
    effects: Optional[SignedEffectSpace]
    report: DualityReport


def counit(A: FiniteEffectAlgebra, states: Optional[StatePolytope] = None) -> CounitResult:
    """``a -> (phi -> phi(a))`` into ``F(Stat(A))`` with its verdicts.

    ``images`` holds effect coordinates; ``values`` holds the effect's values
    at the state vertices in canonical order.
    """
    S = states if states is not None else state_polytope(A)
    verts = S.polytope.vertices
    values = {a: tuple(phi[A.index(a)] for phi in verts) for a in A.elements}
    if not verts:
        note = "empty state space: F(empty) is taken to be the one-point algebra with 0 = 1"
        single = len(A) == 1
        pair = None if single else (A.elements[0], A.elements[1])
        report = DualityReport(
            injective=single, order_embedding=single, surjective=single,
            surjective_reason=note, injective_witness=pair, order_witness=pair, notes=(note,))
        return CounitResult({a: () for a in A.elements}, values, None, report)
    eff = eff_pm(S.polytope)
    images = {}
    for a in A.elements:
        k = A.index(a)
        images[a] = eff.effect_of(lambda x, k=k: x[k])
    seen: dict = {}
    inj_w = None
    for a in A.elements:
        if images[a] in seen and inj_w is None:
            inj_w = (seen[images[a]], a)
        seen.setdefault(images[a], a)
    order_w = None
    for a in A.elements:
        for b in A.elements:
            if eff.space.positive(vsub(images[b], images[a])) != A.leq(a, b):
                order_w = (a, b)
                break
        if order_w:
            break
    report = DualityReport(
        injective=inj_w is None, order_embedding=order_w is None, surjective=False,
        surjective_reason="finite algebra vs infinite interval",
        injective_witness=inj_w, order_witness=order_w)
    return CounitResult(images, values, eff, report)


# ---------------------------------------------------------------------------
# unit


class UnitMapResult(NamedTuple):
    images: dict
    effects: SignedEffectSpace
    dual: PolyhedralBNS
    base: QPolytope
    report: DualityReport


def unit_map(X: QPolytope) -> UnitMapResult:
    """``x -> (a -> a(x))`` into ``Stat(F(X))``, the base of ``Eff±(X)*``."""
    X = dd_convert(X)
    eff = eff_pm(X)
    dual = dual_ous_to_bns(eff.space)
    base = base_of(dual)
    images = {v: eff.lift(v) for v in X.vertices}
    img = list(images.values())
    inj_w = None
    if len(set(img)) != len(img):
        inv: dict = {}
        for v, w in images.items():
            if w in inv:
                inj_w = (inv[w], v)
                break
            inv[w] = v
    hull = dd_convert(QCone.from_generators(img, dim=eff.dim))
    order_ok = hull.halfspaces == dual.cone.halfspaces and hull.equalities == dual.cone.equalities
    onto = set(img) == set(base.vertices)
    report = DualityReport(
        injective=inj_w is None, order_embedding=order_ok, surjective=onto,
        surjective_reason="" if onto else "base vertices not hit",
        injective_witness=inj_w)
    return UnitMapResult(images, eff, dual, base, report)


# ---------------------------------------------------------------------------
# triangle identities


class TriangleReport(NamedTuple):
    states_checked: int
    states_ok: bool
    states_witness: Optional[tuple]
    effects_checked: int
    effects_ok: bool
    effects_witness: Optional[tuple]

    @property
    def ok(self) -> bool:
        return self.states_ok and self.effects_ok


def state_triangle(A: FiniteEffectAlgebra):
    """``Stat(eps_A) . eta_Stat(A) = id`` on every state vertex."""
    c = counit(A)
    verts = state_polytope(A).polytope.vertices
    for phi in verts:
        omega = c.effects.lift(phi)
        back = tuple(dot(omega, c.images[a]) for a in A.elements)
        if back != phi:
            return len(verts), False, phi
    return len(verts), True, None


def effect_triangle(X: QPolytope):
    """``F(eta_X) . eps_F(X) = id`` on the vertices of ``F(X)``."""
    u = unit_map(X)
    eff = u.effects
    deff = eff_pm(u.base)
    eta = AffineMap(tuple(_eta_matrix(eff)), tuple(_eta_offset(eff)))
    pull = effect_pullback(eff, deff, eta)
    gens = eff.effects().vertices
    for e in gens:
        e2 = deff.effect_of(lambda w, e=e: dot(w, e))
        if matvec(pull, e2) != e:
            return len(gens), False, e
    return len(gens), True, None


def _eta_matrix(eff: SignedEffectSpace):
    n = eff.carrier.dim
    rows = []
    for p in eff.pivots:
        rows.append(tuple(Fraction(int(i == p)) for i in range(n)))
    rows.append(zeros(n))
    return rows


def _eta_offset(eff: SignedEffectSpace):
    return tuple(-eff.origin[p] for p in eff.pivots) + (Fraction(1),)


def triangle_identities(A: Optional[FiniteEffectAlgebra] = None, X: Optional[QPolytope] = None) -> TriangleReport:
    sn, sok, sw = state_triangle(A) if A is not None else (0, True, None)
    en, eok, ew = effect_triangle(X) if X is not None else (0, True, None)
    return TriangleReport(sn, sok, sw, en, eok, ew)


# ---------------------------------------------------------------------------
# extension of base maps


class BaseMapExtension(NamedTuple):
    matrix: tuple
    positive: bool
    trace_preserving: bool
    agrees: bool
    unique: bool

    @property
    def ok(self) -> bool:
        return self.positive and self.trace_preserving and self.agrees and self.unique


def _independent_subset(vectors, dim):
    chosen, idx = [], []
    for i, v in enumerate(vectors):
        if rank(chosen + [v], dim) > len(chosen):
            chosen.append(v)
            idx.append(i)
    return idx


def extend_base_map(E: PolyhedralBNS, F: PolyhedralBNS, images) -> BaseMapExtension:
    """The linear map ``E -> F`` extending an affine map between the bases.

    ``images`` maps base vertices of ``E`` to points of the base of ``F``;
    a sequence is read in the canonical vertex order.
    """
    BE, BF = base_of(E), base_of(F)
    verts = list(BE.vertices)
    if isinstance(images, Mapping):
        missing = [v for v in verts if v not in images]
        if missing:
            raise ValueError(f"no image for base vertex {missing[0]}")
        imgs = [qvec(images[v]) for v in verts]
    else:
        imgs = [qvec(w) for w in images]
        if len(imgs) != len(verts):
            raise ValueError(f"{len(verts)} base vertices but {len(imgs)} images")
    if not verts:
        M = tuple(tuple() for _ in range(F.dim))
        return BaseMapExtension(M, True, True, True, True)
    for w in imgs:
        if len(w) != F.dim:
            raise ValueError(f"image {w} is not in dimension {F.dim}")
        if not contains(BF, w):
            raise ValueError(f"image {w} is outside the base of the target")
    for lam in affine_dependencies(verts):
        acc = zeros(F.dim)
        for l, w in zip(lam, imgs):
            acc = vadd(acc, vscale(l, w))
        if not is_zero(acc):
            raise NotAffineError(lam)
    idx = _independent_subset(verts, E.dim)
    if len(idx) != E.dim:
        raise ValueError("the base does not span the space")
    V = [verts[i] for i in idx]
    W = [imgs[i] for i in idx]
    M = matmul(transpose(W), inverse(transpose(V)))
    agrees = all(matvec(M, v) == w for v, w in zip(verts, imgs))
    positive = all(F.positive(matvec(M, g)) for g in E.cone.generators)
    trace_ok = matvec(transpose(M), F.trace) == E.trace
    unique = rank(verts, E.dim) == E.dim
    return BaseMapExtension(M, positive, trace_ok, agrees, unique)


# ---------------------------------------------------------------------------
# extension of interval morphisms


@dataclass(frozen=True)
class IntervalExtension:
    matrix: tuple
    basis: tuple
    unital: bool
    additive_pairs: int
    agreement_points: int
    agrees: bool
    positive: bool
    in_range: bool
    construction_agrees: bool
    notes: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return (self.unital and self.agrees and self.positive and self.in_range
                and self.construction_agrees)


def interval_basis(A: PolyhedralOUS) -> tuple:
    """Cone generators scaled into ``[0, u]``, greedily independent."""
    gens = [vscale(1 / A.order_unit_bound(g), g) for g in A.cone.generators]
    idx = _independent_subset(gens, A.dim)
    return tuple(gens[i] for i in idx)


def _random_interval_point(rng, verts):
    k = rng.randint(1, min(len(verts), 6))
    chosen = rng.sample(verts, k)
    acc = zeros(len(verts[0]))
    for v, w in zip(chosen, random_weights(rng, k)):
        acc = vadd(acc, vscale(w, v))
    return acc


def _call(oracle, x):
    try:
        y = oracle(tuple(x))
    except (KeyError, LookupError) as exc:
        raise OracleError(f"oracle undefined at {tuple(x)}") from exc
    return qvec(y)


def stagewise_extension(A: PolyhedralOUS, oracle, a):
    """Evaluate the two-stage extension ``g(x) = n f(x/n)``, ``h = g(a+) - g(a-)``."""
    def g(x):
        n = max(1, math.ceil(A.order_unit_bound(x)))
        return vscale(n, _call(oracle, vscale(Fraction(1, n), x)))
    alpha = A.order_unit_bound(vneg(a))
    pos = vadd(a, vscale(alpha, A.unit))
    neg = vscale(alpha, A.unit)
    return vsub(g(pos), g(neg))


def extend_interval_morphism(
    A: PolyhedralOUS,
    B: PolyhedralOUS,
    oracle: Callable,
    samples: int = 100,
    seed=0,
    basis: Optional[Sequence] = None,
    pairs: Optional[Sequence] = None,
    points: Optional[Sequence] = None,
) -> IntervalExtension:
    """Linear extension of an effect-algebra map ``[0,u_A] -> [0,u_B]``.

    ``oracle`` is called on rational points of the interval.  Additivity is
    checked on ``samples`` random orthogonal pairs (or on ``pairs``) and
    agreement with the extension on the sampled points (or on ``points``).
    """
    IA, IB = unit_interval(A), unit_interval(B)
    if _call(oracle, A.unit) != B.unit:
        raise UnitMismatchError(f"f(u) = {_call(oracle, A.unit)} but the target unit is {B.unit}")
    basis = tuple(qvec(e) for e in basis) if basis is not None else interval_basis(A)
    if len(basis) != A.dim or rank(list(basis), A.dim) != A.dim:
        raise ValueError("the basis does not span the space")
    for e in basis:
        if not IA.contains(e):
            raise ValueError(f"basis vector {e} is outside the unit interval")
    imgs = [_call(oracle, e) for e in basis]
    H = matmul(transpose(imgs), inverse(transpose(basis)))
    rng = random.Random(seed)
    if pairs is None:
        verts = list(IA.polytope.vertices)
        pairs = []
        for _ in range(samples):
            a1, b1 = _random_interval_point(rng, verts), _random_interval_point(rng, verts)
            t = Fraction(rng.randint(1, 63), 64)
            pairs.append((vscale(t, a1), vscale(1 - t, b1)))
    checked = 0
    for a, b in pairs:
        a, b = qvec(a), qvec(b)
        s = IA.sum(a, b)
        if s is None:
            raise ValueError(f"{a} and {b} are not orthogonal")
        if _call(oracle, s) != vadd(_call(oracle, a), _call(oracle, b)):
            raise NotAdditiveError((a, b))
        checked += 1
    if points is None:
        points = [p for ab in pairs for p in ab] + [A.unit] + list(basis)
    in_range = True
    for p in points:
        p = qvec(p)
        fp = _call(oracle, p)
        if not IB.contains(fp):
            in_range = False
        if matvec(H, p) != fp:
            _agreement_witness(IA, oracle, p)
            raise OracleError(f"oracle is additive on samples but disagrees with its extension at {p}")
    unital = matvec(H, A.unit) == B.unit
    positive = all(B.positive(matvec(H, g)) for g in A.cone.generators)
    construction = all(stagewise_extension(A, oracle, qvec(p)) == matvec(H, qvec(p)) for p in points[:20])
    return IntervalExtension(H, basis, unital, checked, len(points), True, positive,
                             in_range, construction)


def _agreement_witness(IA, oracle, p):
    """Look for a failing sum among halvings and multiples of ``p``."""
    for k in (2, 3, 4, 8):
        part = vscale(Fraction(1, k), p)
        for j in range(1, k):
            a, b = vscale(j, part), vscale(k - j, part)
            if _call(oracle, vadd(a, b)) != vadd(_call(oracle, a), _call(oracle, b)):
                raise NotAdditiveError((a, b))


__all__ = [
    "BaseMapExtension", "CounitResult", "DualityReport", "ExtensionError",
    "IntervalExtension", "NotAdditiveError", "NotAffineError", "OracleError",
    "RhoReport", "SignedEffectSpace", "SignedStateSpace", "TriangleReport",
    "UnitMapResult", "UnitMismatchError", "counit", "dual_bns_to_ous",
    "dual_ous_to_bns", "eff_pm", "effect_pullback", "effect_triangle",
    "extend_base_map", "extend_interval_morphism", "interval_basis",
    "stagewise_extension", "restrict_rho", "stat_pm", "state_triangle",
    "triangle_identities", "unit_map",
]
