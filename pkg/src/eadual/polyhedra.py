"""Exact rational linear algebra and polyhedral geometry.

Scalars are :class:`fractions.Fraction`; vectors are plain tuples of
fractions.  Polytopes and cones carry a vertex/generator description, a
halfspace description, or both; :func:`dd_convert` fills in the missing one
with the double description method and canonicalizes both.

The double description core works on primitive integer vectors, which keeps
the arithmetic exact and fast enough for the desk-scale objects used here.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence, Union

QVector = tuple  # tuple[Fraction, ...]

Rational = Union[int, Fraction, str]


class DimensionMismatch(ValueError):
    pass


class UnboundedPolyhedronError(ValueError):
    """Raised when a halfspace description does not define a bounded set."""


# ---------------------------------------------------------------------------
# scalars and vectors


def q(x: Rational) -> Fraction:
    """Parse an exact rational; floats are refused rather than rounded."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE"):
            raise ValueError(f"not an exact rational: {x!r}")
        num, _, den = s.partition("/")
        n, d = int(num), int(den) if den else 1
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {x!r}")
        return Fraction(n, d)
    raise TypeError(f"not an exact rational: {x!r}")


def qvec(xs: Iterable[Rational]) -> QVector:
    return tuple(q(x) for x in xs)


def zeros(n: int) -> QVector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> QVector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"dimension {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u: Sequence, v: Sequence) -> QVector:
    if len(u) != len(v):
        raise DimensionMismatch(f"dimension {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> QVector:
    if len(u) != len(v):
        raise DimensionMismatch(f"dimension {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> QVector:
    return tuple(c * a for a in v)


def vneg(v: Sequence) -> QVector:
    return tuple(-a for a in v)


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def matvec(matrix: Sequence[Sequence], v: Sequence) -> QVector:
    return tuple(dot(row, v) for row in matrix)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    cols = list(zip(*b)) if b else []
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def transpose(m: Sequence[Sequence], ncols: Optional[int] = None) -> tuple:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(tuple(col) for col in zip(*m))


def fmt_q(x: Fraction) -> str:
    return str(x)


def fmt_vec(v: Sequence) -> str:
    return "(" + ",".join(str(a) for a in v) + ")"


# ---------------------------------------------------------------------------
# elimination


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    for r in m:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)} in a {ncols}-column matrix")
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: Optional[int] = None) -> int:
    if not rows:
        return 0
    return len(rref(rows, len(rows[0]) if ncols is None else ncols)[1])


def _leading_positive(v: Sequence[Fraction]) -> QVector:
    for a in v:
        if a != 0:
            return tuple(v) if a > 0 else vneg(v)
    return tuple(v)


def solve_linear(
    matrix: Sequence[Sequence], rhs: Sequence, ncols: Optional[int] = None
) -> tuple[Optional[QVector], list[QVector]]:
    """Solve ``matrix @ x = rhs`` exactly.

    Returns one particular solution (free variables set to zero, or ``None``
    when the system is inconsistent) together with a basis of the kernel.
    Kernel vectors are scaled so their first nonzero entry is positive.
    """
    if ncols is None:
        if not matrix:
            raise DimensionMismatch("ncols is required for an empty matrix")
        ncols = len(matrix[0])
    if len(rhs) != len(matrix):
        raise DimensionMismatch(f"{len(matrix)} rows but rhs of length {len(rhs)}")
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for row in aug:
        if len(row) != ncols + 1:
            raise DimensionMismatch("ragged matrix")
    red, piv = rref(aug, ncols + 1)
    pivot_cols = [p for p in piv if p < ncols]
    free = [c for c in range(ncols) if c not in pivot_cols]
    kernel = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            if p < ncols:
                v[p] = -row[f]
        kernel.append(_leading_positive(v))
    if ncols in piv:
        return None, kernel
    x = [Fraction(0)] * ncols
    for row, p in zip(red, piv):
        x[p] = row[ncols]
    return tuple(x), kernel


def inverse(m: Sequence[Sequence]) -> tuple:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    red, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def row_basis(vectors: Sequence[Sequence], dim: int) -> tuple[tuple[QVector, ...], list[int]]:
    """Canonical basis (RREF rows) of the span of ``vectors`` and its pivots."""
    red, piv = rref(vectors, dim) if vectors else ([], [])
    return tuple(tuple(r) for r in red), piv


# ---------------------------------------------------------------------------
# integer helpers for the double description core


def _to_int_row(v: Sequence) -> tuple[int, ...]:
    """Positive rescaling of a rational vector to a primitive integer vector."""
    den = 1
    for a in v:
        a = Fraction(a)
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(Fraction(a) * den) for a in v]
    return _primitive(ints)


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for a in v:
        g = gcd(g, a)
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


def _idot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _double_description(
    dim: int, ineqs: Sequence[tuple[int, ...]], eqs: Sequence[tuple[int, ...]]
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Extreme rays and a lineality basis of ``{x : A x >= 0, E x = 0}``.

    Constraints are inserted one at a time (equalities first, then the
    inequalities in the given order).  Rays are kept modulo the current
    lineality space; adjacency uses the combinatorial zero-set test.
    """
    lines: list[tuple[int, ...]] = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: list[tuple[int, ...]] = []
    zsets: list[frozenset] = []
    n_seen = 0

    def insert(a: tuple[int, ...], equality: bool) -> None:
        nonlocal lines, rays, zsets, n_seen
        idx = None if equality else n_seen
        if not equality:
            n_seen += 1
        j = next((i for i, l in enumerate(lines) if _idot(a, l) != 0), None)
        if j is not None:
            l0 = lines.pop(j)
            s = _idot(a, l0)
            if s < 0:
                l0, s = tuple(-x for x in l0), -s
            new_lines = []
            for l in lines:
                t = _idot(a, l)
                if t:
                    l = _primitive([s * x - t * y for x, y in zip(l, l0)])
                new_lines.append(l)
            lines = new_lines
            new_rays, new_z = [], []
            for r, z in zip(rays, zsets):
                t = _idot(a, r)
                if t:
                    r = _primitive([s * x - t * y for x, y in zip(r, l0)])
                new_rays.append(r)
                new_z.append(z if idx is None else z | {idx})
            if not equality:
                new_rays.append(l0)
                new_z.append(frozenset(range(idx)))
            rays, zsets = new_rays, new_z
            return
        vals = [_idot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        new_rays, new_z = [], []
        for i, v in enumerate(vals):
            if v == 0:
                new_rays.append(rays[i])
                new_z.append(zsets[i] if idx is None else zsets[i] | {idx})
            elif v > 0 and not equality:
                new_rays.append(rays[i])
                new_z.append(zsets[i])
        for p in pos:
            for n in neg:
                common = zsets[p] & zsets[n]
                if any(
                    k != p and k != n and common <= zsets[k] for k in range(len(rays))
                ):
                    continue
                vp, vn = vals[p], vals[n]
                c = _primitive([vp * x - vn * y for x, y in zip(rays[n], rays[p])])
                new_rays.append(c)
                new_z.append(common if idx is None else common | {idx})
        rays, zsets = new_rays, new_z

    for a in eqs:
        insert(a, True)
    for a in ineqs:
        insert(a, False)
    return rays, lines


# ---------------------------------------------------------------------------
# canonical forms


def _canonical_lines(lines: Sequence[Sequence], dim: int) -> tuple[tuple[QVector, ...], list[int]]:
    red, piv = row_basis(lines, dim)
    return tuple(_as_q(_to_int_row(r)) for r in red), piv


def _as_q(v: Sequence[int]) -> QVector:
    return tuple(Fraction(a) for a in v)


def _reduce_mod(v: Sequence, basis: Sequence[QVector], pivots: Sequence[int]) -> list[Fraction]:
    """Subtract multiples of RREF-shaped basis rows to clear their pivot columns."""
    w = [Fraction(a) for a in v]
    for row, p in zip(basis, pivots):
        if w[p] != 0:
            f = w[p] / row[p]
            w = [a - f * b for a, b in zip(w, row)]
    return w


def _canonical_rays(
    rays: Iterable[Sequence], line_basis: Sequence[QVector], pivots: Sequence[int]
) -> list[QVector]:
    out = set()
    for r in rays:
        w = _reduce_mod(r, line_basis, pivots)
        if is_zero(w):
            continue
        out.add(_as_q(_to_int_row(w)))
    return sorted(out)


Halfspace = tuple  # (normal: QVector, offset: Fraction)


def _canonical_equalities(eqs: Sequence[Halfspace], dim: int) -> tuple[tuple[Halfspace, ...], list[int], bool]:
    """RREF of the augmented rows ``[normal | offset]``; flags inconsistency."""
    if not eqs:
        return (), [], False
    red, piv = rref([tuple(n) + (b,) for n, b in eqs], dim + 1)
    if dim in piv:
        return (), [], True
    rows = tuple((tuple(r[:dim]), r[dim]) for r in red)
    return rows, piv, False


def _canonical_halfspace(normal: Sequence, offset: Fraction) -> Halfspace:
    den = 1
    for a in normal:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in normal]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return tuple(Fraction(a // g) for a in ints), Fraction(offset) * den / g


# ---------------------------------------------------------------------------
# polytopes


@dataclass(frozen=True)
class QPolytope:
    """A bounded polyhedron in ``Q^dim``.

    ``halfspaces`` holds pairs ``(normal, offset)`` meaning ``normal . x <=
    offset``; ``equalities`` holds pairs meaning ``normal . x == offset``.
    Either description may be ``None`` until :func:`dd_convert` computes it.
    """

    dim: int
    vertices: Optional[tuple[QVector, ...]] = None
    halfspaces: Optional[tuple[Halfspace, ...]] = None
    equalities: Optional[tuple[Halfspace, ...]] = None

    @classmethod
    def from_vertices(cls, points: Iterable[Sequence[Rational]], dim: Optional[int] = None) -> "QPolytope":
        pts = tuple(qvec(p) for p in points)
        if dim is None:
            if not pts:
                raise ValueError("dim is required for an empty vertex list")
            dim = len(pts[0])
        for p in pts:
            if len(p) != dim:
                raise DimensionMismatch(f"point {fmt_vec(p)} not in dimension {dim}")
        return cls(dim, vertices=pts)

    @classmethod
    def from_halfspaces(
        cls,
        halfspaces: Iterable[tuple[Sequence[Rational], Rational]],
        equalities: Iterable[tuple[Sequence[Rational], Rational]] = (),
        dim: Optional[int] = None,
    ) -> "QPolytope":
        hs = tuple((qvec(n), q(b)) for n, b in halfspaces)
        es = tuple((qvec(n), q(b)) for n, b in equalities)
        if dim is None:
            first = hs[0] if hs else es[0] if es else None
            if first is None:
                raise ValueError("dim is required without constraints")
            dim = len(first[0])
        for n, _ in hs + es:
            if len(n) != dim:
                raise DimensionMismatch(f"normal {fmt_vec(n)} not in dimension {dim}")
        return cls(dim, halfspaces=hs, equalities=es)

    @classmethod
    def empty(cls, dim: int) -> "QPolytope":
        return cls(dim, vertices=(), halfspaces=((zeros(dim), Fraction(-1)),), equalities=())

    @property
    def complete(self) -> bool:
        return self.vertices is not None and self.halfspaces is not None

    def is_empty(self) -> bool:
        return len(dd_convert(self).vertices) == 0

    def __repr__(self) -> str:
        head = f"QPolytope(dim={self.dim}"
        if self.vertices is not None:
            head += ", vertices=[" + ", ".join(fmt_vec(v) for v in self.vertices) + "]"
        if self.halfspaces is not None:
            head += f", {len(self.halfspaces)} halfspaces, {len(self.equalities or ())} equalities"
        return head + ")"


def _hrep_to_vertices(dim: int, hs: Sequence[Halfspace], es: Sequence[Halfspace]) -> list[QVector]:
    ineq = sorted({_to_int_row((b,) + vneg(n)) for n, b in hs} | {_to_int_row((1,) + (0,) * dim)})
    eq = sorted({_to_int_row((b,) + vneg(n)) for n, b in es if not (is_zero(n) and b == 0)})
    rays, lines = _double_description(dim + 1, ineq, eq)
    verts = sorted({tuple(Fraction(x, r[0]) for x in r[1:]) for r in rays if r[0] > 0})
    if verts and (lines or any(r[0] == 0 for r in rays)):
        raise UnboundedPolyhedronError("halfspace description is unbounded")
    return verts


def _vertices_to_hrep(dim: int, points: Sequence[QVector]) -> tuple[tuple[Halfspace, ...], tuple[Halfspace, ...]]:
    rows = sorted({_to_int_row((1,) + tuple(p)) for p in points})
    rays, lines = _double_description(dim + 1, rows, [])
    eqs, piv, bad = _canonical_equalities([(tuple(Fraction(x) for x in l[1:]), Fraction(-l[0])) for l in lines], dim)
    assert not bad
    eq_basis = [n + (b,) for n, b in eqs]
    eq_piv = piv
    out = set()
    for r in rays:
        normal = tuple(Fraction(-x) for x in r[1:])
        w = _reduce_mod(normal + (Fraction(r[0]),), eq_basis, eq_piv)
        n, b = tuple(w[:dim]), w[dim]
        if is_zero(n):
            continue
        out.add(_canonical_halfspace(n, b))
    return tuple(sorted(out)), eqs


def _is_vertex(p: QVector, hs: Sequence[Halfspace], es: Sequence[Halfspace], dim: int) -> bool:
    tight = [n for n, b in hs if dot(n, p) == b] + [n for n, _ in es]
    return rank(tight, dim) == dim if tight else dim == 0


@lru_cache(maxsize=4096)
def dd_convert(shape):
    """Return ``shape`` with both descriptions present, irredundant, sorted.

    Works on :class:`QPolytope` and :class:`QCone`.  An infeasible halfspace
    description yields :meth:`QPolytope.empty`; an unbounded one raises
    :class:`UnboundedPolyhedronError`.
    """
    if isinstance(shape, QCone):
        return _cone_convert(shape)
    P = shape
    dim = P.dim
    if P.complete:
        return P
    if P.vertices is None:
        verts = _hrep_to_vertices(dim, P.halfspaces, P.equalities or ())
        if not verts:
            return QPolytope.empty(dim)
        hs, es = _vertices_to_hrep(dim, verts)
        return QPolytope(dim, tuple(verts), hs, es)
    pts = sorted(set(P.vertices))
    if not pts:
        return QPolytope.empty(dim)
    hs, es = _vertices_to_hrep(dim, pts)
    verts = tuple(p for p in pts if _is_vertex(p, hs, es, dim))
    return QPolytope(dim, verts, hs, es)


# ---------------------------------------------------------------------------
# cones


@dataclass(frozen=True)
class QCone:
    """A polyhedral cone ``{sum a_i g_i + sum b_j l_j : a_i >= 0}``.

    The halfspace side reads ``normal . x >= 0`` for ``halfspaces`` and
    ``normal . x == 0`` for ``equalities``.  ``lines`` spans the lineality
    space; it is empty exactly when the cone is pointed.
    """

    dim: int
    generators: Optional[tuple[QVector, ...]] = None
    lines: Optional[tuple[QVector, ...]] = None
    halfspaces: Optional[tuple[QVector, ...]] = None
    equalities: Optional[tuple[QVector, ...]] = None

    @classmethod
    def from_generators(
        cls, generators: Iterable[Sequence[Rational]], lines: Iterable[Sequence[Rational]] = (), dim: Optional[int] = None
    ) -> "QCone":
        gs = tuple(qvec(g) for g in generators)
        ls = tuple(qvec(l) for l in lines)
        if dim is None:
            if not (gs or ls):
                raise ValueError("dim is required for a cone without generators")
            dim = len((gs or ls)[0])
        for v in gs + ls:
            if len(v) != dim:
                raise DimensionMismatch(f"generator {fmt_vec(v)} not in dimension {dim}")
        return cls(dim, generators=gs, lines=ls)

    @classmethod
    def from_halfspaces(
        cls, halfspaces: Iterable[Sequence[Rational]], equalities: Iterable[Sequence[Rational]] = (), dim: Optional[int] = None
    ) -> "QCone":
        hs = tuple(qvec(h) for h in halfspaces)
        es = tuple(qvec(e) for e in equalities)
        if dim is None:
            if not (hs or es):
                raise ValueError("dim is required for a cone without constraints")
            dim = len((hs or es)[0])
        for v in hs + es:
            if len(v) != dim:
                raise DimensionMismatch(f"normal {fmt_vec(v)} not in dimension {dim}")
        return cls(dim, halfspaces=hs, equalities=es)

    @classmethod
    def orthant(cls, dim: int) -> "QCone":
        return dd_convert(cls.from_generators([unit_vector(dim, i) for i in range(dim)], dim=dim))

    @property
    def complete(self) -> bool:
        return self.generators is not None and self.halfspaces is not None

    def is_pointed(self) -> bool:
        return not dd_convert(self).lines

    def is_full_dimensional(self) -> bool:
        return not dd_convert(self).equalities

    def __repr__(self) -> str:
        parts = [f"QCone(dim={self.dim}"]
        if self.generators is not None:
            parts.append("generators=[" + ", ".join(fmt_vec(g) for g in self.generators) + "]")
            if self.lines:
                parts.append("lines=[" + ", ".join(fmt_vec(g) for g in self.lines) + "]")
        if self.halfspaces is not None:
            parts.append(f"{len(self.halfspaces)} halfspaces")
        return ", ".join(parts) + ")"


def _cone_hrep_from_generators(dim, gens, lines):
    rows = sorted({_to_int_row(g) for g in gens if not is_zero(g)})
    eqs = sorted({_to_int_row(l) for l in lines if not is_zero(l)})
    rays, lin = _double_description(dim, rows, eqs)
    eq_basis, eq_piv = _canonical_lines(lin, dim)
    hs = _canonical_rays(rays, eq_basis, eq_piv)
    return tuple(hs), eq_basis


def _cone_convert(C: QCone) -> QCone:
    dim = C.dim
    if C.complete:
        return C
    if C.generators is None:
        rows = sorted({_to_int_row(h) for h in C.halfspaces if not is_zero(h)})
        eqs = sorted({_to_int_row(e) for e in C.equalities or () if not is_zero(e)})
        rays, lin = _double_description(dim, rows, eqs)
        gens_in, lines_in = [_as_q(r) for r in rays], [_as_q(l) for l in lin]
    else:
        gens_in, lines_in = list(C.generators), list(C.lines or ())
    line_basis, piv = _canonical_lines(lines_in, dim)
    hs, eqs = _cone_hrep_from_generators(dim, gens_in, line_basis)
    gens = []
    target = dim - len(line_basis) - 1
    for g in _canonical_rays(gens_in, line_basis, piv):
        tight = [h for h in hs if dot(h, g) == 0] + list(eqs)
        if (rank(tight, dim) if tight else 0) == target:
            gens.append(g)
    return QCone(dim, tuple(gens), line_basis, hs, eqs)


def dual_cone(cone: QCone) -> QCone:
    """``{phi : phi . x >= 0 for all x in cone}``, fully converted."""
    C = dd_convert(cone)
    D = QCone(C.dim, halfspaces=C.generators, equalities=C.lines)
    return dd_convert(D)


# ---------------------------------------------------------------------------
# queries


def contains(shape, point: Sequence) -> bool:
    p = tuple(point)
    if len(p) != shape.dim:
        raise DimensionMismatch(f"point of dimension {len(p)} in a {shape.dim}-dimensional shape")
    S = dd_convert(shape)
    if isinstance(S, QCone):
        return all(dot(h, p) >= 0 for h in S.halfspaces) and all(dot(e, p) == 0 for e in S.equalities)
    if not S.vertices:
        return False
    return all(dot(n, p) <= b for n, b in S.halfspaces) and all(dot(n, p) == b for n, b in S.equalities)


class GaugeSymbol(enum.Enum):
    ZERO_ON_RAY = "zero-on-ray"
    INFINITE = "infinite"

    def __str__(self) -> str:
        return self.value


ZERO_ON_RAY = GaugeSymbol.ZERO_ON_RAY
INFINITE = GaugeSymbol.INFINITE


def gauge(ball: QPolytope, x: Sequence):
    """Minkowski functional of ``ball`` at ``x``.

    Returns a :class:`~fractions.Fraction`, or :data:`ZERO_ON_RAY` for a
    nonzero ``x`` inside every dilate, or :data:`INFINITE` when no dilate
    reaches ``x``.
    """
    x = tuple(x)
    if len(x) != ball.dim:
        raise DimensionMismatch(f"point of dimension {len(x)} for a {ball.dim}-dimensional ball")
    B = dd_convert(ball)
    if not contains(B, zeros(B.dim)):
        raise ValueError("the ball does not contain the origin")
    if is_zero(x):
        return Fraction(0)
    if any(dot(n, x) != 0 for n, _ in B.equalities):
        return INFINITE
    best = None
    for n, b in B.halfspaces:
        v = dot(n, x)
        if b == 0:
            if v > 0:
                return INFINITE
            continue
        r = v / b
        best = r if best is None or r > best else best
    if best is None or best <= 0:
        return ZERO_ON_RAY
    return best


def convex_hull(points: Iterable[Sequence], dim: Optional[int] = None) -> QPolytope:
    return dd_convert(QPolytope.from_vertices(points, dim))


def affine_hull(points: Sequence[QVector], dim: int) -> tuple[QVector, tuple[QVector, ...], list[int]]:
    """Origin, canonical direction basis and pivot columns of the affine hull."""
    if not points:
        raise ValueError("affine hull of an empty set")
    origin = min(points)
    basis, piv = row_basis([vsub(p, origin) for p in points], dim)
    return origin, basis, piv


def affine_dependencies(points: Sequence[QVector]) -> list[QVector]:
    """Basis of ``{lam : sum lam_i p_i = 0, sum lam_i = 0}``."""
    if not points:
        return []
    dim = len(points[0])
    rows = [tuple(p[k] for p in points) for k in range(dim)] + [tuple(Fraction(1) for _ in points)]
    _, kernel = solve_linear(rows, zeros(len(rows)), len(points))
    return kernel


def integer_points_box(dim: int, lo: int, hi: int):
    return itertools.product(range(lo, hi + 1), repeat=dim)
