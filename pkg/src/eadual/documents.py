"""Reading and writing JSON input documents with exact rationals."""

from __future__ import annotations

import json
from fractions import Fraction

from .effect_algebras import FiniteEffectAlgebra, validate
from .ordered_spaces import PolyhedralBNS, PolyhedralOUS, PredicateOUS2, Variant
from .polyhedra import QCone, QPolytope, dd_convert


class ParseError(ValueError):
    """Malformed input text; the message carries a location."""


class PreconditionError(ValueError):
    """Well-formed input that does not meet a command's preconditions."""


def _reject_float(text):
    raise ParseError(f"floating literal {text} is not allowed; write rationals as \"p/q\"")


def _reject_constant(text):
    raise ParseError(f"literal {text} is not allowed")


def loads(text: str, where: str = "<input>"):
    try:
        return json.loads(text, parse_float=_reject_float, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{where}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None


def load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    return loads(text, path)


def rational(x, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"{where}: expected an integer or a \"p/q\" string, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    s = x.strip()
    num, slash, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if slash else 1
    except ValueError:
        raise ParseError(f"{where}: {x!r} is not a rational") from None
    if d == 0:
        raise ParseError(f"{where}: {x!r} has a zero denominator")
    return Fraction(n, d)


def vector(xs, where: str) -> tuple:
    if not isinstance(xs, list):
        raise ParseError(f"{where}: expected a list of rationals")
    return tuple(rational(x, f"{where}[{i}]") for i, x in enumerate(xs))


def _field(doc, key, where, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"{where}: missing field {key!r}")
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise ParseError(f"{where}.{key}: wrong type")
    return v


def _kind(doc, expected, where):
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected an object")
    k = doc.get("kind")
    if k != expected:
        raise ParseError(f"{where}: expected kind {expected!r}, got {k!r}")


def fmt(x: Fraction) -> str:
    return str(x)


def fmt_vector(v) -> list:
    return [str(a) for a in v]


# effect algebras


def algebra_from_doc(doc, where="<input>") -> FiniteEffectAlgebra:
    _kind(doc, "effect_algebra", where)
    elements = _field(doc, "elements", where, list)
    if not all(isinstance(e, str) for e in elements):
        raise ParseError(f"{where}.elements: ids must be strings")
    zero = _field(doc, "zero", where, str)
    one = _field(doc, "one", where, str)
    orth = _field(doc, "orth", where, dict)
    sums = _field(doc, "sums", where, list)
    for i, t in enumerate(sums):
        if not (isinstance(t, list) and len(t) == 3 and all(isinstance(x, str) for x in t)):
            raise ParseError(f"{where}.sums[{i}]: expected a triple of ids")
    return validate(elements, zero, one, orth, [tuple(t) for t in sums], doc.get("name", ""))


def algebra_to_doc(A: FiniteEffectAlgebra) -> dict:
    return {"kind": "effect_algebra", **A.to_tables()}


# polytopes


def _halfspaces(items, where):
    out = []
    if not isinstance(items, list):
        raise ParseError(f"{where}: expected a list")
    for i, h in enumerate(items):
        w = f"{where}[{i}]"
        out.append((vector(_field(h, "normal", w), w + ".normal"), rational(_field(h, "offset", w), w + ".offset")))
    return out


def polytope_from_doc(doc, where="<input>") -> QPolytope:
    _kind(doc, "polytope", where)
    verts = doc.get("vertices")
    hs = doc.get("halfspaces")
    eqs = doc.get("equalities", [])
    dim = doc.get("dim")
    if dim is not None and (isinstance(dim, bool) or not isinstance(dim, int) or dim < 0):
        raise ParseError(f"{where}.dim: expected a natural number")
    P = Q = None
    if verts is not None:
        if not isinstance(verts, list):
            raise ParseError(f"{where}.vertices: expected a list")
        pts = [vector(v, f"{where}.vertices[{i}]") for i, v in enumerate(verts)]
        if dim is None and not pts:
            raise ParseError(f"{where}: dim is required for an empty vertex list")
        d = dim if dim is not None else len(pts[0])
        if any(len(p) != d for p in pts):
            raise PreconditionError(f"{where}: vertices do not all have dimension {d}")
        P = QPolytope(d, vertices=tuple(pts))
    if hs is not None or (verts is None and eqs):
        h = _halfspaces(hs or [], f"{where}.halfspaces")
        e = _halfspaces(eqs, f"{where}.equalities")
        if dim is None and not (h or e):
            raise ParseError(f"{where}: dim is required without constraints")
        d = dim if dim is not None else len((h or e)[0][0])
        if any(len(n) != d for n, _ in h + e):
            raise PreconditionError(f"{where}: normals do not all have dimension {d}")
        Q = QPolytope(d, halfspaces=tuple(h), equalities=tuple(e))
    if P is None and Q is None:
        raise ParseError(f"{where}: a polytope needs vertices or halfspaces")
    if P is not None and Q is not None:
        if P.dim != Q.dim:
            raise PreconditionError(f"{where}: the two descriptions disagree on dimension")
        A, B = dd_convert(P), dd_convert(Q)
        if set(A.vertices) != set(B.vertices):
            raise PreconditionError(f"{where}: the vertex and halfspace descriptions disagree")
        return A
    return P if P is not None else Q


def polytope_to_doc(P: QPolytope) -> dict:
    P = dd_convert(P)
    return {
        "kind": "polytope",
        "dim": P.dim,
        "vertices": [fmt_vector(v) for v in P.vertices],
        "halfspaces": [{"normal": fmt_vector(n), "offset": fmt(b)} for n, b in P.halfspaces],
        "equalities": [{"normal": fmt_vector(n), "offset": fmt(b)} for n, b in P.equalities],
    }


# spaces


def space_from_doc(doc, where="<input>"):
    _kind(doc, "space", where)
    cone = _field(doc, "cone", where, dict)
    has_unit, has_trace = "unit" in doc, "trace" in doc
    if "predicate" in cone:
        name = cone["predicate"]
        try:
            S = PredicateOUS2(Variant(name))
        except ValueError:
            raise ParseError(f"{where}.cone.predicate: unknown variant {name!r}") from None
        if has_trace:
            raise PreconditionError(f"{where}: predicate cones carry an order unit, not a trace")
        if has_unit and vector(doc["unit"], f"{where}.unit") != S.unit:
            raise PreconditionError(f"{where}: the unit of {name} is fixed at {tuple(str(a) for a in S.unit)}")
        return S
    dim = _field(doc, "dim", where, int)
    if has_unit == has_trace:
        raise ParseError(f"{where}: give exactly one of unit or trace")
    if "generators" in cone:
        gens = [vector(g, f"{where}.cone.generators[{i}]") for i, g in enumerate(cone["generators"])]
        if any(len(g) != dim for g in gens):
            raise PreconditionError(f"{where}: generators do not have dimension {dim}")
        C = QCone.from_generators(gens, dim=dim)
    elif "halfspaces" in cone:
        hs = [vector(g, f"{where}.cone.halfspaces[{i}]") for i, g in enumerate(cone["halfspaces"])]
        es = [vector(g, f"{where}.cone.equalities[{i}]") for i, g in enumerate(cone.get("equalities", []))]
        if any(len(g) != dim for g in hs + es):
            raise PreconditionError(f"{where}: normals do not have dimension {dim}")
        C = QCone.from_halfspaces(hs, es, dim=dim)
    else:
        raise ParseError(f"{where}.cone: need generators, halfspaces or predicate")
    if has_unit:
        return PolyhedralOUS(C, vector(doc["unit"], f"{where}.unit"))
    return PolyhedralBNS(C, vector(doc["trace"], f"{where}.trace"))


def space_to_doc(S) -> dict:
    if isinstance(S, PredicateOUS2):
        return {"kind": "space", "dim": 2, "cone": {"predicate": S.variant.value}, "unit": fmt_vector(S.unit)}
    doc = {"kind": "space", "dim": S.dim, "cone": {"generators": [fmt_vector(g) for g in S.cone.generators]}}
    if isinstance(S, PolyhedralOUS):
        doc["unit"] = fmt_vector(S.unit)
    else:
        doc["trace"] = fmt_vector(S.trace)
    return doc


def point_argument(text: str, dim: int) -> tuple:
    """A command-line point such as ``1,-1/2``."""
    parts = [p for p in text.split(",")] if text.strip() else []
    v = tuple(rational(p, "point") for p in parts)
    if len(v) != dim:
        raise PreconditionError(f"point has dimension {len(v)} but the space has dimension {dim}")
    return v


