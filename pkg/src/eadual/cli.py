"""Command-line front end.

Exit codes: 0 success, 1 parse error, 2 precondition failure, 3 a
mathematical verdict came out negative.  ``--seed`` defaults to 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import documents as docs
from .duality import (
    ExtensionError, NotAdditiveError, NotAffineError, counit, eff_pm, extend_base_map,
    extend_interval_morphism, unit_map,
)
from .effect_algebras import AxiomViolation, MalformedTables, state_polytope
from .ordered_spaces import (
    RADIAL_NOTE, ArchKind, InvalidSpace, PolyhedralBNS, PolyhedralOUS, PredicateOUS2,
    Variant, base_of, classify_archimedean, norm, unit_interval,
)
from .polyhedra import DimensionMismatch, UnboundedPolyhedronError, ZERO_ON_RAY, dd_convert, rank

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 100


class Failure(Exception):
    def __init__(self, code, message, payload=None):
        super().__init__(message)
        self.code = code
        self.payload = payload or {}


def _v(v) -> str:
    return "(" + ",".join(str(a) for a in v) + ")"


def _emit(args, payload: dict, lines: list) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


# effect algebras


def cmd_ea_validate(args):
    A = docs.algebra_from_doc(docs.load(args.file), args.file)
    payload = {"command": "ea validate", "valid": True, "elements": len(A)}
    _emit(args, payload, [f"valid effect algebra with {len(A)} elements"])
    return 0


def cmd_ea_states(args):
    A = docs.algebra_from_doc(docs.load(args.file), args.file)
    P = state_polytope(A).polytope
    payload = {"command": "ea states", "elements": list(A.elements), "polytope": docs.polytope_to_doc(P)}
    lines = [f"state polytope: {len(P.vertices)} vertices over elements {', '.join(A.elements)}"]
    lines += ["  " + _v(v) for v in P.vertices]
    lines.append(f"halfspaces ({len(P.halfspaces)}), normal.x <= offset:")
    lines += [f"  {_v(n)} <= {b}" for n, b in P.halfspaces]
    lines.append(f"equalities ({len(P.equalities)}):")
    lines += [f"  {_v(n)} = {b}" for n, b in P.equalities]
    _emit(args, payload, lines)
    return 0


def _report_payload(r):
    return {
        "injective": r.injective,
        "injective_witness": list(r.injective_witness) if r.injective_witness else None,
        "order_embedding": r.order_embedding,
        "order_witness": list(r.order_witness) if r.order_witness else None,
        "surjective": r.surjective,
        "surjective_reason": r.surjective_reason,
        "iso": r.iso,
        "notes": list(r.notes),
    }


def _report_lines(r):
    lines = [f"injective: {str(r.injective).lower()}"
             + (f" (witness {r.injective_witness[0]}, {r.injective_witness[1]})" if r.injective_witness else ""),
             f"order_embedding: {str(r.order_embedding).lower()}"
             + (f" (witness {r.order_witness[0]}, {r.order_witness[1]})" if r.order_witness else ""),
             f"surjective: {str(r.surjective).lower()}"
             + (f" ({r.surjective_reason})" if r.surjective_reason else ""),
             f"iso: {str(r.iso).lower()}"]
    lines += [f"note: {n}" for n in r.notes]
    return lines


def cmd_ea_counit(args):
    A = docs.algebra_from_doc(docs.load(args.file), args.file)
    c = counit(A)
    payload = {
        "command": "ea counit",
        "images": {a: docs.fmt_vector(c.images[a]) for a in A.elements},
        "values_at_states": {a: docs.fmt_vector(c.values[a]) for a in A.elements},
        "report": _report_payload(c.report),
    }
    lines = ["element  effect (c,b)  values at state vertices"]
    for a in A.elements:
        lines.append(f"{a}  {_v(c.images[a])}  {_v(c.values[a])}")
    lines += _report_lines(c.report)
    _emit(args, payload, lines)
    return 0 if c.report.injective else 3


# polytopes


def _polytope(args):
    P = docs.polytope_from_doc(docs.load(args.file), args.file)
    try:
        P = dd_convert(P)
    except UnboundedPolyhedronError as exc:
        raise Failure(2, f"{args.file}: {exc}") from None
    if not P.vertices:
        raise Failure(2, f"{args.file}: the polytope is empty")
    return P


def cmd_poly_effects(args):
    X = _polytope(args)
    E = eff_pm(X)
    F = E.effects()
    payload = {
        "command": "poly effects",
        "origin": docs.fmt_vector(E.origin),
        "directions": [docs.fmt_vector(d) for d in E.directions],
        "space": docs.space_to_doc(E.space),
        "cone_halfspaces": [docs.fmt_vector(h) for h in E.space.cone.halfspaces],
        "effects": docs.polytope_to_doc(F),
    }
    lines = [f"affine chart: origin {_v(E.origin)}, directions " + (", ".join(_v(d) for d in E.directions) or "none"),
             f"effect space dimension {E.dim}, unit {_v(E.unit)}",
             "positive cone, h.(c,b) >= 0:"]
    lines += ["  " + _v(h) for h in E.space.cone.halfspaces]
    lines.append(f"effects [0,1]: {len(F.vertices)} vertices")
    lines += ["  " + _v(v) for v in F.vertices]
    _emit(args, payload, lines)
    return 0


def cmd_poly_unit_map(args):
    X = _polytope(args)
    u = unit_map(X)
    payload = {
        "command": "poly unit-map",
        "images": [{"vertex": docs.fmt_vector(v), "state": docs.fmt_vector(w)} for v, w in u.images.items()],
        "base": [docs.fmt_vector(b) for b in u.base.vertices],
        "report": _report_payload(u.report),
    }
    lines = ["vertex -> evaluation state"]
    lines += [f"  {_v(v)} -> {_v(w)}" for v, w in u.images.items()]
    lines.append(f"base of the dual: {len(u.base.vertices)} vertices")
    lines += _report_lines(u.report)
    _emit(args, payload, lines)
    return 0 if u.report.iso else 3


# spaces


def _space(path):
    try:
        return docs.space_from_doc(docs.load(path), path)
    except (InvalidSpace, DimensionMismatch) as exc:
        raise Failure(2, f"{path}: {exc}") from None


def cmd_space_classify(args):
    S = _space(args.file)
    if isinstance(S, PolyhedralBNS):
        raise Failure(2, f"{args.file}: classification needs an order-unit space")
    c = classify_archimedean(S)
    payload = {"command": "space classify", "class": c.kind.value,
               "witness": docs.fmt_vector(c.witness) if c.witness else None}
    lines = [f"class: {c.kind.value}" + (f", witness {_v(c.witness)}" if c.witness else "")]
    if isinstance(S, PolyhedralOUS):
        payload["note"] = RADIAL_NOTE
        lines.append(f"note: {RADIAL_NOTE}")
    _emit(args, payload, lines)
    return 0


def _norm_text(v):
    return "0 (zero-on-ray)" if v is ZERO_ON_RAY else str(v)


def cmd_space_norm(args):
    S = _space(args.file)
    x = docs.point_argument(args.point, S.dim)
    v = norm(S, x)
    payload = {"command": "space norm", "point": docs.fmt_vector(x),
               "value": "0" if v is ZERO_ON_RAY else str(v), "zero_on_ray": v is ZERO_ON_RAY}
    _emit(args, payload, [f"norm{_v(x)} = {_norm_text(v)}"])
    return 0


# extension


def cmd_extend_base_map(args):
    E, F = _space(args.source), _space(args.target)
    if not (isinstance(E, PolyhedralBNS) and isinstance(F, PolyhedralBNS)):
        raise Failure(2, "base-map extension needs two base-norm spaces")
    doc = docs.load(args.map)
    if not isinstance(doc, dict):
        raise docs.ParseError(f"{args.map}: expected an object")
    if "pairs" in doc:
        images = {}
        for i, pair in enumerate(doc["pairs"]):
            if not (isinstance(pair, list) and len(pair) == 2):
                raise docs.ParseError(f"{args.map}.pairs[{i}]: expected [vertex, image]")
            images[docs.vector(pair[0], f"{args.map}.pairs[{i}][0]")] = docs.vector(pair[1], f"{args.map}.pairs[{i}][1]")
    elif "images" in doc:
        images = [docs.vector(w, f"{args.map}.images[{i}]") for i, w in enumerate(doc["images"])]
    else:
        raise docs.ParseError(f"{args.map}: need pairs or images")
    try:
        g = extend_base_map(E, F, images)
    except NotAffineError as exc:
        raise Failure(3, f"not an affine map: relation {_v(exc.relation)} among base vertices is broken",
                      {"relation": docs.fmt_vector(exc.relation)}) from None
    checks = {"positive": g.positive, "trace_preserving": g.trace_preserving,
              "agrees_on_base": g.agrees, "unique": g.unique}
    payload = {"command": "extend base-map", "matrix": [docs.fmt_vector(r) for r in g.matrix],
               "checks": checks, "base_vertices": [docs.fmt_vector(v) for v in base_of(E).vertices]}
    lines = ["matrix:"] + ["  " + _v(r) for r in g.matrix]
    lines += [f"{k}: {str(v).lower()}" for k, v in checks.items()]
    _emit(args, payload, lines)
    return 0 if g.ok else 3


def cmd_extend_interval(args):
    A, B = _space(args.source), _space(args.target)
    if not (isinstance(A, PolyhedralOUS) and isinstance(B, PolyhedralOUS)):
        raise Failure(2, "interval extension needs two polyhedral order-unit spaces")
    doc = docs.load(args.table)
    if not isinstance(doc, dict) or not isinstance(doc.get("pairs"), list):
        raise docs.ParseError(f"{args.table}: expected an object with a pairs list")
    table = {}
    for i, pair in enumerate(doc["pairs"]):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise docs.ParseError(f"{args.table}.pairs[{i}]: expected [point, image]")
        x = docs.vector(pair[0], f"{args.table}.pairs[{i}][0]")
        y = docs.vector(pair[1], f"{args.table}.pairs[{i}][1]")
        if len(x) != A.dim or len(y) != B.dim:
            raise Failure(2, f"{args.table}.pairs[{i}]: wrong dimension")
        if table.get(x, y) != y:
            raise Failure(3, f"{args.table}: two different images for {_v(x)}")
        table[x] = y
    IA = unit_interval(A)
    for x in table:
        if not IA.contains(x):
            raise Failure(2, f"{args.table}: {_v(x)} is outside the unit interval")
    basis = []
    for x in sorted(table):
        if rank(basis + [x], A.dim) > len(basis):
            basis.append(x)
    if len(basis) < A.dim:
        raise Failure(2, f"{args.table}: the table points do not span the space")
    pts = sorted(table)
    pairs = [(a, b) for a in pts for b in pts
             if IA.sum(a, b) is not None and IA.sum(a, b) in table]
    if A.unit not in table:
        raise Failure(2, f"{args.table}: the table must contain the unit {_v(A.unit)}")
    try:
        h = extend_interval_morphism(A, B, table.__getitem__, basis=basis, pairs=pairs, points=pts,
                                     seed=args.seed)
    except NotAdditiveError as exc:
        a, b = exc.witness
        raise Failure(3, f"oracle not additive: f({_v(a)} + {_v(b)}) != f({_v(a)}) + f({_v(b)})",
                      {"witness": [docs.fmt_vector(a), docs.fmt_vector(b)]}) from None
    except ExtensionError as exc:
        raise Failure(3, str(exc)) from None
    checks = {"unital": h.unital, "positive": h.positive, "agrees_with_table": h.agrees,
              "in_range": h.in_range, "stagewise_construction_agrees": h.construction_agrees}
    payload = {"command": "extend interval", "matrix": [docs.fmt_vector(r) for r in h.matrix],
               "basis": [docs.fmt_vector(e) for e in h.basis], "sum_checks": h.additive_pairs,
               "checks": checks}
    lines = ["matrix:"] + ["  " + _v(r) for r in h.matrix]
    lines.append(f"basis: {', '.join(_v(e) for e in h.basis)}")
    lines.append(f"sums checked: {h.additive_pairs}")
    lines += [f"{k}: {str(v).lower()}" for k, v in checks.items()]
    _emit(args, payload, lines)
    return 0 if h.ok else 3


# appendix

APPENDIX_CLAIMS = (
    (Variant.LexPlane, ArchKind.HasInfinitesimals, (1, 0), (1, 0), Fraction(0)),
    (Variant.OpenHalfPlane, ArchKind.NoInfinitesimalsOnly, (1, 0), (1, 0), Fraction(0)),
    (Variant.OpenQuadrant, ArchKind.AlmostArchimedeanOnly, (-1, 0), (-1, 0), Fraction(1)),
)


def appendix_rows():
    rows = []
    for variant, kind, witness, point, value in APPENDIX_CLAIMS:
        S = PredicateOUS2(variant)
        c = classify_archimedean(S)
        v = norm(S, point)
        got = Fraction(0) if v is ZERO_ON_RAY else v
        witness = tuple(Fraction(a) for a in witness)
        match = c.kind is kind and c.witness == witness and got == value
        rows.append({"variant": variant.value, "class": c.kind.value,
                     "witness": c.witness, "norm_point": tuple(Fraction(a) for a in point),
                     "norm": v, "matches": match})
    return rows


def cmd_appendix(args):
    rows = appendix_rows()
    ok = all(r["matches"] for r in rows)
    payload = {"command": "appendix", "rows": [
        {"variant": r["variant"], "class": r["class"], "witness": docs.fmt_vector(r["witness"]),
         "norm": {"point": docs.fmt_vector(r["norm_point"]),
                  "value": "0" if r["norm"] is ZERO_ON_RAY else str(r["norm"]),
                  "zero_on_ray": r["norm"] is ZERO_ON_RAY},
         "matches": r["matches"]} for r in rows], "all_match": ok}
    header = f"{'variant':<15}{'class':<24}{'witness':<10}{'norm':<28}match"
    lines = [header]
    for r in rows:
        nf = f"norm{_v(r['norm_point'])} = {_norm_text(r['norm'])}"
        lines.append(f"{r['variant']:<15}{r['class']:<24}{_v(r['witness']):<10}{nf:<28}"
                     + ("yes" if r["matches"] else "NO"))
    lines.append("all rows match" if ok else "MISMATCH")
    _emit(args, payload, lines)
    return 0 if ok else 3


# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help=f"seed for sampled checks (default {DEFAULT_SEED})")
    common.add_argument("--samples", type=int, default=argparse.SUPPRESS, help=f"sample budget (default {DEFAULT_SAMPLES})")

    p = _Parser(prog="eadual", description="Exact state/effect duality computations.", parents=[common])
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    ea = sub.add_parser("ea", help="finite effect algebras").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, fn, help_ in (("validate", cmd_ea_validate, "check the axioms"),
                            ("states", cmd_ea_states, "state polytope"),
                            ("counit", cmd_ea_counit, "counit verdicts")):
        q = ea.add_parser(name, parents=[common], help=help_)
        q.add_argument("file")
        q.set_defaults(func=fn)

    poly = sub.add_parser("poly", help="polytopes").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, fn, help_ in (("effects", cmd_poly_effects, "affine effect space"),
                            ("unit-map", cmd_poly_unit_map, "unit verdict")):
        q = poly.add_parser(name, parents=[common], help=help_)
        q.add_argument("file")
        q.set_defaults(func=fn)

    space = sub.add_parser("space", help="ordered vector spaces").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = space.add_parser("classify", parents=[common], help="archimedean class")
    q.add_argument("file")
    q.set_defaults(func=cmd_space_classify)
    q = space.add_parser("norm", parents=[common], help="norm of a point such as 1,-1/2")
    q.add_argument("file")
    q.add_argument("point")
    q.set_defaults(func=cmd_space_norm)

    ext = sub.add_parser("extend", help="extend maps to linear maps").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = ext.add_parser("base-map", parents=[common], help="from base vertex images")
    q.add_argument("source")
    q.add_argument("target")
    q.add_argument("map")
    q.set_defaults(func=cmd_extend_base_map)
    q = ext.add_parser("interval", parents=[common], help="from a table on the unit interval")
    q.add_argument("source")
    q.add_argument("target")
    q.add_argument("table")
    q.set_defaults(func=cmd_extend_interval)

    q = sub.add_parser("appendix", parents=[common], help="the three planar counterexamples")
    q.set_defaults(func=cmd_appendix)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for key, default in (("json", False), ("seed", DEFAULT_SEED), ("samples", DEFAULT_SAMPLES)):
        if not hasattr(args, key):
            setattr(args, key, default)
    try:
        return args.func(args)
    except Failure as exc:
        return _fail(args, exc.code, str(exc), exc.payload)
    except docs.ParseError as exc:
        return _fail(args, 1, str(exc))
    except AxiomViolation as exc:
        return _fail(args, 2, f"invalid: {exc.axiom}, witness ({', '.join(exc.witness)})",
                     {"axiom": exc.axiom, "witness": list(exc.witness)})
    except (MalformedTables, docs.PreconditionError, InvalidSpace, DimensionMismatch,
            UnboundedPolyhedronError, ValueError) as exc:
        return _fail(args, 2, str(exc))


def _fail(args, code, message, payload=None) -> int:
    if args.json:
        body = {"command": " ".join(x for x in (getattr(args, "group", ""), getattr(args, "cmd", "")) if x),
                "error": message, "exit": code, **(payload or {})}
        sys.stdout.write(json.dumps(body, indent=2) + "\n")
    else:
        sys.stderr.write(f"error: {message}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
