"""Maps on bases and on unit intervals extend uniquely to linear maps.

An affine map between the bases of two base-norm spaces is the
restriction of exactly one positive trace-preserving linear map.  An
additive unital map between unit intervals of order-unit spaces is
likewise the restriction of a unique positive unital linear map.
"""

from eadual.duality import NotAdditiveError, NotAffineError, extend_base_map, extend_interval_morphism
from eadual.ordered_spaces import PolyhedralBNS, orthant_ous
from eadual.polyhedra import QCone, fmt_vec


def show(matrix):
    return "[" + " ".join(fmt_vec(r) for r in matrix) + "]"


def over(points):
    gens = [tuple(p) + (1,) for p in points]
    return PolyhedralBNS(QCone.from_generators(gens), (0,) * len(points[0]) + (1,))


triangle = over([(0, 0), (1, 0), (0, 1)])
segment = over([(0,), (1,)])
g = extend_base_map(triangle, segment, [(0, 1), (0, 1), (1, 1)])
print("triangle -> segment, forgetting y:", show(g.matrix))
print("   positive", g.positive, "trace preserving", g.trace_preserving, "unique", g.unique)

square = over([(0, 0), (1, 0), (0, 1), (1, 1)])
try:
    extend_base_map(square, square, [(0, 0, 1), (0, 0, 1), (0, 0, 1), (1, 1, 1)])
except NotAffineError as exc:
    print("square corners sent three-to-one: rejected, relation", fmt_vec(exc.relation))

A, B = orthant_ous(2), orthant_ous(1)
h = extend_interval_morphism(A, B, lambda x: ((x[0] + x[1]) / 2,))
print("average of the two coordinates extends to", show(h.matrix), "ok:", h.ok)

try:
    extend_interval_morphism(B, B, lambda x: (x[0] * x[0],))
except NotAdditiveError as exc:
    a, b = exc.witness
    print(f"squaring is caught: f({a[0]} + {b[0]}) differs from f({a[0]}) + f({b[0]})")
