"""Affine effects on a polytope, and the way back.

The effects of a convex set X are the affine maps X -> [0,1].  They form
the unit interval of an order-unit space whose dual has X back as its
base.  The unit map sends each vertex to "evaluate at it"; for a
bounded polytope it hits exactly the vertices of that base.
"""

from eadual import QPolytope, eff_pm, triangle_identities, unit_map
from eadual.polyhedra import fmt_vec

shapes = {
    "segment": QPolytope.from_vertices([(0,), (1,)]),
    "triangle": QPolytope.from_vertices([(0, 0), (1, 0), (0, 1)]),
    "square": QPolytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)]),
    "tilted segment in 3d": QPolytope.from_vertices([(1, 2, 3), (0, 0, -1)]),
}

for name, X in shapes.items():
    E = eff_pm(X)
    u = unit_map(X)
    print(f"{name}: effect space of dimension {E.dim}, {len(E.effects().vertices)} extreme effects")
    for v, w in u.images.items():
        print(f"   vertex {fmt_vec(v)} -> state {fmt_vec(w)}")
    print(f"   unit map is an isomorphism: {u.report.iso}")
    print(f"   triangle identity on effects holds: {triangle_identities(X=X).ok}")
