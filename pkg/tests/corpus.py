"""Shared test corpora."""

import random
from fractions import Fraction

from eadual.effect_algebras import boolean_ea, chain_ea, mo_ea, product_ea
from eadual.polyhedra import QPolytope, dd_convert


def effect_algebras():
    out = [boolean_ea(n) for n in range(1, 5)]
    out += [chain_ea(n) for n in range(1, 7)]
    out += [mo_ea(n) for n in range(1, 4)]
    out.append(product_ea(chain_ea(2), chain_ea(2)))
    out.append(product_ea(boolean_ea(1), chain_ea(3)))
    return out


def random_polytope_3d(seed=5, nverts=5):
    rng = random.Random(seed)
    while True:
        pts = [tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(nverts)]
        P = dd_convert(QPolytope.from_vertices(pts))
        if len(P.vertices) == nverts:
            return P


def polytopes():
    F = Fraction
    return {
        "point": QPolytope.from_vertices([(F(1, 3), F(2, 5))]),
        "segment": QPolytope.from_vertices([(0,), (1,)]),
        "triangle": QPolytope.from_vertices([(0, 0), (1, 0), (0, 1)]),
        "square": QPolytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)]),
        "hexagon": QPolytope.from_vertices([(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]),
        "simplex3": QPolytope.from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]),
        "cube": QPolytope.from_vertices([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]),
        "cross": QPolytope.from_vertices([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]),
        "random5": random_polytope_3d(),
        "triangle_in_3d": QPolytope.from_vertices([(1, 0, 1), (0, 1, 1), (1, 1, 2)]),
        "segment_in_3d": QPolytope.from_vertices([(1, 2, 3), (F(1, 2), 0, -1)]),
    }
