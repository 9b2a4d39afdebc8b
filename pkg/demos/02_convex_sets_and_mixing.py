"""Formal mixtures versus actual mixtures.

A finitely supported distribution over points of a polytope is a formal
convex combination; the polytope evaluates it to a point.  The two
algebra laws say that a point mass evaluates to its point and that
evaluating in stages agrees with flattening first.
"""

from fractions import Fraction as F

from eadual import Distribution, QPolytope, check_em_laws, d_flatten, d_unit, em_eval

segment = QPolytope.from_vertices([(0,), (1,)])
phi = Distribution({(F(0),): F(1, 2), (F(1, 3),): F(1, 2)})
print("formal mixture", phi, "evaluates to", em_eval(segment, phi)[0])

p, q = (F(0), F(0)), (F(1), F(0))
inner = Distribution({p: F(1, 2), q: F(1, 2)})
outer = Distribution({inner: F(1, 3), d_unit(q): F(2, 3)})
print("flattening", outer, "gives", d_flatten(outer))

for name, P, seed in (("triangle", QPolytope.from_vertices([(0, 0), (1, 0), (0, 1)]), 7),
                      ("square", QPolytope.from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)]), 1)):
    r = check_em_laws(P, 200, seed)
    print(f"{name}: algebra laws on {r.trials} random instances -> {'pass' if r.passed else r.law}")
