"""Three planar cones that separate the archimedean conditions.

Each cone is not closed, so it cannot be a polyhedral cone; it is given
as a finite union of sign systems.  The classifier looks for a vector
eventually below every u/n and reports the first small witness.
"""

from fractions import Fraction as F

from eadual.polyhedra import fmt_vec
from eadual.ordered_spaces import (
    PredicateOUS2, Variant, classify_archimedean, norm, order_leq, orthant_ous,
)

for variant in Variant:
    S = PredicateOUS2(variant)
    c = classify_archimedean(S)
    print(f"{variant.value:<14} unit {fmt_vec(S.unit)}: {c.kind}, witness {fmt_vec(c.witness)}")

half = PredicateOUS2(Variant.OpenHalfPlane)
print("in the open half plane, (1,0) has norm", norm(half, (1, 0)))
for n in (1, 10, 1000):
    u_n = (0, F(1, n))
    print(f"   -u/{n} <= (1,0) <= u/{n}: {order_leq(half, (0, -F(1, n)), (1, 0)) and order_leq(half, (1, 0), u_n)}")

print("a closed polyhedral cone for comparison:", classify_archimedean(orthant_ous(2)).kind)
