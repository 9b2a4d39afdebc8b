"""States of a few finite effect algebras.

A state is an additive map into [0,1] sending the top to 1.  For a
Boolean algebra the extreme states are the point masses; for a chain
with a self-orthogonal midpoint there is only one state; gluing two
Boolean squares at top and bottom gives a square of states.
"""

from eadual import boolean_ea, chain_ea, counit, mo_ea, state_polytope
from eadual.polyhedra import fmt_vec


def show(A):
    S = state_polytope(A)
    print(f"{A.name}: {len(A)} elements, {len(S.vertices)} extreme states")
    for v in S.vertices:
        print("   ", ", ".join(f"{a}={x}" for a, x in zip(A.elements, v)))


for A in (boolean_ea(2), chain_ea(2), chain_ea(3), mo_ea(2)):
    show(A)
    print()

# The counit sends an element to the function "evaluate at it" on the
# state space.  States separate the elements, so the map is injective,
# but a finite algebra can never fill the whole (infinite) interval.
c = counit(mo_ea(2))
print("counit on", mo_ea(2).name)
for a in mo_ea(2).elements:
    print(f"  {a:>4} -> values {fmt_vec(c.values[a])}")
r = c.report
print(f"injective={r.injective} order_embedding={r.order_embedding} surjective={r.surjective} ({r.surjective_reason})")
