"""Enumerating every extreme contraction of a small polytopal pair.

Two independent routes must coincide: assigning codomain vertices to the l1
basis directly, and enumerating the vertices of the operator unit ball as a
polytope in the matrix entries. For an l1^n domain and a codomain ball with p
vertex pairs there are exactly (2p)^n extreme contractions.
"""

from opball import (
    composition_closure,
    enumerate_l1,
    enumerate_operator_ball,
    hexagon_space,
    l1_space,
    linf_space,
)

pairs = [
    (l1_space(2), l1_space(2)),
    (l1_space(2), linf_space(2)),
    (l1_space(2), hexagon_space()),
    (l1_space(3), l1_space(3)),
]
for domain, codomain in pairs:
    direct = enumerate_l1(domain, codomain)
    ball = enumerate_operator_ball(domain, codomain)
    assert direct.matrices() == ball.matrices()
    print(
        f"{domain.describe()} -> {codomain.describe()}: "
        f"{len(direct)} extreme contractions (both methods agree)"
    )

# The ball route also covers non-l1 domains.
sup_pair = enumerate_operator_ball(linf_space(2), l1_space(2))
print(f"\nlinf:2 -> l1:2: {len(sup_pair)} extreme contractions, e.g.")
for T in sup_pair.operators[:4]:
    print("  ", [[str(x) for x in row] for row in T.matrix])

# Composing extreme contractions of (l1^2, l1^2) never leaves the set.
closure = composition_closure(enumerate_l1(l1_space(2), l1_space(2)))
print(f"\ncomposition closure on l1:2: {closure.total_pairs} ordered pairs, "
      f"closed = {closure.closed}")
