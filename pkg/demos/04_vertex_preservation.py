"""The vertex-preservation (L-P) property of a pair of spaces.

A pair (X, Y) has the property when a norm-one operator is an extreme
contraction exactly when it maps every extreme point of the domain ball to an
extreme point of the codomain ball. l1 domains satisfy it against every
codomain here; the sup-norm cube in three dimensions satisfies it against
l1^3; a Euclidean domain never satisfies it against a polytopal codomain.
"""

from opball import (
    check_lp_property,
    decide,
    hexagon_space,
    is_extreme_point,
    l1_space,
    l2_space,
    linf_space,
    norm,
)

for domain, codomain in [
    (l1_space(2), linf_space(2)),
    (l1_space(2), hexagon_space()),
    (l1_space(3), l1_space(3)),
]:
    report = check_lp_property(domain, codomain)
    print(f"({domain.describe()}, {codomain.describe()}): "
          f"{'holds' if report.holds else 'fails'}")

# The 9-entry sup-norm case: both directions are checked mechanically, with
# 45 vertex pairs of the operator ball re-decided one by one.
report = check_lp_property(linf_space(3), l1_space(3))
print(f"(linf:3, l1:3): {'holds' if report.holds else 'fails'}")
for note in report.notes:
    print("  ", note)

# A strictly convex domain fails: this extreme contraction sends the unit
# vector (3/5, 4/5) to (3/5, 3/5), strictly inside the sup-norm square.
failing = check_lp_property(l2_space(2), linf_space(2))
T, point = failing.forward_violations[0]
print(f"\n(l2:2, linf:2): {'holds' if failing.holds else 'fails'}")
print("  witness operator:", [[str(x) for x in row] for row in T.matrix])
print("  extreme?", decide(T).decision)
print("  unit witness point:", [str(x) for x in point],
      "-> image", [str(x) for x in T(point)])
print("  image extreme in the codomain ball?", is_extreme_point(T.codomain, T(point)))
