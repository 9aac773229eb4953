"""Deciding whether a norm-one operator is an extreme contraction.

An operator T with norm 1 is an extreme contraction when it is an extreme
point of the unit ball of the operator space. Each verdict names the rule
that produced it, and every negative verdict carries a perturbation D with
norm(T + D) <= 1 and norm(T - D) <= 1, exhibiting T as a midpoint of two
distinct contractions.
"""

from opball import (
    decide,
    l1_space,
    l2_space,
    linf_space,
    op_norm,
    operator,
    perturbation_oracle,
    vec,
)

# Repeating a coordinate: extreme even though the norm is attained at a
# single pair of unit vectors.
T = operator([[1, 0], [1, 0]], l2_space(2), linf_space(2))
verdict = decide(T)
print("T = [[1,0],[1,0]] from l2^2 to linf^2:")
print("  decision:", verdict.decision, "via", verdict.method)
print("  attains its norm at +-", verdict.evidence.attaining_extremes[0])

# The identity into the sup norm: extreme although the basis vectors land on
# edge midpoints of the codomain ball, not on its corners.
identity = operator([[1, 0], [0, 1]], l2_space(2), linf_space(2))
print("\nidentity from l2^2 to linf^2:", decide(identity).decision)

# Shrinking one column of an l1-domain operator breaks extremality; the
# verdict shows the certificate.
S = operator([[1, 0], [0, "1/2"]], l1_space(2), l1_space(2))
v = decide(S)
print("\nS = [[1,0],[0,1/2]] on l1^2:", v.decision, "via", v.method)
print("  witness D:", v.witness)
for sign in (1, -1):
    perturbed = operator(
        [[S.matrix[i][j] + sign * v.witness[i][j] for j in range(2)] for i in range(2)],
        l1_space(2),
        l1_space(2),
    )
    print(f"  norm(S {'+' if sign > 0 else '-'} D) =", op_norm(perturbed).value)

# The perturbation oracle handles any polytopal pair, here a 45-degree
# rotation-and-shrink of the sup-norm square onto edge midpoints.
R = operator([["1/2", "1/2"], ["1/2", "-1/2"]], linf_space(2), linf_space(2))
o = perturbation_oracle(R)
print("\nR = [[1/2,1/2],[1/2,-1/2]] on linf^2:", o.decision)
print("  witness D:", o.witness)
