"""Norms, unit balls, and the two exact evaluation routes.

Every number below is an exact rational. The gauge evaluation goes through a
linear program over the vertex description and must agree, digit for digit,
with the facet evaluation.
"""

from opball import (
    cross_polytope,
    from_vertices,
    gauge_norm_vrep,
    hexagon_space,
    l1_space,
    l2_space,
    linf_space,
    norm,
    vec,
)

# The l1 ball in the plane is the square with corners on the axes. Building
# it from its generators recovers both descriptions.
square = from_vertices([vec([1, 0]), vec([0, 1])])
print("l1 ball vertices:", square.vertices)
print("l1 ball facet functionals:", square.facets)
assert square == cross_polytope(2)

# A hexagonal norm: three vertex pairs, three facet pairs.
hexagon = hexagon_space()
print("\nhexagon vertices:", hexagon.ball.vertices)
print("hexagon facets:", hexagon.ball.facets)

# Facet route and vertex route give the same exact value.
for entries in (["1", "0"], ["0", "1"], ["2/3", "-1/5"]):
    x = vec(entries)
    via_facets = norm(hexagon, x).value
    via_gauge_lp = gauge_norm_vrep(hexagon, x)
    print(f"norm({entries}) = {via_facets} (facets) = {via_gauge_lp} (gauge LP)")
    assert via_facets == via_gauge_lp

# Named norms evaluate exactly too; the Euclidean norm is reported squared so
# that no square root ever appears.
print("\n|(1/2, -1/2)|_1 =", norm(l1_space(2), vec(["1/2", "-1/2"])))
print("|(1/2, -1/2)|_inf =", norm(linf_space(2), vec(["1/2", "-1/2"])))
print("|(3/5, 4/5)|_2 =", norm(l2_space(2), vec(["3/5", "4/5"])), "(squared value 1: a unit vector)")
