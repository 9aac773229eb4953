import random
from fractions import Fraction

import pytest

from opball.linalg import dot, invert, mat, mat_vec, vec, vneg
from opball.polytopes import (
    NotFullDimensionalError,
    from_facets,
    from_vertices,
    to_facets,
    to_vertices,
)
from opball.spaces import cross_polytope, cube

HEXAGON_POINTS = [vec(["1", "0"]), vec(["1/2", "1"]), vec(["-1/2", "1"])]

# Frozen expectation, originally computed with the pairwise brute force below.
HEXAGON_FACETS = (
    vec(["0", "1"]),
    vec(["1", "-1/2"]),
    vec(["1", "1/2"]),
)


def brute_force_facets_2d(points):
    """Independent oracle: every facet of a symmetric polygon is the line
    through two generator points with all generators on one side."""
    signed = [tuple(p) for p in points] + [vneg(p) for p in points]
    facets = set()
    for i in range(len(signed)):
        for j in range(i + 1, len(signed)):
            u, w = signed[i], signed[j]
            det = u[0] * w[1] - u[1] * w[0]
            if det == 0:
                continue
            # functional f with f.u = f.w = 1
            f = mat_vec(invert(mat([u, w])), vec([1, 1]))
            f = tuple(f)
            if all(dot(f, p) <= 1 for p in signed):
                for a in f:
                    if a > 0:
                        facets.add(f)
                        break
                    if a < 0:
                        facets.add(vneg(f))
                        break
    return tuple(sorted(facets))


class TestCrossPolytopeAndCube:
    def test_square_from_unit_vectors(self):
        P = from_vertices([vec([1, 0]), vec([0, 1])])
        assert P.vertices == (vec([0, 1]), vec([1, 0]))
        assert P.facets == (vec([1, -1]), vec([1, 1]))

    def test_cube_from_two_generators(self):
        P = from_vertices([vec([1, 1]), vec([1, -1])])
        assert P.vertices == (vec([1, -1]), vec([1, 1]))
        assert P.facets == (vec([0, 1]), vec([1, 0]))

    def test_three_cube_from_facets(self):
        P = from_facets([vec([1, 0, 0]), vec([0, 1, 0]), vec([0, 0, 1])])
        assert len(P.vertices) == 4  # 8 sign vectors in +- pairs
        assert P == cube(3)

    def test_direct_constructions_match_hull(self):
        for n in (1, 2, 3):
            assert from_vertices(list(cross_polytope(n).vertices)) == cross_polytope(n)
            assert from_vertices(list(cube(n).vertices)) == cube(n)


class TestHexagon:
    def test_facets_match_bruteforce_oracle(self):
        assert brute_force_facets_2d(HEXAGON_POINTS) == HEXAGON_FACETS
        P = from_vertices(HEXAGON_POINTS)
        assert P.facets == HEXAGON_FACETS
        assert len(P.vertices) == 3 and len(P.facets) == 3

    def test_roundtrip_identity(self):
        P = from_vertices(HEXAGON_POINTS)
        assert to_vertices(to_facets(P.vertices, 2), 2) == P.vertices
        assert to_facets(to_vertices(P.facets, 2), 2) == P.facets

    def test_consistency_invariants(self):
        P = from_vertices(HEXAGON_POINTS)
        P.check_consistency()
        # a point strictly inside satisfies every facet strictly
        for v in P.vertices:
            half = tuple(x / 2 for x in v)
            assert all(abs(dot(f, half)) < 1 for f in P.facets)


class TestIsVertex:
    def test_cross_polytope_vertex(self):
        P = cross_polytope(2)
        assert P.is_vertex(vec([1, 0]))
        assert P.is_vertex(vec([-1, 0]))

    def test_boundary_non_vertex(self):
        assert not cross_polytope(2).is_vertex(vec(["1/2", "1/2"]))

    def test_cube_edge_midpoint_is_not_a_vertex(self):
        assert not cube(2).is_vertex(vec([1, 0]))


class TestPolar:
    def test_cross_polytope_and_cube_are_polar(self):
        assert cross_polytope(2).polar() == cube(2)
        assert cube(3).polar() == cross_polytope(3)

    def test_bipolar_identity(self):
        P = from_vertices(HEXAGON_POINTS)
        assert P.polar().polar() == P


class TestDegenerateInputs:
    def test_duplicates_and_interior_points_dropped(self):
        P = from_vertices(
            [vec([1, 0]), vec([1, 0]), vec([0, 1]), vec(["1/2", "1/2"]), vec([0, 0])]
        )
        assert P == from_vertices([vec([1, 0]), vec([0, 1])])

    def test_negated_duplicates_collapse(self):
        P = from_vertices([vec([1, 0]), vec([-1, 0]), vec([0, 1])])
        assert P == from_vertices([vec([1, 0]), vec([0, 1])])

    def test_rank_deficient_generators_rejected(self):
        with pytest.raises(NotFullDimensionalError):
            from_vertices([vec([1, 1]), vec([2, 2])])

    def test_unbounded_facet_set_rejected(self):
        with pytest.raises(NotFullDimensionalError):
            from_facets([vec([1, 0, 0]), vec([0, 1, 0])])


def test_random_symmetric_polygons_roundtrip():
    rng = random.Random(20240229)
    for _ in range(25):
        pts = [
            tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2))
            for _ in range(rng.randint(2, 6))
        ]
        try:
            P = from_vertices(pts)
        except NotFullDimensionalError:
            continue
        P.check_consistency()
        assert to_vertices(P.facets, 2) == P.vertices
        assert to_facets(P.vertices, 2) == P.facets
        assert P.facets == brute_force_facets_2d(P.vertices)
