import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from opball import (
    InfiniteExtremeSetError,
    cross_polytope,
    cube,
    dual,
    extreme_points,
    gauge_norm_vrep,
    hexagon_space,
    l1_space,
    l2_space,
    linf_space,
    norm,
    polytopal_space,
    space_from_vertices,
    unit_ball,
    vec,
)
from opball.linalg import DimensionMismatchError
from opball.spaces import boundary_non_extreme_point, is_extreme_point

from randgen import boundary_point, rand_vec

SPACES = {
    "l1:2": l1_space(2),
    "l1:3": l1_space(3),
    "linf:2": linf_space(2),
    "linf:3": linf_space(3),
    "hexagon": hexagon_space(),
}

small_fraction = st.fractions(min_value=-8, max_value=8, max_denominator=8)


class TestNorm:
    def test_l1(self):
        assert norm(l1_space(2), vec(["1/2", "-1/2"])).value == 1

    def test_hexagon_vertex(self):
        assert norm(hexagon_space(), vec([1, 0])).value == 1

    def test_l2_squared(self):
        value = norm(l2_space(2), vec(["3/5", "4/5"]))
        assert value.squared and value.value == 1

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            norm(l1_space(2), vec([1, 2, 3]))

    def test_named_and_polytopal_representations_agree(self):
        rng = random.Random(314)
        pairs = [
            (l1_space(2), polytopal_space(cross_polytope(2))),
            (l1_space(3), polytopal_space(cross_polytope(3))),
            (linf_space(2), polytopal_space(cube(2))),
            (linf_space(3), polytopal_space(cube(3))),
        ]
        for named, poly in pairs:
            assert extreme_points(named) == extreme_points(poly)
            for _ in range(50):
                x = rand_vec(rng, named.dim)
                assert norm(named, x).value == norm(poly, x).value


class TestNormAxioms:
    @pytest.mark.parametrize("name", sorted(SPACES))
    def test_axioms_on_random_vectors(self, name):
        space = SPACES[name]
        rng = random.Random(hash(name) & 0xFFFF)
        for _ in range(100):
            x = rand_vec(rng, space.dim)
            y = rand_vec(rng, space.dim)
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            nx, ny = norm(space, x).value, norm(space, y).value
            assert (nx == 0) == all(a == 0 for a in x)
            assert norm(space, tuple(c * a for a in x)).value == abs(c) * nx
            nsum = norm(space, tuple(a + b for a, b in zip(x, y))).value
            assert nsum <= nx + ny

    def test_euclidean_axioms_on_squares(self):
        # homogeneity and triangle inequality stay decidable on squared values
        rng = random.Random(1234)
        space = l2_space(3)
        for _ in range(100):
            x = rand_vec(rng, 3)
            y = rand_vec(rng, 3)
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            sq = norm(space, x).value
            assert norm(space, tuple(c * a for a in x)).value == c * c * sq
            inner = sum(a * b for a, b in zip(x, y))
            if inner > 0:  # Cauchy-Schwarz, squared
                assert inner * inner <= sq * norm(space, y).value


class TestGaugeOracle:
    def test_l1_gauge(self):
        assert gauge_norm_vrep(l1_space(2), vec([1, 1])) == 2

    def test_linf_vertex(self):
        assert gauge_norm_vrep(linf_space(2), vec([1, 1])) == 1

    def test_hexagon_agreement(self):
        hx = hexagon_space()
        assert gauge_norm_vrep(hx, vec([0, 1])) == norm(hx, vec([0, 1])).value

    @pytest.mark.parametrize("name", sorted(SPACES))
    def test_facet_and_vertex_routes_agree(self, name):
        space = SPACES[name]
        rng = random.Random(len(name))
        for _ in range(25):
            x = rand_vec(rng, space.dim, span=6)
            assert gauge_norm_vrep(space, x) == norm(space, x).value


class TestExtremePoints:
    def test_l1_pairs(self):
        es = extreme_points(l1_space(3))
        assert es.pair_count == 3
        assert set(es.representatives) == {vec([1, 0, 0]), vec([0, 1, 0]), vec([0, 0, 1])}

    def test_linf_pairs(self):
        es = extreme_points(linf_space(3))
        assert es.pair_count == 4
        assert len(es.signed()) == 8

    def test_hexagon_pairs(self):
        assert extreme_points(hexagon_space()).pair_count == 3

    def test_euclidean_rejected(self):
        with pytest.raises(InfiniteExtremeSetError):
            extreme_points(l2_space(2))


class TestDual:
    def test_named_duals(self):
        assert dual(l1_space(3)) == linf_space(3)
        assert dual(linf_space(2)) == l1_space(2)
        assert dual(l2_space(4)) == l2_space(4)

    def test_hexagon_dual_swaps_descriptions(self):
        hx = hexagon_space()
        assert dual(hx).ball.vertices == hx.ball.facets

    def test_involution(self):
        for space in [l1_space(2), linf_space(3), hexagon_space()]:
            assert dual(dual(space)) == space


class TestExtremeMembership:
    def test_l2_membership_is_unit_circle(self):
        assert is_extreme_point(l2_space(2), vec(["3/5", "4/5"]))
        assert not is_extreme_point(l2_space(2), vec(["1/2", "1/2"]))

    def test_boundary_non_extreme_point_helper(self):
        for space in [l1_space(2), linf_space(3), hexagon_space()]:
            p = boundary_non_extreme_point(space)
            assert norm(space, p).value == 1
            assert not is_extreme_point(space, p)
        assert boundary_non_extreme_point(l1_space(1)) is None


@given(entries=st.lists(small_fraction, min_size=2, max_size=2))
@settings(max_examples=60, deadline=None)
def test_hexagon_unit_rescaling(entries):
    hx = hexagon_space()
    x = tuple(entries)
    g = norm(hx, x).value
    if g != 0:
        unit = tuple(a / g for a in x)
        assert norm(hx, unit).value == 1
        assert unit_ball(hx).contains(unit)
