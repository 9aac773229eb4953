import random

import pytest

from opball import (
    InfiniteExtremeSetError,
    SizeCapError,
    check_lp_property,
    composition_closure,
    compose,
    decide,
    enumerate_extreme_contractions,
    enumerate_l1,
    enumerate_operator_ball,
    hexagon_space,
    l1_space,
    l2_space,
    linf_space,
    operator,
    vec,
)
from opball.enumeration import backward_candidates
from opball.operators import UnsupportedPairError

from randgen import sign_permutation_operator


class TestDirectL1Enumeration:
    @pytest.mark.parametrize(
        "codomain_factory,expected",
        [
            (lambda: l1_space(2), 16),
            (lambda: linf_space(2), 16),
            (lambda: hexagon_space(), 36),
        ],
    )
    def test_counts_over_plane_domain(self, codomain_factory, expected):
        result = enumerate_l1(l1_space(2), codomain_factory())
        assert len(result) == expected

    def test_closed_under_negation_and_sorted(self):
        result = enumerate_l1(l1_space(2), l1_space(2))
        mats = set(result.matrices())
        for T in result.operators:
            assert T.negate().matrix in mats
        assert list(result.matrices()) == sorted(result.matrices())

    def test_every_member_is_extreme(self):
        for T in enumerate_l1(l1_space(2), hexagon_space()).operators:
            assert decide(T).is_extreme

    def test_euclidean_codomain_rejected(self):
        with pytest.raises(InfiniteExtremeSetError):
            enumerate_l1(l1_space(2), l2_space(2))

    def test_non_l1_domain_rejected(self):
        with pytest.raises(UnsupportedPairError):
            enumerate_l1(linf_space(2), l1_space(2))


class TestOperatorBallEnumeration:
    def test_matches_direct_enumeration(self):
        for codomain in [l1_space(2), linf_space(2), hexagon_space()]:
            direct = enumerate_l1(l1_space(2), codomain)
            ball = enumerate_operator_ball(l1_space(2), codomain)
            assert direct.matrices() == ball.matrices()

    def test_sup_norm_domain_count_is_recorded(self):
        # the count 16 was frozen from the first tool run; the assertion of
        # substance is that every ball vertex passes the perturbation oracle
        from opball import perturbation_oracle

        result = enumerate_operator_ball(linf_space(2), l1_space(2))
        assert len(result) == 16
        assert all(perturbation_oracle(T).is_extreme for T in result.operators)

    def test_size_cap(self):
        with pytest.raises(SizeCapError) as err:
            enumerate_operator_ball(linf_space(4), l1_space(4))
        assert err.value.size == 16


class TestLPProperty:
    def test_plane_l1_to_sup_holds(self):
        report = check_lp_property(l1_space(2), linf_space(2))
        assert report.holds
        assert not report.forward_violations and not report.backward_violations

    def test_universality_of_l1_domain(self):
        for codomain in [l1_space(2), linf_space(2), hexagon_space()]:
            assert check_lp_property(l1_space(2), codomain).holds

    def test_euclidean_domain_fails_with_verified_witness(self):
        report = check_lp_property(l2_space(2), linf_space(2))
        assert not report.holds
        (T, point), = report.forward_violations
        assert T.matrix == (vec([1, 0]), vec([1, 0]))
        assert point == vec(["3/5", "4/5"])
        assert decide(T).is_extreme
        from opball import is_extreme_point, norm

        assert norm(T.domain, point).value == 1  # squared value of a unit vector
        assert not is_extreme_point(T.codomain, T(point))

    def test_euclidean_domain_needs_matching_sup_codomain(self):
        with pytest.raises(UnsupportedPairError):
            check_lp_property(l2_space(2), l1_space(2))

    def test_backward_candidates_for_l1_match_enumeration(self):
        cands = {T.matrix for T in backward_candidates(l1_space(2), linf_space(2))}
        assert cands == set(enumerate_l1(l1_space(2), linf_space(2)).matrices())


class TestCompositionClosure:
    def test_identity_composition(self):
        T = operator([[1, 0], [0, 1]], l1_space(2), l1_space(2))
        assert decide(compose(T, T)).is_extreme

    def test_closure_on_plane_l1(self):
        contractions = enumerate_l1(l1_space(2), l1_space(2))
        report = composition_closure(contractions)
        assert report.total_pairs == 256
        assert report.closed

    def test_isometry_factor_preserves_verdict(self):
        rng = random.Random(61)
        contractions = enumerate_l1(l1_space(2), l1_space(2))
        for _ in range(10):
            T = rng.choice(contractions.operators)
            U = sign_permutation_operator(rng, l1_space(2))
            assert decide(compose(U, T)).is_extreme
            assert decide(compose(T, U)).is_extreme

    def test_mismatched_spaces_rejected(self):
        contractions = enumerate_l1(l1_space(2), linf_space(2))
        with pytest.raises(UnsupportedPairError):
            composition_closure(contractions)
