import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dendron import categories as cats
from dendron.bpq import (
    COLLAPSED,
    LabelledSet,
    TruncatedNerve,
    bijections_over,
    check_bsigma_cofibrant,
    check_gamma_functoriality,
    check_gamma_set_functoriality,
    check_nerve_gamma_action,
    check_sigma_F,
    check_simplicial_identities,
    check_special,
    check_special_restriction_surjective,
    check_unit_map,
    check_wedge_identity,
    component_census,
    forgetful_morphism_action,
    gamma_action,
    inv_pow_rho,
    inv_star,
    l_star,
    labelled_sets,
    monoid_gamma,
    partial_maps_gamma,
    plain,
    reduce_pointed,
    sigma_groupoid,
    symmetric_collapse_action,
    two_point_pushout,
    unit_map_u,
)
from dendron.finsets import PartialMap, all_partial_maps, skeleton
from dendron.groupoids import check_groupoid


def brute_classes(objects):
    """Iso classes of sets over A x L are multisets of labels."""
    return {tuple(sorted(x.labels)) for x in objects}


class TestGroupoid:
    @pytest.mark.parametrize("na,nl", [(0, 1), (1, 1), (2, 1), (3, 1), (1, 2), (2, 2)])
    def test_census(self, na, nl):
        A, L = skeleton(na), skeleton(nl)
        assert component_census(A, L, 3)
        G = sigma_groupoid(A, L, 3)
        m = na * nl
        assert len(G.objects) == sum(m ** k for k in range(4))
        assert len(G.iso_classes()) == len(brute_classes(G.objects)) == math.comb(3 + m, m)

    def test_groupoid_axioms(self):
        assert check_groupoid(sigma_groupoid(skeleton(2), skeleton(1), 2))

    def test_bijections_respect_labels(self):
        x = plain((1, 2, 1))
        y = plain((2, 1, 1))
        fs = bijections_over(x, y)
        assert len(fs) == 2
        assert all(y.labels[f.perm[i] - 1] == x.labels[i] for f in fs for i in range(3))
        assert bijections_over(x, plain((1, 1))) == []


class TestGammaAction:
    def test_drops_undefined(self):
        phi = PartialMap(skeleton(2), skeleton(1), ((2, 1),))
        assert gamma_action(phi, plain((1, 2, 2, 1))) == plain((1, 1))

    def test_functoriality(self):
        assert check_gamma_functoriality(2, skeleton(1), 2)

    def test_nerve_action(self):
        assert check_nerve_gamma_action(skeleton(2), skeleton(1), bound=2, degree=2)


class TestSpecial:
    @pytest.mark.parametrize("na,nb", [(0, 0), (1, 0), (1, 1), (2, 1), (1, 3), (3, 3)])
    def test_special(self, na, nb):
        assert check_special(skeleton(na), skeleton(nb), 3 if na + nb > 4 else 4)

    def test_forgetful_action_is_rejected(self):
        verdict = check_special(skeleton(1), skeleton(1), 3, morphism_action=forgetful_morphism_action)
        assert not verdict
        assert "hom_mismatch" in verdict.witness


class TestNerve:
    def test_simplex_counts(self):
        # one object per class over a point, with automorphism groups S_0, S_1, S_2
        N = TruncatedNerve(sigma_groupoid(skeleton(1), skeleton(1), 2), 3)
        for n in range(4):
            assert len(list(N.simplices(n))) == 1 + 1 + 2 ** n
        with pytest.raises(ValueError):
            list(N.simplices(4))

    def test_simplicial_identities(self):
        assert check_simplicial_identities(TruncatedNerve(sigma_groupoid(skeleton(2), skeleton(1), 2), 3))


class TestCofibrant:
    @pytest.mark.parametrize("na", [0, 1, 2, 3])
    def test_free_action(self, na):
        assert check_bsigma_cofibrant(skeleton(na), 3, 3)

    def test_collapse_mutation(self):
        verdict = check_bsigma_cofibrant(skeleton(2), 3, 2, object_action=symmetric_collapse_action)
        assert not verdict
        assert verdict.witness["degree"] == 0


class TestUnitMap:
    def test_example(self):
        L, A = skeleton(3), skeleton(2)
        phi = PartialMap(L, A, ((1, 2), (3, 2)))
        assert unit_map_u(L, A)(phi) == LabelledSet(((2, 1), (2, 3)))

    def test_natural_injective(self):
        assert check_unit_map(3, 3)


class TestWedgeAndPushout:
    @pytest.mark.parametrize("nl", [0, 1, 2, 3])
    def test_wedge(self, nl):
        assert check_wedge_identity(skeleton(nl), 3)

    @pytest.mark.parametrize("na", [0, 1, 2, 3])
    @pytest.mark.parametrize("nl", [0, 1, 2, 3])
    def test_pushout(self, na, nl):
        rep = two_point_pushout(skeleton(na), skeleton(nl))
        assert rep.passed
        assert rep.total == (na * nl + 1) ** 2 == len(list(all_partial_maps(skeleton(2), skeleton(na * nl))))

    def test_l_star_values(self):
        X = l_star(partial_maps_gamma(skeleton(1)), skeleton(2))
        assert len(X.value(skeleton(3))) == 3 * 2 + 1
        assert check_gamma_set_functoriality(X, 2)


def z2():
    return monoid_gamma((0, 1), lambda a, b: (a + b) % 2, 0, name="Z/2")


class TestGammaSets:
    def test_monoid_is_special(self):
        X = z2()
        assert check_gamma_set_functoriality(X, 3)
        for n in range(4):
            assert check_special_restriction_surjective(X, skeleton(n))

    def test_rho_for_monoid_is_bijective(self):
        _, _, rep = inv_pow_rho(z2(), cats.injection_category(3))
        assert rep.natural
        assert all(rep.injective.values()) and all(rep.surjective.values())
        assert rep.sizes == {n: [2 ** n, 2 ** n] for n in range(4)}

    def test_rho_for_two_point_maps(self):
        # F(2, A) has (|A|+1)^2 elements against 4^|A| families
        _, _, rep = inv_pow_rho(partial_maps_gamma(skeleton(2)), cats.injection_category(3))
        assert rep.natural
        assert rep.sizes == {n: [(n + 1) ** 2, 4 ** n] for n in range(4)}
        assert all(rep.injective.values())
        assert rep.surjective == {0: True, 1: True, 2: False, 3: False}

    def test_reduce(self):
        X = z2()
        R = reduce_pointed(X, X.value(frozenset())[0])
        assert check_gamma_set_functoriality(R, 2)
        assert R.value(skeleton(2))[0] == COLLAPSED
        assert len(R.value(skeleton(2))) == 4
        with pytest.raises(ValueError):
            reduce_pointed(X, None)

    def test_sigma_F(self):
        F = inv_star(partial_maps_gamma(skeleton(1)), cats.injection_category(2))
        assert check_sigma_F(F, 2, 2)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=3), st.integers(0, 3))
def test_pushing_along_total_bijection_preserves_size(values, seed):
    A = skeleton(3)
    perms = [p for p in all_partial_maps(A, A) if p.is_total() and len(set(p(a) for a in A)) == 3]
    tau = perms[seed % len(perms)]
    x = plain(tuple(values))
    y = gamma_action(tau, x)
    assert y.size == x.size
    assert sorted(y.over()) == sorted(tau(a) for a in x.over())
