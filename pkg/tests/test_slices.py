import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dendron import categories as cats
from dendron import trees as tr
from dendron.groupoids import check_groupoid
from dendron.operads import AssociativeOperad, check_strict_covariant_fibration, dendroidal_nerve
from dendron.presheaves import check_strict_segal
from dendron.reedy import check_functoriality
from dendron.slices import (
    ETA,
    CorollaAttachment,
    attachment_groupoid,
    attachment_restrict,
    attachments,
    check_attachment_functoriality,
    check_projection_bijective_at_leafless,
    new_leaf,
    slice_construction,
    tree_representable,
)


@pytest.fixture(scope="module")
def omega24():
    return cats.omega_category(2, 4)


@pytest.fixture(scope="module")
def nass(omega24):
    return dendroidal_nerve(AssociativeOperad(4), omega24)


def brute_arity_functions(T, bound):
    leaves = sorted(T.leaves)
    return [dict(zip(leaves, ns)) for ns in itertools.product(range(bound + 1), repeat=len(leaves))]


class TestAttachments:
    @pytest.mark.parametrize("bound", [0, 1, 2, 3])
    def test_count(self, omega3, bound):
        for T in omega3.objects:
            atts = attachments(T, bound)
            assert len(atts) == (bound + 1) ** len(T.leaves)
            assert [dict(a.arities) for a in atts] == brute_arity_functions(T, bound)

    def test_total_mode_is_a_subset(self):
        T = tr.corolla(2)
        total = attachments(T, 2, mode="total")
        assert len(total) == 6  # pairs with sum <= 2
        assert set(total) <= set(attachments(T, 2))
        with pytest.raises(ValueError):
            attachments(T, 2, mode="sideways")

    def test_grafted_tree(self):
        T = tr.corolla(2)
        a, b = sorted(T.leaves)
        att = CorollaAttachment(T, ((a, 2), (b, 0)))
        S = att.sharp
        assert S.leaves == {new_leaf(a, 1), new_leaf(a, 2)}
        assert b in S.capped
        assert len(S.vertices) == 3
        assert tr.canonical_form(S)[0].encoding == "((|,|),*)"

    def test_validation(self):
        T = tr.corolla(2)
        a, _ = sorted(T.leaves)
        with pytest.raises(ValueError):
            CorollaAttachment(T, ((a, 1),))
        with pytest.raises(ValueError):
            CorollaAttachment(T, tuple((l, -1) for l in T.leaves))

    def test_automorphisms_are_products_of_symmetric_groups(self, omega3):
        for T in omega3.objects:
            for att in attachments(T, 3):
                auts = att.automorphisms()
                assert len(auts) == math.prod(math.factorial(n) for _, n in att.arities)
                assert all(tr.compose(phi, att.embedding) == att.embedding for phi in auts)

    def test_groupoid(self, omega24):
        for T in omega24.objects:
            if len(T.leaves) <= 2:
                G = attachment_groupoid(T, 2)
                assert check_groupoid(G)
                # arity functions are never isomorphic under T
                assert len(G.iso_classes()) == len(G.objects)

    def test_functoriality(self, omega24):
        assert check_attachment_functoriality(omega24.objects, bound=1, max_edges=4)

    def test_restriction_counts_leaves_above(self):
        T = tr.from_encoding("((|,|),|)")
        att = CorollaAttachment(T, tuple((l, 2) for l in T.leaves))
        for alpha in tr.enumerate_homs(ETA, T):
            pulled = attachment_restrict(alpha, att)
            above = [l for l in T.leaves if alpha("e0") in T.path_to_root(l)]
            assert pulled.arity("e0") == 2 * len(above)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 3), st.integers(0, 3))
    def test_identity_restriction(self, n, m):
        T = tr.corolla(2)
        att = CorollaAttachment(T, tuple(zip(sorted(T.leaves), (n, m))))
        assert attachment_restrict(tr.identity(T), att) == att


@pytest.fixture(scope="module")
def slices(nass):
    sigma = {"u": nass.value(ETA)[0]}
    return slice_construction(nass, sigma, 2), slice_construction(nass, sigma, 2, mode="total")


class TestSliceOverNerve:

    def test_counts_by_free_action(self, slices, nass, omega24):
        # Aut acts freely on associative dendrices, so classes = triples / |Aut|
        per_leaf, _ = slices
        for T in omega24.objects:
            expected = sum(len(nass.value(a.sharp)) // math.prod(math.factorial(n) for _, n in a.arities)
                           for a in attachments(T, 2))
            assert len(per_leaf.value(T)) == expected

    def test_eta_value(self, slices):
        # one class for each arity 1..bound; the stump carries no dendrex
        per_leaf, _ = slices
        assert sorted(dict(x.arities)["e0"] for x in per_leaf.value(ETA)) == [1, 2]

    def test_total_functoriality(self, slices):
        assert check_functoriality(slices[1])

    def test_covariant_at_corollas(self, slices, nass):
        seg = check_strict_segal(nass)
        assert seg
        assert check_strict_covariant_fibration(slices[0].projection(), seg)

    def test_leafless_bijection(self, slices):
        assert check_projection_bijective_at_leafless(slices[0])

    def test_canonical_lift_projects_to_label(self, slices, nass):
        per_leaf, _ = slices
        x = per_leaf.canonical_lift("u")
        assert x in per_leaf.value(ETA)
        assert per_leaf.projection()(ETA, x) == nass.value(ETA)[0]

    def test_sigma_must_land_in_eta_values(self, nass):
        with pytest.raises(ValueError):
            slice_construction(nass, {"u": "not a dendrex"})


class TestSliceOverRepresentable:
    def test_values_are_homs(self, omega24):
        X = tree_representable(tr.corolla(2), omega24)
        S = tr.from_encoding("((|,|),|)")
        assert len(X.value(S)) == len(tr.enumerate_homs(S, tr.corolla(2)))

    def test_covariant_over_corolla(self, omega24):
        C = tr.corolla(2)
        X = tree_representable(C, omega24)
        sigma = {e: f for e in sorted(C.edges) for f in X.value(ETA) if f("e0") == e}
        S = slice_construction(X, sigma, 1)
        seg = check_strict_segal(X)
        assert seg
        assert check_strict_covariant_fibration(S.projection(), seg)
        assert check_projection_bijective_at_leafless(S)


def test_slice_of_the_edge_at_the_edge(omega24):
    X = tree_representable(ETA, omega24)
    S = slice_construction(X, {"u": X.value(ETA)[0]}, 3)
    assert [dict(x.arities) for x in S.value(ETA)] == [{"e0": 1}]
    assert S.value(ETA) == (S.canonical_lift("u"),)
