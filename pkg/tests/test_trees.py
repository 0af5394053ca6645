import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dendron import trees as tr
from dendron.trees import InvalidMorphism, Tree, TreeError


def brute_homs(S: Tree, T: Tree) -> set:
    """Every edge function S -> T that passes the morphism test."""
    src = sorted(S.edges)
    out = set()
    for img in itertools.product(sorted(T.edges), repeat=len(src)):
        m = dict(zip(src, img))
        if tr.is_morphism(S, T, m):
            out.add(tuple(sorted(m.items())))
    return out


SMALL = tr.all_trees(3, 4)


@st.composite
def random_trees(draw, max_edges=6):
    n = draw(st.integers(1, max_edges))
    names = [f"x{i}" for i in draw(st.permutations(range(n)))]
    parent = {names[i]: names[draw(st.integers(0, i - 1))] for i in range(1, n)}
    childless = [e for e in names if e not in parent.values()]
    capped = [e for e in childless if draw(st.booleans())]
    return tr.make_tree(parent, names[0], capped)


class TestTreeValidation:
    def test_cycle_rejected(self):
        with pytest.raises(TreeError):
            Tree(frozenset("abc"), "a", {"b": "c", "c": "b"})

    def test_root_must_be_edge(self):
        with pytest.raises(TreeError):
            Tree(frozenset("ab"), "z", {"b": "a"})

    def test_capped_edge_cannot_have_children(self):
        with pytest.raises(TreeError):
            Tree(frozenset("ab"), "a", {"b": "a"}, frozenset("a"))

    def test_stump_vs_leaf(self):
        stump = tr.corolla(0)
        assert stump.vertices == (stump.root,)
        assert not stump.leaves
        eta = tr.eta()
        assert eta.vertices == () and eta.leaves == {"e0"}

    def test_figure_tree_shape(self):
        T = tr.figure_tree()
        assert T.degree == 4
        assert len(T.edges) == 7
        assert T.leaves == {"a", "b", "f"}
        assert T.capped == {"d"}
        assert set(T.inner_edges) == {"c", "d", "e"}
        assert tr.unary_vertices(T) == ("c",)


class TestCanonicalForm:
    @given(random_trees())
    @settings(max_examples=60, deadline=None)
    def test_relabel_is_an_isomorphism(self, T):
        canon, relabel = tr.canonical_form(T)
        f = tr.validate_morphism(T, canon, relabel)
        assert f.is_iso()
        assert canon.encoding == T.encoding

    @given(random_trees(), st.randoms(use_true_random=False))
    @settings(max_examples=60, deadline=None)
    def test_encoding_invariant_under_renaming(self, T, rnd):
        names = sorted(T.edges)
        shuffled = names[:]
        rnd.shuffle(shuffled)
        ren = dict(zip(names, [f"y{n}" for n in shuffled]))
        U = tr.make_tree({ren[e]: ren[p] for e, p in T.parent.items()}, ren[T.root], [ren[c] for c in T.capped])
        assert U.encoding == T.encoding
        assert tr.canonical_form(U)[0] == tr.canonical_form(T)[0]

    def test_json_round_trip(self):
        T = tr.figure_tree()
        assert Tree.from_json(T.to_json()) == T

    def test_all_trees_distinct(self):
        trees = tr.all_trees(3, 5)
        assert len({T.encoding for T in trees}) == len(trees)


class TestMorphisms:
    @pytest.mark.parametrize("S", SMALL, ids=lambda T: T.encoding)
    def test_enumeration_matches_brute_force(self, S):
        for T in SMALL:
            found = {tuple(sorted(f.edge_map.items())) for f in tr.enumerate_homs(S, T)}
            assert found == brute_homs(S, T)

    def test_rejection_names_vertex(self):
        S = tr.corolla(2)
        T = tr.corolla(2)
        with pytest.raises(InvalidMorphism) as err:
            tr.validate_morphism(S, T, {"r": "r", "l1": "l1", "l2": "l1"})
        assert err.value.vertex == "r"

    @pytest.mark.parametrize("T", tr.all_trees(4, 7), ids=lambda T: T.encoding)
    def test_points_are_edges(self, T):
        assert len(tr.enumerate_homs(tr.eta(), T)) == len(T.edges)

    @pytest.mark.parametrize("n", range(5))
    def test_corolla_automorphisms(self, n):
        assert len(tr.automorphisms(tr.corolla(n))) == math.factorial(n)

    def test_composition_associative(self):
        trees = tr.all_trees(2, 3)
        for A, B, C, D in itertools.product(trees, repeat=4):
            for f in tr.enumerate_homs(A, B)[:3]:
                for g in tr.enumerate_homs(B, C)[:3]:
                    for h in tr.enumerate_homs(C, D)[:3]:
                        assert tr.compose(h, tr.compose(g, f)) == tr.compose(tr.compose(h, g), f)


class TestElementaryMaps:
    def test_figure_tree_faces(self):
        T = tr.figure_tree()
        kinds = sorted(tr.classify(f) for f in tr.elementary_faces(T))
        assert kinds.count("inner_face") == 3
        assert "top_face" in kinds
        s = tr.degeneracy(T, "c")
        assert tr.classify(s) == "degeneracy"

    def test_root_face_of_figure_tree(self):
        T = tr.figure_tree()
        (f,) = tr.root_faces(T)
        assert f.source.root == "e"

    @pytest.mark.parametrize("S", tr.all_trees(2, 4), ids=lambda T: T.encoding)
    def test_every_morphism_decomposes(self, S):
        for T in tr.all_trees(3, 5):
            for f in tr.enumerate_homs(S, T):
                steps = tr.decompose(f)
                kinds = {k for k, _ in steps}
                assert kinds <= {"degeneracy", "iso", "inner_face", "top_face", "root_face"}
                if steps:
                    assert tr.compose_all([g for _, g in steps]) == f
                else:
                    assert f == tr.identity(S)

    def test_factorization_classes(self):
        for S in tr.all_trees(2, 4):
            for T in tr.all_trees(2, 4):
                for f in tr.enumerate_homs(S, T):
                    neg, pos = tr.reedy_factorize(f)
                    assert neg.is_negative() and pos.is_positive()
                    assert tr.compose(pos, neg) == f
