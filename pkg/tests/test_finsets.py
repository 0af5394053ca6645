import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dendron import trees as tr
from dendron.finsets import (
    PartialMap,
    all_bijections,
    all_injections,
    all_partial_maps,
    compose_partial,
    gamma_class,
    identity_map,
    inv_functor,
    leaf_class,
    leaf_functor,
    partial_map,
    reedy_factorize_gamma,
    skeleton,
)


@st.composite
def partial_maps(draw, source=None, target=None):
    A = source if source is not None else skeleton(draw(st.integers(0, 3)))
    B = target if target is not None else skeleton(draw(st.integers(0, 3)))
    m = {}
    for a in sorted(A):
        b = draw(st.sampled_from([None] + sorted(B)))
        if b is not None:
            m[a] = b
    return partial_map(A, B, m)


@st.composite
def composable_triples(draw):
    A, B, C, D = (skeleton(draw(st.integers(0, 3))) for _ in range(4))
    return draw(partial_maps(A, B)), draw(partial_maps(B, C)), draw(partial_maps(C, D))


class TestPartialMaps:
    @pytest.mark.parametrize("a,b", [(0, 0), (1, 2), (2, 2), (3, 1)])
    def test_count(self, a, b):
        assert len(list(all_partial_maps(skeleton(a), skeleton(b)))) == (b + 1) ** a

    def test_injection_and_bijection_counts(self):
        assert len(list(all_injections(skeleton(2), skeleton(4)))) == 12
        assert len(list(all_bijections(skeleton(3), skeleton(3)))) == 6
        assert list(all_bijections(skeleton(2), skeleton(3))) == []

    @given(composable_triples())
    @settings(max_examples=100, deadline=None)
    def test_associative(self, fgh):
        f, g, h = fgh
        assert compose_partial(h, compose_partial(g, f)) == compose_partial(compose_partial(h, g), f)

    @given(partial_maps())
    @settings(max_examples=50, deadline=None)
    def test_identities(self, f):
        assert compose_partial(identity_map(f.target), f) == f
        assert compose_partial(f, identity_map(f.source)) == f

    @given(partial_maps())
    @settings(max_examples=50, deadline=None)
    def test_json_round_trip(self, f):
        assert PartialMap.from_json(f.to_json()) == f

    def test_rejects_values_outside_target(self):
        with pytest.raises(ValueError):
            partial_map([1], [1], {1: 2})

    def test_not_composable(self):
        with pytest.raises(ValueError):
            compose_partial(identity_map([1]), identity_map([1, 2]))

    @given(partial_maps())
    @settings(max_examples=80, deadline=None)
    def test_factorization(self, f):
        pos, neg = reedy_factorize_gamma(f)
        assert compose_partial(neg, pos) == f
        assert pos.is_surjective()
        assert neg.is_total() and neg.is_injective()

    def test_gamma_classes(self):
        assert gamma_class(identity_map([1, 2])) == "iso"
        assert gamma_class(partial_map([1, 2], [1], {1: 1})) == "positive"
        assert gamma_class(partial_map([1], [1, 2], {1: 1})) == "negative"
        assert gamma_class(partial_map([1, 2], [1, 2], {1: 1})) == "mixed"

    def test_inv_of_injection(self):
        m = partial_map([1], [1, 2], {1: 2})
        inv = inv_functor(m)
        assert inv.source == m.target and inv(2) == 1 and not inv.is_defined(1)
        with pytest.raises(ValueError):
            inv_functor(partial_map([1, 2], [1], {1: 1, 2: 1}))


TREES = tr.all_trees(3, 5)


class TestLeafFunctor:
    def test_identity(self):
        for T in TREES:
            assert leaf_functor(tr.identity(T)) == identity_map(T.leaves)

    def test_functorial_on_composable_pairs(self):
        trees = tr.all_trees(2, 4)
        homs = {(S, T): tr.enumerate_homs(S, T) for S in trees for T in trees}
        n = 0
        for R, S, T in itertools.product(trees, repeat=3):
            for f in homs[(R, S)]:
                for g in homs[(S, T)]:
                    assert leaf_functor(tr.compose(g, f)) == compose_partial(leaf_functor(f), leaf_functor(g))
                    n += 1
        assert n > 1000

    def test_generator_images(self):
        for T in tr.all_trees(4, 7):
            for e in T.inner_edges:
                assert leaf_class(leaf_functor(tr.inner_face(T, e))) == "bijection"
            for v in tr.unary_vertices(T):
                assert leaf_class(leaf_functor(tr.degeneracy(T, v))) == "bijection"
            for v in tr.top_vertices(T):
                assert leaf_class(leaf_functor(tr.top_face(T, v))) in ("total", "bijection")
            for f in tr.root_faces(T):
                # leaves above the kept subtree match its leaves; the rest are dropped
                lam = leaf_functor(f)
                assert lam.is_injective() and lam.is_surjective()
                assert leaf_class(lam) in ("partial", "bijection")

    def test_root_face_can_be_partial(self):
        T = tr.from_encoding("((|),|)")
        classes = {leaf_class(leaf_functor(f)) for f in tr.root_faces(T)}
        assert classes == {"partial"}

    def test_top_face_on_stump_is_not_surjective(self):
        T = tr.from_encoding("(*,|)")
        stump = next(v for v in T.vertices if v in T.capped)
        lam = leaf_functor(tr.top_face(T, stump))
        assert lam.is_total() and not lam.is_surjective()
