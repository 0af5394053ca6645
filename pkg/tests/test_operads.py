import math

import pytest

from dendron import trees as tr
from dendron.operads import (
    AssociativeOperad,
    BoundError,
    CommutativeOperad,
    TableOperad,
    TreeOperad,
    TrivialOperad,
    TruncationError,
    check_algebra_axioms,
    check_g_identity,
    check_nerve_yoneda,
    check_operad_axioms,
    check_strict_covariant_fibration,
    check_unit_over_nerve,
    dendroidal_nerve,
    free_algebra,
    is_sigma_free,
    leaf_inclusion_problem,
    nerve_elements,
    restrict_nerve,
    tabulate_operad,
    terminal_algebra,
    underline_g,
)
from dendron.presheaves import check_strict_segal, disjoint_union
from dendron.reedy import PresheafMap, check_functoriality, solve_lifting


def canon(enc):
    return tr.from_encoding(enc)


def one_coloured_nerve_size(sizes, T):
    """Product over vertices of the number of operations of that arity."""
    return math.prod(sizes(len(T.inputs(v))) for v in T.vertices)


class TestOperads:
    @pytest.mark.parametrize("P", [AssociativeOperad(), CommutativeOperad(), TrivialOperad(("a", "b")),
                                   TreeOperad(tr.figure_tree())], ids=lambda P: P.name)
    def test_axioms(self, P):
        assert check_operad_axioms(P, 3)

    def test_sigma_freeness(self):
        assert is_sigma_free(AssociativeOperad())
        verdict = is_sigma_free(CommutativeOperad())
        assert not verdict
        assert verdict.witness == {"operation": "2", "permutation": [1, 0]}

    def test_ass_composition_is_substitution(self):
        P = AssociativeOperad()
        # (x1 x0) o_0 (y0 y1) = x2 y0 y1 read as inputs 2, 0, 1
        assert P.compose_at((1, 0), 0, (0, 1)) == (2, 0, 1)
        assert P.compose_at((1, 0), 1, (1, 0)) == (2, 1, 0)

    def test_table_round_trip(self):
        P = tabulate_operad(AssociativeOperad(3))
        Q = TableOperad.from_json(P.to_json())
        assert Q.to_json() == P.to_json()
        assert check_operad_axioms(Q, 3)
        assert is_sigma_free(Q)

    def test_tree_operad_operations_are_subtrees(self):
        T = tr.figure_tree()
        P = TreeOperad(T)
        assert P.operations(("a", "e"), "r")
        assert not P.operations(("a",), "r")
        assert P.operations((), "d")


class TestNerve:
    @pytest.mark.parametrize("T", tr.all_trees(3, 5), ids=lambda T: T.encoding)
    def test_sizes_match_products(self, T):
        assert len(nerve_elements(AssociativeOperad(4), T)) == one_coloured_nerve_size(
            lambda n: math.factorial(n) if n else 0, T)
        assert len(nerve_elements(CommutativeOperad(4), T)) == one_coloured_nerve_size(lambda n: 1 if n else 0, T)

    def test_yoneda(self, omega3):
        assert check_nerve_yoneda(omega3)

    def test_nerves_functorial_and_segal(self, omega3):
        for P in (AssociativeOperad(4), CommutativeOperad(4)):
            N = dendroidal_nerve(P, omega3)
            assert check_functoriality(N)
            assert check_strict_segal(N)

    def test_bound_error(self, omega3):
        with pytest.raises(BoundError):
            dendroidal_nerve(AssociativeOperad(2), omega3)

    def test_restriction_along_inner_face_composes(self):
        P = AssociativeOperad(3)
        T = canon("((|,|),|)")
        (e,) = T.inner_edges
        face = tr.inner_face(T, e)
        for xi in nerve_elements(P, T):
            r = restrict_nerve(P, face, xi)
            v_root = T.root
            assert r.op(v_root) in P.operations(("c",) * 3, "c")


class TestFreeAlgebras:
    def test_word_counts(self):
        # words over {x, y} of length 1..3; multisets for Com
        assert sum(map(len, free_algebra(AssociativeOperad(), {"x": "c", "y": "c"}, 3)._carrier.values())) == 2 + 4 + 8
        assert len(free_algebra(CommutativeOperad(), {"x": "c", "y": "c"}, 3).carrier("c")) == 2 + 3 + 4
        assert len(free_algebra(AssociativeOperad(), {"x": "c"}, 3).carrier("c")) == 3

    def test_degenerate_cases(self):
        assert free_algebra(AssociativeOperad(), {}, 3).carrier("c") == ()
        assert len(free_algebra(TrivialOperad(), {"x": "c"}, 3).carrier("c")) == 1

    def test_axioms(self):
        assert check_algebra_axioms(free_algebra(AssociativeOperad(), {"x": "c", "y": "c"}, 3, overflow=True), 3)
        assert check_algebra_axioms(free_algebra(CommutativeOperad(), {"x": "c"}, 3, overflow=True), 3)

    def test_truncation(self):
        A = free_algebra(AssociativeOperad(), {"x": "c"}, 2)
        x = A.generator("x")
        xx = A.multiply((0, 1), [x, x])
        with pytest.raises(TruncationError):
            A.multiply((0, 1), [xx, x])

    def test_overflow_absorbs(self):
        A = free_algebra(AssociativeOperad(), {"x": "c"}, 2, overflow=True)
        x = A.generator("x")
        big = A.multiply((0, 1, 2), [x, x, x])
        assert big == A.carrier("c")[-1]
        assert A.multiply((0, 1), [big, x]) == big


@pytest.fixture(scope="module")
def setup(omega2):
    NP = dendroidal_nerve(AssociativeOperad(3), omega2)
    A = free_algebra(NP.P, {"x": "c"}, 3, overflow=True)
    return NP, A, underline_g(A, NP)


class TestAlgebraPresheaf:

    def test_pullback_identity(self, setup):
        NP, A, _ = setup
        assert check_g_identity(A, NP)

    def test_functorial(self, setup):
        _, _, G = setup
        assert check_functoriality(G)

    def test_covariant(self, setup):
        NP, _, G = setup
        assert check_strict_covariant_fibration(G.projection())

    def test_terminal_algebra_gives_the_nerve(self, setup):
        NP, _, _ = setup
        G = underline_g(terminal_algebra(NP.P), NP)
        for T in NP.category.objects:
            assert len(G.value(T)) == len(NP.value(T))

    def test_leaf_lifting(self, setup):
        NP, A, G = setup
        for T in NP.category.objects:
            if T.leaves and T.vertices and NP.value(T):
                xi = NP.value(T)[0]
                res = solve_lifting(leaf_inclusion_problem(G, T, xi, {l: A.generator("x") for l in T.leaves}))
                assert res.found

    def test_unit_over_nerve(self, setup):
        NP, _, _ = setup
        for T in NP.category.objects:
            assert check_unit_over_nerve(NP, T)

    def test_fold_map_is_not_covariant(self, setup):
        NP = setup[0]
        fold = PresheafMap(disjoint_union([NP, NP]), NP, lambda o, t: t[1])
        verdict = check_strict_covariant_fibration(fold)
        assert not verdict
        assert verdict.witness == {"corolla": "(|,|)", "source": 4, "pullback": 8}

    def test_non_segal_base_refused(self, omega2):
        from dendron.presheaves import boundary_horn_core

        T = canon("((|))")
        horn = boundary_horn_core(omega2, T, "horn", T.inner_edges[0])
        with pytest.raises(ValueError):
            check_strict_covariant_fibration(PresheafMap(horn, horn, lambda o, x: x))
