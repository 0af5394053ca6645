import json

import pytest

from dendron import categories as cats
from dendron import trees as tr
from dendron.finsets import skeleton
from dendron.presheaves import partial_maps_from
from dendron.reedy import (
    CategoryError,
    HypothesisError,
    LiftingProblem,
    PresheafMap,
    QuotientPresheaf,
    SubPresheaf,
    TabulatedPresheaf,
    check_associativity,
    check_composition,
    check_functoriality,
    check_lemma_hypotheses,
    check_reedy_axioms,
    degenerate_part,
    has_absolute_pushout,
    is_normal,
    is_normal_mono,
    latching_object,
    matching_by_limit,
    matching_object,
    natural_transformations,
    negative_sections,
    representable,
    solve_lifting,
    terminal_presheaf,
)


def canon(enc):
    return tr.from_encoding(enc)


SPAN_JSON = {
    "name": "span",
    "objects": ["r", "s", "t"],
    "degrees": {"r": 1, "s": 0, "t": 0},
    "identities": {"r": "1r", "s": "1s", "t": "1t"},
    "morphisms": {"e1": {"source": "r", "target": "s", "class": "minus"},
                  "e2": {"source": "r", "target": "t", "class": "minus"}},
}


class TestAxioms:
    @pytest.mark.parametrize("which", ["omega3", "gamma4", "injections4"])
    def test_real_categories_pass(self, which, request):
        cat = request.getfixturevalue(which)
        checks = check_reedy_axioms(cat)
        assert [c.name for c in checks] == ["axiom1_degree", "classes_closed", "axiom2_factorization",
                                            "axiom3_isos", "axiom4_rigidity"]
        assert all(checks), [c for c in checks if not c.passed]

    def test_categories_are_categories(self, omega2, gamma3):
        for cat in (omega2, gamma3):
            assert check_composition(cat)
            assert check_associativity(cat)

    @pytest.mark.parametrize("mutate,base", [
        (cats.omega_face_as_negative, "omega3"),
        (cats.omega_without_degeneracies, "omega3"),
        (cats.gamma_injection_as_positive, "gamma4"),
        (cats.injections_all_negative, "injections4"),
    ])
    def test_mutations_fail_with_witness(self, mutate, base, request):
        cat = mutate(request.getfixturevalue(base))
        failed = [c for c in check_reedy_axioms(cat) if not c.passed]
        assert failed
        assert all(c.witness for c in failed)

    def test_degeneracies_needed_for_factorization(self, omega3):
        cat = cats.omega_without_degeneracies(omega3)
        by_name = {c.name: c for c in check_reedy_axioms(cat)}
        assert not by_name["axiom2_factorization"].passed

    def test_presentation_from_json(self):
        cat = cats.category_from_json(json.dumps(SPAN_JSON))
        assert all(check_reedy_axioms(cat))
        ok, witness = has_absolute_pushout(cat, "e1", "e2")
        assert not ok and witness is None

    def test_presentation_bad_class_detected(self):
        data = json.loads(json.dumps(SPAN_JSON))
        data["morphisms"]["e1"]["class"] = "plus"
        failed = [c for c in check_reedy_axioms(cats.category_from_json(data)) if not c.passed]
        assert failed and failed[0].name == "axiom1_degree"


class TestPushoutsAndSections:
    def test_nonsplit_span(self):
        cat, e1, e2 = cats.nonsplit_span_category()
        assert has_absolute_pushout(cat, e1, e2) == (False, None)
        assert not negative_sections(cat)

    def test_gamma_hypotheses(self, gamma3):
        assert negative_sections(gamma3)
        assert check_lemma_hypotheses(gamma3)

    def test_omega_hypotheses(self, omega2):
        assert check_lemma_hypotheses(omega2)

    def test_span_pushout_witness_in_gamma(self, gamma3):
        negs = [f for f in gamma3.out_of(skeleton(2)) if gamma3.minus(f) and not gamma3.is_iso(f)]
        ok, w = has_absolute_pushout(gamma3, negs[0], negs[-1])
        assert ok and w is not None


class TestLatchingMatching:
    def test_latching_of_representable(self, omega2):
        T = canon("((|))")
        X = representable(omega2, T)
        L = latching_object(X, T)
        assert L.is_injective()
        # the degenerate maps into T are those that are not injective on edges
        degenerate = {x for x in X.value(T) if not x.is_injective()}
        assert L.image() == degenerate

    def test_latching_of_corolla_is_empty(self, omega2):
        C = canon("(|,|)")
        assert len(latching_object(representable(omega2, C), C)) == 0

    @pytest.mark.parametrize("enc", ["|", "(|)", "(|,|)", "((|))", "(*,|)"])
    def test_matching_two_routes(self, omega2, enc):
        T = canon(enc)
        for S in (canon("(|)"), canon("(|,|)")):
            X = representable(omega2, S)
            assert len(matching_object(X, T)) == len(matching_by_limit(X, T))

    def test_matching_of_terminal(self, omega2):
        T = canon("((|))")
        assert len(matching_object(terminal_presheaf(omega2), T)) == 1

    def test_degenerate_part_of_terminal(self, omega2):
        T = canon("(|)")
        assert degenerate_part(terminal_presheaf(omega2), T) == {"*"}


class TestNormality:
    @pytest.mark.parametrize("enc", ["|", "*", "(|)", "(|,|)", "((|))", "(*,|)"])
    def test_representables_normal(self, omega2, enc):
        assert is_normal(representable(omega2, canon(enc)))

    def test_quotient_by_symmetry_not_normal(self, omega2):
        C = canon("(|,|)")
        Q = QuotientPresheaf(omega2, C, tr.automorphisms(C))
        verdict = is_normal(Q)
        assert not verdict
        assert verdict.witness["object"] == C

    def test_partial_maps_dual_normal(self, gamma3):
        assert is_normal(partial_maps_from(gamma3, [1, 2]))

    def test_hypotheses_enforced(self):
        cat, _, _ = cats.nonsplit_span_category()
        X = terminal_presheaf(cat)
        with pytest.raises(HypothesisError):
            is_normal_mono(PresheafMap(X, X, lambda o, x: x))


class TestNaturalTransformations:
    def test_yoneda_count(self, omega2):
        T = canon("(|,|)")
        for S in omega2.objects[:6]:
            maps = list(natural_transformations(representable(omega2, S), representable(omega2, T)))
            assert len(maps) == len(omega2.hom(S, T))

    def test_functoriality_of_representable(self, omega2):
        assert check_functoriality(representable(omega2, canon("((|))")))

    def test_outside_object_rejected(self, omega2):
        with pytest.raises(CategoryError):
            representable(omega2, canon("((((|))))"))


class TestLifting:
    def _square(self, omega, T, target_tree):
        rep = representable(omega, T)
        leaf_sub = SubPresheaf(rep, lambda o, a: o.degree == 0 and not o.capped and len(o.edges) == 1
                               and a("e0") in T.leaves)
        Y = terminal_presheaf(omega)
        X = representable(omega, target_tree)
        return rep, leaf_sub, X, Y

    def test_lift_exists(self, omega2):
        T = canon("(|,|)")
        rep, sub, X, Y = self._square(omega2, T, T)
        prob = LiftingProblem(PresheafMap(sub, rep, lambda o, a: a), PresheafMap(X, Y, lambda o, x: "*"),
                              PresheafMap(sub, X, lambda o, a: a), PresheafMap(rep, Y, lambda o, a: "*"))
        res = solve_lifting(prob)
        assert res.found
        assert res.diagonal[(T, tr.identity(T))] in omega2.hom(T, T)

    def test_exhaustion_when_image_point_missing(self, omega2):
        # p: X -> Y misses the point the bottom map needs
        T = canon("(|)")
        rep = representable(omega2, T)
        empty = SubPresheaf(rep, lambda o, a: False)
        Y = TabulatedPresheaf(omega2, {o: ("a", "b") for o in omega2.objects}, lambda f, y: y, "two")
        X = terminal_presheaf(omega2)
        prob = LiftingProblem(PresheafMap(empty, rep, lambda o, a: a), PresheafMap(X, Y, lambda o, x: "a"),
                              PresheafMap(empty, X, lambda o, a: "*"), PresheafMap(rep, Y, lambda o, a: "b"))
        res = solve_lifting(prob)
        assert not res.found and res.diagonal is None

    def test_non_commuting_square_rejected(self, omega2):
        T = canon("(|)")
        rep = representable(omega2, T)
        Y = TabulatedPresheaf(omega2, {o: ("a", "b") for o in omega2.objects}, lambda f, y: y, "two")
        X = terminal_presheaf(omega2)
        prob = LiftingProblem(PresheafMap(rep, rep, lambda o, a: a), PresheafMap(X, Y, lambda o, x: "a"),
                              PresheafMap(rep, X, lambda o, a: "*"), PresheafMap(rep, Y, lambda o, a: "b"))
        with pytest.raises(CategoryError):
            solve_lifting(prob)


class TestPresheafJson:
    def test_round_trip(self, omega2):
        from dendron.operads import AssociativeOperad, dendroidal_nerve
        from dendron.reedy import presheaf_from_json, presheaf_to_json

        for X in (representable(omega2, tr.from_encoding("((|))")), dendroidal_nerve(AssociativeOperad(3), omega2)):
            data = presheaf_to_json(X)
            Y = presheaf_from_json(json.loads(json.dumps(data)), omega2)
            assert check_functoriality(Y)
            assert presheaf_to_json(Y) == data

    def test_missing_object(self, omega2, omega3):
        from dendron.reedy import presheaf_from_json, presheaf_to_json

        data = presheaf_to_json(representable(omega2, tr.eta()))
        with pytest.raises(ValueError):
            presheaf_from_json(data, omega3)
