import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dendron.reedy import Check
from dendron.suites import (
    BOUND_KEYS,
    SCHEMA,
    Bounds,
    BoundsError,
    UnknownSuite,
    VerificationReport,
    combined_json,
    parse_bounds,
    run_suite,
    suite_names,
)


class TestBounds:
    def test_parse(self):
        b = parse_bounds("tree-vertices=2, carrier=5")
        assert b == Bounds(tree_vertices=2, carrier=5)
        assert parse_bounds("") == parse_bounds(None) == Bounds()

    @pytest.mark.parametrize("text", ["depth=3", "carrier", "carrier=x", "carrier=-1", "tree_vertices=2"])
    def test_errors(self, text):
        with pytest.raises(BoundsError):
            parse_bounds(text)

    def test_merge_keeps_explicit_values(self):
        merged = Bounds(carrier=2).merged(Bounds(carrier=4, set_size=3))
        assert merged == Bounds(carrier=2, set_size=3)

    @given(st.dictionaries(st.sampled_from(BOUND_KEYS), st.integers(0, 9)))
    def test_encode_round_trip(self, values):
        text = ",".join(f"{k}={v}" for k, v in values.items())
        b = parse_bounds(text)
        assert parse_bounds(b.encode()) == b
        assert b.to_json() == values


class TestReports:
    def test_unknown_suite_lists_all(self):
        with pytest.raises(UnknownSuite) as info:
            run_suite("nope")
        for name in suite_names():
            assert name in str(info.value)

    def test_reedy_suite(self):
        rep = run_suite("reedy-axioms")
        assert rep.passed
        data = json.loads(rep.dumps())
        assert data["schema"] == SCHEMA
        assert data["bounds"] == {"tree-vertices": 3, "tree-edges": 5, "set-size": 4}
        assert data["counts"]["failed"] == 0
        assert "wall_time" not in rep.dumps()

    def test_bounds_override(self, tmp_path):
        out = tmp_path / "r.json"
        rep = run_suite("bpq-special", "set-size=2,carrier=3", output=out)
        assert rep.passed
        assert rep.bounds.set_size == 2 and rep.bounds.carrier == 3
        assert out.read_text() == rep.dumps()

    def test_failing_check_carries_replay(self):
        rep = VerificationReport("slice", Bounds(arity=1), [Check("a", True), Check("b", False, {"x": 1})])
        data = rep.to_json()
        assert not data["passed"]
        assert [c.get("replay") for c in data["checks"]] == [None, "dendron run slice --bounds arity=1"]
        assert "FAIL" in rep.render_text()

    def test_deterministic(self):
        a = run_suite("lstar-pushout", "set-size=2")
        b = run_suite("lstar-pushout", "set-size=2")
        assert a.dumps() == b.dumps()
        assert combined_json([a]) == combined_json([b])
