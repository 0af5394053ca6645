import json

import pytest

from dendron import trees as tr
from dendron.cli import main
from dendron.fixtures import ENV_VAR, FixtureError, fixtures
from dendron.operads import AssociativeOperad, CommutativeOperad, is_sigma_free, tabulate_operad


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestFixtures:
    def test_figure_tree(self):
        T = fixtures().get("fig-tree-4v")
        assert T == tr.figure_tree()
        assert len(T.vertices) == 4
        assert set(T.inner_edges) == {"c", "d", "e"}

    def test_operads(self):
        reg = fixtures()
        assert is_sigma_free(reg.get("ass-operad"))
        verdict = is_sigma_free(reg.get("com-operad"))
        assert not verdict
        assert verdict.witness == {"operation": "2", "permutation": [1, 0]}

    def test_unknown(self):
        with pytest.raises(FixtureError) as info:
            fixtures().get("nope")
        assert "fig-tree-4v" in str(info.value)

    def test_kinds(self):
        reg = fixtures()
        assert reg.names("algebra") == ["free-ass-x", "free-ass-x-overflow", "free-ass-xy"]
        assert list(reg) == sorted(reg.names())

    def test_external_file(self, tmp_path, monkeypatch):
        path = tmp_path / "fx.json"
        path.write_text(json.dumps({"trees": {"my-tree": tr.corolla(4).to_json()},
                                    "operads": {"my-com": tabulate_operad(CommutativeOperad(3)).to_json()}}))
        monkeypatch.setenv(ENV_VAR, str(path))
        reg = fixtures()
        assert reg.get("my-tree") == tr.corolla(4)
        assert not is_sigma_free(reg.get("my-com"))


class TestCommands:
    def test_tree_aut_json(self, capsys):
        code, out, _ = run(capsys, "tree", "aut", "corolla-3", "--json")
        assert code == 0
        assert json.loads(out)["order"] == 6

    def test_tree_homs_counts_edges(self, capsys):
        code, out, _ = run(capsys, "tree", "homs", "eta", "fig-tree-4v", "--json")
        assert code == 0
        assert len(json.loads(out)["morphisms"]) == len(tr.figure_tree().edges)

    def test_bad_tree_is_usage_error(self, capsys):
        code, _, err = run(capsys, "tree", "canon", "(((")
        assert code == 2
        assert "cannot read a tree" in err

    def test_reedy_check(self, capsys):
        assert run(capsys, "reedy", "check", "gamma-4")[0] == 0
        code, out, _ = run(capsys, "reedy", "check", "mutant-omega-face-negative")
        assert code == 1
        assert "FAIL" in out and "witness" in out

    def test_dot_output(self, capsys):
        code, out, _ = run(capsys, "slice", "build", "corolla-2", "--bounds", "arity=1", "--dot")
        assert code == 0
        assert out.startswith("digraph")

    def test_bpq_special(self, capsys):
        code, out, _ = run(capsys, "bpq", "special", "1", "2", "--json")
        assert code == 0
        assert json.loads(out)["passed"]

    def test_run_errors(self, capsys):
        code, _, err = run(capsys, "run", "nope")
        assert code == 2 and "lstar-pushout" in err
        code, _, err = run(capsys, "run", "slice", "--bounds", "depth=1")
        assert code == 2 and "bad bound" in err
        assert run(capsys, "frobnicate")[0] == 2

    def test_run_json(self, capsys, tmp_path):
        out_file = tmp_path / "r.json"
        code, out, _ = run(capsys, "run", "lstar-pushout", "--bounds", "set-size=2", "--json", "--output", str(out_file))
        assert code == 0
        assert json.loads(out)["passed"]
        assert out_file.read_text() == out

    def test_fixture_listing(self, capsys):
        code, out, _ = run(capsys, "fixtures", "--json")
        assert code == 0
        assert "nonsplit-span" in {row["name"] for row in json.loads(out)}

    def test_presheaf_dump_round_trip(self, capsys, tmp_path):
        code, out, _ = run(capsys, "psh", "dump", "rep-corolla-2", "--json")
        assert code == 0
        path = tmp_path / "x.json"
        path.write_text(out)
        assert run(capsys, "psh", "segal", str(path), "--bounds", "tree-vertices=2,tree-edges=4")[0] == 0
        assert run(capsys, "psh", "segal", str(path))[0] == 2
