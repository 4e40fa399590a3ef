import json
import pathlib

import pytest

from gammaspaces import cli

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def run(args, capsys):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def build(tmp_path, fixture, levels=3, seed=0):
    out = tmp_path / f"{fixture}_presheaf.json"
    code = cli.main(["build", "--input", str(FIXTURES / f"{fixture}.json"),
                     "--levels", str(levels), "--seed", str(seed),
                     "--out", str(out)])
    assert code == 0
    return out


class TestBuild:
    def test_build_z3_level_sizes(self, tmp_path, capsys):
        out = build(tmp_path, "z3")
        data = json.loads(out.read_text())
        assert [len(level) for level in data["levels"]] == [1, 3, 9, 27]
        assert data["meta"]["version"]
        assert data["functoriality_probe"]["passed"]

    def test_build_action_file(self, tmp_path):
        out = build(tmp_path, "z2_inversion_on_z3")
        data = json.loads(out.read_text())
        assert data["kind"] == "ggamma"
        assert data["algebra_kind"] == "gmonoid"

    def test_nonassociative_table_exits_three(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({
            "elements": [0, 1, 2], "unit": 0,
            "table": [[0, 1, 2], [1, 0, 1], [2, 1, 1]]}))
        code, _, err = run(["build", "--input", str(bad)], capsys)
        assert code == 3
        assert "associativity" in err

    def test_malformed_json_exits_two(self, tmp_path, capsys):
        bad = tmp_path / "broken.json"
        bad.write_text("{not json")
        code, _, err = run(["build", "--input", str(bad)], capsys)
        assert code == 2

    def test_missing_keys_exits_two(self, tmp_path, capsys):
        bad = tmp_path / "partial.json"
        bad.write_text(json.dumps({"elements": [0, 1]}))
        code, _, err = run(["build", "--input", str(bad)], capsys)
        assert code == 2


class TestCheck:
    def test_z3_bousfield_passes(self, tmp_path, capsys):
        presheaf = build(tmp_path, "z3")
        code, out, _ = run(["check", "--input", str(presheaf), "--bousfield"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["check"]["passed"] is True

    def test_max2_bousfield_fails_with_witness(self, tmp_path, capsys):
        presheaf = build(tmp_path, "max2")
        code, out, _ = run(["check", "--input", str(presheaf), "--bousfield"], capsys)
        assert code == 1
        report = json.loads(out)
        assert report["check"]["failed_at"] == 2
        assert report["check"]["witness"]

    def test_max2_segal_passes(self, tmp_path, capsys):
        presheaf = build(tmp_path, "max2")
        code, out, _ = run(["check", "--input", str(presheaf), "--segal"], capsys)
        assert code == 0

    def test_upto_one_always_passes(self, tmp_path, capsys):
        presheaf = build(tmp_path, "max2")
        code, _, _ = run(["check", "--input", str(presheaf), "--bousfield", "--upto", "1"], capsys)
        assert code == 0

    def test_text_format(self, tmp_path, capsys):
        presheaf = build(tmp_path, "z2")
        code, out, _ = run(["check", "--input", str(presheaf), "--segal",
                            "--format", "text"], capsys)
        assert code == 0
        assert "pass" in out

    def test_equivariant_presheaf_checks(self, tmp_path, capsys):
        presheaf = build(tmp_path, "z2_inversion_on_z3")
        for flag in ("--segal", "--bousfield"):
            code, out, _ = run(["check", "--input", str(presheaf), flag], capsys)
            assert code == 0
            assert json.loads(out)["check"]["passed"] is True


class TestRoundtrip:
    @pytest.mark.parametrize("fixture", ["trivial", "z2", "z3", "z4", "klein", "max2",
                                         "z2_trivial_on_z2", "z2_inversion_on_z3",
                                         "z2_swap_on_klein"])
    def test_shipped_fixtures_roundtrip(self, fixture, capsys):
        code, out, _ = run(["roundtrip", "--input", str(FIXTURES / f"{fixture}.json")], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["roundtrip"]["tables_identical"] is True

    def test_group_fixtures_also_roundtrip_through_bousfield(self, capsys):
        code, out, _ = run(["roundtrip", "--input", str(FIXTURES / "z4.json")], capsys)
        report = json.loads(out)
        assert report["roundtrip"]["bousfield_roundtrip_identical"] is True

    def test_roundtrip_accepts_presheaf_file(self, tmp_path, capsys):
        presheaf = build(tmp_path, "z3")
        code, out, _ = run(["roundtrip", "--input", str(presheaf)], capsys)
        assert code == 0

    def test_corrupted_presheaf_exits_three(self, tmp_path, capsys):
        presheaf = build(tmp_path, "z2")
        data = json.loads(presheaf.read_text())
        key = "2>1:0,1,0"
        assert key in data["maps"]
        data["maps"][key] = [0] * len(data["maps"][key])
        corrupted = tmp_path / "corrupted.json"
        corrupted.write_text(json.dumps(data))
        code, _, err = run(["roundtrip", "--input", str(corrupted)], capsys)
        assert code == 3
        assert "not strict" in err


class TestClassify:
    def test_inversion_fixture_h1_and_action(self, tmp_path, capsys):
        presheaf = build(tmp_path, "z2_inversion_on_z3", levels=2)
        code, out, _ = run(["classify", "--input", str(presheaf),
                            "--iterate", "1", "--dim", "4", "--homology", "2"], capsys)
        assert code == 0
        report = json.loads(out)
        hom = report["delooping"]["homology"]
        assert hom[0] == {"degree": 0, "rank": 1, "torsion": []}
        assert hom[1] == {"degree": 1, "rank": 0, "torsion": [3]}
        assert hom[2] == {"degree": 2, "rank": 0, "torsion": []}
        assert report["delooping"]["g_action_on_H"]["1"][1] == [[2]]
        assert report["structure_map"]["equivariant"] is True
        comparisons = report["delooping"]["oracle_comparisons"]
        assert all(c["match"] is True for c in comparisons if c["expected"] is not None)

    def test_string_labeled_action_file_full_flow(self, tmp_path, capsys):
        # group and monoid labels that are not their own indices
        action = {
            "group": {"elements": ["id", "flip"],
                      "table": [["id", "flip"], ["flip", "id"]]},
            "monoid": {"elements": ["e", "r", "rr"], "unit": "e",
                       "table": [["e", "r", "rr"], ["r", "rr", "e"], ["rr", "e", "r"]]},
            "action": [["e", "r", "rr"], ["e", "rr", "r"]],
        }
        source = tmp_path / "named_action.json"
        source.write_text(json.dumps(action))
        presheaf = tmp_path / "named_presheaf.json"
        assert cli.main(["build", "--input", str(source), "--levels", "2",
                         "--out", str(presheaf)]) == 0
        code, out, _ = run(["classify", "--input", str(presheaf), "--dim", "3",
                            "--homology", "1"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["delooping"]["homology"][1] == {"degree": 1, "rank": 0, "torsion": [3]}
        assert report["delooping"]["g_action_on_H"]["flip"][1] == [[2]]

    def test_evaluation_at_zero_is_point(self, tmp_path, capsys):
        presheaf = build(tmp_path, "z3", levels=2)
        code, out, _ = run(["classify", "--input", str(presheaf), "--at", "0",
                            "--dim", "3"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["evaluation_at_zero"]["is_point"] is True

    def test_budget_exits_four(self, tmp_path, capsys):
        presheaf = build(tmp_path, "z4", levels=2)
        code, _, err = run(["classify", "--input", str(presheaf), "--dim", "4",
                            "--homology", "2", "--budget", "10"], capsys)
        assert code == 4
        assert "budget" in err

    def test_classify_requires_presheaf_file(self, capsys):
        code, _, err = run(["classify", "--input", str(FIXTURES / "z3.json")], capsys)
        assert code == 2

    def test_stored_table_disagreement_exits_three(self, tmp_path, capsys):
        presheaf = build(tmp_path, "z3", levels=2)
        data = json.loads(presheaf.read_text())
        key = "2>1:0,1,0"
        data["maps"][key] = [0] * len(data["maps"][key])
        corrupted = tmp_path / "classify_corrupt.json"
        corrupted.write_text(json.dumps(data))
        code, _, err = run(["classify", "--input", str(corrupted), "--dim", "2",
                            "--homology", "1"], capsys)
        assert code == 3
        assert "disagrees" in err

    def test_nonpositive_bounds_exit_two(self, tmp_path, capsys):
        code, _, err = run(["build", "--input", str(FIXTURES / "z2.json"),
                            "--levels", "0"], capsys)
        assert code == 2
        presheaf = build(tmp_path, "z2", levels=2)
        code, _, err = run(["classify", "--input", str(presheaf), "--iterate", "0"], capsys)
        assert code == 2

    def test_budget_env_var(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv(cli.DEFAULT_BUDGET_ENV, "10")
        presheaf = build(tmp_path, "z4", levels=2)
        code, _, err = run(["classify", "--input", str(presheaf), "--dim", "4",
                            "--homology", "2"], capsys)
        assert code == 4
        code, _, _ = run(["classify", "--input", str(presheaf), "--dim", "4",
                          "--homology", "2", "--budget", str(10 ** 7)], capsys)
        assert code == 0

    @pytest.mark.slow
    def test_second_delooping_z2(self, tmp_path, capsys):
        presheaf = build(tmp_path, "z2", levels=2)
        code, out, _ = run(["classify", "--input", str(presheaf), "--iterate", "2",
                            "--dim", "4", "--homology", "2"], capsys)
        assert code == 0
        report = json.loads(out)
        hom = report["delooping"]["homology"]
        assert hom[1] == {"degree": 1, "rank": 0, "torsion": []}
        assert hom[2] == {"degree": 2, "rank": 0, "torsion": [2]}


class TestDeterminism:
    def test_identical_runs_byte_identical(self, tmp_path, capsys):
        presheaf = build(tmp_path, "z2_inversion_on_z3", levels=2)
        args = ["classify", "--input", str(presheaf), "--dim", "3",
                "--homology", "1", "--seed", "7"]
        out1 = tmp_path / "r1.json"
        out2 = tmp_path / "r2.json"
        assert cli.main(args + ["--out", str(out1)]) == 0
        assert cli.main(args + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_build_is_byte_identical(self, tmp_path):
        a = build(tmp_path, "z3", seed=3)
        b_path = tmp_path / "again.json"
        cli.main(["build", "--input", str(FIXTURES / "z3.json"), "--levels", "3",
                  "--seed", "3", "--out", str(b_path)])
        assert a.read_bytes() == b_path.read_bytes()
