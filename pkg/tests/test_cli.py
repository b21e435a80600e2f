import json

import pytest

from geoseries.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFeasible:
    def test_table_has_one_row_per_m(self, capsys):
        code, out, _ = run(capsys, "feasible", "--max-m", "10", "--format", "table")
        assert code == 0
        lines = out.strip().splitlines()
        data = [ln for ln in lines[2:] if ln and not ln.startswith("feasible m")]
        assert len(data) == 9  # m = 2..10
        feasible_rows = [ln for ln in data if ln.rstrip().endswith("yes")]
        assert len(feasible_rows) == 2
        assert "1/3" in feasible_rows[0] and feasible_rows[0].startswith("2")
        assert "4/5" in feasible_rows[1] and feasible_rows[1].startswith("3")
        assert "feasible m: {2, 3}" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "feasible", "--max-m", "5", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == 1
        assert [r["candidate_m"] for r in doc["reports"]] == [2, 3, 4, 5]
        assert [r["feasible"] for r in doc["reports"]] == [True, True, False, False]
        assert doc["reports"][0]["r"] == "1/2"

    def test_rejects_max_m_below_two(self, capsys):
        code, _, err = run(capsys, "feasible", "--max-m", "1")
        assert code == 2
        assert "max-m" in err


class TestTable:
    def test_partial_sums_and_limit(self, capsys):
        code, out, _ = run(
            capsys, "table", "--ratio", "1/4", "--first-term", "1/4", "--terms", "5"
        )
        assert code == 0
        rows = out.strip().splitlines()[2:]
        partials = [row.split()[2] for row in rows]
        assert partials == ["1/4", "5/16", "21/64", "85/256", "341/1024"]
        closed = [row.split()[3] for row in rows]
        assert closed == partials
        assert all(row.split()[4] == "1/3" for row in rows)

    def test_rejects_ratio_outside_interval(self, capsys):
        code, _, err = run(capsys, "table", "--ratio", "5/4")
        assert code == 2
        assert "ratio" in err

    def test_malformed_rational_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--ratio", "1/0"])
        assert exc.value.code == 2


class TestVerify:
    def test_staircase_json_reports_colored_fraction(self, capsys):
        code, out, _ = run(
            capsys,
            "verify", "--construction", "staircase",
            "--s", "1/2", "--layers", "8", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["check"] == "pass"
        assert len(doc["layers"]) == 8
        assert all(layer["colored_fraction"] == "2/3" for layer in doc["layers"])

    def test_layered_table_passes(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--construction", "layered", "--m", "2", "--layers", "6"
        )
        assert code == 0
        assert "check: pass" in out

    def test_infeasible_m_rejected(self, capsys):
        code, _, err = run(
            capsys, "verify", "--construction", "layered", "--m", "4", "--layers", "2"
        )
        assert code == 2
        assert "m=4" in err and "feasible" in err

    def test_infeasible_m_allowed_with_escape_hatch(self, capsys):
        code, out, err = run(
            capsys,
            "verify", "--construction", "layered",
            "--m", "4", "--layers", "2", "--allow-infeasible",
        )
        assert code == 0
        assert "clamped" in err

    def test_requires_parameters(self, capsys):
        code, _, err = run(capsys, "verify", "--construction", "layered")
        assert code == 2
        assert "--m" in err

    def test_tampered_scene_fails_with_json_diagnostic(self, capsys, tmp_path):
        code, _, _ = run(
            capsys,
            "render", "--construction", "staircase", "--s", "1/2",
            "--layers", "2", "--out", str(tmp_path / "pic.svg"), "--emit-scene",
        )
        assert code == 0
        scene_path = tmp_path / "pic.json"
        doc = json.loads(scene_path.read_text())
        doc["params"]["s"] = "2/5"
        scene_path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "verify", "--from-scene", str(scene_path))
        assert code == 1
        diagnostic = json.loads(out)
        assert diagnostic["check"] == "fail"
        assert diagnostic["mismatches"]


class TestRender:
    def test_writes_svg_and_scene(self, capsys, tmp_path):
        out_path = tmp_path / "mabry.svg"
        code, out, _ = run(
            capsys,
            "render", "--construction", "layered", "--m", "2",
            "--layers", "4", "--out", str(out_path), "--emit-scene",
        )
        assert code == 0
        assert out_path.exists()
        assert out_path.read_text().startswith("<?xml")
        assert (tmp_path / "mabry.json").exists()

    def test_scene_round_trip_reproduces_audit(self, capsys, tmp_path):
        out_path = tmp_path / "stairs.svg"
        run(
            capsys,
            "render", "--construction", "staircase", "--s", "3/5",
            "--layers", "5", "--out", str(out_path), "--emit-scene",
        )
        code, from_scene, _ = run(
            capsys,
            "verify", "--from-scene", str(tmp_path / "stairs.json"), "--format", "json",
        )
        assert code == 0
        code, direct, _ = run(
            capsys,
            "verify", "--construction", "staircase",
            "--s", "3/5", "--layers", "5", "--format", "json",
        )
        assert code == 0
        assert json.loads(from_scene) == json.loads(direct)

    def test_unknown_flag_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["render", "--construction", "layered", "--m", "2", "--bogus"])
        assert exc.value.code == 2
