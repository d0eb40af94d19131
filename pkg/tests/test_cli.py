"""Command-line interface: exit codes, payload shapes, file handling."""

import json
import subprocess
import sys

import pytest

from groupoidlab import cli


def run(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


class TestGenerateAndValidate:
    def test_generate_then_validate(self, tmp_path, capsys):
        path = tmp_path / "g.json"
        code, _ = run(["generate", "--kind", "klein-cross", "--output", str(path)], capsys)
        assert code == 0
        code, data = run(["validate", "--input", str(path)], capsys)
        assert code == 0
        assert data["valid"] is True
        assert data["elements"] == 20 and data["units"] == 5

    def test_generate_every_kind(self, capsys):
        for kind in ("random", "klein-cross", "s3", "s3-a3-bundle",
                     "pair:3", "trivial:2", "group:D4"):
            code, data = run(["generate", "--kind", kind], capsys)
            assert code == 0
            assert data["schema_version"] == "1"

    def test_generate_is_seed_deterministic(self, capsys):
        code1, a = run(["generate", "--kind", "random", "--seed", "9"], capsys)
        code2, b = run(["generate", "--kind", "random", "--seed", "9"], capsys)
        assert code1 == code2 == 0 and a == b

    def test_validate_reports_violations_with_exit_one(self, tmp_path, capsys):
        _, doc = run(["generate", "--kind", "s3"], capsys)
        doc["comp"] = [t for t in doc["comp"] if t[:2] != ["s@p", "t@p"]]
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(doc))
        code, data = run(["validate", "--input", str(path)], capsys)
        assert code == 1
        assert data["valid"] is False
        assert data["violations"][0]["kind"] == "malformed-table"

    def test_unparseable_input_exits_two(self, tmp_path, capsys):
        path = tmp_path / "junk.json"
        path.write_text("{not json")
        code, data = run(["validate", "--input", str(path)], capsys)
        assert code == 2 and "error" in data

    def test_missing_file_exits_two(self, capsys):
        code, data = run(["validate", "--input", "/nonexistent/x.json"], capsys)
        assert code == 2 and "error" in data

    def test_schema_violation_exits_two(self, tmp_path, capsys):
        _, doc = run(["generate", "--kind", "s3"], capsys)
        doc["surprise"] = 1
        path = tmp_path / "extra.json"
        path.write_text(json.dumps(doc))
        code, data = run(["validate", "--input", str(path)], capsys)
        assert code == 2 and "unknown fields" in data["error"]

    def test_unknown_kind_exits_two(self, capsys):
        code, data = run(["generate", "--kind", "dodecahedron"], capsys)
        assert code == 2 and "known" in data

    def test_unknown_group_exits_two(self, capsys):
        code, data = run(["generate", "--kind", "group:M11"], capsys)
        assert code == 2

    def test_bad_size_exits_two(self, capsys):
        code, _ = run(["generate", "--kind", "pair:0"], capsys)
        assert code == 2
        code, _ = run(["generate", "--kind", "trivial:x"], capsys)
        assert code == 2


class TestQuotientCommand:
    def test_default_carrier_is_the_isotropy(self, capsys):
        code, data = run(["quotient", "--kind", "klein-cross"], capsys)
        assert code == 0
        assert data["exact"] is True
        # the effective quotient: one unit point plus a C2 swap on each arm
        assert len(data["quotient"]["elements"]) == 9
        assert len(data["by"]) == 12

    def test_quotient_by_units_preserves_size(self, capsys):
        code, data = run(["quotient", "--kind", "s3", "--by", "units"], capsys)
        assert code == 0
        assert len(data["quotient"]["elements"]) == 6

    def test_explicit_carrier_labels(self, capsys):
        code, data = run(["quotient", "--kind", "s3", "--by", "e@p;s@p;s2@p"], capsys)
        assert code == 0
        assert len(data["quotient"]["elements"]) == 2
        assert data["class_map"]["t@p"] != data["class_map"]["e@p"]

    def test_non_normal_carrier_exits_one(self, capsys):
        code, data = run(["quotient", "--kind", "s3", "--by", "e@p;t@p"], capsys)
        assert code == 1
        assert data["kind"] == "not-conjugation-closed"

    def test_unknown_carrier_label_exits_two(self, capsys):
        code, data = run(["quotient", "--kind", "s3", "--by", "nope"], capsys)
        assert code == 2


class TestAlgebraCommands:
    def test_abelianize_payload(self, capsys):
        code, data = run(["abelianize", "--kind", "s3-a3-bundle"], capsys)
        assert code == 0
        assert data["abelianization_dim"] == 5
        assert len(data["abelianized"]["elements"]) == 5
        assert data["fixed_points"] == ["e@p", "e@q"]

    def test_characters_payload(self, capsys):
        code, data = run(["characters", "--kind", "klein-cross"], capsys)
        assert code == 0
        assert data["count"] == 4 and data["abelianization_dim"] == 4
        assert all(c["unit"] == "(e,c)" for c in data["characters"])

    def test_characters_of_pair_groupoid_are_empty(self, capsys):
        code, data = run(["characters", "--kind", "pair:2"], capsys)
        assert code == 0
        assert data["count"] == 0 and data["characters"] == []

    def test_dual_payload(self, capsys):
        code, data = run(["dual", "--kind", "group:C6"], capsys)
        assert code == 0
        assert data["total_characters"] == 6
        assert data["fibers"]["e@p"]["invariant_factors"] == [6]

    def test_dual_rejects_nonabelian_with_exit_one(self, capsys):
        code, data = run(["dual", "--kind", "s3"], capsys)
        assert code == 1 and "error" in data

    def test_dual_rejects_non_bundle_with_exit_one(self, capsys):
        code, data = run(["dual", "--kind", "pair:2"], capsys)
        assert code == 1 and "error" in data


class TestCheckCommand:
    def test_single_model_check(self, capsys):
        code, data = run(["check", "--kind", "klein-cross"], capsys)
        assert code == 0
        assert data["status"] == "pass"

    def test_small_corpus_check(self, capsys):
        code, data = run(["check", "--corpus", "--count", "8"], capsys)
        assert code == 0
        assert data["status"] == "pass"
        assert data["counts"]["fail"] == 0

    def test_corrupted_document_fails_check_with_witness(self, tmp_path, capsys):
        _, doc = run(["generate", "--kind", "s3"], capsys)
        doc["inv"]["s@p"] = "s@p"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, data = run(["check", "--input", str(path)], capsys)
        assert code == 1
        assert data["status"] == "fail"
        axioms = next(c for c in data["checks"] if c["name"] == "axioms")
        assert axioms["status"] == "fail" and axioms["witness"]


class TestPlumbing:
    def test_output_flag_writes_file(self, tmp_path, capsys):
        path = tmp_path / "out.json"
        code, _ = run(["characters", "--kind", "s3", "--output", str(path)], capsys)
        assert code == 0
        assert json.loads(path.read_text())["count"] == 2

    def test_stdin_input(self):
        gen = subprocess.run(
            [sys.executable, "-m", "groupoidlab.cli", "generate", "--kind", "s3"],
            capture_output=True, text=True, check=True)
        val = subprocess.run(
            [sys.executable, "-m", "groupoidlab.cli", "validate", "--input", "-"],
            input=gen.stdout, capture_output=True, text=True)
        assert val.returncode == 0
        assert json.loads(val.stdout)["valid"] is True

    def test_console_script_entry_point(self):
        out = subprocess.run(["groupoidlab", "validate", "--kind", "s3"],
                             capture_output=True, text=True)
        assert out.returncode == 0
        assert json.loads(out.stdout)["valid"] is True

    def test_usage_error_exits_two(self):
        out = subprocess.run([sys.executable, "-m", "groupoidlab.cli", "frobnicate"],
                             capture_output=True, text=True)
        assert out.returncode == 2
