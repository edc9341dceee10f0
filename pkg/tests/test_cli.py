from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conftest import S3_SELECTION, TERNARY_SELECTION
from quasiuniform.cli import (
    EXIT_CAP,
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
    Caps,
    RunConfig,
    main,
    run,
)


def run_cli(command, **kwargs):
    return run(RunConfig(command=command, **kwargs))


class TestConstruct:
    def test_table_output_contains_reference_row(self):
        status, text = run_cli(
            "construct", group_spec="C3xC3", subgroup_spec=TERNARY_SELECTION
        )
        assert status == EXIT_OK
        assert "(1,1) | 1  1  0  2" in text
        assert "coset table" in text

    def test_json_output_schema(self):
        status, text = run_cli(
            "construct",
            group_spec="C3xC3",
            subgroup_spec=TERNARY_SELECTION,
            output="json",
        )
        assert status == EXIT_OK
        data = json.loads(text)
        assert data["n"] == 4
        assert data["group_spec"] == "C3xC3"
        assert len(data["codewords"]) == 9
        assert data["codewords"][4] == [1, 1, 0, 2]
        assert all(a["kind"] == "canonical-abelian" for a in data["alphabets"])

    def test_bad_group_spec_exits_2(self):
        status, text = run_cli("construct", group_spec="Z9", subgroup_spec="all-nontrivial")
        assert status == EXIT_PARSE
        assert "error" in text

    def test_cap_exceeded_exits_3(self):
        status, _ = run_cli("construct", group_spec="S7", subgroup_spec="all-nontrivial")
        assert status == EXIT_CAP

    def test_enum_cap_exceeded_exits_3(self):
        status, _ = run_cli(
            "construct",
            group_spec="C16",
            subgroup_spec="all-nontrivial",
            caps=Caps(enum=8),
        )
        assert status == EXIT_CAP

    def test_degenerate_single_symbol_analysis(self):
        status, text = run_cli(
            "analyze", group_spec="C2", subgroup_spec="gens:1", output="json"
        )
        assert status == EXIT_OK
        data = json.loads(text)
        assert data["min_distance"] is None
        assert "skipped" in data["almost_affine"]
        assert data["weight_enumerator"]["coeffs"] == [1, 0]

    def test_duplicate_subgroups_exit_2(self):
        status, text = run_cli(
            "construct",
            group_spec="C3xC3",
            subgroup_spec="gens:(1,0)|gens:(1,0)",
        )
        assert status == EXIT_PARSE
        assert "duplicate" in text

    def test_unknown_element_exits_2(self):
        status, _ = run_cli("construct", group_spec="S3", subgroup_spec="gens:(14)")
        assert status == EXIT_PARSE


class TestAnalyze:
    def test_reference_analysis(self):
        status, text = run_cli(
            "analyze", group_spec="C3xC3", subgroup_spec="all-nontrivial", output="json"
        )
        assert status == EXIT_OK
        data = json.loads(text)
        assert data["weight_enumerator"]["polynomial"] == "x^4 + 8*x*y^3"
        assert data["weight_enumerator"]["methods_agree"] is True
        assert data["min_distance"]["brute_force"] == 3
        assert data["min_distance"]["group_formula"] == 3
        assert data["almost_affine"]["ok"] is True

    def test_table_output(self):
        status, text = run_cli("analyze", group_spec="S3", subgroup_spec="all-index:3")
        assert status == EXIT_OK
        assert "x^3 + 3*x*y^2 + 2*y^3" in text
        assert "almost affine: no" in text

    def test_mixed_alphabet_note(self):
        status, text = run_cli(
            "analyze", group_spec="D12", subgroup_spec="gens:r^3|gens:r^2;s", output="json"
        )
        assert status == EXIT_OK
        assert "skipped" in json.loads(text)["almost_affine"]

    def test_center_flag(self):
        status, text = run_cli(
            "analyze",
            group_spec="C3xC3",
            subgroup_spec="all-nontrivial",
            output="json",
            center=5,
        )
        assert status == EXIT_OK
        assert json.loads(text)["weight_enumerator"]["census_center"] == 5

    def test_center_out_of_range_exits_2(self):
        status, _ = run_cli(
            "analyze", group_spec="C3xC3", subgroup_spec="all-nontrivial", center=99
        )
        assert status == EXIT_PARSE

    def test_roundtrip_through_json_file(self, tmp_path):
        status, text = run_cli(
            "construct",
            group_spec="D12",
            subgroup_spec="gens:r^3|gens:r^2;s",
            output="json",
        )
        assert status == EXIT_OK
        path = tmp_path / "code.json"
        path.write_text(text, encoding="utf-8")
        direct = run_cli(
            "analyze", group_spec="D12", subgroup_spec="gens:r^3|gens:r^2;s", output="json"
        )
        reloaded = run_cli("analyze", input_path=str(path), output="json")
        assert direct == reloaded

    def test_corrupt_input_file_exits_2(self, tmp_path):
        path = tmp_path / "code.json"
        path.write_text("{not json", encoding="utf-8")
        status, _ = run_cli("analyze", input_path=str(path))
        assert status == EXIT_PARSE

    def test_non_object_input_file_exits_2(self, tmp_path):
        path = tmp_path / "code.json"
        path.write_text("[1, 2, 3]", encoding="utf-8")
        status, _ = run_cli("analyze", input_path=str(path))
        assert status == EXIT_PARSE

    def test_internal_invariant_exits_4(self, monkeypatch):
        from quasiuniform import QuasiUniformityReport
        from quasiuniform import cli as cli_module

        monkeypatch.setattr(
            cli_module,
            "verify_quasi_uniform",
            lambda code: QuasiUniformityReport(ok=False),
        )
        status, text = run_cli(
            "analyze", group_spec="C3xC3", subgroup_spec="all-nontrivial"
        )
        assert status == EXIT_INTERNAL
        assert "internal error" in text


class TestVerifyAndRepresent:
    def test_verify_ok(self):
        status, text = run_cli(
            "verify", group_spec="S3", subgroup_spec=S3_SELECTION, output="json"
        )
        assert status == EXIT_OK
        assert json.loads(text) == {"ok": True}

    def test_represent_s3_not_representable(self):
        status, text = run_cli(
            "represent", group_spec="S3", subgroup_spec="all-index:3", output="json"
        )
        assert status == EXIT_OK
        data = json.loads(text)
        assert data["representable"] is False
        assert data["checked_candidates"] >= 1
        assert "note" in data

    def test_represent_d8_witness(self):
        status, text = run_cli(
            "represent", group_spec="D8", subgroup_spec="all-normal-proper", output="json"
        )
        assert status == EXIT_OK
        data = json.loads(text)
        assert data["representable"] is True
        assert data["witness"]["group_spec"] == "C2xC4"


class TestRegen:
    def test_two_runs_byte_identical(self, tmp_path):
        first, second = tmp_path / "a", tmp_path / "b"
        assert run_cli("regen-paper-examples", out_dir=str(first))[0] == EXIT_OK
        assert run_cli("regen-paper-examples", out_dir=str(second))[0] == EXIT_OK
        names = sorted(p.name for p in first.iterdir())
        assert names == [
            "c3xc3_coset_table.txt",
            "c3xc3_labeled_code.txt",
            "c3xc3_weight_enumerator.txt",
            "s3_coset_table.txt",
        ]
        for name in names:
            assert (first / name).read_bytes() == (second / name).read_bytes()

    def test_golden_contents(self, tmp_path):
        run_cli("regen-paper-examples", out_dir=str(tmp_path))
        code = (tmp_path / "c3xc3_labeled_code.txt").read_text(encoding="utf-8")
        assert "(1,1) | 1  1  0  2" in code
        enum = (tmp_path / "c3xc3_weight_enumerator.txt").read_text(encoding="utf-8")
        assert enum.splitlines()[0] == "x^4 + 8*x*y^3"
        s3 = (tmp_path / "s3_coset_table.txt").read_text(encoding="utf-8")
        assert "{(13),(123)}" in s3


class TestMainEntry:
    def test_usage_error_exit_1(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate"])
        assert err.value.code == EXIT_USAGE

    def test_missing_selection_exit_2(self):
        assert main(["analyze", "-g", "C4"]) == EXIT_PARSE

    def test_bad_caps_exit_1(self):
        assert main(["analyze", "-g", "C4", "-s", "all-nontrivial", "--cap-order", "0"]) == EXIT_USAGE

    def test_ok_run(self, capsys):
        assert main(["verify", "-g", "C4", "-s", "all-nontrivial"]) == EXIT_OK
        assert "ok" in capsys.readouterr().out

    def test_console_module_invocation(self, tmp_path):
        result = subprocess.run(
            [
                sys.executable,
                "-m",
                "quasiuniform",
                "analyze",
                "-g",
                "C3xC3",
                "-s",
                "all-nontrivial",
                "-o",
                "json",
            ],
            capture_output=True,
            text=True,
            cwd=tmp_path,
        )
        assert result.returncode == 0
        assert json.loads(result.stdout)["min_distance"]["brute_force"] == 3

    def test_caps_validation(self):
        with pytest.raises(ValueError):
            Caps(order=0)
