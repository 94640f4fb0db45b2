"""Command-line interface: golden outputs, exit codes, determinism."""
import json
import subprocess

import pytest

from heckeslopes.cli import main
from heckeslopes.pipeline import analyze_form, emit_report, load_forms

FORM = {
    "label": "demo.sqrt2",
    "d": 1,
    "field_poly": [0, 1],
    "level_norm": 1,
    "weight": [2],
    "hecke_poly": [-2, 0, 1],
    "cm": False,
    "ap": [
        {"p": 2, "split_in_F": True, "a": ["1", "0"]},
        {"p": 3, "split_in_F": True, "a": ["1", "1"]},
        {"p": 7, "split_in_F": True, "a": ["3", "1"]},
    ],
}


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def forms_file(tmp_path):
    path = tmp_path / "forms.json"
    path.write_text(json.dumps([FORM]))
    return path


class TestPolygon:
    def test_family_weight_two(self, capsys):
        code, out, _ = run(capsys, ["polygon", "--op", "P", "--d", "2", "--k", "3", "--i", "1"])
        assert code == 0
        assert out == "0,0,1,1,1,1,1,1,1,1,2,2\n"

    def test_family_weight_three(self, capsys):
        code, out, _ = run(capsys, ["polygon", "--op", "Pprime", "--d", "1", "--k", "2", "--i", "1"])
        assert code == 0
        assert out == "0,1,1,2\n"

    def test_oplus(self, capsys):
        code, out, _ = run(capsys, ["polygon", "--op", "oplus", "--a", "0,1", "--b", "1/2"])
        assert (code, out) == (0, "0,1/2,1\n")

    def test_otimes(self, capsys):
        code, out, _ = run(capsys, ["polygon", "--op", "otimes", "--a", "0,1", "--b", "1/2,1"])
        assert (code, out) == (0, "1/2,1,3/2,2\n")

    def test_dual(self, capsys):
        code, out, _ = run(capsys, ["polygon", "--op", "dual", "--a", "0,1/3"])
        assert (code, out) == (0, "-1/3,0\n")

    def test_leq_true(self, capsys):
        code, out, _ = run(capsys, ["polygon", "--op", "leq", "--a", "0,1", "--b", "1/2,1/2"])
        assert (code, out) == (0, "true\n")

    def test_leq_false_notes_endpoint_mismatch(self, capsys):
        code, out, _ = run(capsys, ["polygon", "--op", "leq", "--a", "0,1", "--b", "0,1/2"])
        assert (code, out) == (0, "false\nnote=endpoint-mismatch\n")

    def test_vertices(self, capsys):
        code, out, _ = run(capsys, ["polygon", "--op", "vertices", "--a", "0,1,1"])
        assert code == 0
        assert json.loads(out) == [["0", "0"], ["1", "0"], ["3", "2"]]

    @pytest.mark.parametrize(
        "argv",
        [
            ["polygon", "--op", "oplus", "--a", "0,1"],       # missing --b
            ["polygon", "--op", "leq", "--a", "0,x", "--b", "1"],
            ["polygon", "--op", "P", "--d", "2"],             # missing --k
            ["polygon", "--op", "P", "--d", "0", "--k", "1"],
            ["polygon", "--op", "P", "--d", "1", "--k", "2", "--i", "3"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, out, err = run(capsys, argv)
        assert code == 1
        assert out == ""
        assert err.startswith("error: usage:")


class TestSlope:
    def test_group_invariants(self, capsys):
        code, out, _ = run(capsys, ["slope", "--gens", "(0 1)(2 3);(0 2)(1 3)", "--n", "4"])
        assert code == 0
        assert out == "lambda=2\nsigma=1/2\nbisecting=true\nbisecting_fraction=3/4\n"

    def test_min_orbit_invariants(self, capsys):
        code, out, _ = run(capsys, ["slope", "--gens", "(0 1 2 3);(0 2)", "--n", "4", "--min"])
        assert code == 0
        assert out == "lambda_min=4\nsigma_min=0\nbisecting=true\nbisecting_fraction=3/8\n"

    def test_closure_cap_is_data_error(self, capsys):
        code, _, err = run(
            capsys,
            ["slope", "--gens", "(0 1 2 3 4 5);(0 1)", "--n", "6", "--cap", "10"],
        )
        assert code == 2
        assert err.startswith("error: data:")

    def test_bad_generator_is_usage_error(self, capsys):
        code, _, err = run(capsys, ["slope", "--gens", "(0 9)", "--n", "4"])
        assert code == 1
        assert err.startswith("error: usage:")


class TestTailConstant:
    def test_closed_form_json(self, capsys):
        code, out, _ = run(capsys, ["stc", "--k", "3", "--t", "1", "--method", "closed"])
        assert code == 0
        payload = json.loads(out)
        assert payload["method"] == "closed_form"
        assert payload["seed"] is None
        assert payload["samples_or_nodes"] == 0
        assert abs(payload["value"] - 0.1587395) < 1e-6

    def test_mc_deterministic_and_seed_sensitive(self, capsys):
        argv = ["--seed", "5", "stc", "--k", "2", "--t", "1", "--samples", "20000"]
        first = run(capsys, argv)
        second = run(capsys, argv)
        other = run(capsys, ["--seed", "6"] + argv[2:])
        assert first == second
        assert first != other
        assert json.loads(first[1])["seed"] == 5

    def test_bad_arguments(self, capsys):
        code, _, err = run(capsys, ["stc", "--k", "2", "--t", "3"])
        assert code == 1
        assert err.startswith("error: usage:")


class TestTable:
    def test_small_table(self, capsys):
        code, out, _ = run(capsys, ["table", "--max-k", "2", "--samples", "5000"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "k\\t\tt=1\tt=2"
        assert lines[1] == "k=1\t1"
        cells = lines[2].split("\t")
        assert cells[0] == "k=2"
        assert cells[1].startswith("0.31496")  # closed form at t=1
        assert cells[2] == "1"

    def test_deterministic(self, capsys):
        argv = ["table", "--max-k", "3", "--samples", "4000"]
        assert run(capsys, argv) == run(capsys, argv)

    def test_max_k_out_of_range(self, capsys):
        code, _, err = run(capsys, ["table", "--max-k", "9"])
        assert code == 1
        assert err.startswith("error: usage:")


class TestAnalyze:
    def test_tsv_matches_library_bytes(self, capsysbinary, forms_file):
        code = main(["analyze", str(forms_file)])
        out = capsysbinary.readouterr().out
        assert code == 0
        expected = emit_report(
            [analyze_form(rec) for rec in load_forms(forms_file)], fmt="tsv"
        )
        assert out == expected

    def test_json_format(self, capsys, forms_file):
        code, out, _ = run(capsys, ["analyze", str(forms_file), "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["forms"][0]["label"] == "demo.sqrt2"

    def test_out_file(self, capsys, tmp_path, forms_file):
        dest = tmp_path / "report.tsv"
        code, out, _ = run(capsys, ["analyze", str(forms_file), "--out", str(dest)])
        assert code == 0
        assert out == ""
        expected = emit_report(
            [analyze_form(rec) for rec in load_forms(forms_file)], fmt="tsv"
        )
        assert dest.read_bytes() == expected

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, ["analyze", str(tmp_path / "nope.json")])
        assert code == 2
        assert err.startswith("error: data:")

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, _, err = run(capsys, ["analyze", str(path)])
        assert code == 2
        assert err.startswith("error: data:")

    def test_schema_violation(self, capsys, tmp_path):
        bad = dict(FORM, weight=[4])
        path = tmp_path / "bad.json"
        path.write_text(json.dumps([bad]))
        code, _, err = run(capsys, ["analyze", str(path)])
        assert code == 2
        assert err.startswith("error: data:")
        assert "weight" in err


class TestClassify:
    def test_line_format(self, capsys, tmp_path):
        recs = [
            dict(FORM, ap=[]),
            dict(FORM, label="demo.small", k_f_circ=2, ap=[]),
            dict(
                FORM,
                label="demo.rst",
                hecke_poly=[-2, 0, 0, 0, 1],
                k_f_circ=4,
                assumptions=["tST(1)", "RST"],
                ap=[],
            ),
        ]
        path = tmp_path / "forms.json"
        path.write_text(json.dumps(recs))
        code, out, _ = run(capsys, ["classify", str(path)])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == (
            "demo.sqrt2\tcase=HalfBoundOnly\tbound_on_kp=1"
            "\tdensity=principally_abundant\tconditional_on=-"
            "\tnote=k_f_circ-unknown"
        )
        assert lines[1] == (
            "demo.small\tcase=SmallFrobeniusField\tbound_on_kp=0"
            "\tdensity=principally_abundant\tconditional_on=-"
        )
        assert lines[2] == (
            "demo.rst\tcase=RSTBound\tbound_on_kp=1"
            "\tdensity=conditional_abundant\tconditional_on=tST(1)"
        )


class TestGlobalFlags:
    def test_threads_must_be_positive(self, capsys):
        code, _, err = run(capsys, ["--threads", "0", "stc", "--k", "2", "--t", "1"])
        assert code == 1
        assert err.startswith("error: usage:")

    def test_threads_do_not_change_output(self, capsys):
        one = run(capsys, ["--threads", "1", "stc", "--k", "3", "--t", "2", "--samples", "40000"])
        four = run(capsys, ["--threads", "4", "stc", "--k", "3", "--t", "2", "--samples", "40000"])
        assert one == four


def test_console_script_smoke():
    proc = subprocess.run(
        ["heckeslopes", "polygon", "--op", "dual", "--a", "0,1"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout == "-1,0\n"
