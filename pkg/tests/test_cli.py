import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from ramseykit import complete_hypergraph, read_coloring, read_hypergraph, write_hypergraph
from ramseykit.cli import main


@pytest.fixture(scope="module")
def schema():
    text = resources.files("ramseykit").joinpath("schemas/reports.schema.json").read_text()
    return json.loads(text)


def validate(payload, schema):
    jsonschema.validate(payload, schema)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestDensityVerb:
    def test_clique_values(self, capsys):
        code, out, _ = run(capsys, "density", "--clique", "3,2")
        assert code == 0
        assert out.splitlines()[0] == "2"
        code, out, _ = run(capsys, "density", "--clique", "4,2")
        assert out.splitlines()[0] == "5/2"

    def test_empty_file(self, capsys, tmp_path):
        path = tmp_path / "empty.uhg"
        path.write_text("uhg 6 2\n")
        code, out, _ = run(capsys, "density", str(path))
        assert code == 0
        assert out.splitlines()[0] == "0"

    def test_file_with_witness(self, capsys, tmp_path, schema):
        path = tmp_path / "k4.uhg"
        write_hypergraph(complete_hypergraph(4, 2), path)
        code, out, _ = run(capsys, "density", str(path), "--format", "json")
        assert code == 0
        payload = json.loads(out)
        validate(payload, schema)
        assert payload["density"] == "5/2"
        assert payload["witness"] == [1, 2, 3, 4]

    def test_requires_exactly_one_source(self, capsys):
        code, _, err = run(capsys, "density")
        assert code == 64
        code, _, err = run(capsys, "density", "x.uhg", "--clique", "3,2")
        assert code == 64

    def test_bad_clique_argument(self, capsys):
        code, _, _ = run(capsys, "density", "--clique", "2,2")
        assert code == 64


class TestConstructVerb:
    def test_zero_probability(self, capsys, tmp_path, schema):
        out_prefix = tmp_path / "c"
        code, out, _ = run(
            capsys, "construct", "--n", "50", "--s", "4", "--r", "2", "--t", "3",
            "--p", "0", "--seed", "3", "--out", str(out_prefix), "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, schema)
        assert payload["input_edges"] == 0
        assert payload["result_edges"] == 0
        assert read_hypergraph(f"{out_prefix}.uhg").num_edges == 0
        assert json.loads((tmp_path / "c.json").read_text()) == payload

    def test_usage_error_on_bad_t(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "construct", "--n", "50", "--s", "4", "--r", "3", "--t", "2",
            "--p", "0.1", "--seed", "3", "--out", str(tmp_path / "x"),
        )
        assert code == 64

    def test_missing_seed_is_usage_error(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "construct", "--n", "50", "--s", "4", "--r", "2", "--t", "3",
            "--p", "0.1", "--out", str(tmp_path / "x"),
        )
        assert code == 64

    def test_deterministic_bytes(self, capsys, tmp_path):
        args = [
            "construct", "--n", "300", "--s", "4", "--r", "2", "--t", "3",
            "--p", "n^-3.1", "--seed", "9", "--out", str(tmp_path / "a"),
        ]
        code1, out1, _ = run(capsys, *args)
        first_uhg = (tmp_path / "a.uhg").read_bytes()
        first_json = (tmp_path / "a.json").read_bytes()
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert (tmp_path / "a.uhg").read_bytes() == first_uhg
        assert (tmp_path / "a.json").read_bytes() == first_json


class TestWitnessVerb:
    def test_auto_s_pipeline(self, capsys, tmp_path, schema):
        prefix = tmp_path / "w"
        code, out, _ = run(
            capsys, "witness", "--n", "200", "--r", "2", "--targets", "3,3",
            "--s-auto", "--p", "n^-4", "--seed", "5", "--out", str(prefix),
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, schema)
        assert payload["s"] == 5
        assert payload["verified"] is True
        G = read_hypergraph(f"{prefix}.uhg")
        coloring = read_coloring(f"{prefix}.col", host=G)
        h0 = read_hypergraph(f"{prefix}.h0.uhg")
        assert payload["primal_edges"] == G.num_edges
        assert payload["h0_edges"] == h0.num_edges
        assert coloring.num_colors == 2

    def test_explicit_s_at_ramsey_number_fails(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "witness", "--n", "100", "--r", "2", "--targets", "3,3",
            "--s", "6", "--p", "n^-4", "--seed", "5", "--out", str(tmp_path / "w"),
        )
        assert code == 64
        assert "usage error" in err

    def test_zero_probability_vacuous_certificate(self, capsys, tmp_path, schema):
        prefix = tmp_path / "w0"
        code, out, _ = run(
            capsys, "witness", "--n", "100", "--r", "2", "--targets", "3,3",
            "--s", "5", "--p", "0", "--seed", "5", "--out", str(prefix),
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, schema)
        assert payload["primal_edges"] == 0


class TestArrowVerb:
    def _write(self, tmp_path, n):
        path = tmp_path / f"k{n}.uhg"
        write_hypergraph(complete_hypergraph(n, 2), path)
        return str(path)

    def test_not_arrows_exit_1_with_witness(self, capsys, tmp_path, schema):
        k5 = self._write(tmp_path, 5)
        witness = str(tmp_path / "w.col")
        code, out, _ = run(
            capsys, "arrow", k5, "--targets", "3,3",
            "--witness-out", witness, "--format", "json",
        )
        assert code == 1
        payload = json.loads(out)
        validate(payload, schema)
        assert payload["verdict"] == "not_arrows"
        coloring = read_coloring(witness, host=complete_hypergraph(5, 2))
        assert coloring.num_colors == 2

    def test_arrows_exit_0_and_cnf(self, capsys, tmp_path, schema):
        k6 = self._write(tmp_path, 6)
        cnf = tmp_path / "k6.cnf"
        code, out, _ = run(
            capsys, "arrow", k6, "--targets", "3,3", "--cnf", str(cnf),
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, schema)
        assert payload["verdict"] == "arrows"
        assert payload["exhausted"] is True
        text = cnf.read_text()
        assert text.splitlines()[0].startswith("c ")
        assert "p cnf 30 70" in text

    def test_budget_exit_2(self, capsys, tmp_path):
        k6 = self._write(tmp_path, 6)
        code, _, err = run(capsys, "arrow", k6, "--targets", "3,3", "--max-nodes", "4")
        assert code == 2
        assert "inconclusive" in err

    def test_skip_decision(self, capsys, tmp_path):
        k6 = self._write(tmp_path, 6)
        cnf = tmp_path / "only.cnf"
        code, out, _ = run(
            capsys, "arrow", k6, "--targets", "3,3", "--cnf", str(cnf),
            "--skip-decision",
        )
        assert code == 0
        assert cnf.exists()

    def test_missing_file_is_usage_error(self, capsys, tmp_path):
        code, _, _ = run(capsys, "arrow", str(tmp_path / "nope.uhg"), "--targets", "3,3")
        assert code == 64


class TestInternalContradictionExit:
    def test_construct_maps_contradiction_to_exit_3(self, capsys, tmp_path, monkeypatch):
        # the cleaning step can only fail on an implementation bug, so the
        # exit-code path is exercised by injecting the failure
        from ramseykit import InternalContradictionError
        import ramseykit.cli as cli_module

        def boom(H, r, t):
            raise InternalContradictionError("injected")

        monkeypatch.setattr(cli_module, "clean", boom)
        code, _, err = run(
            capsys, "construct", "--n", "30", "--s", "4", "--r", "2", "--t", "3",
            "--p", "0.01", "--seed", "1", "--out", str(tmp_path / "x"),
        )
        assert code == 3
        assert "internal contradiction" in err


class TestRamseyVerb:
    def test_value(self, capsys, schema):
        code, out, _ = run(capsys, "ramsey", "--targets", "3,3", "--r", "2", "--nmax", "8")
        assert code == 0
        assert out.strip() == "6"
        code, out, _ = run(
            capsys, "ramsey", "--targets", "3,3", "--r", "2", "--nmax", "8",
            "--format", "json",
        )
        payload = json.loads(out)
        validate(payload, schema)
        assert payload["value"] == 6

    def test_undecided_exit_2(self, capsys):
        code, _, err = run(capsys, "ramsey", "--targets", "3,3", "--r", "2", "--nmax", "5")
        assert code == 2


class TestExperimentVerb:
    def test_zero_probability_row(self, capsys, tmp_path, schema):
        csv_path = tmp_path / "t.csv"
        code, out, _ = run(
            capsys, "experiment", "--n", "40", "--s", "4", "--r", "2", "--t", "3",
            "--p", "0", "--trials", "1", "--seed", "2", "--csv", str(csv_path),
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, schema)
        assert payload["mean_edges"] == 0
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "seed,e_H,X,Y,deleted,e_H0"
        assert lines[1].split(",")[1:] == ["0", "0", "0", "0", "0"]

    def test_lemma42_report(self, capsys, tmp_path, schema):
        json_path = tmp_path / "t.json"
        code, out, _ = run(
            capsys, "experiment", "--n", "200", "--s", "4", "--r", "2", "--t", "3",
            "--p", "n^-2.75", "--trials", "3", "--seed", "11",
            "--lemma42", "--json", str(json_path), "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, schema)
        bound = payload["cover_bound"]
        num, den = (bound["ratio"].split("/") + ["1"])[:2]
        assert int(num) * 10 < int(den)  # ratio < 1/10
        assert json.loads(json_path.read_text()) == payload

    def test_deterministic_stdout(self, capsys):
        args = [
            "experiment", "--n", "100", "--s", "4", "--r", "2", "--t", "3",
            "--p", "n^-3", "--trials", "4", "--seed", "21", "--format", "json",
        ]
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "ramseykit.cli", "density", "--clique", "5,3"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "9/2"

    def test_unknown_verb_is_usage_error(self):
        proc = subprocess.run(
            [sys.executable, "-m", "ramseykit.cli", "frobnicate"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 64
