import csv
import io
import json

import pytest

from enthymeme_judge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestScore:
    def test_json_format(self, problem_file, capsys):
        code, out, _ = run(capsys, "score", str(problem_file), "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["preset"] == "ld"
        assert report["aggregator"] == "average"
        assert [r["id"] for r in report["results"]] == ["D1", "D2", "D3"]
        assert report["results"][0]["score"] == "20/21"
        assert report["results"][0]["score_decimal"] == "0.952381"
        assert report["results"][0]["class"] == "argument"
        assert report["results"][1]["class"] == "enthymeme"
        assert len(report["results"][0]["values"]) == 7

    def test_table_format(self, problem_file, capsys):
        code, out, _ = run(capsys, "score", str(problem_file))
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split()[:4] == ["rank", "id", "class", "score"]
        assert lines[2].split()[:4] == ["1", "D1", "argument", "0.952381"]

    def test_csv_format(self, problem_file, capsys):
        code, out, _ = run(capsys, "score", str(problem_file),
                           "--format", "csv", "--preset", "sd",
                           "--agg", "product")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0][:4] == ["rank", "id", "class", "score"]
        assert rows[1][:4] == ["1", "D1", "argument", "0.055556"]

    def test_threshold_filters_everything(self, problem_file, capsys):
        code, out, err = run(capsys, "score", str(problem_file),
                             "--preset", "sd", "--agg", "product",
                             "--threshold", "1/2", "--format", "json")
        assert code == 2
        assert json.loads(out)["results"] == []
        assert "no decoding passed the filter" in err

    def test_top_k(self, problem_file, capsys):
        code, out, _ = run(capsys, "score", str(problem_file),
                           "--top-k", "1", "--format", "json")
        assert code == 0
        assert [r["id"] for r in json.loads(out)["results"]] == ["D1"]

    def test_custom_measure_config(self, problem_file, tmp_path, capsys):
        cfg = tmp_path / "measures.json"
        cfg.write_text(json.dumps([{"kind": "cmmin"},
                                   {"kind": "cmtve", "preset": "jac"}]))
        code, out, _ = run(capsys, "score", str(problem_file),
                           "--config", str(cfg), "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["measures"] == ["cmmin", "cmtve(x=1,y=1)"]
        by_id = {r["id"]: r for r in report["results"]}
        assert by_id["D3"]["values"][0]["value"] == "1/2"

    def test_bad_measure_config(self, problem_file, tmp_path, capsys):
        cfg = tmp_path / "measures.json"
        cfg.write_text(json.dumps({"kind": "cmmin"}))
        code, _, err = run(capsys, "score", str(problem_file),
                           "--config", str(cfg))
        assert code == 1
        assert "error:" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "score", "/nonexistent/problem.json")
        assert code == 1
        assert "error:" in err

    def test_invalid_json(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run(capsys, "score", str(bad))
        assert code == 1

    def test_bad_formula_in_problem(self, tmp_path, capsys):
        doc = {"atoms": ["p"],
               "enthymeme": {"premises": [{"formula": "p &", "weight": "0.5"}],
                             "claim": {"formula": "p", "weight": "0.5"}},
               "decodings": []}
        path = tmp_path / "p.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "score", str(path))
        assert code == 1

    def test_env_atom_cap(self, problem_file, capsys, monkeypatch):
        monkeypatch.setenv("ENTHYMEME_JUDGE_MAX_ATOMS", "2")
        code, _, err = run(capsys, "score", str(problem_file))
        assert code == 1
        assert "error:" in err

    def test_cli_atom_cap_flag(self, problem_file, capsys):
        code, _, err = run(capsys, "score", str(problem_file),
                           "--max-atoms", "3")
        assert code == 1

    def test_plot_writes_figures(self, problem_file, tmp_path, capsys):
        outdir = tmp_path / "figs"
        code, _, err = run(capsys, "score", str(problem_file),
                           "--plot", str(outdir))
        assert code == 0
        assert (outdir / "ranking.png").stat().st_size > 0
        assert (outdir / "measures.png").stat().st_size > 0
        assert "ranking.png" in err and "measures.png" in err


class TestNormalize:
    def test_problem_file_table(self, problem_file, capsys):
        code, out, _ = run(capsys, "normalize", str(problem_file))
        assert code == 0
        assert "enthymeme" in out
        assert "decoding D1" in out
        assert "premise  <h | !r, 4/5>" in out

    def test_problem_file_json(self, problem_file, capsys):
        code, out, _ = run(capsys, "normalize", str(problem_file),
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert set(doc["decodings"]) == {"D1", "D2", "D3"}
        d1 = doc["decodings"]["D1"]
        assert {item["clause"] for item in d1["premises"]} == {"r", "h | !r"}
        assert [item["clause"] for item in d1["claim"]] == ["h"]

    def test_single_formula(self, capsys):
        code, out, _ = run(capsys, "normalize", "--formula", "!(p -> q | !r)",
                           "--atoms", "p,q,r")
        assert code == 0
        assert out.splitlines() == ["p", "!q", "r"]

    def test_single_formula_json_with_weight(self, capsys):
        code, out, _ = run(capsys, "normalize", "--formula", "p & q",
                           "--atoms", "p,q", "--weight", "0.7",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["clauses"] == [{"clause": "p", "weight": "7/10"},
                                  {"clause": "q", "weight": "7/10"}]

    def test_formula_requires_atoms(self, capsys):
        code, _, err = run(capsys, "normalize", "--formula", "p")
        assert code == 1

    def test_no_input(self, capsys):
        code, _, err = run(capsys, "normalize")
        assert code == 1

    def test_bad_weight(self, capsys):
        code, _, err = run(capsys, "normalize", "--formula", "p",
                           "--atoms", "p", "--weight", "2")
        assert code == 1


class TestCheckAxioms:
    def test_small_clean_run(self, capsys):
        code, out, _ = run(capsys, "check-axioms", "--rows", "cmsd",
                           "--axioms", "ideal_stability",
                           "--samples", "120", "--seed", "4",
                           "--min-exercised", "10", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["cells"]) == 1
        cell = doc["cells"][0]
        assert cell["status"] == "ok"
        assert cell["violations"] == 0

    def test_table_output(self, capsys):
        code, out, _ = run(capsys, "check-axioms", "--rows", "cmbl",
                           "--samples", "60", "--seed", "2",
                           "--min-exercised", "5")
        assert code == 0
        assert out.splitlines()[0].split() == ["row", "axiom", "exercised",
                                               "violations", "status"]

    def test_inconclusive_exit(self, capsys):
        # an absurd floor no cell can reach
        code, out, _ = run(capsys, "check-axioms", "--rows", "cmsd",
                           "--axioms", "ideal_stability",
                           "--samples", "20", "--min-exercised", "1000")
        assert code == 4

    def test_unknown_row(self, capsys):
        code, _, err = run(capsys, "check-axioms", "--rows", "nope")
        assert code == 1
        assert "unknown matrix rows" in err

    def test_unknown_axiom(self, capsys):
        code, _, err = run(capsys, "check-axioms", "--axioms", "nope")
        assert code == 1
        assert "unknown axioms" in err
