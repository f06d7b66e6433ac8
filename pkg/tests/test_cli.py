import json

import pytest

from main import EXIT_DISAGREE, EXIT_ERROR, EXIT_OK, build_parser, main


@pytest.fixture(autouse=True)
def quiet_env(monkeypatch):
    monkeypatch.delenv("FOREST_TURAN_BUDGET", raising=False)
    monkeypatch.delenv("FOREST_TURAN_WORKERS", raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_formula_forest(capsys):
    code, out, _ = run(capsys, "formula", "4,2", "3", "20")
    assert code == EXIT_OK
    assert "value: 40" in out
    assert "case_label: Thm1.5(1)/p+1≤m≤2p" in out


def test_formula_swaps_sides(capsys):
    code, out, _ = run(capsys, "formula", "4,2", "20", "3")
    assert code == EXIT_OK
    assert "case_label: Thm1.5(1)/p+1≤m≤2p [swapped]" in out


def test_formula_path_json(capsys):
    code, out, _ = run(capsys, "formula", "5", "4", "4", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["value"] == 8
    assert payload["case_label"] == "Thm1.2(3)/m=n even"
    assert payload["unique"] is True


def test_formula_general_hypothesis_error(capsys):
    code, out, err = run(capsys, "formula", "3,3", "--general", "10")
    assert code == EXIT_ERROR
    assert out == ""
    assert err.startswith("error:")


def test_formula_spectral_bounds(capsys):
    code, out, _ = run(capsys, "formula", "2,2", "--spectral", "5")
    assert code == EXIT_OK
    assert out.splitlines() == ["lambda_max <= 2.000000000", "lambda_min >= -2.000000000"]


def test_formula_needs_sides(capsys):
    code, _, err = run(capsys, "formula", "5")
    assert code == EXIT_ERROR
    assert "need M and N" in err


def test_bad_spec_is_an_error(capsys):
    code, _, err = run(capsys, "formula", "5,1", "3", "4")
    assert code == EXIT_ERROR
    assert err.startswith("error:")


def test_construct_is_deterministic(capsys):
    _, first, err = run(capsys, "construct", "z", "5", "8", "3", "--check", "5,5")
    _, second, _ = run(capsys, "construct", "z", "5", "8", "3")
    assert first == second
    assert first.splitlines()[0] == "5 8"
    assert "P5+P5: free" in err


def test_construct_edgelist(capsys):
    code, out, _ = run(capsys, "construct", "K", "1", "2", "--format", "edgelist")
    assert code == EXIT_OK
    assert out.splitlines() == ["1 2", "x1 y1", "x1 y2"]


def test_embed_from_edgelist_file(capsys, tmp_path):
    lines = ["3 5"] + [f"x{x} y{y}" for x in range(1, 4) for y in range(1, 6)]
    path = tmp_path / "k35.txt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    code, out, _ = run(capsys, "embed", "5,3", "--graph", str(path))
    assert code == EXIT_OK
    paths = out.splitlines()
    assert [len(p.split("-")) for p in paths] == [5, 3]


def test_embed_reports_free(capsys, tmp_path):
    path = tmp_path / "k23.txt"
    path.write_text("2 3\nx1 y1\nx1 y2\nx1 y3\nx2 y1\nx2 y2\nx2 y3\n", encoding="utf-8")
    code, out, _ = run(capsys, "embed", "5,3", "--graph", str(path), "--json")
    assert code == EXIT_OK
    assert json.loads(out) == {"spec": "P5+P3", "contains": False, "paths": []}


def test_spectral_of_constructed_graph(capsys):
    code, out, _ = run(capsys, "spectral", "--construct", "K", "2", "9")
    assert code == EXIT_OK
    assert "lambda_max: 4.242640687" in out
    assert "lambda_min: -4.242640687" in out


def test_missing_graph_file(capsys, tmp_path):
    code, _, err = run(capsys, "spectral", "--graph", str(tmp_path / "nope.g6"))
    assert code == EXIT_ERROR
    assert err.startswith("error:")


def test_brute_json_has_no_elapsed(capsys):
    code, out, _ = run(capsys, "brute", "2,2", "2", "2", "--quiet", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["max_edges"] == 2
    assert "elapsed" not in payload


def test_brute_cell_budget(capsys):
    code, _, err = run(capsys, "brute", "2,2", "6", "6", "--quiet", "--max-cells", "30")
    assert code == EXIT_ERROR
    assert err.startswith("error:")


def test_scan_reports_threshold(capsys):
    code, out, _ = run(capsys, "scan", "2,2", "2", "4", "--quiet")
    assert code == EXIT_OK
    assert out.rstrip().endswith("threshold: 2")


def test_verify_lemma(capsys):
    code, out, _ = run(capsys, "verify", "lemma2.1", "--p", "3", "--limit", "12", "--quiet")
    assert code == EXIT_OK
    assert "summary: all agree" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "lemma2.2", "--p", "3", "--m", "10", "--limit", "12", "--quiet", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["theorem"] == "lemma2.2"
    assert payload["failures"] == 0
    assert payload["rows"][0]["observed"] == "equality [(2, 7)]"


def test_verify_unknown_theorem(capsys):
    code, _, err = run(capsys, "verify", "thm9.9", "--quiet")
    assert code == EXIT_ERROR
    assert "unknown theorem id" in err


def test_verify_overrides_for_threshold_scan():
    from main import _verify_overrides

    args = build_parser().parse_args(["verify", "thm1.5", "--spec", "4,2", "--nmax", "7"])
    assert _verify_overrides(args) == {"n_max": 7, "scans": [{"spec": "4,2", "m": 3, "n_max": 7}]}


def test_verify_overrides_k_range():
    from main import _verify_overrides

    args = build_parser().parse_args(["verify", "thm1.2", "--kmax", "4", "--max-mn", "9"])
    assert _verify_overrides(args) == {"max_mn": 9, "k": [2, 3, 4]}


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_DISAGREE, EXIT_ERROR}) == 3


def test_brute_text_output_is_stable(capsys):
    _, first, _ = run(capsys, "brute", "2,2", "2", "3", "--quiet")
    _, second, _ = run(capsys, "brute", "2,2", "2", "3", "--quiet")
    assert first == second
    assert "elapsed" not in first
    assert "max_edges: 3" in first
