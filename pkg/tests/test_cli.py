"""CLI behaviour: formats, exit codes, corpus runner, reproducibility."""

import json

from logres.cli import main
from logres.corpus import run_corpus, corpus_names, CORPUS


def test_analyze_text_output(capsys):
    code = main(["analyze", "--vars", "x,y", "--poly", "x^2 - y^3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "free" in out and "gorenstein" in out


def test_analyze_json_output(capsys):
    code = main(["analyze", "--vars", "x,y", "--poly", "x*y",
                 "--factors", "x;y", "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["verdicts"]["free"] == "true"
    assert data["verdicts"]["residues_weakly_holomorphic"] == "true"


def test_analyze_json_byte_identical(capsys):
    args = ["analyze", "--vars", "x,y", "--poly", "x*y", "--format", "json",
            "--seed", "5"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    second = capsys.readouterr().out
    assert first == second


def test_analyze_invalid_input_exit_2(capsys):
    assert main(["analyze", "--vars", "x", "--poly", "x^2"]) == 2
    err = capsys.readouterr().err
    assert "squarefree" in err


def test_analyze_parse_error_exit_2(capsys):
    assert main(["analyze", "--vars", "x", "--poly", "x*("]) == 2


def test_analyze_branches_file(tmp_path, capsys):
    path = tmp_path / "cusp.json"
    path.write_text(json.dumps(
        [{"param": {"x": [[3, "1"]], "y": [[2, "1"]]}, "truncation": 64}]))
    code = main(["analyze", "--vars", "x,y", "--poly", "x^2 - y^3",
                 "--branches", str(path), "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    data = json.loads(out)
    assert data["input"]["branches"] == "supplied"


def test_corpus_filter_no_match_exit_2(capsys):
    assert main(["corpus", "--only", "nonexistent"]) == 2
    err = capsys.readouterr().err
    assert "no corpus entry" in err


def test_corpus_single_entry(capsys):
    assert main(["corpus", "--only", "cusp"]) == 0
    out = capsys.readouterr().out
    assert "cusp" in out and "verified" in out


def test_corpus_self_test_detects_corruption():
    # the harness must flag a deliberately corrupted expectation
    failures, ran = run_corpus(only="node",
                               expected_overrides={"node": {"free": "false"}})
    assert ran == 1
    assert failures and "free" in failures[0]


def test_consistency_failure_exit_3(monkeypatch, capsys):
    from logres import cli
    from logres.errors import ConsistencyError

    def boom(*a, **k):
        raise ConsistencyError("synthetic disagreement")
    monkeypatch.setattr(cli, "analyze", boom)
    assert main(["analyze", "--vars", "x,y", "--poly", "x*y"]) == 3
    assert "consistency" in capsys.readouterr().err


def test_corpus_names_cover_required_examples():
    names = corpus_names()
    for required in ("node", "cusp", "triple-point", "two-lines-m1",
                     "tangential-m2", "tangential-m3", "coordinate-planes",
                     "whitney-umbrella", "four-planes-family",
                     "non-quasihomogeneous"):
        assert required in names
    polys = {e["poly"] for e in CORPUS}
    assert "x*y*(x+y)*(x+y*z)" in polys
    assert "x^2 - y^2*z" in polys
