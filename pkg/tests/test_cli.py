import json

import pytest

from superbraid.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bar_worked_example(capsys):
    code, out, _ = run(capsys, "bar", "--p", "4,3,3,1", "--n", "2", "--m", "3")
    assert code == EXIT_OK
    assert out.strip() == "4,3,2,1,1"


def test_bar_rejects_non_hook(capsys):
    code, out, err = run(capsys, "bar", "--p", "4,4,4,2,2", "--n", "3", "--m", "1")
    assert code == EXIT_USAGE
    assert not out
    assert "hook" in err


def test_bar_empty_partition(capsys):
    code, out, _ = run(capsys, "bar", "--p", "", "--n", "2", "--m", "3")
    assert code == EXIT_OK
    assert out.strip() == "0,0,0,0,0"


def test_bar_accepts_bracketed_form(capsys):
    code, out, _ = run(capsys, "bar", "--p", "[4,3,3,1]", "--n", "2", "--m", "3")
    assert code == EXIT_OK
    assert out.strip() == "4,3,2,1,1"


def test_graph_json_figure(capsys):
    args = ["graph", "--a", "4", "--p", "3", "--b", "2", "--q", "2",
            "--n", "3", "--m", "1", "--d", "1", "--fmt", "json"]
    code, out, _ = run(capsys, *args)
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert len(payload["levels"][1]) == 3
    level1 = [tuple(v) for v in payload["levels"][2]]
    for shown in [(7, 6, 4), (6, 6, 5), (6, 6, 4, 1), (6, 5, 4, 1, 1), (5, 5, 4, 1, 1, 1)]:
        assert shown in level1
    # determinism: identical bytes on a second invocation
    code2, out2, _ = run(capsys, *args)
    assert (code2, out2) == (code, out)


def test_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "--a", "1", "--p", "1", "--b", "1", "--q", "1",
                       "--hook", "1,1", "--d", "0", "--fmt", "dot")
    assert code == EXIT_OK
    assert out.startswith("digraph bratteli {")
    assert '"[1]"' in out


def test_graph_d0_levels(capsys):
    code, out, _ = run(capsys, "graph", "--a", "4", "--p", "3", "--b", "2", "--q", "2",
                       "--n", "3", "--m", "1", "--d", "0")
    payload = json.loads(out)
    assert len(payload["levels"]) == 2


def test_lr_listing(capsys):
    code, out, _ = run(capsys, "lr", "--lam", "2,1", "--mu", "2,1")
    assert code == EXIT_OK
    lines = dict(line.rsplit(":", 1) for line in out.strip().splitlines())
    assert lines["[3,2,1]"] == "2"
    assert lines["[2,2,1,1]"] == "1"


def test_p0_listing(capsys):
    code, out, _ = run(capsys, "p0", "--a", "4", "--p", "3", "--b", "2", "--q", "2",
                       "--hook", "3,1")
    assert code == EXIT_OK
    assert out.splitlines() == ["[5,5,4,1,1]", "[6,5,4,1]", "[6,6,4]"]


def test_p0_strict_params_rejects_figure_case(capsys):
    code, _, err = run(capsys, "p0", "--a", "4", "--p", "3", "--b", "2", "--q", "2",
                       "--hook", "3,1", "--strict-params")
    assert code == EXIT_USAGE
    assert "strict" in err


def test_verify_braid_passes(capsys):
    code, out, _ = run(capsys, "verify", "braid", "--n", "1", "--m", "1", "--d", "2")
    assert code == EXIT_OK
    assert "OK" in out


def test_verify_braid_json_format(capsys):
    code, out, _ = run(capsys, "verify", "braid", "--n", "1", "--m", "1", "--d", "1",
                       "--fmt", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["schema"] == 1 and payload["ok"] is True
    assert payload["params"]["n"] == 1
    assert all(c["status"] == "pass" for c in payload["checks"])


def test_verify_hecke_pass_and_fail(capsys):
    base = ["verify", "hecke", "--n", "1", "--m", "1", "--d", "2"]
    code, _, _ = run(capsys, *base, "--a", "1", "--p", "1", "--b", "1", "--q", "1")
    assert code == EXIT_OK
    # quadratic relations checked at parameters inconsistent with the
    # modules must fail with a nonzero exit
    code, out, _ = run(capsys, *base, "--a", "1", "--p", "1", "--b", "1", "--q", "1",
                       "--check-params", "2,1,1,1")
    assert code == EXIT_CHECK_FAILED
    assert "FAIL" in out


def test_verify_lemmas(capsys):
    code, out, _ = run(capsys, "verify", "lemmas", "--a", "4", "--p", "3", "--b", "2",
                       "--q", "2", "--n", "3", "--m", "1")
    assert code == EXIT_OK
    assert "box-sum" in out and "casimir-transfer" in out


def test_verify_spectra_and_irreducible(capsys):
    for kind in ("spectra", "irreducible"):
        code, _, _ = run(capsys, "verify", kind, "--a", "1", "--p", "1", "--b", "1",
                         "--q", "1", "--n", "1", "--m", "1", "--d", "1")
        assert code == EXIT_OK, kind


def test_verify_missing_params(capsys):
    code, _, err = run(capsys, "verify", "spectra", "--n", "1", "--m", "1")
    assert code == EXIT_USAGE
    assert "--a" in err


def test_cap_exceeded_exit_code(capsys):
    code, _, err = run(capsys, "verify", "braid", "--n", "1", "--m", "1", "--d", "2",
                       "--cap", "4")
    assert code == EXIT_USAGE
    assert "cap" in err.lower()


def test_cap_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("SUPERBRAID_CAP", "4")
    code, _, _ = run(capsys, "verify", "braid", "--n", "1", "--m", "1", "--d", "2")
    assert code == EXIT_USAGE
    # explicit flag wins over the environment
    code, _, _ = run(capsys, "verify", "braid", "--n", "1", "--m", "1", "--d", "2",
                     "--cap", "100000")
    assert code == EXIT_OK


def test_verify_casimir_small(capsys):
    code, out, _ = run(capsys, "verify", "casimir", "--n", "1", "--m", "1",
                       "--max-size", "3")
    assert code == EXIT_OK
    assert "pairing-eps" in out


def test_verify_pieri_small(capsys):
    code, _, _ = run(capsys, "verify", "pieri", "--n", "1", "--m", "1", "--max-size", "2")
    assert code == EXIT_OK


def test_verify_centralizer_small(capsys):
    code, _, _ = run(capsys, "verify", "centralizer", "--n", "1", "--m", "1", "--d", "2")
    assert code == EXIT_OK
