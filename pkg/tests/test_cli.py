import json
import subprocess
import sys

import pytest

from artifact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


D3 = {"strands": 3, "factors": [{"conjugator": "1", "base": k, "power": 1}
                                for k in (1, 2, 1, 2, 1, 2)]}


@pytest.fixture
def d3_file(tmp_path):
    path = tmp_path / "d3.json"
    path.write_text(json.dumps(D3))
    return str(path)


@pytest.fixture
def cusp_file(tmp_path):
    path = tmp_path / "cusp.json"
    path.write_text(json.dumps({"strands": 2, "factors": [{"base": 1, "power": 3}]}))
    return str(path)


# --- braid --------------------------------------------------------------


def test_braid_eq_example(capsys):
    assert run(capsys, "braid", "eq", "--strands", "3", "x1 x2 x1", "x2 x1 x2") == (0, "true\n", "")


def test_false_decision_exit_codes(capsys):
    assert run(capsys, "braid", "eq", "-n", "3", "x1 x2", "x2 x1")[:2] == (0, "false\n")
    assert run(capsys, "braid", "eq", "-n", "3", "--assert", "x1 x2", "x2 x1")[:2] == (1, "false\n")


def test_parse_and_usage_errors_exit_two(capsys):
    code, _, err = run(capsys, "braid", "eq", "-n", "3", "x1 y2", "x1")
    assert code == 2 and "y2" in err
    assert run(capsys, "braid", "eq", "x1", "x2")[0] == 2  # missing --strands
    assert run(capsys, "braid", "frobnicate")[0] == 2
    assert run(capsys, "braid", "eq", "-n", "3", "x5", "x1")[0] == 2


def test_braid_act_psi_degree(capsys):
    assert run(capsys, "braid", "act", "-n", "3", "x1", "g1")[1] == "g1 g2 g1^-1\n"
    assert run(capsys, "braid", "psi", "-n", "4", "x1 x3")[1] == "[2, 1, 4, 3]\n"
    assert run(capsys, "braid", "degree", "-n", "4", "x1 x3^-1 x2^3")[1] == "3\n"


def test_structured_output(capsys):
    code, out, _ = run(capsys, "braid", "eq", "-n", "3", "--format", "structured", "x1", "x1")
    assert code == 0 and json.loads(out) == {"result": True}


# --- btilde, gn, g0 -----------------------------------------------------


def test_btilde_eq_example(capsys):
    assert run(capsys, "btilde", "eq", "--strands", "9", "t4 t3", "t3 t4")[:2] == (0, "true\n")
    assert run(capsys, "braid", "eq", "--strands", "9", "t4 t3", "t3 t4")[1] == "false\n"


def test_btilde_nf_round_trips_through_the_parser(capsys):
    from artifact.btilde import btilde_nf, parse_btilde_nf
    from artifact.words import parse_braid
    _, out, _ = run(capsys, "btilde", "nf", "-n", "5", "x1 x2^-1 x4 x1")
    assert parse_btilde_nf(out.strip()) == btilde_nf(parse_braid("x1 x2^-1 x4 x1", 5))


def test_btilde_comb_and_lambda(capsys):
    assert run(capsys, "btilde", "comb", "-n", "3", "x2 x2")[1] == "Z2,3^2\n"
    _, out, _ = run(capsys, "btilde", "lambda", "-n", "3", "x1 x1")
    assert out == "v^0 s1^1 u1^0 u2^0\n"
    assert run(capsys, "btilde", "comb", "-n", "3", "x1")[0] == 2  # not pure


def test_gn_commands(capsys):
    assert run(capsys, "gn", "mul", "-n", "3", "u2^1", "u1^1")[1] == "v^1 s1^0 u1^1 u2^1\n"
    assert run(capsys, "gn", "sij", "-n", "3", "1", "2")[1] == "v^0 s1^1 u1^0 u2^0\n"
    assert run(capsys, "gn", "act", "-n", "3", "x1", "u1^1")[1] == "v^1 s1^0 u1^-1 u2^0\n"
    assert run(capsys, "gn", "sij", "-n", "3", "2", "2")[0] == 2


def test_g0_commands(capsys):
    _, out, _ = run(capsys, "g0", "mul", "g2", "g1")
    assert out == "t^1 g1^1 g2^1 g3^0 g5^0 g6^0 g7^0 g8^0 g9^0\n"
    _, out, _ = run(capsys, "g0", "act", "t2", "g1")
    assert out == "t^1 g1^1 g2^1 g3^0 g5^0 g6^0 g7^0 g8^0 g9^0\n"
    assert run(capsys, "g0", "mul", "g4")[0] == 2


# --- fact ---------------------------------------------------------------


def test_fact_validate(capsys, d3_file):
    assert run(capsys, "fact", "validate", "--assert", d3_file)[:2] == (0, "true\n")


def test_fact_move_output_is_a_factorization_file(capsys, d3_file, tmp_path):
    from artifact.monodromy import hurwitz_move, loads_expr
    _, out, _ = run(capsys, "fact", "move", d3_file, "--position", "2")
    moved = loads_expr(out)
    assert moved == hurwitz_move(loads_expr(json.dumps(D3)), 2)
    path = tmp_path / "moved.json"
    path.write_text(out)
    _, back, _ = run(capsys, "fact", "move", str(path), "--position", "2", "--inverse")
    assert loads_expr(back) == loads_expr(json.dumps(D3))


def test_fact_invariance(capsys, d3_file, monkeypatch):
    code, out, _ = run(capsys, "fact", "invariance", d3_file, "--by", "x1", "--assert")
    assert code == 0 and out.startswith("equivalent\npath: ")
    monkeypatch.setenv("ARTIFACT_MAX_STATES", "2")
    code, out, _ = run(capsys, "fact", "invariance", d3_file, "--by", "x1", "--assert")
    assert code == 1 and out.startswith("not-found-within-budget")
    monkeypatch.setenv("ARTIFACT_MAX_STATES", "lots")
    assert run(capsys, "fact", "invariance", d3_file, "--by", "x1")[0] == 2


def test_fact_errors(capsys, d3_file, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "fact", "validate", str(bad))[0] == 2
    assert run(capsys, "fact", "move", d3_file, "-p", "9")[0] == 2
    assert run(capsys, "fact", "validate", str(tmp_path / "missing.json"))[0] == 2


# --- vk -----------------------------------------------------------------


def test_vk_pipeline(capsys, cusp_file, tmp_path):
    _, out, _ = run(capsys, "vk", "present", cusp_file)
    assert out == "gens: 2\nrel: g1 g2 g1 g2^-1 g1^-1 g2^-1\n"
    pres = tmp_path / "p.txt"
    pres.write_text(out)
    _, out, _ = run(capsys, "vk", "projectivize", str(pres))
    assert out.endswith("rel: g1 g2\n")
    proj = tmp_path / "q.txt"
    proj.write_text(out)
    _, out, _ = run(capsys, "vk", "simplify", str(proj))
    assert out.startswith("# eliminate g2")
    simp = tmp_path / "s.txt"
    simp.write_text(out)
    assert run(capsys, "vk", "abelianize", str(simp))[1] == "Z/2\n"
    assert run(capsys, "vk", "abelianize", str(pres))[1] == "Z\n"


def test_vk_structured(capsys, cusp_file):
    _, out, _ = run(capsys, "vk", "present", cusp_file, "--projective", "--format", "structured")
    assert json.loads(out)["generators"] == 2


# --- g9 -----------------------------------------------------------------


def test_g9_dict_round_trips(capsys):
    from artifact.g9tower import dictionary, parse_q, q_eq
    _, out, _ = run(capsys, "g9", "dict")
    lines = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert lines["a4"] == "unsupported"
    for name, x in dictionary():
        if x is not None:
            assert q_eq(parse_q(lines[name]), x), name


def test_g9_relators(capsys):
    _, out, _ = run(capsys, "g9", "relators", "--format", "structured")
    rows = {r["name"]: r for r in json.loads(out)["relators"]}
    assert rows["tau c^-1"]["trivial"] is True
    assert all(r["degree"] == 0 for r in rows.values())


def test_g9_presentation(capsys):
    _, out, _ = run(capsys, "g9", "presentation")
    assert out.startswith("gens: T1 T2")
    assert "rel[n9]" in out


# --- verify -------------------------------------------------------------


def test_verify_filter(capsys):
    code, out, _ = run(capsys, "verify", "paper-suite", "--filter", "ac04", "--filter", "AC07")
    assert code == 0
    assert [line.split()[0] for line in out.splitlines() if not line.startswith(" ")] == \
        ["AC04", "AC07", "summary:"]
    assert run(capsys, "verify", "paper-suite", "--filter", "AC99")[0] == 2


def test_verify_reports_failures_with_exit_one(capsys):
    code, out, _ = run(capsys, "verify", "paper-suite", "--filter", "AC16", "--format", "structured")
    doc = json.loads(out)
    assert code == (0 if doc["passed"] == doc["total"] else 1)
    assert doc["checks"][0]["id"] == "AC16"


def test_console_script_runs():
    out = subprocess.run([sys.executable, "-m", "artifact.cli", "braid", "eq", "-n", "3", "x1", "x1"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "true\n"
