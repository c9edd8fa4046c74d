import io
import json

from dseq.cli import main

from .conftest import problem_path


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_classify_positive():
    code, text = run("classify", problem_path("gold_forward.txt"), "--verify")
    assert code == 0
    assert "absolutely superficial: YES (condition v)" in text
    assert "field: F_32003" in text


def test_classify_negative_names_the_witness():
    code, text = run("classify", problem_path("gold_reversed.txt"))
    assert code == 0
    assert "absolutely superficial: NO, witness at i=1: J:a_1^2 != J:q" in text
    assert "J:a_1^2 = (x1)" in text
    assert "J:q = (x1^2, x1*x3)" in text


def test_json_is_stable():
    _, first = run("hs", problem_path("gold_forward.txt"), "--json")
    _, second = run("hs", problem_path("gold_forward.txt"), "--json")
    assert first == second
    data = json.loads(first)
    assert [row["lhs"] for row in data["table"]["rows"]] == [4, 9, 16, 25, 36, 49, 64]
    assert data["equality_all_n"] is True


def test_einv_and_rees():
    code, text = run("einv", problem_path("gold_forward.txt"))
    assert code == 0 and "e = (2, 1, 1)" in text
    code, text = run("rees", problem_path("rees_counterexample.txt"))
    assert code == 0 and "witness: T1*T3 - T2^2" in text


def test_indep_graded_cor43():
    assert run("indep", problem_path("regular_xy.txt"))[0] == 0
    assert run("graded", problem_path("gold_forward.txt"))[0] == 0
    assert run("graded", problem_path("gold_reversed.txt"))[0] == 1
    assert run("graded", problem_path("gold_reversed.txt"), "--force")[0] == 0
    assert run("cor43", problem_path("gold_forward.txt"), "--n-max", "2")[0] == 0


def test_oracle_and_sampling():
    code, text = run("oracle-diff", "--count", "30", "--seed", "5")
    assert code == 0 and "30/30" in text
    code, text = run("sample-sop", problem_path("gold_forward.txt"), "--count", "3")
    assert code == 0 and "sampling evidence only" in text


def test_input_errors_exit_one(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("variables = x\nsequence = x + \n")
    assert run("classify", str(bad))[0] == 1
    assert run("classify", str(tmp_path / "missing.txt"))[0] == 1
    assert run("classify")[0] == 1
    assert run("nonsense")[0] == 1
    assert run("classify", problem_path("gold_forward.txt"), "--bounds", "3")[0] == 1
