"""Command line interface: output text, JSON mode, exit codes."""

import json

from wpoly import cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_output(capsys):
    code, out, _ = run(["eval", "--ring", "HQ", "t^2 + [1]", "i"], capsys)
    assert code == 0
    assert out.strip() == "f(a) = 0"


def test_eval_twisted_coefficients(capsys):
    code, out, _ = run(["eval", "--ring", "Qx", "--S", "xsq",
                        "t + [x]", "x^2"], capsys)
    assert code == 0
    assert out.strip() == "f(a) = x^2+x"


def test_is_wedderburn_flagship(capsys):
    code, out, _ = run(["is-wedderburn", "--ring", "HQ", "t^2 + [1]"], capsys)
    assert code == 0
    assert "verdict = IS_W" in out
    assert "root basis: i, -i" in out
    assert "certificate recheck: pass" in out


def test_not_w_verdict_and_strict_exit(capsys):
    poly = "t^2 + [-i-j]*t + [-k]"
    code, out, _ = run(["is-wedderburn", "--ring", "HQ", poly], capsys)
    assert code == 0
    assert "verdict = NOT_W" in out
    assert "minimal polynomial of V(f): t + [-i]" in out
    code, _, _ = run(["is-wedderburn", "--ring", "HQ", "--strict", poly],
                     capsys)
    assert code == 1


def test_rgcd_with_cofactors(capsys):
    code, out, _ = run(["rgcd", "--ring", "HQ", "t + [-i]", "t^2 + [1]"],
                       capsys)
    assert code == 0
    assert "rgcd = t + [-i]" in out
    assert "cofactors: u = [1]; v = 0" in out


def test_metro_solve_differential(capsys):
    code, out, _ = run(["metro", "solve", "--ring", "Qu", "--D", "ddx",
                        "--a", "u", "--b", "u", "--c", "1"], capsys)
    assert code == 0
    assert "status = SOLUTION" in out
    assert "x = -u" in out
    assert "uniqueness = MULTIPLE" in out
    assert "second solution = -u+1" in out


def test_minpoly_output(capsys):
    code, out, _ = run(["minpoly", "--ring", "F4", "--S", "frob", "1, w"],
                       capsys)
    assert code == 0
    assert "minimal polynomial = t^2 + [1]" in out
    assert "rank = 2" in out
    assert "P-basis = 1, w" in out


def test_roots_by_enumeration(capsys):
    code, out, _ = run(["roots", "--ring", "F8", "t^2 + [w]"], capsys)
    assert code == 0
    assert "roots = {w^2+w}" in out


def test_closure_member_strict_exit(capsys):
    argv = ["closure-member", "--ring", "HQ", "--", "-i", "i"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert "-i in closure{i}: false" in out
    code, _, _ = run(argv[:3] + ["--strict"] + argv[3:], capsys)
    assert code == 1


def test_json_output_is_deterministic(capsys):
    argv = ["is-wedderburn", "--ring", "HQ", "--json", "t^2 + [1]"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second
    doc = json.loads(first)
    assert set(doc) == {"ring", "inputs", "result", "certificate"}
    assert doc["ring"] == "HQ [S=id, D=0]"
    assert doc["result"]["verdict"] == "IS_W"
    assert doc["certificate"]["roots"] == ["i", "-i"]
    assert doc["certificate"]["recheck"] is True


def test_usage_errors_exit_two(capsys):
    code, _, err = run(["eval", "--ring", "Q", "t + [1]", "i"], capsys)
    assert code == 2
    assert "not defined in Q" in err
    code, _, err = run(["is-wedderburn", "--ring", "HQ", "t^2 + 1"], capsys)
    assert code == 2
    code, _, err = run(["metro", "solve", "--ring", "HQ",
                        "--a", "i", "--b", "j", "--c", "0"], capsys)
    assert code == 2


def test_split_reports_not_split(capsys):
    argv = ["split", "--ring", "Qx", "--S", "xsq", "t^3 + [x]"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert "NOT_SPLIT" in out
    code, _, _ = run(argv[:1] + ["--strict"] + argv[1:], capsys)
    assert code == 1


def test_lattice_check_summary(capsys):
    code, out, _ = run(["lattice", "check", "--ring", "F4", "--S", "frob"],
                       capsys)
    assert code == 0
    assert "nodes: 10" in out
    assert "dependence_triples: 450" in out
    assert "dependence_violations: 0" in out
    assert out.rstrip().endswith("ok: true")


def test_examples_replay(capsys):
    code, out, _ = run(["examples"], capsys)
    assert code == 0
    assert out.count("PASS") == 5
    assert "FAIL" not in out
    assert "5 of 5 examples pass" in out


def test_batch_runs_lines_and_keeps_worst_exit(capsys, tmp_path):
    script = tmp_path / "cmds.txt"
    script.write_text(
        "# a comment line\n"
        "\n"
        "eval --ring HQ \"t^2 + [1]\" i\n"
        "is-wedderburn --ring F4 --S frob \"t^2 + [1]\"\n")
    code, out, _ = run(["batch", str(script)], capsys)
    assert code == 0
    assert out.count("$ ") == 2
    assert "f(a) = 0" in out
    script.write_text(
        "eval --ring HQ \"t^2 + [1]\" i\n"
        "closure-member --ring HQ --strict j i\n")
    code, out, _ = run(["batch", str(script)], capsys)
    assert code == 1
