import json

import pytest

from qident.cli import format_value, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert len(out.strip().splitlines()) == 29 and out.startswith("R1\t")


@pytest.mark.parametrize("argv, expected", [
    (["qgamma", "0.3", "--q", "0.5"], "2.46902879290506"),
    (["pq", "12", "--q", "0.5"], "22.9472159749768"),
    (["theta1", "0.7+0.2j", "--tau", "0.5,1"], "0.501703854053538+0.359209715231588j"),
    (["sinq", "1.5707963267948966", "--q", "0.3"], "1"),
])
def test_eval(capsys, argv, expected):
    code, out, _ = run(capsys, "eval", *argv)
    assert code == 0 and out.strip() == expected


def test_eval_psi_and_lambda(capsys):
    code, out, _ = run(capsys, "eval", "psi", "--q", "0.5")
    assert code == 0 and float(out) == pytest.approx(1.64163256065515)
    code, out, _ = run(capsys, "eval", "lambdaq", "4", "--q", "0.9999")
    assert code == 0 and abs(float(out) - 0.6931471805599453) < 1e-2


def test_eval_real_root_branch(capsys):
    _, principal, _ = run(capsys, "eval", "psi", "--q", "-0.3")
    _, real_root, _ = run(capsys, "eval", "qgamma", "0.5", "--q", "-0.3", "--branch", "real-root")
    assert principal.strip() and real_root.strip()


@pytest.mark.parametrize("argv", [
    ["eval", "qgamma", "0.3"],
    ["eval", "qgamma", "0.3", "--q", "1.5"],
    ["eval", "pq", "2.5", "--q", "0.5"],
    ["eval", "psi", "1", "--q", "0.5"],
])
def test_eval_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_verify_exit_codes(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "--ids", "R1,R17")
    assert code == 0 and out.startswith("case_id,")
    code, _, err = run(capsys, "verify", "--ids", "R21")
    assert code == 1 and "FAIL R21" in err
    code, _, err = run(capsys, "verify", "--ids", "R99")
    assert code == 2
    code, _, _ = run(capsys, "verify", "--ids", "R1", "--tol", "1e-20")
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, _ = run(capsys, "verify", "--config", str(bad))
    assert code == 2


def test_verify_config_and_out(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"grid": {"q_values": [0.25, 0.5]}, "seed": 1}))
    out_a, out_b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (out_a, out_b):
        code, _, _ = run(capsys, "verify", "--ids", "R9,R10", "--config", str(cfg), "--out", str(path))
        assert code == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    assert len(out_a.read_text().splitlines()) == 1 + 2 * 4 + 2 * 2


def test_verify_markdown(capsys):
    code, out, _ = run(capsys, "verify", "--ids", "R22", "--format", "markdown")
    assert code == 1 and "convention" in out and "| R22 |" in out


def test_format_value():
    assert format_value(1 / 3) == "0.333333333333333"
    assert format_value(1 - 2j) == "1-2j"
