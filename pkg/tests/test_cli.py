import subprocess
import sys
from pathlib import Path

import pytest

from qfaulhaber.cli import main, parse_rational
from qfaulhaber.render import parse_csv_row, parse_poly

GOLDEN = Path(__file__).parent / "golden"

# name -> (argv, expected exit code)
CASES = {
    "bernoulli_n0_plain": (["bernoulli", "--n", "0", "--format", "plain"], 0),
    "bernoulli_n1_plain": (["bernoulli", "--n", "1", "--format", "plain"], 0),
    "bernoulli_n1_latex": (["bernoulli", "--n", "1", "--format", "latex"], 0),
    "bernoulli_n2_csv": (["bernoulli", "--n", "2", "--format", "csv"], 0),
    "powersum_n2_k3": (["powersum", "--n", "2", "--k", "3"], 0),
    "powersum_n0_k4": (["powersum", "--n", "0", "--k", "4"], 0),
    "powersum_n2_k3_eval1": (["powersum", "--n", "2", "--k", "3", "--eval-q", "1"], 0),
    "powersum_n2_k4_eval1": (["powersum", "--n", "2", "--k", "4", "--eval-q", "1"], 0),
    "powersum_n3_k3_eval2_recurrence": (
        ["powersum", "--n", "3", "--k", "3", "--method", "recurrence", "--eval-q", "2"], 0),
    "powersum_n3_k3_csv_brute": (
        ["powersum", "--n", "3", "--k", "3", "--method", "brute", "--format", "csv"], 0),
    "powersum_n2_k3_latex": (["powersum", "--n", "2", "--k", "3", "--format", "latex"], 0),
    "limit_n0": (["limit", "--n", "0"], 0),
    "limit_n1": (["limit", "--n", "1"], 0),
    "limit_n3": (["limit", "--n", "3"], 0),
    "limit_n10": (["limit", "--n", "10"], 0),
    "tail_n2_q9_10": (["tail", "--n", "2", "--q", "9/10"], 0),
    "tail_n0_q1_2": (["tail", "--n", "0", "--q", "1/2"], 0),
    "tail_n1_q1_2": (
        ["tail", "--n", "1", "--q", "1/2", "--max-terms", "200", "--tolerance", "1e-12"], 0),
    "tail_n2_q9_10_short": (["tail", "--n", "2", "--q", "9/10", "--max-terms", "50"], 1),
    "verify_n0_k1": (["verify", "--max-n", "0", "--max-k", "1"], 0),
    "verify_n8_k12": (["verify", "--max-n", "8", "--max-k", "12"], 0),
    "verify_flipped_sign": (["verify", "--max-n", "2", "--max-k", "2", "--flipped-sign"], 1),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    argv, code = CASES[name]
    assert main(argv) == code
    out = capsys.readouterr().out
    assert out == (GOLDEN / f"{name}.txt").read_text()


def test_spec_strings():
    assert (GOLDEN / "bernoulli_n0_plain.txt").read_text() == "rat: 0, log: 1\n"
    assert (GOLDEN / "bernoulli_n1_plain.txt").read_text() == "rat: 1/(q - 1), log: -1/(q - 1)\n"
    assert (GOLDEN / "powersum_n2_k3.txt").read_text() == "q + q^2 + 2q^3 + q^4\n"
    assert (GOLDEN / "limit_n1.txt").read_text() == "-1/2\n"
    assert "at n=1 k=1" in (GOLDEN / "verify_flipped_sign.txt").read_text()


@pytest.mark.parametrize("argv", [
    ["bernoulli", "--n", "-1"],
    ["bernoulli", "--n", "x"],
    ["bernoulli"],
    ["powersum", "--n", "1", "--k", "0"],
    ["powersum", "--n", "1", "--k", "2", "--method", "simpson"],
    ["powersum", "--n", "1", "--k", "2", "--eval-q", "0.5"],
    ["powersum", "--n", "1", "--k", "2", "--eval-q", "1/0"],
    ["tail", "--n", "1", "--q", "1"],
    ["tail", "--n", "1", "--q", "-3/2"],
    ["tail", "--n", "1", "--q", "0.9"],
    ["tail", "--n", "1", "--q", "1/2", "--tolerance", "-1"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_order_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("QF_SERIES_ORDER_CAP", "4")
    assert main(["limit", "--n", "6"]) == 1
    assert "order cap" in capsys.readouterr().err
    monkeypatch.setenv("QF_SERIES_ORDER_CAP", "zero")
    assert main(["limit", "--n", "2"]) == 2
    monkeypatch.setenv("QF_SERIES_ORDER_CAP", "16")
    assert main(["limit", "--n", "6"]) == 0
    assert capsys.readouterr().out == "1/42\n"


def test_parse_rational():
    from fractions import Fraction
    assert parse_rational("9/10") == Fraction(9, 10)
    assert parse_rational("-3") == -3


def test_plain_and_csv_outputs_round_trip(capsys):
    main(["powersum", "--n", "4", "--k", "5"])
    plain = capsys.readouterr().out.strip()
    main(["powersum", "--n", "4", "--k", "5", "--format", "csv"])
    csv = capsys.readouterr().out.strip()
    assert parse_poly(plain) == parse_csv_row(csv)
    assert parse_poly(plain)(1) == sum(l ** 4 for l in range(5))


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "qfaulhaber", "tail", "--n", "2", "--q", "9/10"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == 0
    assert a.stdout == b.stdout == (GOLDEN / "tail_n2_q9_10.txt").read_bytes()
