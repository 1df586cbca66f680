"""Exit criteria.  Each test carries a ``criterion`` marker; the terminal
summary prints one PASS/FAIL line per criterion."""

import time
from fractions import Fraction
from math import comb

import pytest

from qfaulhaber import (
    LExt,
    QRat,
    beta_classical_limit,
    beta_difference,
    beta_explicit,
    beta_poly,
    beta_poly_alt,
    beta_recurrence,
    bernoulli_closed_form_rhs,
    classical_bernoulli,
    classical_faulhaber,
    power_sum_oracle,
    powersum_bernoulli,
    powersum_infinite,
    powersum_partial,
    powersum_via_beta_diff,
    powersum_via_recurrence,
    q_integer,
    square_sum_limit_closed_form,
    telescoping_identity_lhs,
)
from qfaulhaber.cli import main

GRID = [(n, k) for n in range(0, 9) for k in range(1, 13)]


@pytest.mark.criterion(1, "closed form equals brute force, 0<=n<=8, 1<=k<=12, under 60 s")
def test_main_theorem():
    start = time.perf_counter()
    bad = [(n, k) for n, k in GRID if powersum_bernoulli(n, k) != power_sum_oracle(n, k)]
    elapsed = time.perf_counter() - start
    assert bad == []
    assert elapsed < 60


@pytest.mark.criterion(2, "flipped last-term sign gives nonzero at n=k=1; corrected sign gives 0")
def test_sign_witness():
    assert not bernoulli_closed_form_rhs(1, 1, flipped_sign=True).is_zero()
    assert bernoulli_closed_form_rhs(1, 1).is_zero()
    assert powersum_bernoulli(1, 1) == power_sum_oracle(1, 1) == 0


@pytest.mark.criterion(3, "recurrence and explicit q-Bernoulli routes agree, 0<=n<=12")
def test_route_equality():
    for n in range(0, 13):
        assert beta_recurrence(n) == beta_explicit(n), n


@pytest.mark.criterion(4, "beta_n(k) - beta_n = n S_{n-1}(k) with zero L part, 1<=n<=8, 1<=k<=10")
def test_beta_difference_suite():
    for n in range(1, 9):
        for k in range(1, 11):
            d = beta_difference(n, k)
            assert d.log_part.is_zero()
            assert d == LExt(QRat(power_sum_oracle(n - 1, k) * n)), (n, k)


def _literal_reading(n, k, x):
    def qint(l, y):
        return sum(y ** i for i in range(l))
    return sum(comb(n, i) * sum(x ** ((n - i) * l) * qint(l, x ** (n - i)) ** i for l in range(k))
               for i in range(n))


@pytest.mark.criterion(5, "telescoping identity and recurrence hold, 1<=n<=8, 1<=k<=10; literal reading gives 439 != 343")
def test_telescoping_and_recurrence():
    for n in range(1, 9):
        for k in range(1, 11):
            assert telescoping_identity_lhs(n, k) == q_integer(k) ** n, (n, k)
            assert powersum_via_recurrence(n, k) == power_sum_oracle(n, k), (n, k)
    assert _literal_reading(3, 3, 2) == 439
    assert q_integer(3)(2) ** 3 == 343
    assert telescoping_identity_lhs(3, 3)(2) == 343


@pytest.mark.criterion(6, "q->1 limits give B_n (0<=n<=10) and the three classical power-sum formulas (k<=20)")
def test_classical_limits():
    for n in range(0, 11):
        assert beta_classical_limit(n) == classical_bernoulli(n), n
    assert classical_bernoulli(1) == Fraction(-1, 2)
    assert all(classical_bernoulli(n) == 0 for n in (3, 5, 7, 9))
    for k in range(1, 21):
        m = k - 1
        assert classical_faulhaber(1, k) == Fraction(m ** 2 + m, 2)
        assert classical_faulhaber(2, k) == Fraction(2 * m ** 3 + 3 * m ** 2 + m, 6)
        assert classical_faulhaber(3, k) == Fraction(m ** 4 + 2 * m ** 3 + m ** 2, 4)


@pytest.mark.criterion(7, "q=9/10 infinite sum equals the limiting closed form; 500-term gap < 1e-9; under 1 s")
def test_nine_tenths_example():
    start = time.perf_counter()
    x = Fraction(9, 10)
    value = x * powersum_infinite(2, x)
    rhs = (Fraction(1, 3) * (1 / (1 - x)) ** 3
           - Fraction(1, 2) * ((1 / (1 - x)) ** 2 - 1 / (1 - x ** 2))
           - Fraction(1, 3) * (1 / (1 - x ** 3)))
    assert value == rhs == square_sum_limit_closed_form(x)
    partial = x * powersum_partial(2, x, 500)
    assert abs(value - partial) < Fraction(1, 10 ** 9)
    assert time.perf_counter() - start < 1


@pytest.mark.criterion(8, "beta_poly_alt = beta_poly (n<=8, x<=6); beta-difference sum = closed form on the criterion-1 grid")
def test_alternative_expansions():
    for n in range(0, 9):
        for x in range(0, 7):
            assert beta_poly_alt(n, x) == beta_poly(n, x), (n, x)
    for n, k in GRID:
        assert powersum_via_beta_diff(n, k) == powersum_bernoulli(n, k), (n, k)


@pytest.mark.criterion(9, "CLI golden files for all five commands, exit codes, verify --max-n 8 --max-k 12 exits 0")
def test_cli_contract(capsys):
    from test_cli import CASES, GOLDEN

    commands = {argv[0] for argv, _ in CASES.values()}
    assert commands == {"bernoulli", "powersum", "limit", "tail", "verify"}
    for name, (argv, code) in CASES.items():
        assert main(argv) == code, name
        assert capsys.readouterr().out == (GOLDEN / f"{name}.txt").read_text(), name
    assert main(["tail", "--n", "1", "--q", "1"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["powersum", "--n", "1", "--k", "1", "--method", "nope"])
    assert exc.value.code == 2
    assert main(["verify", "--max-n", "8", "--max-k", "12"]) == 0
