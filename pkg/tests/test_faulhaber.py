from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qfaulhaber.algebra import IdentityError, QPoly, QRat, q
from qfaulhaber.bernoulli import L, LExt
from qfaulhaber.faulhaber import (
    SumMethod,
    bernoulli_closed_form_rhs,
    classical_faulhaber,
    powersum,
    powersum_bernoulli,
    powersum_via_beta_diff,
)
from qfaulhaber.qsums import power_sum_oracle, q_integer


def P(*c):
    return QPoly(c)


def test_closed_form_examples():
    assert powersum_bernoulli(1, 1) == QPoly()
    assert powersum_bernoulli(2, 3) == P(0, 1, 1, 2, 1)
    assert powersum_bernoulli(0, 4) == q_integer(4)


def test_flipped_sign_witness():
    wrong = bernoulli_closed_form_rhs(1, 1, flipped_sign=True)
    # L + 2q(1 - L)/(q - 1), worked by hand
    assert wrong == L + (LExt(1) - L) * QRat(2 * q, q - 1)
    assert not wrong.is_zero()
    assert bernoulli_closed_form_rhs(1, 1) == LExt()


def test_beta_diff_examples():
    assert powersum_via_beta_diff(1, 3) == P(0, 1, 1, 1)
    for n in range(1, 6):
        assert powersum_via_beta_diff(n, 1) == QPoly()
    assert powersum_via_beta_diff(3, 2) == q


@pytest.mark.parametrize("n", range(0, 9))
def test_all_methods_agree(n):
    for k in range(1, 13):
        results = {m: powersum(n, k, m) for m in SumMethod}
        assert len(set(results.values())) == 1, (n, k)
        p = results[SumMethod.BRUTE_FORCE]
        assert all(c.denominator == 1 and c >= 0 for c in p.coeffs)


def test_closed_form_log_part_cancels():
    for n in range(0, 6):
        for k in range(1, 6):
            v = bernoulli_closed_form_rhs(n, k)
            assert v.log_part.is_zero()
            assert v.rat_part.is_poly()


def test_dispatch_examples():
    assert powersum(2, 3, SumMethod.BRUTE_FORCE) == powersum(2, 3, SumMethod.BERNOULLI_CLOSED_FORM)
    for m in SumMethod:
        assert powersum(0, 5, m) == q_integer(5)
        assert powersum(5, 1, m) == QPoly()
    assert powersum(2, 3, "betadiff") == P(0, 1, 1, 2, 1)
    with pytest.raises(ValueError):
        powersum(2, 3, "simpson")
    with pytest.raises(ValueError):
        powersum(2, 0)


def test_identity_error_surfaces(monkeypatch):
    import qfaulhaber.faulhaber as fh

    def broken(n, k, *, flipped_sign=False):
        return LExt(QRat(1, q), 0)

    monkeypatch.setattr(fh, "bernoulli_closed_form_rhs", broken)
    with pytest.raises(IdentityError, match="identity violated"):
        fh.powersum_bernoulli(1, 2)


def test_classical_examples():
    assert classical_faulhaber(2, 10) == 285 == Fraction(2 * 9 ** 3 + 3 * 9 ** 2 + 9, 6)
    assert classical_faulhaber(3, 5) == 100 == Fraction(4 ** 4 + 2 * 4 ** 3 + 4 ** 2, 4)
    assert classical_faulhaber(1, 4) == 6 == Fraction(3 ** 2 + 3, 2)


@given(st.integers(0, 5), st.integers(1, 20))
def test_classical_shadow(n, k):
    assert classical_faulhaber(n, k) == sum(l ** n for l in range(k))
