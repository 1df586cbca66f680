"""
Closed forms for ``S_n(k) = sum_{l<k} q**l [l]_q**n`` in terms of
q-Bernoulli numbers, and the q -> 1 recovery of the classical formulas.

The Bernoulli closed form is

    (n+1) S_n(k) = sum_{l<=n} C(n+1,l) q**(k l) beta_l [k]**(n+1-l)
                   + (q**((n+1)k) - 1) beta_{n+1}.

It follows from ``beta_{n+1}(k) - beta_{n+1} = (n+1) S_n(k)`` by splitting
off the ``j = n+1`` term of ``beta_{n+1}(k)``.  Writing the last factor as
``1 - q**((n+1)k)`` instead gives a wrong answer already at ``n = k = 1``;
``flipped_sign=True`` reproduces that variant for regression checks.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import comb

from .algebra import IdentityError, QPoly, limit_at_1
from .bernoulli import LExt, beta_poly, beta_recurrence
from .qsums import power_sum_oracle, powersum_via_recurrence, q_integer_power

__all__ = [
    "SumMethod",
    "bernoulli_closed_form_rhs",
    "powersum_bernoulli",
    "powersum_via_beta_diff",
    "classical_faulhaber",
    "powersum",
]


class SumMethod(enum.Enum):
    BRUTE_FORCE = "brute"
    RECURRENCE = "recurrence"
    BERNOULLI_CLOSED_FORM = "bernoulli"
    BETA_DIFFERENCE = "betadiff"


def _check(n: int, k: int):
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")


def bernoulli_closed_form_rhs(n: int, k: int, *, flipped_sign: bool = False) -> LExt:
    """Unchecked right-hand side of the closed form, as an L-extension value."""
    _check(n, k)
    total = LExt()
    for l in range(n + 1):
        coeff = QPoly.monomial(k * l, comb(n + 1, l)) * q_integer_power(k, n + 1 - l)
        total = total + beta_recurrence(l) * coeff
    last = QPoly.monomial((n + 1) * k) - 1
    if flipped_sign:
        last = -last
    total = total + beta_recurrence(n + 1) * last
    return total * Fraction(1, n + 1)


def _to_polynomial(value: LExt, n: int, k: int) -> QPoly:
    if not value.is_rational() or not value.rat_part.is_poly():
        raise IdentityError(f"identity violated at n={n}, k={k}")
    return value.rat_part.num


def powersum_bernoulli(n: int, k: int) -> QPoly:
    """``S_n(k)`` from the q-Bernoulli closed form."""
    return _to_polynomial(bernoulli_closed_form_rhs(n, k), n, k)


def powersum_via_beta_diff(n: int, k: int) -> QPoly:
    """``S_n(k) = (beta_{n+1}(k) - beta_{n+1}) / (n+1)``."""
    _check(n, k)
    d = (beta_poly(n + 1, k) - beta_recurrence(n + 1)) * Fraction(1, n + 1)
    return _to_polynomial(d, n, k)


def classical_faulhaber(n: int, k: int) -> Fraction:
    """``lim_{q->1} S_n(k)``, i.e. ``sum_{l<k} l**n``."""
    return limit_at_1(powersum_bernoulli(n, k))


_ROUTES = {
    SumMethod.BRUTE_FORCE: power_sum_oracle,
    SumMethod.RECURRENCE: powersum_via_recurrence,
    SumMethod.BERNOULLI_CLOSED_FORM: powersum_bernoulli,
    SumMethod.BETA_DIFFERENCE: powersum_via_beta_diff,
}


def powersum(n: int, k: int, method: SumMethod = SumMethod.BERNOULLI_CLOSED_FORM) -> QPoly:
    _check(n, k)
    return _ROUTES[SumMethod(method)](n, k)
