"""
q-integers and sums of powers of consecutive q-integers.

The central quantity is ``S_n(k) = sum_{l<k} q**l * [l]_q**n``.  The
telescoping identities for it involve the wider family

    T_n^(m)(k) = sum_{l<k} q**(m*l) * [l]_q**n,

where only the weight ``q**l`` is base-changed, never the q inside
``[l]_q``.  :func:`weighted_power_sum` expands that family directly and is
the brute-force reference every closed form is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import IdentityError, QPoly, QRat

__all__ = [
    "WeightedSumSpec",
    "q_integer",
    "q_integer_power",
    "weighted_power_sum",
    "power_sum_oracle",
    "powersum_closed_s1",
    "powersum_closed_s2",
    "telescoping_identity_lhs",
    "powersum_via_recurrence",
    "powersum_infinite",
    "powersum_partial",
    "square_sum_limit_closed_form",
]


@dataclass(frozen=True)
class WeightedSumSpec:
    """Parameters of ``sum_{l<k} q**(m*l) [l]_q**n``."""

    n: int
    m: int = 1
    k: int = 1

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("power n must be >= 0")
        if self.m < 1:
            raise ValueError("weight m must be >= 1")
        if self.k < 1:
            raise ValueError("upper limit k must be >= 1")


@lru_cache(maxsize=None)
def q_integer(k: int) -> QPoly:
    """``[k]_q = 1 + q + ... + q**(k-1)``."""
    if k < 0:
        raise ValueError("negative index out of scope")
    return QPoly([1] * k)


@lru_cache(maxsize=None)
def q_integer_power(l: int, n: int) -> QPoly:
    # 0**0 = 1, so [0]_q**0 is the constant 1
    return q_integer(l) ** n


@lru_cache(maxsize=None)
def weighted_power_sum(spec: WeightedSumSpec) -> QPoly:
    """Direct expansion of ``sum_{l<k} q**(m*l) [l]_q**n``."""
    total = QPoly()
    for l in range(spec.k):
        total = total + QPoly.monomial(spec.m * l) * q_integer_power(l, spec.n)
    return total


def power_sum_oracle(n: int, k: int) -> QPoly:
    """``S_n(k)`` by brute force."""
    return weighted_power_sum(WeightedSumSpec(n, 1, k))


def _as_poly(f: QRat, what: str) -> QPoly:
    if not f.is_poly():
        raise IdentityError(f"{what}: result has denominator {f.den}")
    return f.num


def powersum_closed_s1(k: int) -> QPoly:
    """``([k]^2 - [2k]/[2]) / 2``, which is ``S_1(k)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    kq = QRat(q_integer(k))
    f = (kq * kq - QRat(q_integer(2 * k), q_integer(2))) * Fraction(1, 2)
    return _as_poly(f, "closed form for n=1")


def powersum_closed_s2(k: int) -> QPoly:
    """``[k]^3/3 - ([k]^2 - [2k]/[2])/2 - [3k]/(3[3])``.

    This is ``sum_{j<k} q**(j+1) [j]_q**2``, i.e. ``q * S_2(k)``: note the
    extra factor of q.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    kq = QRat(q_integer(k))
    f = (kq ** 3 * Fraction(1, 3)
         - (kq * kq - QRat(q_integer(2 * k), q_integer(2))) * Fraction(1, 2)
         - QRat(q_integer(3 * k), q_integer(3)) * Fraction(1, 3))
    return _as_poly(f, "closed form for n=2")


def telescoping_identity_lhs(n: int, k: int) -> QPoly:
    """``sum_{i<n} C(n,i) T_i^(n-i)(k)``; equals ``[k]_q**n``."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    total = QPoly()
    for i in range(n):
        total = total + weighted_power_sum(WeightedSumSpec(i, n - i, k)) * comb(n, i)
    return total


def powersum_via_recurrence(n: int, k: int) -> QPoly:
    """``S_n(k)`` from ``(n+1) S_n = [k]^(n+1) - sum_{i<n} C(n+1,i) T_i^(n+1-i)``."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    rest = q_integer(k) ** (n + 1)
    for i in range(n):
        rest = rest - weighted_power_sum(WeightedSumSpec(i, n + 1 - i, k)) * comb(n + 1, i)
    result = rest * Fraction(1, n + 1)
    if not result.is_integral():
        raise IdentityError(f"division by {n + 1} is not exact for n={n}, k={k}")
    return result


def powersum_infinite(n: int, x: Fraction) -> Fraction:
    """Exact ``sum_{l>=0} x**l [l]_x**n`` for a rational ``|x| < 1``.

    Expanding ``[l]^n = (x**l - 1)**n / (x - 1)**n`` binomially turns every
    piece into a geometric series.
    """
    x = Fraction(x)
    if n < 0:
        raise ValueError("n must be >= 0")
    if abs(x) >= 1:
        raise ValueError("divergent series")
    total = sum(
        (Fraction(comb(n, i) * (-1) ** (n - i)) / (1 - x ** (i + 1)) for i in range(n + 1)),
        Fraction(0),
    )
    return total / (x - 1) ** n


def powersum_partial(n: int, x: Fraction, terms: int) -> Fraction:
    """``sum_{l<terms} x**l [l]_x**n`` in exact arithmetic."""
    x = Fraction(x)
    total = Fraction(0)
    w = Fraction(1)
    ql = Fraction(0)
    for _ in range(terms):
        total += w * ql ** n
        ql += w
        w *= x
    return total


def square_sum_limit_closed_form(x: Fraction) -> Fraction:
    """Right side of the n=2 closed form with ``[k] -> 1/(1-x)`` and
    ``[mk]/[m] -> 1/(1-x**m)``."""
    x = Fraction(x)
    if abs(x) >= 1:
        raise ValueError("divergent series")
    g = 1 / (1 - x)
    return (Fraction(1, 3) * g ** 3
            - Fraction(1, 2) * (g ** 2 - 1 / (1 - x ** 2))
            - Fraction(1, 3) / (1 - x ** 3))

