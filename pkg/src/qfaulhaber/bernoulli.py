"""
q-Bernoulli numbers and polynomials.

``beta_0 = (q-1)/log q`` is transcendental over Q(q), so every ``beta_n``
is stored as ``a + b*L`` with ``a, b`` in Q(q) and ``L = (q-1)/log q`` kept
as a formal symbol.  All identities used here are Q(q)-linear in the betas,
so products of two such values never arise.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List

from .algebra import ONE, IdentityError, QPoly, QRat, limit_at_1, q
from .qsums import q_integer, q_integer_power

__all__ = [
    "LExt",
    "L",
    "BetaCache",
    "beta_recurrence",
    "beta_explicit",
    "beta_poly",
    "beta_poly_alt",
    "beta_difference",
    "beta_classical_limit",
    "classical_bernoulli",
]


@dataclass(frozen=True)
class LExt:
    """``rat_part + log_part * L`` with ``L = (q-1)/log q``."""

    rat_part: QRat = QRat()
    log_part: QRat = QRat()

    def __post_init__(self):
        object.__setattr__(self, "rat_part", QRat._coerce(self.rat_part))
        object.__setattr__(self, "log_part", QRat._coerce(self.log_part))

    def __add__(self, other):
        if not isinstance(other, LExt):
            other = LExt(other)
        return LExt(self.rat_part + other.rat_part, self.log_part + other.log_part)

    __radd__ = __add__

    def __neg__(self):
        return LExt(-self.rat_part, -self.log_part)

    def __sub__(self, other):
        if not isinstance(other, LExt):
            other = LExt(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LExt):
            raise TypeError("product of two L-extension elements is not supported")
        other = QRat._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LExt(self.rat_part * other, self.log_part * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / QRat._coerce(other))

    def is_zero(self) -> bool:
        return self.rat_part.is_zero() and self.log_part.is_zero()

    def is_rational(self) -> bool:
        return self.log_part.is_zero()

    def __str__(self):
        return f"rat: {self.rat_part}, log: {self.log_part}"


L = LExt(QRat(0), QRat(1))


class BetaCache:
    """Write-once table of q-Bernoulli numbers from the umbral recurrence.

    Entries are filled in index order under a lock; once stored they are
    never replaced, so readers need no synchronisation.
    """

    def __init__(self):
        self.memo: List[LExt] = [L]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self.memo)

    def get(self, n: int) -> LExt:
        if n < 0:
            raise ValueError("n must be >= 0")
        memo = self.memo
        if n < len(memo):
            return memo[n]
        with self._lock:
            while len(memo) <= n:
                memo.append(self._next(len(memo)))
        return memo[n]

    def _next(self, k: int) -> LExt:
        # (q*beta + 1)^k - beta_k = [k == 1], solved for beta_k
        acc = LExt(QRat(1 if k == 1 else 0))
        for j in range(k):
            acc = acc - self.memo[j] * QPoly.monomial(j, comb(k, j))
        return acc * QRat(ONE, QPoly.monomial(k) - 1)


_CACHE = BetaCache()


def beta_recurrence(n: int) -> LExt:
    """``beta_n`` from ``beta_0 = L`` and ``(q beta + 1)^k - beta_k = delta_{k,1}``."""
    return _CACHE.get(n)


def beta_explicit(n: int) -> LExt:
    """``beta_n`` from the closed sum
    ``(1-q)^-n * sum_k C(n,k) (-1)^k k/[k]_q``.

    The ``k = 0`` summand ``0/[0]_q`` is read as its limit in ``k``, which is
    ``L`` itself.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    s = QRat()
    for k in range(1, n + 1):
        s = s + QRat(QPoly.const(comb(n, k) * (-1) ** k * k), q_integer(k))
    scale = QRat(ONE, (1 - q) ** n)
    return LExt(s * scale, scale)


def _check_arg(n: int, x: int):
    if n < 0 or x < 0:
        raise ValueError("n and x must be nonnegative integers")


def beta_poly(n: int, x: int) -> LExt:
    """``beta_n(x) = sum_j C(n,j) q**(j x) beta_j [x]_q**(n-j)`` at integer x."""
    _check_arg(n, x)
    total = LExt()
    for j in range(n + 1):
        coeff = QPoly.monomial(j * x, comb(n, j)) * q_integer_power(x, n - j)
        if coeff:
            total = total + beta_recurrence(j) * coeff
    return total


def beta_poly_alt(n: int, x: int) -> LExt:
    """``beta_n(x)`` with ``q**(k x)`` expanded as ``(1 + (q-1)[x]_q)**k``."""
    _check_arg(n, x)
    total = LExt()
    for k in range(n + 1):
        inner = QPoly()
        for l in range(k + 1):
            inner = inner + q_integer_power(x, l) * ((q - 1) ** l) * comb(k, l)
        coeff = q_integer_power(x, n - k) * inner * comb(n, k)
        if coeff:
            total = total + beta_recurrence(k) * coeff
    return total


def beta_difference(n: int, k: int) -> LExt:
    """``beta_n(k) - beta_n``, which should be ``n * S_{n-1}(k)``; raises
    :class:`IdentityError` if the ``L`` parts fail to cancel."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    d = beta_poly(n, k) - beta_recurrence(n)
    if not d.is_rational():
        raise IdentityError("L-cancellation failed")
    return d


def classical_bernoulli(n: int) -> Fraction:
    """Classical ``B_n`` (``B_1 = -1/2``) from ``sum_{j<=n} C(n+1,j) B_j = 0``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum((comb(m + 1, j) * b[j] for j in range(m)), Fraction(0)) / (m + 1))
    return b[n]


def beta_classical_limit(n: int, order_hint: int = 4, cap: int | None = None) -> Fraction:
    """``lim_{q->1} beta_n``."""
    kwargs = {} if cap is None else {"cap": cap}
    return limit_at_1(beta_recurrence(n), max(order_hint, n + 2), **kwargs)
