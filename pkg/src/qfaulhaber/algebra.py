"""
Exact polynomial, rational-function and truncated-series arithmetic in q.

All coefficients are :class:`fractions.Fraction`.  Polynomials are dense
tuples indexed by exponent; rational functions are kept in a canonical
reduced form (coprime numerator and denominator, monic denominator) so that
equality is structural.  Limits at ``q = 1`` go through Laurent expansions
in ``eps = q - 1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Sequence, Union

__all__ = [
    "QPoly",
    "QRat",
    "EpsSeries",
    "IdentityError",
    "SeriesError",
    "OrderTooSmall",
    "PoleAtOne",
    "OrderCapExceeded",
    "DEFAULT_ORDER_CAP",
    "q",
    "qrat_normalize",
    "subst_power",
    "laurent_at_1",
    "l_series",
    "limit_at_1",
]

DEFAULT_ORDER_CAP = 64


class IdentityError(ArithmeticError):
    """An identity that must hold exactly came out wrong."""


class SeriesError(ArithmeticError):
    pass


class OrderTooSmall(SeriesError):
    pass


class PoleAtOne(SeriesError):
    pass


class OrderCapExceeded(SeriesError):
    pass


Scalar = Union[int, Fraction]


def _strip(c: list) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _scaled_ints(coeffs: tuple):
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = _lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


# --------------------------------------------------------------------------
# polynomials
# --------------------------------------------------------------------------


class QPoly:
    """Dense polynomial in q with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``; trailing zeros are never
    stored, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _strip([Fraction(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs: tuple) -> "QPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def const(cls, c: Scalar) -> "QPoly":
        return cls._raw((Fraction(c),)) if c else ZERO

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> "QPoly":
        if not c:
            return ZERO
        return cls._raw((Fraction(0),) * e + (Fraction(c),))

    # -- basic properties
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == QPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __repr__(self):
        return f"QPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        from .render import poly_plain

        return poly_plain(self)

    # -- arithmetic
    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, x in enumerate(b):
            c[i] += x
        return QPoly._raw(_strip(c))

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return QPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        # convolve integers over a common denominator; Fraction per term is slow
        a, da = _scaled_ints(self.coeffs)
        b, db = _scaled_ints(other.coeffs)
        c = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    c[i + j] += x * y
        d = da * db
        return QPoly._raw(tuple(Fraction(x, d) for x in c))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "QPoly"):
        other = QPoly._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        inv = 1 / other.lc
        bc = other.coeffs
        if len(r) - 1 < db:
            return ZERO, self
        quo = [Fraction(0)] * (len(r) - db)
        for i in range(len(r) - 1 - db, -1, -1):
            t = r[i + db] * inv
            quo[i] = t
            if t:
                for j in range(db + 1):
                    r[i + j] -= t * bc[j]
        return QPoly._raw(_strip(quo)), QPoly._raw(_strip(r[:db]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "QPoly") -> "QPoly":
        quo, rem = divmod(self, other)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        return quo

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if self.coeffs else Fraction(0)

    evaluate = __call__

    def monic(self) -> "QPoly":
        if not self.coeffs:
            return self
        return self * (1 / self.lc)

    def subst_power(self, m: int) -> "QPoly":
        """p(q**m)."""
        if m < 1:
            raise ValueError("substitution power must be >= 1")
        if m == 1 or len(self.coeffs) <= 1:
            return self
        c = [Fraction(0)] * (m * (len(self.coeffs) - 1) + 1)
        for i, x in enumerate(self.coeffs):
            c[m * i] = x
        return QPoly._raw(tuple(c))

    def shift_at_1(self) -> "QPoly":
        """Coefficients of p(1 + eps) as a polynomial in eps."""
        a = self.coeffs
        return QPoly._raw(
            _strip([sum((comb(i, j) * a[i] for i in range(j, len(a))), Fraction(0))
                    for j in range(len(a))])
        )

    def valuation(self) -> int:
        """Lowest exponent carrying a nonzero coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("valuation of zero polynomial")

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


ZERO = QPoly._raw(())
ONE = QPoly._raw((Fraction(1),))
q = QPoly._raw((Fraction(0), Fraction(1)))


def _primitive_int(p: QPoly) -> list:
    den = 1
    for c in p.coeffs:
        den = _lcm(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]


def _prem(a: list, b: list) -> list:
    # pseudo-remainder of integer polynomials, lc(b)**(da-db+1) * a mod b
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        t = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= t * b[j]
        while r and not r[-1]:
            r.pop()
    return r


def _prim(r: list) -> list:
    g = 0
    for x in r:
        g = gcd(g, x)
    if r[-1] < 0:
        g = -g
    return [x // g for x in r]


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd over Q, by the primitive pseudo-remainder sequence."""
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    if a.is_const() or b.is_const():
        return ONE
    x, y = _primitive_int(a), _primitive_int(b)
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _prem(x, y)
        x, y = y, (_prim(r) if r else r)
    return QPoly(x).monic()


# --------------------------------------------------------------------------
# rational functions
# --------------------------------------------------------------------------


class QRat:
    """Element of Q(q) in canonical form.

    Numerator and denominator are coprime and the denominator is monic, so
    two equal rational functions always have identical ``num`` and ``den``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = QPoly._coerce(num)
        den = QPoly._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("QRat parts must be polynomials or rationals")
        n, d = _normalize(num, den)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @classmethod
    def _raw(cls, num: QPoly, den: QPoly) -> "QRat":
        r = object.__new__(cls)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        return r

    def __setattr__(self, name, value):
        raise AttributeError("QRat is immutable")

    @staticmethod
    def _coerce(other) -> "QRat":
        if isinstance(other, QRat):
            return other
        if isinstance(other, QPoly):
            return QRat._raw(other, ONE)
        if isinstance(other, (int, Fraction)):
            return QRat._raw(QPoly.const(other), ONE)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.num

    def is_poly(self) -> bool:
        return self.den == ONE

    def to_poly(self) -> QPoly:
        if not self.is_poly():
            raise ArithmeticError("rational function has a nontrivial denominator")
        return self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = QRat._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("QRat", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"QRat({self.num!r}, {self.den!r})"

    def __str__(self):
        from .render import rat_plain

        return rat_plain(self)

    def __add__(self, other):
        other = QRat._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den == ONE:
                return QRat._raw(self.num + other.num, ONE)
            return QRat(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g == ONE:
            return QRat(self.num * other.den + other.num * self.den,
                        self.den * other.den)
        b1 = self.den.exact_div(g)
        d1 = other.den.exact_div(g)
        n = self.num * d1 + other.num * b1
        if not n:
            return QRat._raw(ZERO, ONE)
        # only g can still share factors with n
        return QRat(n, b1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(-self.num, self.den)

    def __sub__(self, other):
        other = QRat._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return QRat._raw(ZERO, ONE)
            return QRat._raw(self.num * Fraction(other), self.den)
        other = QRat._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return QRat._raw(ZERO, ONE)
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n = self.num.exact_div(g1) * other.num.exact_div(g2)
        d = self.den.exact_div(g2) * other.den.exact_div(g1)
        inv = 1 / d.lc
        return QRat._raw(n * inv, d * inv)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if not self.num:
            raise ZeroDivisionError("division by zero polynomial")
        inv = 1 / self.num.lc
        return QRat._raw(self.den * inv, self.num * inv)

    def __truediv__(self, other):
        other = QRat._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QRat._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return QRat._raw(self.num ** e, self.den ** e)

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(x) / d

    evaluate = __call__


def _normalize(num: QPoly, den: QPoly):
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    if not num:
        return ZERO, ONE
    g = poly_gcd(num, den)
    if g != ONE:
        num = num.exact_div(g)
        den = den.exact_div(g)
    inv = 1 / den.lc
    return num * inv, den * inv


def qrat_normalize(num: QPoly, den: QPoly) -> QRat:
    """Canonical reduced form of ``num/den``."""
    return QRat(num, den)


def subst_power(f, m: int):
    """Base change ``f(q) -> f(q**m)``.

    Coprimality survives the substitution, so the result is already canonical.
    """
    if m < 1:
        raise ValueError("substitution power must be >= 1")
    if isinstance(f, QPoly):
        return f.subst_power(m)
    f = QRat._coerce(f)
    return QRat._raw(f.num.subst_power(m), f.den.subst_power(m))


# --------------------------------------------------------------------------
# truncated Laurent series in eps = q - 1
# --------------------------------------------------------------------------


class EpsSeries:
    """Truncated Laurent series ``sum c[i] eps**(offset+i) + O(eps**order)``.

    The leading stored coefficient is nonzero; the zero series has no
    coefficients and ``offset == order``.
    """

    __slots__ = ("offset", "coeffs", "order")

    def __init__(self, offset: int, coeffs: Sequence[Scalar], order: int):
        c = [Fraction(x) for x in coeffs[: max(order - offset, 0)]]
        lead = 0
        while lead < len(c) and not c[lead]:
            lead += 1
        c = c[lead:]
        offset += lead
        while c and not c[-1]:
            c.pop()
        if not c:
            offset = order
        self.offset = offset
        self.coeffs = tuple(c)
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "EpsSeries":
        return cls(order, (), order)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, e: int) -> Fraction:
        """Coefficient of ``eps**e``; only meaningful below ``order``."""
        if e >= self.order:
            raise OrderTooSmall(f"coefficient eps^{e} is beyond the truncation order {self.order}")
        i = e - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, EpsSeries):
            return NotImplemented
        return (self.offset, self.coeffs, self.order) == (other.offset, other.coeffs, other.order)

    def __hash__(self):
        return hash((self.offset, self.coeffs, self.order))

    def __repr__(self):
        terms = " + ".join(f"({c})*eps^{self.offset + i}"
                           for i, c in enumerate(self.coeffs) if c)
        return f"EpsSeries({terms or '0'} + O(eps^{self.order}))"

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = EpsSeries(0, [other], self.order)
        order = min(self.order, other.order)
        lo = min(self.offset, other.offset)
        c = [Fraction(0)] * max(order - lo, 0)
        for s in (self, other):
            for i, x in enumerate(s.coeffs):
                e = s.offset + i
                if e < order:
                    c[e - lo] += x
        return EpsSeries(lo, c, order)

    __radd__ = __add__

    def __neg__(self):
        return EpsSeries(self.offset, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return EpsSeries.zero(self.order)
            return EpsSeries(self.offset, [c * other for c in self.coeffs], self.order)
        order = min(self.offset + other.order, other.offset + self.order)
        lo = self.offset + other.offset
        n = max(order - lo, 0)
        c = [Fraction(0)] * n
        for i, x in enumerate(self.coeffs):
            if i >= n:
                break
            for j, y in enumerate(other.coeffs):
                if i + j >= n:
                    break
                c[i + j] += x * y
        return EpsSeries(lo, c, order)

    __rmul__ = __mul__


def _series_div(num: tuple, den: tuple, n: int) -> list:
    # first n coefficients of num/den as power series, den[0] != 0
    out = []
    inv = 1 / den[0]
    for i in range(n):
        acc = num[i] if i < len(num) else Fraction(0)
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out.append(acc * inv)
    return out


def _expand(f: QRat, order: int) -> EpsSeries:
    """Like :func:`laurent_at_1` but a high-order zero truncates to the zero series."""
    if not f.num:
        return EpsSeries.zero(order)
    n = f.num.shift_at_1()
    d = f.den.shift_at_1()
    vn, vd = n.valuation(), d.valuation()
    offset = vn - vd
    if offset >= order:
        return EpsSeries.zero(order)
    coeffs = _series_div(n.coeffs[vn:], d.coeffs[vd:], order - offset)
    return EpsSeries(offset, coeffs, order)


def laurent_at_1(f, order: int) -> EpsSeries:
    """Laurent expansion of ``f`` about ``q = 1`` up to ``O(eps**order)``.

    >>> laurent_at_1(QRat(1 + q + q**2), 3)
    EpsSeries((3)*eps^0 + (3)*eps^1 + (1)*eps^2 + O(eps^3))
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    f = QRat._coerce(f)
    s = _expand(f, order)
    if f.num and s.is_zero():
        raise OrderTooSmall("order too small")
    return s


@lru_cache(maxsize=None)
def l_series(order: int) -> EpsSeries:
    """Expansion of ``L = (q-1)/log q`` about ``q = 1``: ``eps/log(1+eps)``.

    The coefficients are the Gregory coefficients 1, 1/2, -1/12, 1/24, ...
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    log_over_eps = tuple(Fraction((-1) ** i, i + 1) for i in range(order))
    return EpsSeries(0, _series_div((Fraction(1),), log_over_eps, order), order)


def limit_at_1(x, order_hint: int = 4, cap: int = DEFAULT_ORDER_CAP) -> Fraction:
    """Exact value of ``lim_{q -> 1} x``.

    ``x`` is a :class:`QRat`/:class:`QPoly`/rational or anything with
    ``rat_part`` and ``log_part`` attributes, read as ``rat_part +
    log_part * L``.  The truncation order starts at ``max(4, order_hint)``
    and doubles up to ``cap`` until the constant term is determined.
    """
    if hasattr(x, "log_part"):
        a, b = QRat._coerce(x.rat_part), QRat._coerce(x.log_part)
    else:
        a, b = QRat._coerce(x), QRat._raw(ZERO, ONE)
    order = min(max(4, order_hint), cap)
    while True:
        s = _expand(a, order)
        if b.num:
            s = s + _expand(b, order) * l_series(order)
        if s.order >= 1:
            for e in range(s.offset, 0):
                if s[e]:
                    raise PoleAtOne("pole at q=1")
            return s[0]
        if order >= cap:
            raise OrderCapExceeded(f"order cap {cap} reached before the limit was resolved")
        order = min(2 * order, cap)
