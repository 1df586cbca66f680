"""
Text renderings of polynomials and rational functions in q.

Three formats: ``plain`` (e.g. ``1 + q + 2q^3``), ``csv`` (one row of
ascending coefficients per polynomial) and ``latex``.  Plain and csv output
parse back with :func:`parse_poly` / :func:`parse_csv_row`.

Terms are written in ascending exponent order.  A negative constant term is
moved to the end when some other term is positive, so ``-1 + q`` reads
``q - 1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List

from .algebra import QPoly, QRat

__all__ = [
    "poly_plain",
    "poly_csv",
    "poly_latex",
    "rat_plain",
    "rat_latex",
    "parse_poly",
    "parse_csv_row",
    "format_rational",
    "format_decimal",
]


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_decimal(x: Fraction, digits: int = 50) -> str:
    """Fixed-point rendering truncated (toward zero) to ``digits`` decimals."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    scaled = abs(x.numerator) * 10 ** digits // x.denominator
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def _term_order(p: QPoly) -> List[int]:
    idx = [i for i, c in enumerate(p.coeffs) if c]
    if idx and idx[0] == 0 and p.coeffs[0] < 0 and any(p.coeffs[i] > 0 for i in idx[1:]):
        idx = idx[1:] + [0]
    return idx


def _plain_term(c: Fraction, e: int) -> str:
    # c > 0
    if e == 0:
        return format_rational(c)
    mono = "q" if e == 1 else f"q^{e}"
    if c == 1:
        return mono
    if c.denominator == 1:
        return f"{c.numerator}{mono}"
    return f"({c.numerator}/{c.denominator}){mono}"


def poly_plain(p: QPoly) -> str:
    if not p:
        return "0"
    out = []
    for e in _term_order(p):
        c = p.coeffs[e]
        t = _plain_term(abs(c), e)
        if not out:
            out.append(t if c > 0 else "-" + t)
        else:
            out.append(("+ " if c > 0 else "- ") + t)
    return " ".join(out)


def poly_csv(p: QPoly) -> str:
    if not p:
        return "0"
    return ",".join(format_rational(c) for c in p.coeffs)


def _latex_term(c: Fraction, e: int) -> str:
    mono = "" if e == 0 else ("q" if e == 1 else f"q^{{{e}}}")
    if c == 1 and e:
        return mono
    if c.denominator == 1:
        return f"{c.numerator}{mono}"
    return f"\\frac{{{c.numerator}}}{{{c.denominator}}}{mono}"


def poly_latex(p: QPoly) -> str:
    if not p:
        return "0"
    out = []
    for e in _term_order(p):
        c = p.coeffs[e]
        t = _latex_term(abs(c), e)
        if not out:
            out.append(t if c > 0 else "-" + t)
        else:
            out.append(("+ " if c > 0 else "- ") + t)
    return " ".join(out)


def _single_integer_term(p: QPoly) -> bool:
    nz = [c for c in p.coeffs if c]
    return len(nz) == 1 and nz[0].denominator == 1


def rat_plain(f: QRat) -> str:
    num = poly_plain(f.num)
    if f.is_poly():
        return num
    if not _single_integer_term(f.num):
        num = f"({num})"
    den = poly_plain(f.den)
    if len([c for c in f.den.coeffs if c]) > 1:
        den = f"({den})"
    return f"{num}/{den}"


def rat_latex(f: QRat) -> str:
    if f.is_poly():
        return poly_latex(f.num)
    num = poly_latex(f.num)
    sign = ""
    if num.startswith("-") and len([c for c in f.num.coeffs if c]) == 1:
        sign, num = "-", num[1:]
    return f"{sign}\\frac{{{num}}}{{{poly_latex(f.den)}}}"


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<pcoef>\((?P<pn>\d+)/(?P<pd>\d+)\))?(?P<q1>q(?:\^(?P<e1>\d+))?)
          | (?P<coef>\d+)(?:/(?P<cd>\d+)|(?P<q2>q(?:\^(?P<e2>\d+))?))?
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> QPoly:
    """Inverse of :func:`poly_plain`; terms may come in any order."""
    text = text.strip()
    if text == "0":
        return QPoly()
    pos, first = 0, True
    acc: dict = {}
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (not first and not m.group("sign")):
            raise ValueError(f"cannot parse polynomial: {text!r}")
        first = False
        pos = m.end()
        sgn = -1 if m.group("sign") == "-" else 1
        if m.group("q1"):
            c = Fraction(int(m.group("pn")), int(m.group("pd"))) if m.group("pcoef") else Fraction(1)
            e = int(m.group("e1") or 1)
        else:
            c = Fraction(int(m.group("coef")), int(m.group("cd") or 1))
            e = int(m.group("e2") or 1) if m.group("q2") else 0
        acc[e] = acc.get(e, 0) + sgn * c
    if not acc:
        raise ValueError(f"cannot parse polynomial: {text!r}")
    coeffs = [Fraction(0)] * (max(acc) + 1)
    for e, c in acc.items():
        coeffs[e] = c
    return QPoly(coeffs)


def parse_csv_row(row: str) -> QPoly:
    return QPoly(Fraction(cell) for cell in row.strip().split(","))

