"""
Command-line interface.

    qfaulhaber bernoulli --n N [--format plain|csv|latex]
    qfaulhaber powersum  --n N --k K [--method ...] [--eval-q P/R] [--format ...]
    qfaulhaber limit     --n N
    qfaulhaber tail      --n N --q P/R [--tolerance T] [--max-terms M]
    qfaulhaber verify    [--max-n N] [--max-k K]

Exit codes: 0 success, 1 verification or convergence failure, 2 usage error.
q-Bernoulli numbers print as ``rat: A, log: B`` meaning ``A + B*L`` with
``L = (q-1)/log q``.  The environment variable ``QF_SERIES_ORDER_CAP`` sets
the largest series order tried when taking limits at q = 1 (default 64).
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .algebra import DEFAULT_ORDER_CAP, IdentityError, SeriesError
from .bernoulli import (
    beta_classical_limit,
    beta_difference,
    beta_explicit,
    beta_poly,
    beta_poly_alt,
    beta_recurrence,
)
from .faulhaber import (
    SumMethod,
    bernoulli_closed_form_rhs,
    powersum,
    powersum_via_beta_diff,
)
from .qsums import (
    power_sum_oracle,
    powersum_infinite,
    powersum_partial,
    powersum_via_recurrence,
    q_integer,
    square_sum_limit_closed_form,
    telescoping_identity_lhs,
)
from .render import (
    format_decimal,
    format_rational,
    poly_csv,
    poly_latex,
    poly_plain,
    rat_latex,
    rat_plain,
)

DECIMAL_DIGITS = 50
_RATIONAL = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/r``; decimals are rejected rather than rounded."""
    m = _RATIONAL.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected an exact rational p/r, got {text!r}")
    den = int(m.group(2) or 1)
    if den == 0:
        raise argparse.ArgumentTypeError("zero denominator")
    return Fraction(int(m.group(1)), den)


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def _pos_int(text: str) -> int:
    v = _nonneg_int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _tolerance(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid tolerance {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def series_order_cap() -> int:
    raw = os.environ.get("QF_SERIES_ORDER_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap < 1:
        raise UsageError(f"QF_SERIES_ORDER_CAP must be a positive integer, got {raw!r}")
    return cap


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_bernoulli(args) -> Tuple[int, str]:
    b = beta_recurrence(args.n)
    fmt = args.format
    if fmt == "plain":
        out = f"rat: {rat_plain(b.rat_part)}, log: {rat_plain(b.log_part)}"
    elif fmt == "csv":
        rows = [b.rat_part.num, b.rat_part.den, b.log_part.num, b.log_part.den]
        out = "\n".join(poly_csv(p) for p in rows)
    else:
        out = f"\\left({rat_latex(b.rat_part)},\\ {rat_latex(b.log_part)}\\right)"
    return 0, out


def cmd_powersum(args) -> Tuple[int, str]:
    p = powersum(args.n, args.k, SumMethod(args.method))
    if args.eval_q is not None:
        return 0, format_rational(p(args.eval_q))
    render = {"plain": poly_plain, "csv": poly_csv, "latex": poly_latex}[args.format]
    return 0, render(p)


def cmd_limit(args) -> Tuple[int, str]:
    return 0, format_rational(beta_classical_limit(args.n, cap=series_order_cap()))


def cmd_tail(args) -> Tuple[int, str]:
    n, x = args.n, args.q
    if abs(x) >= 1:
        raise UsageError("divergent series: need |q| < 1")
    exact = powersum_infinite(n, x)
    partial = powersum_partial(n, x, args.max_terms)
    gap = abs(exact - partial)
    lines = [
        f"n: {n}",
        f"q: {format_rational(x)}",
        f"closed form: {format_rational(exact)}",
        f"closed form (decimal): {format_decimal(exact, DECIMAL_DIGITS)}",
    ]
    status = 0
    if n == 2:
        shifted = x * exact
        rhs = square_sum_limit_closed_form(x)
        lines += [
            f"q * closed form: {format_rational(shifted)}",
            f"k -> infinity limit of the n=2 closed form: {format_rational(rhs)}",
            f"agree: {'yes' if shifted == rhs else 'no'}",
        ]
        if shifted != rhs:
            status = 1
    lines += [
        f"terms: {args.max_terms}",
        f"partial sum (decimal): {format_decimal(partial, DECIMAL_DIGITS)}",
        f"gap (decimal): {format_decimal(gap, DECIMAL_DIGITS)}",
        f"tolerance: {format_decimal(args.tolerance, DECIMAL_DIGITS)}",
    ]
    if gap > args.tolerance:
        lines.append("converged: no")
        status = 1
    else:
        lines.append("converged: yes")
    return status, "\n".join(lines)


Case = Tuple[Tuple[str, int], ...]


def _grid(**ranges: Iterable[int]) -> List[Case]:
    cases: List[Case] = [()]
    for name, values in ranges.items():
        cases = [c + ((name, v),) for c in cases for v in values]
    return cases


def verification_suites(max_n: int, max_k: int, flipped_sign: bool = False):
    """(name, cases, check) triples; ``check(**case)`` returns True on success."""
    ns0 = range(0, max_n + 1)
    ns1 = range(1, max_n + 1)
    ks = range(1, max_k + 1)
    xs = range(0, max_k + 1)

    def closed_form(n, k):
        v = bernoulli_closed_form_rhs(n, k, flipped_sign=flipped_sign)
        return (v.is_rational() and v.rat_part.is_poly()
                and v.rat_part.num == power_sum_oracle(n, k))

    return [
        ("telescoping", _grid(n=ns1, k=ks),
         lambda n, k: telescoping_identity_lhs(n, k) == q_integer(k) ** n),
        ("recurrence", _grid(n=ns0, k=ks),
         lambda n, k: powersum_via_recurrence(n, k) == power_sum_oracle(n, k)),
        ("beta-routes", _grid(n=ns0),
         lambda n: beta_recurrence(n) == beta_explicit(n)),
        ("beta-difference", _grid(n=ns1, k=ks),
         lambda n, k: beta_difference(n, k).rat_part == power_sum_oracle(n - 1, k) * n),
        ("closed-form", _grid(n=ns0, k=ks), closed_form),
        ("beta-poly-expansion", _grid(n=ns0, x=xs),
         lambda n, x: beta_poly_alt(n, x) == beta_poly(n, x)),
        ("beta-diff-sum", _grid(n=ns0, k=ks),
         lambda n, k: powersum_via_beta_diff(n, k) == power_sum_oracle(n, k)),
    ]


def _run_case(check: Callable[..., bool], case: Case) -> bool:
    try:
        return bool(check(**dict(case)))
    except IdentityError:
        return False


def cmd_verify(args) -> Tuple[int, str]:
    lines = []
    status = 0
    for name, cases, check in verification_suites(args.max_n, args.max_k, args.flipped_sign):
        failed = [c for c in cases if not _run_case(check, c)]
        if failed:
            status = 1
            lines.append(f"{name:<20} FAIL ({len(failed)}/{len(cases)} cases)")
            for c in failed:
                lines.append("    at " + " ".join(f"{k}={v}" for k, v in c))
        else:
            lines.append(f"{name:<20} PASS ({len(cases)} cases)")
    lines.append("all identities hold" if status == 0 else "verification failed")
    return status, "\n".join(lines)


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfaulhaber",
        description="Exact q-Bernoulli numbers and sums of powers of q-integers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ["plain", "csv", "latex"]

    p = sub.add_parser("bernoulli", help="q-Bernoulli number as rat + log*L, L = (q-1)/log q")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--format", choices=formats, default="plain")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("powersum", help="sum_{l<k} q^l [l]_q^n as a polynomial in q")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--k", type=_pos_int, required=True)
    p.add_argument("--method", choices=[m.value for m in SumMethod], default="bernoulli")
    p.add_argument("--eval-q", type=parse_rational, default=None, metavar="P/R")
    p.add_argument("--format", choices=formats, default="plain")
    p.set_defaults(func=cmd_powersum)

    p = sub.add_parser("limit", help="q -> 1 limit of the n-th q-Bernoulli number")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("tail", help="infinite sum for |q| < 1 against its partial sums")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--q", type=parse_rational, required=True, metavar="P/R")
    p.add_argument("--tolerance", type=_tolerance, default=Fraction(1, 10 ** 9))
    p.add_argument("--max-terms", type=_pos_int, default=500)
    p.set_defaults(func=cmd_tail)

    p = sub.add_parser("verify", help="check every identity on a grid of (n, k)")
    p.add_argument("--max-n", type=_nonneg_int, default=8)
    p.add_argument("--max-k", type=_pos_int, default=12)
    p.add_argument("--flipped-sign", action="store_true",
                   help="use 1 - q^((n+1)k) in the last closed-form term (expected to fail)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, out = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (SeriesError, IdentityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
