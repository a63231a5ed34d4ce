"""Exact arithmetic primitives.

Rationals are :class:`fractions.Fraction`.  Polynomials in ``t`` are tuples of
Fractions, lowest power first, with trailing zeros trimmed; the zero
polynomial is the empty tuple and has degree ``-1``.
"""
from __future__ import annotations

import math
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence, Union

from .errors import NotDivisible

Rational = Union[int, Fraction]
Poly = tuple  # tuple[Fraction, ...]

DEFAULT_DIGITS = 6


# -- rationals ---------------------------------------------------------------

def to_fraction(value) -> Fraction:
    """Coerce int, Fraction or a ``"p/q"`` string to a Fraction (never floats)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(q: Rational) -> str:
    """Canonical ``"p/q"`` form, or ``"p"`` when the denominator is 1."""
    q = to_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_decimal(q: Rational, digits: int = DEFAULT_DIGITS) -> str:
    """Round to ``digits`` places (half-even) and strip trailing zeros.

    >>> format_decimal(Fraction(875, 8))
    '109.375'
    >>> format_decimal(Fraction(3125, 24))
    '130.208333'
    """
    q = to_fraction(q)
    with localcontext() as ctx:
        ctx.prec = max(50, len(str(abs(q.numerator))) + digits + 10)
        value = Decimal(q.numerator) / Decimal(q.denominator)
        value = value.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN)
    text = format(value, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("-0", ""):
        text = "0"
    return text


# -- symmetric functions -----------------------------------------------------

def elementary_symmetric(m: int, values: Sequence[int]) -> int:
    """Sum of products over all m-subsets of ``values``; 0 when m > len(values)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return sum(math.prod(c) for c in combinations(values, m))


@lru_cache(maxsize=None)
def nu(m: int, s: int, l: int) -> int:
    """Weight ``nu_m``: elementary symmetric polynomial of degree m in 1, ..., s+l-1."""
    if s < 1 or m < 0 or l < 0:
        raise ValueError(f"nu needs s >= 1 and m, l >= 0 (got m={m}, s={s}, l={l})")
    return elementary_symmetric(m, range(1, s + l))


def complete_homogeneous(r: int, values: Sequence[int]) -> int:
    """h_r(values): the sum of all monomials of degree r in ``values``."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    values = tuple(values)
    if not values:
        raise ValueError("values must be nonempty")
    return _complete_homogeneous(r, values)


@lru_cache(maxsize=4096)
def _complete_homogeneous(r: int, values: tuple) -> int:
    return sum(math.prod(c) for c in combinations_with_replacement(values, r))


# -- determinants ------------------------------------------------------------

def det_fraction_free(matrix: Sequence[Sequence[int]]) -> int:
    """Integer determinant by Bareiss elimination (every division is exact)."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def vandermonde_matrix(t: int, values: Sequence[int]) -> list[list[int]]:
    k = len(values)
    powers = list(range(k - 1)) + [k - 1 + t]
    return [[v ** p for v in values] for p in powers]


def vandermonde(t: int, values: Sequence[int]) -> int:
    """Generalized Vandermonde determinant whose last row is raised to ``k-1+t``.

    Computed both as a determinant and as ``prod(a_i - a_j) * h_t(values)``;
    the two must agree.
    """
    values = tuple(values)
    if not values:
        raise ValueError("values must be nonempty")
    if t < 0:
        raise ValueError("t must be nonnegative")
    det = det_fraction_free(vandermonde_matrix(t, values))
    diffs = math.prod(values[i] - values[j]
                      for i in range(len(values)) for j in range(i))
    factored = diffs * complete_homogeneous(t, values)
    if det != factored:
        raise ArithmeticError(f"determinant {det} != factored form {factored} for {values}")
    return det


# -- polynomials -------------------------------------------------------------

def poly(coeffs: Iterable) -> Poly:
    """Build a trimmed polynomial from coefficients (lowest power first)."""
    out = [to_fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_degree(p: Poly) -> int:
    return len(p) - 1


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def poly_pow(p: Poly, n: int) -> Poly:
    out = poly([1])
    for _ in range(n):
        out = poly_mul(out, p)
    return out


def poly_divmod(num: Poly, divisor: Poly) -> tuple[Poly, Poly]:
    if not divisor:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num)
    dd = len(divisor) - 1
    lead = divisor[-1]
    quot = [Fraction(0)] * max(len(rem) - dd, 0)
    for k in range(len(rem) - 1 - dd, -1, -1):
        c = rem[k + dd] / lead
        quot[k] = c
        if c:
            for i, b in enumerate(divisor):
                rem[k + i] -= c * b
    return poly(quot), poly(rem)


def poly_divide_exact(num: Poly, divisor: Poly) -> Poly:
    """Quotient of an exact division; :class:`NotDivisible` on nonzero remainder."""
    quot, rem = poly_divmod(poly(num), poly(divisor))
    if rem:
        raise NotDivisible(f"remainder {list(map(format_rational, rem))} is nonzero")
    return quot


def poly_eval(p: Poly, x: Rational) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p: Poly) -> Poly:
    return poly(i * c for i, c in enumerate(p) if i > 0)
