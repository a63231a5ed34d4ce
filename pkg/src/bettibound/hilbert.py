"""Hilbert coefficients of Betti tables.

Three independent routes are provided:

* power sums of the shifts (:func:`multiplicity_ps`, :func:`coefficient_nu`),
* the h-polynomial oracle (:func:`numerator`, :func:`h_polynomial`,
  :func:`coefficients_oracle`),
* closed forms for pure and symmetrized pure tables (:func:`e_l_pure`,
  :func:`e_l_symmetrized`), cross-checked against :func:`f_l`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from .betti import BettiTable, degree_sequence, dual_sequence
from .errors import BettiError, InvalidN, PSViolation
from .exact import (
    Poly,
    complete_homogeneous,
    format_rational,
    nu,
    poly,
    poly_divide_exact,
    poly_pow,
)

MAX_L = 6


@dataclass(frozen=True)
class HilbertData:
    numerator: Poly
    h_poly: Poly
    codim: int
    coefficients: tuple

    def to_json(self) -> dict:
        return {
            "numerator": [format_rational(c) for c in self.numerator],
            "h_poly": [format_rational(c) for c in self.h_poly],
            "codim": self.codim,
            "coefficients": [format_rational(c) for c in self.coefficients],
        }


# -- h-polynomial oracle -------------------------------------------------------

def numerator(table: BettiTable) -> Poly:
    """``K(t) = sum_i (-1)^i sum_j beta[i,j] t^j``."""
    if any(j < 0 for (_, j), _ in table):
        raise BettiError("numerator polynomial needs nonnegative internal degrees")
    top = max((j for (_, j), _ in table), default=-1)
    coeffs = [Fraction(0)] * (top + 1)
    for (i, j), v in table:
        coeffs[j] += -v if i % 2 else v
    return poly(coeffs)


def h_polynomial(K: Poly, s: int) -> Poly:
    """Q with ``K = (1 - t)^s Q``; raises NotDivisible otherwise."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    return poly_divide_exact(K, poly_pow(poly([1, -1]), s))


def coefficients_oracle(Q: Poly, L: int) -> tuple:
    """``e_l = Q^(l)(1) / l!`` for l = 0..L, i.e. ``sum_k C(k, l) q_k``."""
    if L < 0:
        raise ValueError("L must be nonnegative")
    return tuple(sum((math.comb(k, l) * q for k, q in enumerate(Q)), Fraction(0))
                 for l in range(L + 1))


def hilbert_data(table: BettiTable, s: Optional[int] = None, L: int = 2) -> HilbertData:
    s = table.length if s is None else s
    K = numerator(table)
    Q = h_polynomial(K, s)
    return HilbertData(K, Q, s, coefficients_oracle(Q, L))


# -- power sums ------------------------------------------------------------------

def power_sum(table: BettiTable, m: int) -> Fraction:
    """``sum_i (-1)^i sum_j beta[i,j] j^m``."""
    total = Fraction(0)
    for (i, j), v in table:
        term = v * j ** m
        total += -term if i % 2 else term
    return total


def check_power_sums(table: BettiTable, s: int) -> None:
    for t in range(s):
        value = power_sum(table, t)
        if value:
            raise PSViolation(t, format_rational(value), s)


def multiplicity_ps(table: BettiTable, s: int) -> Fraction:
    """Multiplicity from the power sum of degree s, after checking lower ones vanish."""
    check_power_sums(table, s)
    return (-1) ** s * power_sum(table, s) / math.factorial(s)


def coefficient_nu(table: BettiTable, s: int, l: int, max_l: int = MAX_L) -> Fraction:
    """Hilbert coefficient ``e_l`` from nu-weighted power sums of the shifts."""
    if not 0 <= l <= max_l:
        raise ValueError(f"l = {l} outside 0..{max_l}")
    check_power_sums(table, s)
    acc = sum(((-1) ** (l - r) * nu(l - r, s, l) * power_sum(table, s + r)
               for r in range(l + 1)), Fraction(0))
    return (-1) ** s * acc / math.factorial(s + l)


def coefficients_nu(table: BettiTable, s: int, L: int) -> tuple:
    return tuple(coefficient_nu(table, s, l, max_l=max(L, MAX_L)) for l in range(L + 1))


# -- pure and symmetrized pure tables --------------------------------------------

def f_l(y: Sequence[int], l: int) -> int:
    """Sum over ``1 <= i_1 <= ... <= i_l <= s`` of ``prod_t (y[i_t] - (i_t + t - 1))``."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    y = tuple(y)
    total = 0
    for idx in combinations_with_replacement(range(1, len(y) + 1), l):
        total += math.prod(y[i - 1] - (i + t) for t, i in enumerate(idx))
    return total


def _nu_weighted_h(d: Sequence[int], s: int, l: int) -> int:
    # Power sums of a pure table are h_r over all of d; d_0 = 0 drops out.
    return sum((-1) ** (l - r) * nu(l - r, s, l) * complete_homogeneous(r, d)
               for r in range(l + 1))


def e_l_pure(d: Sequence[int], l: int) -> Fraction:
    """``e_l`` of the pure table ``beta(d)``.

    When ``d_0 == 0`` the value is also checked against ``f_l(d_1..d_s)``.
    """
    d = degree_sequence(d)
    s = len(d) - 1
    value = _nu_weighted_h(d, s, l)
    if d[0] == 0 and l >= 1:
        f = f_l(d[1:], l)
        if f != value:
            raise ArithmeticError(f"nu-weighted sum {value} != f_{l} = {f} for {d}")
    return Fraction(value, math.factorial(s + l))


def e_l_symmetrized(d: Sequence[int], N: int, l: int) -> Fraction:
    """``e_l`` of ``beta(d) + beta(d^{v,N})``.

    For ``d_0 = 0`` and ``N = d_s`` the two-sum f_l form is used and checked
    against the sum of the two pure values; otherwise the pure values are
    summed directly.
    """
    d = degree_sequence(d)
    if N < d[0] + d[-1]:
        raise InvalidN(f"N = {N} < d_0 + d_s = {d[0] + d[-1]}")
    s = len(d) - 1
    dual = dual_sequence(d, N)
    by_parts = e_l_pure(d, l) + e_l_pure(dual, l)
    if d[0] == 0 and N == d[-1]:
        if l == 0:
            two_sum = Fraction(2, math.factorial(s))
        else:
            two_sum = Fraction(f_l(d[1:], l) + f_l(dual[1:], l), math.factorial(s + l))
        if two_sum != by_parts:
            raise ArithmeticError(f"two-sum form {two_sum} != {by_parts} for {d}, N={N}")
    return by_parts
