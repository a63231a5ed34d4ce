"""Upper bounds for Hilbert coefficients of self-dual (Gorenstein) tables.

The bound ingredients are the clipped shift sequence ("tilde"), its product
``psi``, the paired generator count ``b_d`` and the sums :func:`f_l`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .betti import (
    BettiTable,
    Shifts,
    degree_sequence,
    dual_sequence,
    is_dominated_by_dual,
    is_self_dual,
    min_max_shifts,
    pure_entries,
)
from .errors import (
    BettiError,
    HypothesisViolated,
    NotDominatedByDual,
    NotSelfDual,
    TopNotSymmetric,
)
from .exact import DEFAULT_DIGITS, format_decimal, format_rational
from .hilbert import coefficient_nu, f_l, multiplicity_ps


@dataclass(frozen=True)
class BoundReport:
    l: int
    e_value: Fraction
    bound: Fraction
    beta0: Fraction
    s: int
    shifts: Shifts
    tilde: tuple
    psi: int
    f_value: int
    factorial_of: int  # the bound divides by factorial(factorial_of)
    holds: bool
    conjectural: bool
    notes: tuple = field(default=())

    def to_json(self, digits: int = DEFAULT_DIGITS) -> dict:
        return {
            "l": self.l,
            "e": format_rational(self.e_value),
            "e_decimal": format_decimal(self.e_value, digits),
            "bound": format_rational(self.bound),
            "decimal": format_decimal(self.bound, digits),
            "holds": self.holds,
            "conjectural": self.conjectural,
            "notes": list(self.notes),
            "inputs": {
                "beta0": format_rational(self.beta0),
                "s": self.s,
                "psi": self.psi,
                "f": self.f_value,
                "factorial_of": self.factorial_of,
            },
            "provenance": {
                "t": list(self.shifts.t),
                "T": list(self.shifts.T),
                "tilde": list(self.tilde),
            },
        }


# -- bound ingredients -----------------------------------------------------------

def tilde_of_shifts(shifts: Shifts, s: Optional[int] = None) -> tuple:
    """Clip the shifts: ``min(T_i, floor(t_s/2))`` for i <= s//2, ``max(t_i, ceil(t_s/2))`` after."""
    s = shifts.s if s is None else s
    t, T = shifts.t, shifts.T
    if t[s] != T[s]:
        raise TopNotSymmetric(f"t_s = {t[s]} differs from T_s = {T[s]}")
    top = t[s]
    k = s // 2
    lo, hi = top // 2, -(-top // 2)
    return tuple(min(T[i], lo) if i <= k else max(t[i], hi) for i in range(1, s + 1))


def tilde_of_sequence(d: Sequence[int]) -> tuple:
    """Clip a degree sequence with ``d_0 = 0``: ``d_s - d_{s-i}`` below the middle, ``d_i`` above."""
    d = _dominated(d)
    s, top = len(d) - 1, d[-1]
    k = s // 2
    lo, hi = top // 2, -(-top // 2)
    return tuple(min(top - d[s - i], lo) if i <= k else max(d[i], hi)
                 for i in range(1, s + 1))


def psi(tilde: Sequence[int]) -> int:
    return math.prod(tilde)


def b_d(d: Sequence[int]) -> Fraction:
    """``beta_0(d) + beta_0(d^{v,d_s})``."""
    d = _dominated(d)
    return pure_entries(d)[0] + pure_entries(dual_sequence(d, d[-1]))[0]


def _dominated(d: Sequence[int]) -> tuple:
    d = degree_sequence(d)
    if d[0] != 0:
        raise BettiError(f"{d} must start at 0")
    if not is_dominated_by_dual(d):
        raise NotDominatedByDual(f"{d} has d_i + d_(s-i) > d_s")
    return d


# -- bounds on tables ------------------------------------------------------------

def _gorenstein_inputs(table: BettiTable):
    sd = is_self_dual(table)
    if sd is None:
        raise NotSelfDual("bounds need an (s, N)-self-dual table")
    s, _ = sd
    col0 = table.column(0)
    if set(col0) != {0}:
        raise BettiError(f"generators must sit in degree 0 (column 0 degrees {sorted(col0)})")
    shifts = min_max_shifts(table)
    return s, col0[0], shifts, tilde_of_shifts(shifts, s)


def bound_e0(table: BettiTable) -> BoundReport:
    """Multiplicity bound ``beta_0 * psi / s!``."""
    s, beta0, shifts, tilde = _gorenstein_inputs(table)
    p = psi(tilde)
    bound = beta0 * p / math.factorial(s)
    e0 = multiplicity_ps(table, s)
    return BoundReport(0, e0, bound, beta0, s, shifts, tilde, p, 1, s,
                       e0 <= bound, False)


def bound_ej(table: BettiTable, j: int, reference_f: Optional[int] = None) -> BoundReport:
    """Bound ``beta_0 * psi * f_j(tilde) / (s+1)!`` on ``e_j``.

    Proved for j = 1; for j >= 2 the report is flagged conjectural.
    ``reference_f`` is an externally quoted value of ``f_j(tilde)``; when it
    differs from the computed one, the report carries a note with both and
    the bound that value would give.
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    s, beta0, shifts, tilde = _gorenstein_inputs(table)
    p = psi(tilde)
    f = f_l(tilde, j)
    denom = math.factorial(s + 1)
    bound = beta0 * p * f / denom
    e = coefficient_nu(table, s, j, max_l=max(j, 6))
    notes = []
    if reference_f is not None and reference_f != f:
        alt = beta0 * p * reference_f / denom
        notes.append(
            f"f_{j}(tilde) = {f} by enumeration; quoted factor {reference_f} differs "
            f"(would give bound {format_rational(alt)} ~ {format_decimal(alt)})"
        )
    return BoundReport(j, e, bound, beta0, s, shifts, tilde, p, f, s + 1,
                       e <= bound, j >= 2, tuple(notes))


def bound_e1(table: BettiTable) -> BoundReport:
    return bound_ej(table, 1)


# -- inequality checkers ---------------------------------------------------------

def check_sym_pure_bound(d: Sequence[int]) -> tuple:
    """Both sides of ``f_1(d) + f_1(d^v) <= b_d * psi_d * f_1(tilde d)``."""
    d = _dominated(d)
    dual = dual_sequence(d, d[-1])
    lhs = Fraction(f_l(d[1:], 1) + f_l(dual[1:], 1))
    tilde = tilde_of_sequence(d)
    rhs = b_d(d) * psi(tilde) * f_l(tilde, 1)
    return lhs, rhs, lhs <= rhs


def lemma_hypothesis(d: Sequence[int], d_prime: Sequence[int]) -> bool:
    """``d_0 = d'_0 = 0``, same top, and ``d < d' <= d'^v < d^v``."""
    if len(d) != len(d_prime) or d[0] != 0 or d_prime[0] != 0 or d[-1] != d_prime[-1]:
        return False
    top = d[-1]

    def lt(a, b):
        return a != b and all(x <= y for x, y in zip(a, b))

    dual, dual_p = dual_sequence(d, top), dual_sequence(d_prime, top)
    return (lt(d, d_prime)
            and all(x <= y for x, y in zip(d_prime, dual_p))
            and lt(dual_p, dual))


def lemma_sides(d: Sequence[int], d_prime: Sequence[int]) -> tuple:
    d, d_prime = degree_sequence(d), degree_sequence(d_prime)
    if not lemma_hypothesis(d, d_prime):
        raise HypothesisViolated(f"({d}, {d_prime}) does not satisfy d < d' <= d'^v < d^v")
    td, tp = tilde_of_sequence(d), tilde_of_sequence(d_prime)
    return psi(td) * f_l(td, 1), psi(tp) * f_l(tp, 1)


def check_lemma_monotonicity(d: Sequence[int], d_prime: Sequence[int]) -> bool:
    """``psi_d f_1(tilde d) >= psi_d' f_1(tilde d')`` for a hypothesis-satisfying pair."""
    lhs, rhs = lemma_sides(d, d_prime)
    return lhs >= rhs


# -- literature comparisons ------------------------------------------------------

def comparison_bounds(e0: int, e2: int, mu: int, dim: int, k: int,
                      e1: Optional[int] = None) -> dict:
    """Closed-form e_1 bounds that need data beyond the Betti table.

    * ``elias``: ``C(e0, 2) - C(mu - dim, 2)``
    * ``rossi_valla_slack``: ``C(e0,2) - C(mu-dim,2) - e0 - e2 + 1``; the
      inequality ``e1 <= C(e0,2) - C(mu-dim,2) - lambda + 1`` with
      ``lambda = e0 - e1 + e2`` holds iff this is ``>= 0`` (e1 cancels)
    * ``rossi_valla``: the right-hand side itself, only when ``e1`` is given
    * ``huneke_hanumanthu``: ``C(e0 - k, 2)``
    """
    base = math.comb(e0, 2) - math.comb(mu - dim, 2)
    out = {
        "elias": base,
        "rossi_valla_slack": base - e0 - e2 + 1,
        "huneke_hanumanthu": math.comb(e0 - k, 2),
    }
    if e1 is not None:
        out["rossi_valla"] = base - (e0 - e1 + e2) + 1
    return out
