"""Boij-Soederberg decomposition and its self-dual (symmetric) variant.

Both decompositions peel pure tables off the bottom of the table: the
current minimal shifts form the next degree sequence, and the coefficient is
the largest one that keeps every entry nonnegative.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .betti import (
    BettiTable,
    dual_sequence,
    is_self_dual,
    min_max_shifts,
    pure_betti,
    symmetrized_pure,
    table_axpy,
)
from .errors import NotDecomposable, NotSelfDual
from .exact import format_rational

MAX_STEPS = 10_000


@dataclass(frozen=True)
class Decomposition:
    parts: tuple  # ((r, d), ...)

    def to_json(self) -> dict:
        return {"N": None,
                "parts": [{"r": format_rational(r), "d": list(d)} for r, d in self.parts]}


@dataclass(frozen=True)
class SymmetricDecomposition:
    parts: tuple
    N: int
    method: str = field(default="simultaneous", compare=False)

    def to_json(self) -> dict:
        return {"N": self.N,
                "parts": [{"r": format_rational(r), "d": list(d)} for r, d in self.parts]}


def _bottom_sequence(rem: BettiTable, s: int) -> tuple:
    if rem.length != s:
        raise NotDecomposable(f"remainder {rem!r} lost its top column")
    try:
        d = min_max_shifts(rem).t
    except ValueError as exc:
        raise NotDecomposable(f"remainder has an empty column ({exc})") from None
    if any(a >= b for a, b in zip(d, d[1:])):
        raise NotDecomposable(f"minimal shifts {d} are not strictly increasing")
    return d


def _max_coefficient(rem: BettiTable, footprint: BettiTable) -> Fraction:
    return min(rem[key] / v for key, v in footprint)


def decompose(table: BettiTable) -> Decomposition:
    """Greedy decomposition ``table = sum r_a beta(d^a)`` along a chain."""
    if not table.is_canonical:
        raise NotDecomposable("table has nonpositive entries")
    s = table.length
    if s < 1:
        raise NotDecomposable("table needs length >= 1")
    parts = []
    rem = table
    while rem:
        if len(parts) >= MAX_STEPS:
            raise NotDecomposable("step limit reached")
        d = _bottom_sequence(rem, s)
        pure = pure_betti(d)
        c = _max_coefficient(rem, pure)
        rem = table_axpy(-c, pure, rem)
        if not rem.is_canonical:
            raise NotDecomposable(f"subtracting {c} * beta{d} leaves a negative entry")
        parts.append((c, d))
    return Decomposition(tuple(parts))


def symmetric_decompose(table: BettiTable) -> SymmetricDecomposition:
    """Decompose a self-dual table as ``sum r_a beta_sym(d^a, N)``.

    Each step removes the bottom sequence and its dual together, so the
    remainder stays self-dual.  If that loop fails, the ordinary
    decomposition is paired with duals instead (``method == "paired"``).
    """
    sd = is_self_dual(table)
    if sd is None:
        raise NotSelfDual("table is not (s, N)-self-dual")
    s, N = sd
    if s < 1 or not table.is_canonical:
        raise NotDecomposable("table needs length >= 1 and positive entries")
    try:
        return _simultaneous_peel(table, s, N)
    except NotDecomposable:
        return _paired(table, N)


def _simultaneous_peel(table: BettiTable, s: int, N: int) -> SymmetricDecomposition:
    parts = []
    rem = table
    while rem:
        if len(parts) >= MAX_STEPS:
            raise NotDecomposable("step limit reached")
        d = _bottom_sequence(rem, s)
        if any(d[i] + d[s - i] > N for i in range(s + 1)):
            raise NotDecomposable(f"bottom sequence {d} exceeds its {N}-dual")
        sym = symmetrized_pure(d, N)
        r = _max_coefficient(rem, sym)
        rem = table_axpy(-r, sym, rem)
        if not rem.is_canonical:
            raise NotDecomposable(f"subtracting {r} * beta_sym{d} leaves a negative entry")
        parts.append((r, d))
    return SymmetricDecomposition(tuple(parts), N)


def _paired(table: BettiTable, N: int) -> SymmetricDecomposition:
    plain = {d: c for c, d in decompose(table).parts}
    parts = []
    for d, c in plain.items():
        dual = dual_sequence(d, N)
        if dual == d:
            parts.append((c / 2, d))
        elif all(x <= y for x, y in zip(d, dual)):
            if plain.get(dual) != c:
                raise NotDecomposable(f"{d} and its dual {dual} carry different coefficients")
            parts.append((c, d))
        elif not all(x >= y for x, y in zip(d, dual)):
            raise NotDecomposable(f"{d} is incomparable with its dual {dual}")
    return SymmetricDecomposition(tuple(parts), N, method="paired")


def reconstruct(dec: Union[Decomposition, SymmetricDecomposition]) -> BettiTable:
    out = BettiTable()
    symmetric = isinstance(dec, SymmetricDecomposition)
    for r, d in dec.parts:
        piece = symmetrized_pure(d, dec.N) if symmetric else pure_betti(d)
        out = table_axpy(r, piece, out)
    return out


def chain_violations(parts) -> list:
    """Consecutive pairs that are not strictly increasing pointwise."""
    bad = []
    for (_, a), (_, b) in zip(parts, parts[1:]):
        if not (a != b and all(x <= y for x, y in zip(a, b))):
            bad.append((a, b))
    return bad


def check_symmetric_invariants(dec: SymmetricDecomposition,
                               generated_in_degree: Optional[int] = 0) -> list:
    """List the failed structural properties of a symmetric decomposition.

    Checks: positive coefficients, equal lengths, no two parts dual to each
    other, a strictly increasing chain, ``d_i + d_{s-i} <= N``, and (when
    ``generated_in_degree`` is given) ``d_0`` equal to it and ``d_s = N``.
    """
    problems = []
    N = dec.N
    seqs = [d for _, d in dec.parts]
    if any(r <= 0 for r, _ in dec.parts):
        problems.append("nonpositive coefficient")
    if len({len(d) for d in seqs}) > 1:
        problems.append("sequences of different lengths")
    for a in range(len(seqs)):
        for b in range(a + 1, len(seqs)):
            if dual_sequence(seqs[a], N) == seqs[b]:
                problems.append(f"{seqs[a]} and {seqs[b]} are dual")
    for a, b in chain_violations(dec.parts):
        problems.append(f"chain broken between {a} and {b}")
    for d in seqs:
        s = len(d) - 1
        if any(d[i] + d[s - i] > N for i in range(s + 1)):
            problems.append(f"{d} is not dominated by its dual")
        if generated_in_degree is not None and (d[0] != generated_in_degree or d[-1] != N):
            problems.append(f"{d} does not run from {generated_in_degree} to {N}")
    return problems
