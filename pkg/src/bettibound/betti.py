"""Betti tables, degree sequences and the pure / symmetrized pure tables."""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    BettiError,
    EmptyTable,
    InvalidN,
    InvalidSequence,
    NonpositiveEntry,
    ParseError,
    SupportViolation,
    TotalMismatch,
)
from .exact import format_rational, to_fraction


class BettiTable:
    """Sparse table ``(i, j) -> beta[i, j]`` over exact rationals.

    Zero entries are dropped on construction.  Arithmetic may produce
    negative entries; such a table is a *signed* table and
    :attr:`is_canonical` is False until it passes :func:`validate`.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        store = {}
        for key, value in items:
            i, j = key
            q = to_fraction(value)
            if q:
                store[(int(i), int(j))] = store.get((int(i), int(j)), 0) + q
        self._entries = {k: store[k] for k in sorted(store) if store[k] != 0}

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    def __getitem__(self, key) -> Fraction:
        return self._entries.get(tuple(key), Fraction(0))

    def __iter__(self):
        return iter(self._entries.items())

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self):
        body = ", ".join(f"({i},{j}): {format_rational(v)}" for (i, j), v in self)
        return f"BettiTable({{{body}}})"

    @property
    def length(self) -> int:
        """Largest homological index carrying an entry (-1 when empty)."""
        return max((i for i, _ in self._entries), default=-1)

    @property
    def is_canonical(self) -> bool:
        return all(v > 0 for v in self._entries.values())

    def column(self, i: int) -> dict:
        return {j: v for (ii, j), v in self._entries.items() if ii == i}

    def __add__(self, other: "BettiTable") -> "BettiTable":
        return table_axpy(1, other, self)

    def __sub__(self, other: "BettiTable") -> "BettiTable":
        return table_axpy(-1, other, self)

    def __rmul__(self, a) -> "BettiTable":
        return table_axpy(a, self)

    def __neg__(self):
        return table_axpy(-1, self)


@dataclass(frozen=True)
class Shifts:
    """Minimal (``t``) and maximal (``T``) shifts, indexed by homological degree."""

    t: tuple
    T: tuple

    @property
    def s(self) -> int:
        return len(self.t) - 1

    @property
    def N(self) -> int:
        return self.t[-1]


# -- degree sequences ---------------------------------------------------------

def degree_sequence(d: Iterable[int]) -> tuple:
    """Validate and return ``d`` as a strictly increasing int tuple of length s >= 1."""
    d = tuple(d)
    if len(d) < 2:
        raise InvalidSequence(f"degree sequence {d} needs at least two entries")
    if any(not isinstance(x, int) or isinstance(x, bool) for x in d):
        raise InvalidSequence(f"degree sequence {d} must contain integers")
    if any(a >= b for a, b in zip(d, d[1:])):
        raise InvalidSequence(f"degree sequence {d} is not strictly increasing")
    return d


def dual_sequence(d: Sequence[int], N: int) -> tuple:
    """``(N - d_s, ..., N - d_0)``."""
    return tuple(N - x for x in reversed(d))


def is_dominated_by_dual(d: Sequence[int], N: Optional[int] = None) -> bool:
    """True when ``d_i + d_{s-i} <= N`` for every i (N defaults to d_s)."""
    N = d[-1] if N is None else N
    s = len(d) - 1
    return all(d[i] + d[s - i] <= N for i in range(s + 1))


# -- validation -----------------------------------------------------------------

def validate(raw) -> BettiTable:
    """Check a raw entry collection and return it as a :class:`BettiTable`.

    ``raw`` is a mapping ``(i, j) -> value``, an iterable of ``(i, j, value)``
    triples, or an existing table.
    """
    if isinstance(raw, BettiTable):
        items = list(raw)
    elif isinstance(raw, Mapping):
        items = list(raw.items())
    else:
        items = [((i, j), v) for i, j, v in raw]
    for (i, j), v in items:
        q = to_fraction(v)
        if q <= 0 or i < 0:
            raise NonpositiveEntry(i, j, format_rational(q))
    table = BettiTable(items)
    if not table:
        raise EmptyTable("table has no nonzero entries")
    minima = {}
    for (i, j), _ in table:
        minima[i] = min(minima.get(i, j), j)
    for (i, j), _ in table:
        if i > 0 and not (i - 1 in minima and minima[i - 1] < j):
            raise SupportViolation(i, j)
    return table


# -- shifts and duality ---------------------------------------------------------

def min_max_shifts(table: BettiTable) -> Shifts:
    s = table.length
    t, T = [], []
    for i in range(s + 1):
        col = table.column(i)
        if not col:
            raise BettiError(f"column {i} is empty")
        t.append(min(col))
        T.append(max(col))
    return Shifts(tuple(t), tuple(T))


def is_self_dual(table: BettiTable) -> Optional[tuple]:
    """Return ``(s, N)`` when ``beta[i,j] == beta[s-i, N-j]`` for all entries."""
    if not table:
        return None
    s = table.length
    col0, cols = table.column(0), table.column(s)
    if not col0 or not cols:
        return None
    N = max(cols) + min(col0)
    for (i, j), v in table:
        if table[s - i, N - j] != v:
            return None
    return s, N


# -- pure tables ----------------------------------------------------------------

def pure_entries(d: Sequence[int]) -> tuple:
    """``beta_i(d) = 1 / prod_{l != i} |d_l - d_i|`` for each column i."""
    d = degree_sequence(d)
    return tuple(
        Fraction(1, math.prod(abs(dl - di) for l, dl in enumerate(d) if l != i))
        for i, di in enumerate(d)
    )


def pure_betti(d: Sequence[int]) -> BettiTable:
    d = degree_sequence(d)
    return BettiTable({(i, di): b for i, (di, b) in enumerate(zip(d, pure_entries(d)))})


def symmetrized_pure(d: Sequence[int], N: int) -> BettiTable:
    """``beta(d) + beta(d^{v,N})``; equals ``2 beta(d)`` for a self-dual d."""
    d = degree_sequence(d)
    if N < d[0] + d[-1]:
        raise InvalidN(f"N = {N} < d_0 + d_s = {d[0] + d[-1]}")
    return pure_betti(d) + pure_betti(dual_sequence(d, N))


def table_axpy(a, x: BettiTable, y: Optional[BettiTable] = None) -> BettiTable:
    """Entrywise ``a*x + y``; the result may be a signed table."""
    a = to_fraction(a)
    out = dict(y.entries) if y is not None else {}
    for key, v in x:
        out[key] = out.get(key, 0) + a * v
    return BettiTable(out)


# -- diagram text format --------------------------------------------------------

_ROW = re.compile(r"^\s*(-?\d+)\s*:(.*)$")
_TOTAL = re.compile(r"^\s*total\s*:(.*)$")


def _cell(token: str, line_no: int, line: str) -> Fraction:
    if token == ".":
        return Fraction(0)
    try:
        q = Fraction(token)
    except ValueError:
        raise ParseError(line_no, line, f"bad entry {token!r}") from None
    if q < 0:
        raise ParseError(line_no, line, f"negative entry {token!r}")
    return q


def parse_betti_diagram(text: str) -> BettiTable:
    """Parse a Macaulay2-style Betti diagram.

    Row ``r`` column ``i`` holds ``beta[i, i + r]``.  A header line of column
    indices and a ``total:`` row are optional; the totals are checked against
    the column sums when present.
    """
    entries = {}
    totals = None
    header = None
    seen_row = False
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        m = _TOTAL.match(line)
        if m:
            if totals is not None:
                raise ParseError(line_no, line, "duplicate total row")
            totals = [_cell(tok, line_no, line) for tok in m.group(1).split()]
            continue
        m = _ROW.match(line)
        if m:
            r = int(m.group(1))
            for i, tok in enumerate(m.group(2).split()):
                q = _cell(tok, line_no, line)
                if q:
                    if (i, i + r) in entries:
                        raise ParseError(line_no, line, f"row {r} given twice")
                    entries[(i, i + r)] = q
            seen_row = True
            continue
        tokens = line.split()
        if not seen_row and header is None and totals is None and all(
                tok.isdigit() for tok in tokens):
            header = [int(tok) for tok in tokens]
            if header != list(range(len(header))):
                raise ParseError(line_no, line, "header must list columns 0, 1, 2, ...")
            continue
        raise ParseError(line_no, line, "unrecognized line")
    if not seen_row:
        raise ParseError(0, text, "no diagram rows")
    if totals is not None:
        width = max(len(totals), max((i for i, _ in entries), default=-1) + 1)
        for i in range(width):
            stated = totals[i] if i < len(totals) else Fraction(0)
            actual = sum((v for (ii, _), v in entries.items() if ii == i), Fraction(0))
            if stated != actual:
                raise TotalMismatch(i, format_rational(stated), format_rational(actual))
    return validate(entries)


def format_betti_diagram(table: BettiTable) -> str:
    """Render ``table`` in the layout :func:`parse_betti_diagram` reads."""
    s = table.length
    rows = sorted({j - i for (i, j), _ in table})
    totals = [sum(table.column(i).values(), Fraction(0)) for i in range(s + 1)]
    cells = [[str(i) for i in range(s + 1)],
             [format_rational(v) for v in totals]]
    for r in rows:
        cells.append([format_rational(table[i, i + r]) if table[i, i + r] else "."
                      for i in range(s + 1)])
    width = max(len(c) for row in cells for c in row)
    labels = ["", "total:"] + [f"{r}:" for r in rows]
    lw = max(len(lab) for lab in labels)
    lines = []
    for lab, row in zip(labels, cells):
        lines.append(f"{lab:>{lw}} " + " ".join(f"{c:>{width}}" for c in row))
    return "\n".join(line.rstrip() for line in lines) + "\n"


# -- JSON -------------------------------------------------------------------------

def table_to_json(table: BettiTable) -> dict:
    return {"entries": [{"i": i, "j": j, "beta": format_rational(v)} for (i, j), v in table]}


def table_from_json(obj) -> BettiTable:
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    try:
        raw = [(int(e["i"]), int(e["j"]), to_fraction(e["beta"])) for e in obj["entries"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(0, str(obj)[:80], f"malformed table JSON ({exc})") from None
    return validate(raw)
