"""Exhaustive enumeration of degree sequences and fuzz checks of the bounds."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Iterator

from .betti import BettiTable, is_dominated_by_dual, symmetrized_pure
from .bounds import (
    bound_e1,
    bound_ej,
    check_sym_pure_bound,
    lemma_hypothesis,
    lemma_sides,
)
from .errors import GuardrailError
from .exact import format_rational

CONSTRAINTS = ("all", "dominated_by_dual", "lemma_pairs")
CHECKS = ("proposition", "lemma", "theorem", "conjecture")
THEOREM_CHECKS = ("proposition", "lemma", "theorem")
MAX_S = 8
MAX_DS = 40


@dataclass(frozen=True)
class SearchSpec:
    s_min: int = 1
    s_max: int = 4
    d_s_max: int = 10
    constraint: str = "dominated_by_dual"
    checks: tuple = ("proposition",)
    js: tuple = (2,)
    guardrails: bool = True

    def validate(self) -> None:
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"unknown constraint {self.constraint!r}")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}")
        if self.s_min < 1 or self.s_max < self.s_min:
            raise ValueError(f"bad s range {self.s_min}..{self.s_max}")
        if self.guardrails and (self.s_max > MAX_S or self.d_s_max > MAX_DS):
            raise GuardrailError(
                f"refusing s <= {self.s_max}, d_s <= {self.d_s_max}: guardrails are "
                f"s <= {MAX_S}, d_s <= {MAX_DS} (disable them to go further)"
            )


@dataclass
class FuzzReport:
    spec: SearchSpec
    cases_checked: int = 0
    violations: list = field(default_factory=list)
    out_of_hypothesis: list = field(default_factory=list)
    out_of_hypothesis_checked: int = 0
    per_check: dict = field(default_factory=dict)

    @property
    def theorem_violations(self) -> list:
        return [v for v in self.violations if v["check"] in THEOREM_CHECKS]

    def to_json(self) -> dict:
        return {
            "spec": asdict(self.spec),
            "cases_checked": self.cases_checked,
            "per_check": dict(sorted(self.per_check.items())),
            "violations": self.violations,
            "out_of_hypothesis_checked": self.out_of_hypothesis_checked,
            "out_of_hypothesis": self.out_of_hypothesis,
        }


# -- enumeration -------------------------------------------------------------------

def sequences_with_top(s: int, top: int, constraint: str = "all") -> Iterator[tuple]:
    """Sequences ``(0, d_1, ..., d_{s-1}, top)`` in lexicographic order."""
    for mid in combinations(range(1, top), s - 1):
        d = (0,) + mid + (top,)
        if constraint == "all" or is_dominated_by_dual(d):
            yield d


def enumerate_sequences(spec: SearchSpec) -> Iterator[tuple]:
    """All sequences with ``d_0 = 0`` and ``d_s <= d_s_max``, ordered by s then lexicographically."""
    spec.validate()
    constraint = "all" if spec.constraint == "all" else "dominated_by_dual"
    for s in range(spec.s_min, spec.s_max + 1):
        yield from sorted(d for top in range(s, spec.d_s_max + 1)
                          for d in sequences_with_top(s, top, constraint))


def lemma_pairs(s: int, top: int) -> Iterator[tuple]:
    """Pairs ``(d, d')`` with common top satisfying the monotonicity hypothesis."""
    seqs = list(sequences_with_top(s, top, "dominated_by_dual"))
    for d in seqs:
        for dp in seqs:
            if lemma_hypothesis(d, dp):
                yield d, dp


def koszul_table(n: int) -> BettiTable:
    """``beta[i, i] = C(n, i)``: the resolution of the residue field in n variables."""
    if not 1 <= n <= 12:
        raise ValueError("n must be in 1..12")
    return BettiTable({(i, i): math.comb(n, i) for i in range(n + 1)})


# -- fuzzing -------------------------------------------------------------------------

def _witness(check, inp, lhs, rhs, **extra) -> dict:
    out = {"check": check, "input": inp, "lhs": format_rational(lhs), "rhs": format_rational(rhs)}
    out.update(extra)
    return out


def _run_chunk(args) -> dict:
    spec, s, top = args
    res = {"cases": 0, "violations": [], "ooh": [], "ooh_checked": 0, "per_check": {}}
    in_hyp = top >= s + 2

    def record(check, ok, witness):
        res["per_check"][check] = res["per_check"].get(check, 0) + 1
        if in_hyp or check == "conjecture":
            res["cases"] += 1
            if not ok:
                res["violations"].append(witness)
        else:
            res["ooh_checked"] += 1
            if not ok:
                res["ooh"].append(witness)

    constraint = "all" if spec.constraint == "all" else "dominated_by_dual"
    seqs = list(sequences_with_top(s, top, constraint))
    for d in seqs:
        if not is_dominated_by_dual(d):
            continue
        if "proposition" in spec.checks:
            lhs, rhs, ok = check_sym_pure_bound(d)
            record("proposition", ok, _witness("proposition", list(d), lhs, rhs))
        if "theorem" in spec.checks or "conjecture" in spec.checks:
            table = symmetrized_pure(d, top)
            if "theorem" in spec.checks:
                rep = bound_e1(table)
                record("theorem", rep.holds,
                       _witness("theorem", list(d), rep.e_value, rep.bound))
            if "conjecture" in spec.checks:
                for j in spec.js:
                    rep = bound_ej(table, j)
                    record("conjecture", rep.holds,
                           _witness("conjecture", list(d), rep.e_value, rep.bound, j=j,
                                    f=rep.f_value, psi=rep.psi,
                                    beta0=format_rational(rep.beta0)))
    if "lemma" in spec.checks:
        for d, dp in lemma_pairs(s, top):
            lhs, rhs = lemma_sides(d, dp)
            record("lemma", lhs >= rhs, _witness("lemma", [list(d), list(dp)], lhs, rhs))
    return res


def fuzz(spec: SearchSpec, workers: int = 1) -> FuzzReport:
    """Run the requested checks over every ``(s, d_s)`` chunk of the search space.

    Cases with ``d_s < s + 2`` are outside the hypotheses used for the proved
    statements; they are checked but only logged in ``out_of_hypothesis``.
    Chunk results are merged in (s, d_s) order, so the report does not depend
    on ``workers``.
    """
    spec.validate()
    chunks = [(spec, s, top)
              for s in range(spec.s_min, spec.s_max + 1)
              for top in range(s, spec.d_s_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_chunk, chunks, chunksize=4))
    else:
        results = [_run_chunk(c) for c in chunks]
    report = FuzzReport(spec)
    for res in results:
        report.cases_checked += res["cases"]
        report.violations.extend(res["violations"])
        report.out_of_hypothesis.extend(res["ooh"])
        report.out_of_hypothesis_checked += res["ooh_checked"]
        for k, v in res["per_check"].items():
            report.per_check[k] = report.per_check.get(k, 0) + v
    return report
