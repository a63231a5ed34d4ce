"""Acceptance gate: one group of tests per criterion, summarised at the end of the run.

The summary lines ("criterion n: PASS/FAIL") are printed by the hook in conftest.py.
"""
import math
import random
from fractions import Fraction as F

import pytest

from bettibound.betti import pure_entries, symmetrized_pure
from bettibound.bounds import bound_e0, bound_e1, bound_ej
from bettibound.decomp import check_symmetric_invariants, decompose, reconstruct, symmetric_decompose
from bettibound.exact import complete_homogeneous, det_fraction_free, format_decimal, vandermonde_matrix
from bettibound.explorer import SearchSpec, fuzz, koszul_table
from bettibound.hilbert import coefficient_nu, coefficients_oracle, f_l, h_polynomial, numerator

from .strategies import random_chain_table


def oracle(table, s, L):
    return coefficients_oracle(h_polynomial(numerator(table), s), L)


@pytest.mark.AC1
def test_example1_end_to_end(example1):
    assert coefficient_nu(example1, 5, 1) == 90
    rep = bound_e1(example1)
    assert rep.bound == F(78750, 720) == F(875, 8)
    assert format_decimal(rep.bound) == "109.375"
    assert rep.holds


@pytest.mark.AC2
def test_example3_end_to_end(example3):
    assert tuple(coefficient_nu(example3, 5, l) for l in range(3)) == (26, 65, 68)
    rep = bound_e1(example3)
    assert rep.bound == F(93750, 720) == F(3125, 24)
    assert format_decimal(rep.bound) == "130.208333"
    assert abs(rep.bound - F("130.20833")) < F(1, 10 ** 5)
    assert rep.holds


@pytest.mark.AC3
def test_conjecture_spot_check(example3):
    rep = bound_ej(example3, 2, reference_f=150)
    assert rep.holds
    assert rep.f_value == f_l(rep.tilde, 2) == 95
    assert rep.to_json()["inputs"]["f"] == 95
    assert len(rep.notes) == 1 and "150" in rep.notes[0]


def _ac4_tables(example1, example3):
    yield from ((koszul_table(n), n) for n in range(2, 9))
    yield example1, 5
    yield example3, 5
    rng = random.Random(4)
    for _ in range(50):
        table, _ = random_chain_table(rng, max_s=4, max_top=12)
        yield table, table.length


@pytest.mark.AC4
def test_oracle_equivalence(example1, example3):
    count = 0
    for table, s in _ac4_tables(example1, example3):
        assert tuple(coefficient_nu(table, s, l) for l in range(4)) == oracle(table, s, 3)
        count += 1
    assert count == 59


def _random_sequence(rng):
    s = rng.randint(1, 6)
    top = rng.randint(s, 30)
    return (0, *sorted(rng.sample(range(1, top), s - 1)), top)


@pytest.mark.AC5
def test_herzog_kuhl_identities():
    rng = random.Random(5)
    for _ in range(200):
        d = _random_sequence(rng)
        s = len(d) - 1
        beta = pure_entries(d)
        power = lambda m: sum((-1) ** i * b * di ** m for i, (di, b) in enumerate(zip(d, beta)))
        assert all(power(l) == 0 for l in range(s))
        tail = d[1:]
        gaps = math.prod(tail[j] - tail[i] for i in range(s) for j in range(i + 1, s))
        for r in range(4):
            h = complete_homogeneous(r, tail)
            assert power(s + r) == (-1) ** s * h
            assert det_fraction_free(vandermonde_matrix(r, tail)) == gaps * h


@pytest.mark.AC6
def test_decomposition_round_trip(example1, example3):
    rng = random.Random(6)
    tables = [koszul_table(n) for n in range(1, 9)] + [example1, example3]
    tables += [random_chain_table(rng)[0] for _ in range(50)]
    for table in tables:
        assert reconstruct(decompose(table)) == table


@pytest.mark.AC6
@pytest.mark.parametrize("name", ["example1", "example3"])
def test_symmetric_decomposition_invariants(name, request):
    table = request.getfixturevalue(name)
    dec = symmetric_decompose(table)
    assert reconstruct(dec) == table
    assert check_symmetric_invariants(dec, generated_in_degree=0) == []
    assert all(d[0] == 0 and d[-1] == dec.N for _, d in dec.parts)
    for l in range(3):
        total = sum((r * coefficient_nu(symmetrized_pure(d, dec.N), 5, l) for r, d in dec.parts), F(0))
        assert total == coefficient_nu(table, 5, l)


@pytest.mark.AC7
def test_proposition_exhaustive():
    # Faithful check. This fails: the inequality is false for even s with odd d_s
    # (first witness (0, 2, 5): 9 > 20/3). See the project notes for the analysis.
    rep = fuzz(SearchSpec(s_min=1, s_max=5, d_s_max=14, checks=("proposition",)))
    assert rep.cases_checked > 0
    witnesses = [(v["input"], v["lhs"], v["rhs"]) for v in rep.violations]
    assert witnesses == [], f"{len(witnesses)} violations, first: {witnesses[:3]}"


@pytest.mark.AC7
def test_lemma_exhaustive():
    rep = fuzz(SearchSpec(s_min=1, s_max=4, d_s_max=10, checks=("lemma",)))
    assert rep.cases_checked > 1000
    assert rep.violations == [] and rep.out_of_hypothesis == []


@pytest.mark.AC8
def test_conjecture_fuzz_deterministic():
    spec = SearchSpec(s_min=1, s_max=4, d_s_max=10, checks=("conjecture",), js=(2,))
    first, second = fuzz(spec).to_json(), fuzz(spec, workers=2).to_json()
    assert first == second
    assert first["cases_checked"] > 0
    for v in first["violations"]:
        # full exact witnesses: the inputs and both sides as rationals
        assert {"input", "lhs", "rhs", "j", "f", "psi", "beta0"} <= set(v)
        assert F(v["lhs"]) > F(v["rhs"])
        table = symmetrized_pure(tuple(v["input"]), v["input"][-1])
        rep = bound_ej(table, 2)
        assert (rep.e_value, rep.bound) == (F(v["lhs"]), F(v["rhs"]))
    print(f"conjecture j=2: {len(first['violations'])} violations in {first['cases_checked']} cases")


@pytest.mark.AC9
def test_e0_bound_regression(example1, example3):
    assert bound_e0(example1).holds and bound_e0(example3).holds
    for n in range(1, 9):
        rep = bound_e0(koszul_table(n))
        assert rep.psi == math.factorial(n)
        assert rep.e_value == rep.bound == 1
