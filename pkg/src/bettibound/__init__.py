"""Exact analysis of graded Betti tables: Hilbert coefficients, Boij-Soederberg
decompositions, and upper bounds for Hilbert coefficients of self-dual tables."""

from .betti import (
    BettiTable,
    Shifts,
    degree_sequence,
    dual_sequence,
    format_betti_diagram,
    is_self_dual,
    min_max_shifts,
    parse_betti_diagram,
    pure_betti,
    symmetrized_pure,
    table_axpy,
    validate,
)
from .bounds import (
    BoundReport,
    b_d,
    bound_e0,
    bound_e1,
    bound_ej,
    check_lemma_monotonicity,
    check_sym_pure_bound,
    comparison_bounds,
    psi,
    tilde_of_sequence,
    tilde_of_shifts,
)
from .decomp import Decomposition, SymmetricDecomposition, decompose, reconstruct, symmetric_decompose
from .hilbert import (
    HilbertData,
    coefficient_nu,
    coefficients_oracle,
    e_l_pure,
    e_l_symmetrized,
    f_l,
    h_polynomial,
    hilbert_data,
    multiplicity_ps,
    numerator,
)

__version__ = "0.1.0"
