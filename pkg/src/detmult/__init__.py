"""Exact lengths and generalized j-multiplicities for powers of maximal-minor ideals."""
from .ext import (
    FiltrationFactor,
    SupportEntry,
    WeightWindow,
    cohomological_support,
    enumerate_zdn_maximal,
    window_nonempty,
    zdp_member,
)
from .length import (
    CrossCheckError,
    Finite,
    Infinite,
    LengthReport,
    Zero,
    layer_length_enum,
    layer_length_poly,
    layer_term_dim,
    layer_weight,
    local_cohomology_length,
    multiplicity_from_poly,
    total_length,
    total_length_poly,
)
from .poly import MultiPoly, Rational, bernoulli, poly_arith, poly_eval, sum_over
from .report import MultiplicityReport, multiplicity_report
from .selberg import (
    MCResult,
    SelbergParams,
    constant_C,
    multiplicity_closed,
    multiplicity_selberg,
    selberg_value,
    simplex_integral_exact,
    simplex_integral_mc,
)
from .weights import InvalidWeight, ProblemSpec, Weight, WindowViolation, lambda_of_s, schur_dim, shift_weight

__version__ = "0.1.0"
