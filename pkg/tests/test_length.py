from fractions import Fraction
from math import factorial

import pytest

from detmult.length import (
    Finite,
    Infinite,
    LengthReport,
    Zero,
    epsilon_tuples,
    inner_sum_degrees,
    layer_length_enum,
    layer_length_poly,
    layer_length_poly_staged,
    layer_term_dim,
    layer_weight,
    local_cohomology_length,
    multiplicity_from_poly,
    term_dim_factored,
    total_length,
    total_length_poly,
)
from detmult.poly import MultiPoly
from detmult.weights import ProblemSpec, Weight, lambda_zero_padded, schur_dim
from oracles import brute_layer_length, brute_total_length, closed_multiplicity

S32 = ProblemSpec(3, 2)
PAIRS = [(3, 2), (4, 2), (5, 2), (4, 3), (5, 3)]
d = MultiPoly.var("d")
D = MultiPoly.var("D")


def test_layer_weight():
    assert layer_weight((0,), 2, S32) == Weight((-3, -3))
    assert layer_weight((1,), 3, S32) == Weight((-3, -4))
    assert layer_weight((0, 0), 3, ProblemSpec(4, 3)) == Weight((-4, -4, -4))


def test_layer_weight_rejects_out_of_window():
    with pytest.raises(ValueError):
        layer_weight((2,), 3, S32)
    with pytest.raises(ValueError):
        layer_weight((0, 1), 4, ProblemSpec(4, 3))


@pytest.mark.parametrize("eps,dd,expected", [((0,), 3, 3), ((1,), 3, 6), ((2,), 4, 18)])
def test_layer_term_dim(eps, dd, expected):
    assert layer_term_dim(eps, dd, S32) == expected


@pytest.mark.parametrize("m,n", PAIRS + [(6, 4)])
def test_factored_matches_direct(m, n):
    spec = ProblemSpec(m, n)
    for dd in range(n, n + 7):
        for eps in epsilon_tuples(spec, dd):
            lam = layer_weight(eps, dd, spec)
            direct = schur_dim(lambda_zero_padded(lam, spec), m) * schur_dim(lam, n)
            assert term_dim_factored(eps, dd, spec) == direct


@pytest.mark.parametrize("dd,expected", [(1, 0), (2, 1), (3, 9), (4, 40)])
def test_layer_length_enum(dd, expected):
    assert layer_length_enum(S32, dd) == expected


@pytest.mark.parametrize("m,n", PAIRS)
def test_layer_enum_matches_brute(m, n):
    spec = ProblemSpec(m, n)
    for dd in range(1, n + 5):
        assert layer_length_enum(spec, dd) == brute_layer_length(m, n, dd)


def test_layer_enum_parallel_identical():
    spec = ProblemSpec(5, 3)
    assert layer_length_enum(spec, 7, workers=3) == layer_length_enum(spec, 7, workers=1)


def test_layer_length_poly_32():
    p = layer_length_poly(S32)
    assert p == d ** 3 * (d ** 2 - 1) / 24
    assert p.degree("d") == 5
    assert p.leading_coefficient("d") == Fraction(1, 24)
    assert [p.eval({"d": k}) for k in (2, 3, 4)] == [1, 9, 40]


def test_total_length_poly_32():
    p = total_length_poly(S32)
    assert p == D ** 2 * (D + 1) ** 2 * (D + 2) * (D - 1) / 144
    assert p.degree("D") == 6
    assert p.eval({"D": 1}) == 0


@pytest.mark.parametrize("m,n", PAIRS + [(6, 3), (5, 4)])
def test_staged_degrees(m, n):
    spec = ProblemSpec(m, n)
    prefactor, nested = layer_length_poly_staged(spec)
    assert inner_sum_degrees(spec)[n - 1] == m + n - 1
    assert nested.free_variables() == ("d",)
    assert nested.degree("d") == m * n - m + n - 1
    assert prefactor.degree("d") == m - n


@pytest.mark.parametrize("m,n", PAIRS)
def test_leading_coefficient_chain(m, n):
    spec = ProblemSpec(m, n)
    lead_layer = layer_length_poly(spec).leading_coefficient("d")
    lead_total = total_length_poly(spec).leading_coefficient("D")
    assert lead_total == lead_layer / (m * n)
    assert factorial(m * n) * lead_total == closed_multiplicity(m, n)


@pytest.mark.parametrize("m,n", PAIRS)
def test_integer_valued_and_monotone(m, n):
    spec = ProblemSpec(m, n)
    p = total_length_poly(spec)
    vals = [p.eval({"D": k}) for k in range(n - 1, n + 11)]
    assert vals[0] == 0
    assert all(v.denominator == 1 and v >= 0 for v in vals)
    assert all(a <= b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("DD,expected", [(1, 0), (2, 1), (3, 10), (4, 50)])
def test_total_length_both_methods(DD, expected):
    a = total_length(S32, DD, "enumeration")
    b = total_length(S32, DD, "symbolic")
    assert a.total == b.total == expected
    assert a.per_layer == b.per_layer


def test_total_length_matches_brute():
    assert total_length(ProblemSpec(4, 3), 6).total == brute_total_length(4, 3, 6)


def test_total_length_parallel_identical():
    spec = ProblemSpec(4, 3)
    assert total_length(spec, 8, workers=2) == total_length(spec, 8, workers=1)


def test_length_report_json():
    rep = total_length(S32, 3)
    obj = rep.to_json_obj()
    assert obj["total"] == "10"
    assert obj["per_layer"] == [{"d": 2, "length": "1"}, {"d": 3, "length": "9"}]
    with pytest.raises(ArithmeticError):
        LengthReport(S32, 3, 11, ((2, 1), (3, 9)), "enumeration")


@pytest.mark.parametrize("m,n,expected", [(3, 2, 5), (4, 2, 14), (4, 3, 462)])
def test_multiplicity_from_poly(m, n, expected):
    assert multiplicity_from_poly(ProblemSpec(m, n)) == expected


def test_local_cohomology_length():
    assert local_cohomology_length(S32, 3, 3) == Finite(10)
    assert local_cohomology_length(S32, 3, 1) == Zero()
    assert local_cohomology_length(S32, 4, 3) == Infinite()
    assert local_cohomology_length(S32, 0, 3) == Zero()
    with pytest.raises(ValueError):
        local_cohomology_length(S32, 7, 3)


def test_local_cohomology_only_n2_minus_1_finite():
    spec = ProblemSpec(5, 3)
    for j in range(spec.dim + 1):
        res = local_cohomology_length(spec, j, 4)
        if isinstance(res, Finite):
            assert j == spec.n ** 2 - 1
            assert res.value > 0
