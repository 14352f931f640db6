import random

import pytest
from hypothesis import given, strategies as st

from detmult.weights import (
    InvalidWeight,
    ProblemSpec,
    Weight,
    WindowViolation,
    lambda_of_s,
    lambda_zero_padded,
    schur_dim,
    shift_weight,
)
from oracles import count_ssyt, partitions


def test_standard_representation():
    assert schur_dim(Weight((1, 0, 0)), 3) == 3


@pytest.mark.parametrize("N", [1, 2, 5])
@pytest.mark.parametrize("c", [-7, 0, 4])
def test_determinant_powers(N, c):
    assert schur_dim(Weight((c,) * N), N) == 1


def test_321():
    assert schur_dim(Weight((3, 2, 1)), 3) == count_ssyt((3, 2, 1), 3) == 8


def test_non_dominant_rejected():
    with pytest.raises(InvalidWeight, match="not dominant"):
        Weight((2, 3))


def test_length_mismatch():
    with pytest.raises(InvalidWeight):
        schur_dim(Weight((1, 0)), 3)


def test_shift_weight():
    assert shift_weight(Weight((3, 2, 1)), -1) == Weight((2, 1, 0))
    assert shift_weight(Weight((-3, -4, -5)), 5) == Weight((2, 1, 0))
    assert schur_dim(Weight((-3, -4, -5)), 3) == schur_dim(Weight((2, 1, 0)), 3) == 8


dominant = st.lists(st.integers(-10, 10), min_size=1, max_size=5).map(
    lambda xs: Weight(sorted(xs, reverse=True)))


@given(dominant, st.integers(-5, 5))
def test_shift_invariance(lam, c):
    assert schur_dim(lam, len(lam)) == schur_dim(shift_weight(lam, c), len(lam))


@given(dominant)
def test_positive(lam):
    assert schur_dim(lam) >= 1


def test_ssyt_oracle_small():
    for size in range(0, 7):
        for lam in partitions(size, 3):
            for N in range(max(len(lam), 1), 4):
                padded = lam + (0,) * (N - len(lam))
                assert schur_dim(Weight(padded), N) == count_ssyt(lam, N)


def test_problem_spec_validation():
    ProblemSpec(3, 2)
    for m, n in [(2, 2), (3, 1), (2, 3)]:
        with pytest.raises(ValueError, match="m > n > 1"):
            ProblemSpec(m, n)


def test_lambda_of_s_examples():
    spec = ProblemSpec(3, 2)
    assert lambda_of_s(Weight((-3, -3)), 0, spec) == Weight((-2, -2, -2))
    assert lambda_of_s(Weight((-3, -4)), 0, spec) == Weight((-2, -2, -3))


def test_lambda_zero_variants_agree():
    spec = ProblemSpec(3, 2)
    lam = Weight((-3, -4))
    a = lambda_of_s(lam, 0, spec)
    b = lambda_zero_padded(lam, spec)
    assert b == Weight((-3, -3, -4))
    assert shift_weight(b, spec.m - spec.n) == a
    assert schur_dim(a, 3) == schur_dim(b, 3)


def test_lambda_zero_variants_agree_random():
    rng = random.Random(7)
    for _ in range(100):
        m = rng.randint(3, 7)
        n = rng.randint(2, m - 1)
        spec = ProblemSpec(m, n)
        lam = Weight(sorted((rng.randint(-m - 8, -m) for _ in range(n)), reverse=True))
        assert schur_dim(lambda_of_s(lam, 0, spec), m) == schur_dim(lambda_zero_padded(lam, spec), m)


def test_lambda_of_s_window_violation():
    spec = ProblemSpec(3, 2)
    with pytest.raises(WindowViolation, match="weight window violated"):
        lambda_of_s(Weight((-2, -4)), 0, spec)
    with pytest.raises(WindowViolation):
        lambda_of_s(Weight((-3, -4)), 1, spec)  # lambda_1 < 1-2
    assert lambda_of_s(Weight((-1, -2)), 1, spec) == Weight((-1, -1, -1))


def test_weight_json():
    assert Weight((2, 0, -1)).to_json_obj() == [2, 0, -1]
