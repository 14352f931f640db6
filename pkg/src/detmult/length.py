"""Lengths of the top Ext module of S/I^D, by enumeration and by symbolic summation.

The layer d contributes the weights lambda = (n-d-m+eps_1, .., n-d-m+eps_{n-1}, n-d-m)
with 0 <= eps_{n-1} <= .. <= eps_1 <= d-n, each with multiplicity
dim S_{lambda(0)} C^m * dim S_lambda C^n. Summing layers d = n..D gives the
length of Ext^{n(m-n)+1}(S/I^D, S) = length of H^{n^2-1}_m(S/I^D).
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence, Union

from .ext import cohomological_support
from .poly import MultiPoly, sum_over
from .weights import ProblemSpec, Weight, lambda_zero_padded, schur_dim


class CrossCheckError(ArithmeticError):
    """Two independent computations of the same quantity disagree."""


def eps_var(k: int) -> str:
    return f"eps{k}"


def validate_epsilon(eps: Sequence[int], d: int, spec: ProblemSpec) -> tuple[int, ...]:
    eps = tuple(int(e) for e in eps)
    if len(eps) != spec.n - 1:
        raise ValueError(f"epsilon tuple must have n-1 = {spec.n - 1} entries")
    chain = (d - spec.n,) + eps + (0,)
    if any(a < b for a, b in zip(chain, chain[1:])):
        raise ValueError(f"epsilon {list(eps)} out of window for d={d}")
    return eps


def epsilon_tuples(spec: ProblemSpec, d: int) -> Iterator[tuple[int, ...]]:
    """All 0 <= eps_{n-1} <= .. <= eps_1 <= d-n (none when d < n)."""
    if d < spec.n:
        return
    for comb in itertools.combinations_with_replacement(range(d - spec.n, -1, -1), spec.n - 1):
        yield comb


def layer_weight(eps: Sequence[int], d: int, spec: ProblemSpec) -> Weight:
    eps = validate_epsilon(eps, d, spec)
    base = spec.n - d - spec.m
    return Weight([base + e for e in eps] + [base])


def _term_dim_direct(eps, d, spec) -> int:
    lam = layer_weight(eps, d, spec)
    return schur_dim(lambda_zero_padded(lam, spec), spec.m) * schur_dim(lam, spec.n)


def _cross_factor(k: int, d, ek, spec: ProblemSpec):
    """prod_{i=1}^{m-n} (d - eps_k - 2n + m + k - i) / (m - n + k - i)."""
    m, n = spec.m, spec.n
    out = Fraction(1) if not isinstance(d, MultiPoly) else MultiPoly.const(1)
    for i in range(1, m - n + 1):
        out = out * ((d - ek + (m - 2 * n + k - i)) / Fraction(m - n + k - i))
    return out


def _small_factor(k: int, eps, spec: ProblemSpec):
    """Pairs (i, k), i < k, and (k, n) of the GL_n Weyl product, for eps_k."""
    n = spec.n
    ek = eps[k - 1]
    out = (ek + (n - k)) / Fraction(n - k)
    for i in range(1, k):
        out = out * ((eps[i - 1] - ek + (k - i)) / Fraction(k - i))
    return out


def term_dim_factored(eps: Sequence[int], d: int, spec: ProblemSpec) -> int:
    """Product form: cross factors for every eps_k (eps_n = 0) times dim_small squared."""
    eps = validate_epsilon(eps, d, spec)
    n = spec.n
    val = _cross_factor(n, d, 0, spec)
    for k in range(1, n):
        val *= _cross_factor(k, d, eps[k - 1], spec) * _small_factor(k, eps, spec) ** 2
    if val.denominator != 1:
        raise CrossCheckError(f"non-integral factored dimension {val}")
    return val.numerator


def layer_term_dim(eps: Sequence[int], d: int, spec: ProblemSpec) -> int:
    """dim S_{lambda(0)} C^m * dim S_lambda C^n, checked against the product form."""
    direct = _term_dim_direct(eps, d, spec)
    factored = term_dim_factored(eps, d, spec)
    if direct != factored:
        raise CrossCheckError(f"term dimension mismatch at eps={eps}, d={d}: {direct} != {factored}")
    return direct


def _sum_terms(spec: ProblemSpec, d: int, tuples) -> int:
    return sum(layer_term_dim(e, d, spec) for e in tuples)


def _layer_chunk(args) -> int:
    spec, d, e1 = args
    n = spec.n
    # tuples with fixed eps_1 = e1
    rest = itertools.combinations_with_replacement(range(e1, -1, -1), n - 2)
    return _sum_terms(spec, d, ((e1,) + r for r in rest))


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("DETMULT_THREADS", "1") or 1)
    if workers < 1:
        raise ValueError("worker count must be positive")
    return workers


def layer_length_enum(spec: ProblemSpec, d: int, workers: int | None = 1) -> int:
    """Length of Ext^{top}(I^{d-1}/I^d, S) by summing over all eps-tuples."""
    if d < 1:
        raise ValueError("d must be positive")
    if d < spec.n:
        return 0
    workers = resolve_workers(workers)
    if workers == 1:
        return _sum_terms(spec, d, epsilon_tuples(spec, d))
    jobs = [(spec, d, e1) for e1 in range(d - spec.n + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_layer_chunk, jobs))


# -- symbolic pipeline ------------------------------------------------------

def inner_sum_degrees(spec: ProblemSpec) -> dict[int, int]:
    """Expected total degree of the partial sum after eliminating eps_k."""
    m, n = spec.m, spec.n
    return {k: sum(m - n + 2 * i + 1 for i in range(k, n)) for k in range(1, n)}


def _stage_factor(k: int, spec: ProblemSpec) -> MultiPoly:
    eps = [MultiPoly.var(eps_var(i)) for i in range(1, spec.n)]
    d = MultiPoly.var("d")
    return _cross_factor(k, d, eps[k - 1], spec) * _small_factor(k, eps, spec) ** 2


@lru_cache(maxsize=None)
def layer_length_poly_staged(spec: ProblemSpec) -> tuple[MultiPoly, MultiPoly]:
    """(eps-free prefactor, nested eps-sum) as polynomials in d."""
    n = spec.n
    expected = inner_sum_degrees(spec)
    d = MultiPoly.var("d")
    acc = MultiPoly.const(1)
    for k in range(n - 1, 0, -1):
        upper = d - n if k == 1 else MultiPoly.var(eps_var(k - 1))
        acc = sum_over(_stage_factor(k, spec) * acc, eps_var(k), 0, upper)
        if acc.total_degree() != expected[k]:
            raise CrossCheckError(
                f"degree bookkeeping failed after summing eps{k}: "
                f"got {acc.total_degree()}, expected {expected[k]}"
            )
    prefactor = _cross_factor(n, d, 0, spec)
    return prefactor, acc


@lru_cache(maxsize=None)
def layer_length_poly(spec: ProblemSpec) -> MultiPoly:
    """Layer length as a polynomial in d of degree mn-1."""
    prefactor, nested = layer_length_poly_staged(spec)
    out = prefactor * nested
    if out.degree("d") != spec.dim - 1:
        raise CrossCheckError(f"layer polynomial has degree {out.degree('d')}, expected {spec.dim - 1}")
    return out


@lru_cache(maxsize=None)
def total_length_poly(spec: ProblemSpec) -> MultiPoly:
    """Length of Ext^{top}(S/I^D, S) as a polynomial in D of degree mn."""
    out = sum_over(layer_length_poly(spec), "d", spec.n, "D")
    if out.degree("D") != spec.dim:
        raise CrossCheckError(f"total polynomial has degree {out.degree('D')}, expected {spec.dim}")
    return out


def multiplicity_from_poly(spec: ProblemSpec) -> Fraction:
    """(mn)! times the leading coefficient of the total length polynomial."""
    return factorial(spec.dim) * total_length_poly(spec).leading_coefficient("D")


# -- reports ----------------------------------------------------------------

@dataclass(frozen=True)
class LengthReport:
    spec: ProblemSpec
    D: int
    total: int
    per_layer: tuple[tuple[int, int], ...]
    method: str

    def __post_init__(self):
        if self.total != sum(v for _, v in self.per_layer):
            raise CrossCheckError("total does not equal the sum of layers")

    def to_json_obj(self) -> dict:
        return {
            "m": self.spec.m,
            "n": self.spec.n,
            "D": self.D,
            "method": self.method,
            "total": str(self.total),
            "per_layer": [{"d": d, "length": str(v)} for d, v in self.per_layer],
        }


def _layer_worker(args) -> int:
    spec, d = args
    return layer_length_enum(spec, d, workers=1)


def total_length(spec: ProblemSpec, D: int, method: str = "enumeration",
                 workers: int | None = 1) -> LengthReport:
    if D < 1:
        raise ValueError("D must be positive")
    layers = list(range(spec.n, D + 1))
    if method in ("enumeration", "enum"):
        workers = resolve_workers(workers)
        if workers == 1 or len(layers) < 2:
            vals = [layer_length_enum(spec, d, workers=1) for d in layers]
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                vals = list(pool.map(_layer_worker, [(spec, d) for d in layers]))
        return LengthReport(spec, D, sum(vals), tuple(zip(layers, vals)), "enumeration")
    if method == "symbolic":
        lp = layer_length_poly(spec)
        vals = [_as_int(lp.eval({"d": d})) for d in layers]
        total = _as_int(total_length_poly(spec).eval({"D": D}))
        return LengthReport(spec, D, total, tuple(zip(layers, vals)), "symbolic")
    raise ValueError(f"unknown method {method!r}")


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise CrossCheckError(f"expected an integer value, got {x}")
    return x.numerator


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class Infinite:
    def __str__(self):
        return "inf"


@dataclass(frozen=True)
class Finite:
    value: int

    def __str__(self):
        return str(self.value)


LocalCohomologyLength = Union[Zero, Infinite, Finite]


def local_cohomology_length(spec: ProblemSpec, j: int, D: int) -> LocalCohomologyLength:
    """Length of H^j_m(S/I^D), through Ext^{mn-j}(S/I^D, S)."""
    if not 0 <= j <= spec.dim:
        raise ValueError(f"j must lie in [0, {spec.dim}]")
    jd = spec.dim - j
    for entry in cohomological_support(spec, D):
        if entry.j == jd:
            if entry.s >= 1:
                return Infinite()
            return Finite(total_length(spec, D, "symbolic").total)
    return Zero()


__all__ = [
    "CrossCheckError", "LengthReport", "Zero", "Infinite", "Finite",
    "epsilon_tuples", "layer_weight", "layer_term_dim", "term_dim_factored",
    "layer_length_enum", "layer_length_poly", "layer_length_poly_staged",
    "inner_sum_degrees", "total_length", "total_length_poly",
    "multiplicity_from_poly", "local_cohomology_length",
]
