"""Closed-form multiplicity through the Selberg integral, plus a Monte Carlo check."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, sqrt

import numpy as np

from .weights import ProblemSpec

MIN_MC_SAMPLES = 10_000


def gamma_int(k: int) -> int:
    """Gamma at a positive integer, (k-1)!."""
    if k < 1:
        raise ValueError(f"Gamma only evaluated at positive integers, got {k}")
    return factorial(k - 1)


@dataclass(frozen=True)
class SelbergParams:
    n: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("n", "a", "b", "c"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"{name} must be an integer")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.a <= 0 or self.b <= 0:
            raise ValueError("Selberg integral requires a > 0 and b > 0")
        if self.c < 0:
            raise ValueError("only nonnegative integer c is supported")


def selberg_value(p: SelbergParams) -> Fraction:
    """Exact S_n(a, b, c) as a Gamma product."""
    n, a, b, c = p.n, p.a, p.b, p.c
    out = Fraction(1)
    for i in range(n):
        num = gamma_int(a + i * c) * gamma_int(b + i * c) * gamma_int(1 + (i + 1) * c)
        den = gamma_int(a + b + (n + i - 1) * c) * gamma_int(1 + c)
        out *= Fraction(num, den)
    return out


def constant_C(spec: ProblemSpec) -> Fraction:
    m, n = spec.m, spec.n
    den = 1
    for i in range(1, n + 1):
        den *= factorial(n - i) * factorial(m - i)
    return Fraction(factorial(m * n - 1), den)


def simplex_integral_exact(spec: ProblemSpec) -> Fraction:
    """Integral over the ordered simplex of prod (1-x)^(m-n) x^2 * Vandermonde^2."""
    k = spec.n - 1
    return selberg_value(SelbergParams(k, 3, spec.m - spec.n + 1, 1)) / factorial(k)


def multiplicity_selberg(spec: ProblemSpec) -> Fraction:
    return constant_C(spec) * simplex_integral_exact(spec)


def multiplicity_closed(spec: ProblemSpec) -> Fraction:
    """(mn)! prod_{i=0}^{n-1} i!/(m+i)!."""
    m, n = spec.m, spec.n
    out = Fraction(factorial(m * n))
    for i in range(n):
        out *= Fraction(factorial(i), factorial(m + i))
    return out


# -- Monte Carlo ------------------------------------------------------------

@dataclass(frozen=True)
class MCResult:
    estimate: float
    standard_error: float
    samples: int
    seed: int
    workers: int

    def to_json_obj(self) -> dict:
        return {
            "estimate": repr(self.estimate),
            "standard_error": repr(self.standard_error),
            "samples": self.samples,
            "seed": self.seed,
            "workers": self.workers,
        }


def simplex_integrand(x: np.ndarray, spec: ProblemSpec) -> np.ndarray:
    """Integrand at rows of ``x`` (shape (N, n-1))."""
    e = spec.m - spec.n
    vals = np.prod((1.0 - x) ** e * x ** 2, axis=1)
    k = x.shape[1]
    for i in range(k):
        for j in range(i + 1, k):
            vals = vals * (x[:, i] - x[:, j]) ** 2
    return vals


def _worker_values(spec: ProblemSpec, seed_seq: np.random.SeedSequence, count: int) -> np.ndarray:
    rng = np.random.default_rng(seed_seq)
    x = rng.random((count, spec.n - 1))
    # descending order puts each point in the ordered simplex
    x = -np.sort(-x, axis=1)
    return simplex_integrand(x, spec)


def simplex_integral_mc(spec: ProblemSpec, samples: int, seed: int, workers: int = 1) -> MCResult:
    """Plain Monte Carlo over the unit cube, folded onto the ordered simplex.

    Each worker draws from its own SeedSequence child; values are concatenated
    in worker order, so the result depends only on (seed, samples, workers).
    """
    if samples < MIN_MC_SAMPLES:
        raise ValueError(f"samples too small: need at least {MIN_MC_SAMPLES}")
    if workers < 1:
        raise ValueError("workers must be positive")
    children = np.random.SeedSequence(seed).spawn(workers)
    base, extra = divmod(samples, workers)
    counts = [base + (1 if w < extra else 0) for w in range(workers)]
    if workers == 1:
        parts = [_worker_values(spec, children[0], counts[0])]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda a: _worker_values(spec, *a), zip(children, counts)))
    vals = np.concatenate(parts)
    scale = 1.0 / factorial(spec.n - 1)
    est = float(vals.mean()) * scale
    se = float(vals.std(ddof=1)) / sqrt(samples) * scale
    return MCResult(est, se, samples, seed, workers)
