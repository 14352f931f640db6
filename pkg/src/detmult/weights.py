"""Dominant weights and Schur-module dimensions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class InvalidWeight(ValueError):
    pass


class WindowViolation(ValueError):
    pass


@dataclass(frozen=True)
class Weight:
    """Weakly decreasing integer sequence, possibly with negative entries."""

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        entries = tuple(int(x) for x in entries)
        if not entries:
            raise InvalidWeight("weight must have at least one entry")
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise InvalidWeight(f"weight {list(entries)} is not dominant")
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def to_json_obj(self) -> list[int]:
        return list(self.entries)


@dataclass(frozen=True)
class ProblemSpec:
    """Shape m x n of the generic matrix; maximal minors are n x n."""

    m: int
    n: int

    def __post_init__(self):
        if not (self.m > self.n > 1):
            raise ValueError(f"requires m > n > 1, got m={self.m}, n={self.n}")

    @property
    def top_index(self) -> int:
        """Cohomological index n(m-n)+1 of the finite-length Ext module."""
        return self.n * (self.m - self.n) + 1

    @property
    def dim(self) -> int:
        return self.m * self.n


def schur_dim(lam: Weight | Sequence[int], N: int | None = None) -> int:
    """Dimension of S_lambda C^N by the Weyl product formula.

    Numerator and denominator are accumulated separately and divided once;
    a nonzero remainder means the input was not a valid weight.
    """
    if not isinstance(lam, Weight):
        lam = Weight(lam)
    if N is None:
        N = len(lam)
    if len(lam) != N:
        raise InvalidWeight(f"weight has length {len(lam)}, expected {N}")
    num = den = 1
    e = lam.entries
    for i in range(N):
        for j in range(i + 1, N):
            num *= e[i] - e[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-integral Schur dimension for {e}")
    return q


def shift_weight(lam: Weight, c: int) -> Weight:
    return Weight(x + c for x in lam)


def lambda_of_s(lam: Weight, s: int, spec: ProblemSpec) -> Weight:
    """The GL_m weight paired with ``lam`` in the Ext decomposition.

    (lam_1..lam_s, (s-n)^(m-n), lam_{s+1}+(m-n), .., lam_n+(m-n)); requires
    lam_s >= s-n and lam_{s+1} <= s-m.
    """
    m, n = spec.m, spec.n
    if len(lam) != n:
        raise InvalidWeight(f"weight must have length n={n}")
    if not 0 <= s <= n:
        raise ValueError("s must lie in [0, n]")
    if s >= 1 and lam[s - 1] < s - n:
        raise WindowViolation("weight window violated: lambda_s < s-n")
    if s < n and lam[s] > s - m:
        raise WindowViolation("weight window violated: lambda_{s+1} > s-m")
    out = list(lam[:s]) + [s - n] * (m - n) + [x + (m - n) for x in lam[s:]]
    try:
        return Weight(out)
    except InvalidWeight as exc:  # unreachable given the checks above
        raise WindowViolation("weight window violated") from exc


def lambda_zero_padded(lam: Weight, spec: ProblemSpec) -> Weight:
    """((-m)^(m-n), lam): the s=0 weight up to a uniform shift by m-n."""
    if lam[0] > -spec.m:
        raise WindowViolation("weight window violated: lambda_1 > -m")
    return Weight([-spec.m] * (spec.m - spec.n) + list(lam))
