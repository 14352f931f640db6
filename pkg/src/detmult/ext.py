"""Index data for the Ext decomposition of S/I^d: filtration factors and weight windows."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .weights import ProblemSpec


def _pad(z: Sequence[int], n: int) -> tuple[int, ...]:
    z = tuple(z)
    if len(z) > n:
        if any(z[n:]):
            raise ValueError(f"partition {z} has more than {n} nonzero parts")
        z = z[:n]
    return z + (0,) * (n - len(z))


def is_partition(z: Sequence[int]) -> bool:
    return all(x >= 0 for x in z) and all(a >= b for a, b in zip(z, z[1:]))


@dataclass(frozen=True)
class FiltrationFactor:
    """A pair (z, l) indexing one factor of the filtration of S/I_p^d."""

    z: tuple[int, ...]
    l: int

    def to_json_obj(self) -> dict:
        return {"z": list(self.z), "l": self.l}


def zdp_member(z: Sequence[int], l: int, p: int, d: int, n: int) -> bool:
    """Membership of (z, l) in the factor index set for S/I_p^d."""
    z = _pad(z, n)
    if not 0 <= l <= p - 1:
        return False
    if not is_partition(z):
        return False
    if l + 1 > n:
        return False
    z1 = z[0]
    if any(x != z1 for x in z[: l + 1]) or z1 > d - 1:
        return False
    size = sum(z)
    return size + (d - z1) * l + 1 <= p * d <= size + (d - z1) * (l + 1)


def enumerate_zdn_maximal(spec: ProblemSpec, d: int) -> list[FiltrationFactor]:
    """Factors for maximal minors: ((c^n), n-1) for 0 <= c <= d-1."""
    if d < 1:
        raise ValueError("d must be positive")
    n = spec.n
    return [FiltrationFactor((c,) * n, n - 1) for c in range(d)]


@dataclass(frozen=True)
class WeightWindow:
    """Constraint set on dominant GL_n weights lambda for given (z, l, t, s).

    Indices in the constraints are 1-based, as in the usual statement:
        lambda_n >= l - z_l - m
        lambda_{t_i + i} = t_i - z_{n+1-i} - m      (i = 1..n-l)
        lambda_s >= s - n,  lambda_{s+1} <= s - m
    """

    m: int
    n: int
    s: int
    t: tuple[int, ...]
    z: tuple[int, ...]
    l: int

    def __post_init__(self):
        object.__setattr__(self, "z", _pad(self.z, self.n))
        object.__setattr__(self, "t", tuple(self.t))
        if len(self.t) != self.n - self.l:
            raise ValueError("t must have n-l entries")
        if any(a > b for a, b in zip(self.t, self.t[1:])) or (self.t and self.t[-1] > self.l):
            raise ValueError("t must be weakly increasing and bounded by l")

    @classmethod
    def maximal(cls, spec: ProblemSpec, s: int, c: int) -> WeightWindow:
        n = spec.n
        return cls(spec.m, n, s, (n - 1,), (c,) * n, n - 1)

    @property
    def is_maximal_case(self) -> bool:
        n = self.n
        return self.l == n - 1 and self.t == (n - 1,) and len(set(self.z)) == 1

    def contains(self, lam: Sequence[int]) -> bool:
        m, n, s, l, z = self.m, self.n, self.s, self.l, self.z
        lam = tuple(lam)
        if len(lam) != n or any(a < b for a, b in zip(lam, lam[1:])):
            return False
        # z_l for l = 0 falls back to z_1
        if lam[n - 1] < l - z[max(l, 1) - 1] - m:
            return False
        for i, ti in enumerate(self.t, start=1):
            if lam[ti + i - 1] != ti - z[n - i] - m:
                return False
        if s >= 1 and lam[s - 1] < s - n:
            return False
        if s < n and lam[s] > s - m:
            return False
        return True

    def search(self, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
        """Dominant weights with entries in [lo, hi] lying in the window."""
        for comb in itertools.combinations_with_replacement(range(hi, lo - 1, -1), self.n):
            if self.contains(comb):
                yield comb


def window_nonempty(w: WeightWindow) -> bool:
    """Closed nonemptiness criterion for the maximal-minor windows.

    With lambda_n pinned to n-1-c-m < 0, the window is nonempty iff
    n-1-c-m <= s-m, i.e. c >= n-1-s. For s = n the lower bound lambda_n >= 0
    contradicts the pinned value, so that window is always empty.
    """
    if not w.is_maximal_case:
        raise ValueError("closed criterion only covers the maximal-minor case")
    if w.s >= w.n:
        return False
    return w.z[0] >= w.n - 1 - w.s


@dataclass(frozen=True)
class SupportEntry:
    j: int
    s: int
    finite: bool
    threshold_d: int

    def to_json_obj(self) -> dict:
        return {"j": self.j, "s": self.s, "finite": self.finite, "threshold_d": self.threshold_d}


def ext_index(spec: ProblemSpec, s: int) -> int:
    return spec.top_index - s * (spec.m - spec.n)


def cohomological_support(spec: ProblemSpec, d: int) -> list[SupportEntry]:
    """Nonvanishing Ext^j(S/I^d, S), sorted by j."""
    if d < 1:
        raise ValueError("d must be positive")
    out = []
    for s in range(spec.n):
        if any(window_nonempty(WeightWindow.maximal(spec, s, c)) for c in range(d)):
            out.append(SupportEntry(ext_index(spec, s), s, s == 0, spec.n - s))
    return sorted(out, key=lambda e: e.j)
