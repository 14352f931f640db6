"""Multiplicity report combining the closed, Selberg and polynomial routes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .length import multiplicity_from_poly, total_length_poly
from .poly import MultiPoly
from .selberg import multiplicity_closed, multiplicity_selberg
from .weights import ProblemSpec

METHODS = ("closed", "selberg", "polynomial")


def fraction_str(x: Fraction | None) -> str | None:
    if x is None:
        return None
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class MultiplicityReport:
    spec: ProblemSpec
    j: int
    length_poly: MultiPoly | None
    epsilon_polynomial: Fraction | None
    epsilon_selberg: Fraction | None
    epsilon_closed: Fraction | None

    @property
    def values(self) -> list[Fraction]:
        return [v for v in (self.epsilon_closed, self.epsilon_selberg, self.epsilon_polynomial) if v is not None]

    @property
    def agree(self) -> bool:
        return len(set(self.values)) <= 1

    def to_json_obj(self) -> dict:
        return {
            "m": self.spec.m,
            "n": self.spec.n,
            "j": self.j,
            "length_poly": self.length_poly.to_json_obj() if self.length_poly is not None else None,
            "epsilon_polynomial": fraction_str(self.epsilon_polynomial),
            "epsilon_selberg": fraction_str(self.epsilon_selberg),
            "epsilon_closed": fraction_str(self.epsilon_closed),
            "agree": self.agree,
        }


def multiplicity_report(spec: ProblemSpec, method: str = "all") -> MultiplicityReport:
    """Evaluate eps^{n^2-1}(I) by the requested route(s)."""
    if method != "all" and method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    want = set(METHODS) if method == "all" else {method}
    poly = total_length_poly(spec) if "polynomial" in want else None
    return MultiplicityReport(
        spec=spec,
        j=spec.n ** 2 - 1,
        length_poly=poly,
        epsilon_polynomial=multiplicity_from_poly(spec) if poly is not None else None,
        epsilon_selberg=multiplicity_selberg(spec) if "selberg" in want else None,
        epsilon_closed=multiplicity_closed(spec) if "closed" in want else None,
    )
