"""Exact multivariate polynomials over the rationals and discrete summation.

Coefficients are :class:`fractions.Fraction`. A polynomial is a sparse map
from exponent vectors to nonzero coefficients, over a sorted tuple of
variable names.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Union

Rational = Fraction
Scalar = Union[int, Fraction]

NEG_INF = float("-inf")


def _var_key(name: str):
    # natural order so eps10 sorts after eps9
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


def _canonical_vars(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=_var_key))


class MultiPoly:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping[tuple, Scalar] | None = None):
        variables = tuple(variables)
        canon = _canonical_vars(variables)
        if len(canon) != len(variables):
            raise ValueError(f"duplicate variable names in {variables!r}")
        perm = [variables.index(v) for v in canon]
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != len(variables):
                raise ValueError("exponent vector length does not match variables")
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent")
            c = Fraction(c)
            if c:
                key = tuple(exp[i] for i in perm)
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self._vars = canon
        self._terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict) -> MultiPoly:
        # trusted fast path: variables canonical, terms already cleaned
        obj = cls.__new__(cls)
        obj._vars = variables
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> MultiPoly:
        c = Fraction(c)
        return cls._raw((), {(): c} if c else {})

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        return cls._raw((name,), {(1,): Fraction(1)})

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls._raw((), {})

    # -- accessors ---------------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self):
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self._terms:
            return NEG_INF
        return max(sum(e) for e in self._terms)

    def degree(self, var: str | None = None):
        """Degree in ``var`` (or total degree if ``var`` is None)."""
        if var is None:
            return self.total_degree()
        if not self._terms:
            return NEG_INF
        if var not in self._vars:
            return 0
        i = self._vars.index(var)
        return max(e[i] for e in self._terms)

    def free_variables(self) -> tuple[str, ...]:
        """Variables that actually occur with positive exponent."""
        used = [any(e[i] for e in self._terms) for i in range(len(self._vars))]
        return tuple(v for v, u in zip(self._vars, used) if u)

    def coeff_in(self, var: str, k: int) -> MultiPoly:
        """Coefficient of ``var**k``, as a polynomial in the remaining variables."""
        if var not in self._vars:
            return self if k == 0 else MultiPoly.zero()
        i = self._vars.index(var)
        rest = self._vars[:i] + self._vars[i + 1:]
        out = {}
        for e, c in self._terms.items():
            if e[i] == k:
                out[e[:i] + e[i + 1:]] = c
        return MultiPoly._raw(rest, out)

    def leading_coefficient(self, var: str | None = None):
        """Leading coefficient in ``var``; for univariate input, a Fraction.

        With ``var`` None the polynomial must have at most one free variable.
        """
        if var is None:
            free = self.free_variables()
            if len(free) > 1:
                raise ValueError("leading_coefficient needs a variable for multivariate input")
            if not free:
                return self._terms.get(tuple(0 for _ in self._vars), Fraction(0))
            var = free[0]
        if not self._terms:
            return Fraction(0)
        lc = self.coeff_in(var, self.degree(var))
        return lc.as_constant() if not lc.free_variables() else lc

    def as_constant(self) -> Fraction:
        if self.free_variables():
            raise ValueError("polynomial is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def _align(self, other: MultiPoly):
        if self._vars == other._vars:
            return self._vars, self._terms, other._terms
        vs = _canonical_vars(self._vars + other._vars)
        return vs, _embed(self, vs), _embed(other, vs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        vs, a, b = self._align(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(vs, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._vars:
            c = other.as_constant()
            if not c:
                return MultiPoly._raw(self._vars, {})
            return MultiPoly._raw(self._vars, {e: v * c for e, v in self._terms.items()})
        vs, a, b = self._align(other)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return MultiPoly._raw(vs, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, c: Scalar):
        c = Fraction(c)
        return MultiPoly._raw(self._vars, {e: v / c for e, v in self._terms.items()})

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        vs, a, b = self._align(other)
        return a == b

    def __hash__(self):
        if self._hash is None:
            free = self.free_variables()
            self._hash = hash(self.restrict_to(free)._canon_items())
        return self._hash

    def _canon_items(self):
        return (self._vars, tuple(sorted(self._terms.items())))

    def restrict_to(self, variables: Iterable[str]) -> MultiPoly:
        """Drop unused variables (those must not occur)."""
        vs = _canonical_vars(variables)
        return MultiPoly._raw(vs, _embed(self, vs))

    # -- evaluation and substitution --------------------------------------

    def __call__(self, **assignment):
        return self.eval(assignment)

    def eval(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a full assignment of the occurring variables."""
        for v in self.free_variables():
            if v not in assignment:
                raise KeyError(f"unbound variable {v!r}")
        vals = [Fraction(assignment[v]) if v in assignment else Fraction(0) for v in self._vars]
        total = Fraction(0)
        for e, c in self._terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t *= x ** k
            total += t
        return total

    def substitute(self, var: str, value: Union[MultiPoly, Scalar]) -> MultiPoly:
        """Replace ``var`` by a polynomial or number (Horner in ``var``)."""
        if var not in self._vars:
            return self
        value = _coerce(value)
        deg = self.degree(var)
        if deg == NEG_INF:
            return self
        result = MultiPoly.zero()
        for k in range(deg, -1, -1):
            result = result * value + self.coeff_in(var, k)
        return result

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> dict:
        terms = sorted(self._terms.items())
        return {
            "vars": list(self._vars),
            "terms": [
                {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in terms
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> MultiPoly:
        terms = {tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in obj["terms"]}
        return cls(obj["vars"], terms)

    @classmethod
    def from_json(cls, text: str) -> MultiPoly:
        return cls.from_json_obj(json.loads(text))

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda t: (-sum(t[0]), [-x for x in t[0]])):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self._vars, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(x):
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return MultiPoly.const(x)
    return NotImplemented


def _embed(p: MultiPoly, vs: tuple[str, ...]) -> dict:
    idx = {v: i for i, v in enumerate(vs)}
    for v in p._vars:
        if v not in idx and p.degree(v) > 0:
            raise ValueError(f"variable {v!r} occurs but is not in target set")
    pos = [idx.get(v) for v in p._vars]
    out = {}
    n = len(vs)
    for e, c in p._terms.items():
        new = [0] * n
        for i, k in zip(pos, e):
            if i is not None:
                new[i] = k
        out[tuple(new)] = c
    return out


def poly_arith(p: MultiPoly, q: MultiPoly, kind: str) -> MultiPoly:
    if kind == "add":
        return p + q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown kind {kind!r}")


def poly_eval(p: MultiPoly, assignment: Mapping[str, Scalar]) -> Fraction:
    return p.eval(assignment)


# -- Bernoulli numbers and summation ---------------------------------------

@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k with B_1 = -1/2."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Fraction(1)
    # sum_{j=0}^{k} C(k+1, j) B_j = 0
    s = sum(comb(k + 1, j) * bernoulli(j) for j in range(k))
    return -s / (k + 1)


def faulhaber(p: int, var: str = "b") -> MultiPoly:
    """Closed form of sum_{k=1}^{b} k^p built from Bernoulli numbers.

    Written with B_1 = +1/2 folded into the explicit ``b^p/2`` term.
    """
    b = MultiPoly.var(var)
    if p == 0:
        return b
    out = b ** (p + 1) / (p + 1) + b ** p / 2
    for k in range(2, p + 1):
        out = out + b ** (p - k + 1) * (bernoulli(k) / factorial(k) * Fraction(factorial(p), factorial(p - k + 1)))
    return out


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def _binomial_poly(shift: int, k: int, var: str) -> MultiPoly:
    """C(var + shift, k) as a polynomial in ``var``."""
    x = MultiPoly.var(var)
    out = MultiPoly.const(1)
    for i in range(k):
        out = out * (x + (shift - i))
    return out / factorial(k)


def _prefix_sum(p: MultiPoly, v: str, u: str) -> MultiPoly:
    """F(u) = sum_{v=0}^{u} p(v), via the binomial basis.

    v^j = sum_k S(j,k) k! C(v,k) and sum_{v=0}^{u} C(v,k) = C(u+1,k+1).
    """
    deg = p.degree(v)
    if deg == NEG_INF:
        return MultiPoly.zero()
    out = MultiPoly.zero()
    for k in range(deg + 1):
        # coefficient of C(v,k) in p
        ck = MultiPoly.zero()
        for j in range(k, deg + 1):
            s = _stirling2(j, k)
            if s:
                ck = ck + p.coeff_in(v, j) * (s * factorial(k))
        if not ck.is_zero():
            out = out + ck * _binomial_poly(1, k + 1, u)
    return out


def sum_over(p: MultiPoly, v: str, lower: int, upper: Union[str, MultiPoly, int]) -> MultiPoly:
    """Return Q with Q = sum_{v=lower}^{upper} p exactly.

    ``upper`` is a variable name or an affine polynomial in one variable. The
    identity holds for every integer value of the upper bound that is at least
    ``lower - 1``; at ``lower - 1`` the result is 0.
    """
    if isinstance(upper, str):
        upper = MultiPoly.var(upper)
    upper = _coerce(upper)
    if upper is NotImplemented:
        raise TypeError("upper must be a variable name or polynomial")
    if upper.total_degree() > 1 or len(upper.free_variables()) > 1:
        raise ValueError("upper bound must be an affine expression in one variable")
    if v in upper.free_variables():
        raise ValueError("upper bound may not mention the summation variable")
    u = "__upper__"
    while u in p.variables:
        u += "_"
    F = _prefix_sum(p, v, u)
    # sum_{v=L}^{U} = F(U) - F(L-1); F(-1) = 0 by construction
    tail = F.substitute(u, lower - 1) if lower != 0 else MultiPoly.zero()
    return (F - tail).substitute(u, upper)
