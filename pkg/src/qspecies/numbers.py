"""Bernoulli and Euler numbers and polynomials, each by independent routes.

Routes:

* "species"  - cardinality tables of groupoid-valued species built from the
  alternating geometric inverse.
* "series"   - truncated-series arithmetic (monomial division, reciprocal).
* "formula"  - a direct closed evaluation: the alternating sum over integer
  compositions for Bernoulli, the classical recurrences for the rest.
* "oracle"   - classical recurrences, used as the independent cross-check.

Tables of the same kind computed by different routes must agree entrywise;
that equality is the whole point of the construction and is what the
acceptance suite pins down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numeric import (
    COMPOSITION_CAP,
    DomainError,
    EnumerationLimitError,
    format_rational,
)
from .egf import (
    Polynomial,
    TruncatedEGF,
    diagonal_series,
    exp_series,
    one_series,
    promote_series,
)
from .species import Species, egf_of, geom_inverse, promote, substitute_xy, constant_species
from .groupoid import group_of_order
from .catalog import dec_fact, exp_species

__all__ = [
    "NumberTable",
    "PolynomialTable",
    "bernoulli_recurrence",
    "bernoulli_formula",
    "bernoulli_species",
    "bernoulli_series",
    "generalized_bernoulli_species",
    "generalized_bernoulli_series",
    "bernoulli_poly_classical",
    "bernoulli_poly_species",
    "bernoulli_poly_series",
    "euler_recurrence",
    "euler_species",
    "euler_series",
    "euler_poly_recurrence",
    "euler_poly_species",
    "euler_poly_series",
]


@dataclass(frozen=True)
class NumberTable:
    kind: str
    route: str
    values: tuple[Fraction, ...]

    def matches(self, other: "NumberTable") -> bool:
        return self.kind == other.kind and self.values == other.values

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "route": self.route,
            "values": [format_rational(v) for v in self.values],
        }


@dataclass(frozen=True)
class PolynomialTable:
    kind: str
    route: str
    polys: tuple[Polynomial, ...]

    def matches(self, other: "PolynomialTable") -> bool:
        return self.kind == other.kind and self.polys == other.polys

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "route": self.route,
            "polynomials": [p.to_strings() for p in self.polys],
        }


def _kind(base: str, level: int) -> str:
    return base if level == 1 else "%s(N=%d)" % (base, level)


def _coefficients(series: TruncatedEGF, count: int) -> tuple[Fraction, ...]:
    return tuple(series.coefficient((n,)) for n in range(count + 1))


# -- Bernoulli numbers -----------------------------------------------------


def bernoulli_recurrence(count: int) -> NumberTable:
    """Classical recurrence: sum of binom(n+1, k) B_k over k <= n vanishes.

    First kind convention: B_1 = -1/2.
    """
    values = [Fraction(1)]
    for n in range(1, count + 1):
        total = sum(math.comb(n + 1, k) * values[k] for k in range(n))
        values.append(Fraction(-total, n + 1))
    return NumberTable("bernoulli", "oracle", tuple(values))


def bernoulli_formula(count: int) -> NumberTable:
    """Direct alternating sum over integer compositions:

        B_n = sum over compositions (a_1..a_k) of n of
              (-1)^k n! / ((a_1+1)! ... (a_k+1)!).

    Terms are grouped by denominator so the 2^(n-1) summands stay integer
    bookkeeping until the end.
    """
    if count > COMPOSITION_CAP:
        raise EnumerationLimitError(
            "composition formula: n=%d exceeds cap %d" % (count, COMPOSITION_CAP)
        )
    fact = [math.factorial(i + 1) for i in range(count + 2)]
    values = [Fraction(1)]
    for n in range(1, count + 1):
        groups: dict[int, int] = {}

        def rec(remaining: int, denom: int, sign: int) -> None:
            if remaining == 0:
                groups[denom] = groups.get(denom, 0) + sign
                return
            for first in range(remaining, 0, -1):
                rec(remaining - first, denom * fact[first], -sign)

        rec(n, 1, 1)
        nf = math.factorial(n)
        values.append(sum(Fraction(nf * c, d) for d, c in sorted(groups.items())))
    return NumberTable("bernoulli", "formula", tuple(values))


def _generalized_inverse_species(f: Species, level: int) -> Species:
    """The species whose cardinality table is the generalized Bernoulli EGF.

    Hadamard with the falling-factorial species kills sizes below `level`,
    the level-fold derivative shifts the survivors down, and the geometric
    inverse then inverts 1 plus level! copies of the positive part.
    """
    if level < 1:
        raise DomainError("level must be >= 1")
    if f.sorts != 1:
        raise DomainError("generalized table needs a single-sort species")
    from .groupoid import GRADED_UNIT

    if f.value((level,)) != GRADED_UNIT:
        raise DomainError("species must be the unit groupoid at size %d" % level)
    shifted = f.hadamard(dec_fact(level))
    for _ in range(level):
        shifted = shifted.derivative()
    return geom_inverse(shifted.positive_part().replicate(math.factorial(level)))


def generalized_bernoulli_species(f: Species, level: int, count: int) -> NumberTable:
    inverse = _generalized_inverse_species(f, level)
    return NumberTable(
        _kind("bernoulli", level), "species", _coefficients(egf_of(inverse, count), count)
    )


def generalized_bernoulli_series(f: TruncatedEGF, level: int, count: int) -> NumberTable:
    """x^level / level! divided by the tail of f above degree level."""
    if level < 1:
        raise DomainError("level must be >= 1")
    if f.nvars != 1:
        raise DomainError("generalized table needs a one-variable series")
    if f.order < count + level:
        raise DomainError(
            "series order %d too small for count %d at level %d" % (f.order, count, level)
        )
    tail = f.sub(f.keep_below(level))
    norm = tail.monomial_div(level).scalar_mul(math.factorial(level))
    return NumberTable(
        _kind("bernoulli", level), "series", _coefficients(norm.reciprocal(), count)
    )


def bernoulli_species(count: int, level: int = 1) -> NumberTable:
    return generalized_bernoulli_species(exp_species(), level, count)


def bernoulli_series(count: int, level: int = 1) -> NumberTable:
    return generalized_bernoulli_series(exp_series(count + level), level, count)


# -- Bernoulli polynomials -------------------------------------------------


def bernoulli_poly_classical(count: int) -> PolynomialTable:
    """Oracle: row n is sum of binom(n, k) B_k x^(n-k) with recurrence B_k."""
    numbers = bernoulli_recurrence(count).values
    polys = []
    for n in range(count + 1):
        coeffs = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            coeffs[n - k] = math.comb(n, k) * numbers[k]
        polys.append(Polynomial(coeffs))
    return PolynomialTable("bernoulli-polynomials", "oracle", tuple(polys))


def bernoulli_poly_species(count: int, level: int = 1) -> PolynomialTable:
    """Diagonal substitution of the exponential times the promoted inverse."""
    inverse = _generalized_inverse_species(exp_species(), level)
    two = substitute_xy(exp_species()) * promote(inverse, 2)
    table = egf_of(two, 2 * count)
    return PolynomialTable(
        _kind("bernoulli-polynomials", level),
        "species",
        tuple(table.extract_polynomials()[: count + 1]),
    )


def bernoulli_poly_series(count: int, level: int = 1) -> PolynomialTable:
    f = exp_series(2 * count + level)
    tail = f.sub(f.keep_below(level))
    norm = tail.monomial_div(level).scalar_mul(math.factorial(level))
    two = diagonal_series(exp_series(count)).mul(promote_series(norm.reciprocal(), 2))
    return PolynomialTable(
        _kind("bernoulli-polynomials", level),
        "series",
        tuple(two.extract_polynomials()[: count + 1]),
    )


# -- Euler numbers and polynomials ----------------------------------------


def _euler_inverse_species() -> Species:
    """Inverse of 1 plus half of the nonempty-set species; table 2/(1+e^x)."""
    half = constant_species(group_of_order(2), 1)
    return geom_inverse(half * exp_species().positive_part())


def euler_poly_recurrence(count: int) -> PolynomialTable:
    """Oracle recurrence: E_n(x) = x^n - (1/2) sum binom(n, k) E_k(x), k < n."""
    polys = [Polynomial([1])]
    for n in range(1, count + 1):
        acc = Polynomial([])
        for k in range(n):
            acc = acc + polys[k].scale(math.comb(n, k))
        polys.append(Polynomial.monomial(n) - acc.scale(Fraction(1, 2)))
    return PolynomialTable("euler-polynomials", "oracle", tuple(polys))


def euler_recurrence(count: int) -> NumberTable:
    """Euler numbers are the polynomial values at zero."""
    polys = euler_poly_recurrence(count).polys
    return NumberTable("euler", "oracle", tuple(p(0) for p in polys))


def euler_species(count: int) -> NumberTable:
    series = egf_of(_euler_inverse_species(), count)
    return NumberTable("euler", "species", _coefficients(series, count))


def euler_series(count: int) -> NumberTable:
    half = (one_series(count) + exp_series(count)).scalar_mul(Fraction(1, 2))
    return NumberTable("euler", "series", _coefficients(half.reciprocal(), count))


def euler_poly_species(count: int) -> PolynomialTable:
    two = substitute_xy(exp_species()) * promote(_euler_inverse_species(), 2)
    table = egf_of(two, 2 * count)
    return PolynomialTable(
        "euler-polynomials", "species", tuple(table.extract_polynomials()[: count + 1])
    )


def euler_poly_series(count: int) -> PolynomialTable:
    order = 2 * count
    half = (one_series(order) + exp_series(order)).scalar_mul(Fraction(1, 2))
    two = diagonal_series(exp_series(count)).mul(promote_series(half.reciprocal(), 2))
    return PolynomialTable(
        "euler-polynomials", "series", tuple(two.extract_polynomials()[: count + 1])
    )
