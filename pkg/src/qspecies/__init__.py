"""Exact rational cardinalities of finite groupoids and combinatorial species.

Every rational a/b is the cardinality of a finite groupoid (b one-object
components with a automorphisms each give a/b... and a copies of one object
with b automorphisms do too); signed pairs reach the negatives.  Species turn
those groupoids into exponential generating series with exact coefficients,
and the alternating geometric inverse produces Bernoulli and Euler tables by
purely combinatorial means, cross-checked against series arithmetic.
"""

from .numeric import (
    DomainError,
    EnumerationLimitError,
    Rational,
    enumerate_compositions,
    enumerate_set_partitions,
    format_rational,
    multinomial,
    parse_rational,
    rat,
    rat_arith,
)
from .groupoid import (
    Component,
    FiniteGroupoid,
    GradedGroupoid,
    GroupAction,
    cardinality,
    cyclic,
    discrete,
    group_of_order,
    increasing_factorial,
    named_groupoid,
    power_quotient,
    quotient,
)
from .species import (
    Species,
    binomial_power,
    constant_species,
    egf_of,
    geom_inverse,
    one_species,
    promote,
    scaled_reciprocal,
    substitute_xy,
    zero_species,
)
from .egf import Polynomial, TruncatedEGF, binomial_series, exp_series
from .catalog import builtin_names, make
from .numbers import NumberTable, PolynomialTable

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "EnumerationLimitError",
    "Rational",
    "rat",
    "rat_arith",
    "format_rational",
    "parse_rational",
    "multinomial",
    "enumerate_compositions",
    "enumerate_set_partitions",
    "Component",
    "FiniteGroupoid",
    "GradedGroupoid",
    "GroupAction",
    "cardinality",
    "discrete",
    "cyclic",
    "group_of_order",
    "named_groupoid",
    "quotient",
    "power_quotient",
    "increasing_factorial",
    "Species",
    "constant_species",
    "zero_species",
    "one_species",
    "promote",
    "substitute_xy",
    "geom_inverse",
    "scaled_reciprocal",
    "binomial_power",
    "egf_of",
    "TruncatedEGF",
    "Polynomial",
    "exp_series",
    "binomial_series",
    "make",
    "builtin_names",
    "NumberTable",
    "PolynomialTable",
    "__version__",
]
