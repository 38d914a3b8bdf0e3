"""Exact arithmetic on power semigroups of numerical semigroups."""

from .errors import (
    CapExceeded,
    CofinitenessError,
    GroundSetError,
    InputError,
    PowerSemigroupError,
    PreconditionError,
    ThresholdOverflow,
)
from .numsgp import NumericalSemigroup, build_from_generators, contains, frobenius_of, gaps, parse_semigroup
from .setrep import PSet, canonicalize, member, min_of, parse_pset, semiline
from .sumset import add, power, translate, truncate

__all__ = [
    "CapExceeded",
    "CofinitenessError",
    "GroundSetError",
    "InputError",
    "NumericalSemigroup",
    "PSet",
    "PowerSemigroupError",
    "PreconditionError",
    "ThresholdOverflow",
    "add",
    "build_from_generators",
    "canonicalize",
    "contains",
    "frobenius_of",
    "gaps",
    "member",
    "min_of",
    "parse_pset",
    "parse_semigroup",
    "power",
    "semiline",
    "translate",
    "truncate",
]

__version__ = "0.1.0"
