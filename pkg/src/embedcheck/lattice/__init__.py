"""Normal-subgroup machinery of a fixed ambient group."""

from .classes import ConjClass, conjugacy_classes
from .normal import (
    ChiefFactorPair,
    NormalLattice,
    chief_series,
    chief_series_through,
    is_chief_factor,
    maximal_g_invariant_in,
    minimal_normal_subgroups,
    normal_closure,
    normal_subgroups,
)
from .quotient import QuotientMap, quotient_group


__all__ = [
    "ChiefFactorPair",
    "ConjClass",
    "NormalLattice",
    "QuotientMap",
    "chief_series",
    "chief_series_through",
    "conjugacy_classes",
    "is_chief_factor",
    "maximal_g_invariant_in",
    "minimal_normal_subgroups",
    "normal_closure",
    "normal_subgroups",
    "quotient_group",
]
