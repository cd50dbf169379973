"""Structural subgroups and group-class predicates."""

from .pgroups import (
    all_subgroups,
    cyclic_subgroups_of_order4,
    group_prime,
    is_p_group,
    is_quaternion_free,
    subgroup_levels,
    subgroups_of_order,
    sylow_subgroup,
)
from .primes import PPower, PrimeSet, factorization, is_p_power, is_prime, p_part, prime_divisors
from .radicals import (
    FactorPredicate,
    PrimeStructure,
    StructureReport,
    hypercenter,
    hypercenter_by_definition,
    is_p_soluble,
    is_p_supersoluble,
    is_p_supersoluble_over,
    o_p,
    o_p_prime,
    o_p_prime_p,
    offending_chief_factor,
    p_supersoluble_factor,
    structure_report,
    supersoluble_factor,
    z_u,
    z_u_p,
)


__all__ = [
    "FactorPredicate",
    "PPower",
    "PrimeSet",
    "PrimeStructure",
    "StructureReport",
    "all_subgroups",
    "cyclic_subgroups_of_order4",
    "factorization",
    "group_prime",
    "hypercenter",
    "hypercenter_by_definition",
    "is_p_group",
    "is_p_power",
    "is_p_soluble",
    "is_p_supersoluble",
    "is_p_supersoluble_over",
    "is_prime",
    "is_quaternion_free",
    "o_p",
    "o_p_prime",
    "o_p_prime_p",
    "offending_chief_factor",
    "p_part",
    "p_supersoluble_factor",
    "prime_divisors",
    "structure_report",
    "subgroup_levels",
    "subgroups_of_order",
    "supersoluble_factor",
    "sylow_subgroup",
    "z_u",
    "z_u_p",
]
