"""Exact arithmetic on permutations and permutation groups of small degree."""

from .group import (
    Group,
    build_group,
    centralizer,
    conjugate_subgroup,
    contains,
    elements,
    generate,
    intersection,
    join,
    normalizer,
    normalizer_index,
    subgroup,
    trivial_subgroup,
)
from .perm import Perm, compose, element_order


__all__ = [
    "Group",
    "Perm",
    "build_group",
    "centralizer",
    "compose",
    "conjugate_subgroup",
    "contains",
    "element_order",
    "elements",
    "generate",
    "intersection",
    "join",
    "normalizer",
    "normalizer_index",
    "subgroup",
    "trivial_subgroup",
]
