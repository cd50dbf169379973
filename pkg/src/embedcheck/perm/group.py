"""Permutation groups given by generators, backed by a stabilizer chain.

A :class:`Group` is immutable. Its chain, order and element set are computed on first
use and cached (write-once). Normalizers and centralizers are found by scanning the
element set of the ambient group, which keeps them exact at desk scale and doubles as
the oracle for any faster method.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from math import prod
import sys

if sys.version_info >= (3, 12):
    from typing import override
else:
    from typing_extensions import override

from ..config import current_caps
from ._internal.chain import ChainLevel, schreier_sims, strip
from .perm import Perm


@dataclass(frozen=True, eq=False)
class Group:
    """A permutation group on ``{1..degree}``.

    Generators are deduplicated, stripped of the identity and kept in canonical order,
    so the chain (and everything computed from it) does not depend on the order in
    which generators were supplied.

    Attributes:
        degree: Number of points.
        gens: Canonical generating tuple.
        ambient: Group this one was created inside, if any.
    """

    degree: int
    gens: tuple[Perm, ...]
    ambient: Group | None = field(default=None, repr=False)
    _known_elements: tuple[Perm, ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        for gen in self.gens:
            if gen.degree != self.degree:
                raise ValueError(f"generator {gen} has degree {gen.degree}, expected {self.degree}")
        canonical = tuple(sorted({gen for gen in self.gens if not gen.is_identity()}))
        object.__setattr__(self, "gens", canonical)

    @cached_property
    def chain(self) -> tuple[ChainLevel, ...]:
        return schreier_sims(self.degree, self.gens)

    @cached_property
    def order(self) -> int:
        return prod(len(level.transversal) for level in self.chain)

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(level.point for level in self.chain)

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def contains(self, x: Perm) -> bool:
        if x.degree != self.degree:
            raise ValueError(f"degree mismatch: {x.degree} != {self.degree}")
        if "element_set" in self.__dict__:
            return x in self.element_set
        return strip(self.chain, x).is_identity()

    def __contains__(self, x: Perm) -> bool:
        return self.contains(x)

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        """All elements in canonical order.

        Raises:
            CapExceededError: The order exceeds the element cap.
        """
        current_caps().check("element_cap", self.order)
        if self._known_elements is not None:
            return tuple(sorted(self._known_elements))
        found = [self.identity()]
        for level in reversed(self.chain):
            found = [s * u for s in found for u in level.transversal.values()]
        return tuple(sorted(found))

    @cached_property
    def element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def is_subgroup_of(self, other: Group) -> bool:
        return self.degree == other.degree and all(other.contains(gen) for gen in self.gens)

    def is_normal_in(self, other: Group) -> bool:
        if not self.is_subgroup_of(other):
            return False
        return all(self.contains(gen.conjugate(x)) for gen in self.gens for x in other.gens)

    def is_trivial(self) -> bool:
        return not self.gens

    def is_abelian(self) -> bool:
        return all(a.commutes_with(b) for a in self.gens for b in self.gens)

    def index(self, sub: Group) -> int:
        if not sub.is_subgroup_of(self):
            raise ValueError("sub is not a subgroup of self")
        return self.order // sub.order

    @cached_property
    def key(self) -> tuple[int, tuple[Perm, ...]]:
        """Canonical sort key: order first, then the sorted element sequence."""
        return self.order, self.elements

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        if self is other:
            return True
        return self.degree == other.degree and self.order == other.order and other.is_subgroup_of(self)

    @override
    def __hash__(self) -> int:
        return hash((self.degree, self.order))

    @override
    def __str__(self) -> str:
        if not self.gens:
            return "<()>"
        return "<" + ", ".join(map(str, self.gens)) + ">"


def build_group(degree: int, gens: Iterable[Perm]) -> Group:
    """Group generated by ``gens`` on ``degree`` points.

    Raises:
        ValueError: A generator has the wrong degree.
        CapExceededError: ``degree`` exceeds the degree cap.
    """
    current_caps().check("max_degree", degree)
    return Group(degree, tuple(gens))


def subgroup(ambient: Group, gens: Iterable[Perm]) -> Group:
    """Subgroup of ``ambient`` generated by ``gens``.

    Raises:
        ValueError: A generator lies outside ``ambient``.
    """
    gens = tuple(gens)
    for gen in gens:
        if not ambient.contains(gen):
            raise ValueError(f"generator {gen} not in ambient group")
    return Group(ambient.degree, gens, ambient)


def trivial_subgroup(g: Group) -> Group:
    return Group(g.degree, (), g)


def generate(ambient: Group, elements: Iterable[Perm]) -> Group:
    """Subgroup of ``ambient`` generated by ``elements``, with a small generating set.

    Elements are visited in the given order and kept only when they enlarge the group
    built so far. When ``elements`` is already closed (a full element list of a
    subgroup), that list is cached as the element set.
    """
    elements = tuple(elements)
    result = trivial_subgroup(ambient)
    for x in elements:
        if not result.contains(x):
            result = Group(ambient.degree, (*result.gens, x), ambient)
    if len(set(elements)) == result.order:
        return Group(ambient.degree, result.gens, ambient, elements)
    return result


def join(a: Group, b: Group) -> Group:
    """Subgroup generated by ``a`` and ``b`` (their product when one of them is normal)."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} != {b.degree}")
    if b.is_subgroup_of(a):
        return a
    if a.is_subgroup_of(b):
        return b
    return Group(a.degree, a.gens + b.gens, a.ambient if a.ambient is not None else b.ambient)


def intersection(a: Group, b: Group) -> Group:
    """Intersection of two groups of the same degree, by filtering the smaller element set."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} != {b.degree}")
    small, large = (a, b) if a.order <= b.order else (b, a)
    if small.is_subgroup_of(large):
        return small
    return generate(small, [x for x in small.elements if large.contains(x)])


def _require_subgroup(g: Group, h: Group) -> None:
    if not h.is_subgroup_of(g):
        raise ValueError("h is not a subgroup of g")


def normalizing_elements(g: Group, h: Group) -> list[Perm]:
    """Elements of ``g`` normalizing ``h``, by a full scan of ``g``."""
    _require_subgroup(g, h)
    candidates = g.elements
    members = h.element_set
    result: list[Perm] = []
    for x in candidates:
        x_inv = x.inverse()
        if all(x_inv * y * x in members for y in h.gens):
            result.append(x)
    return result


def normalizer(g: Group, h: Group) -> Group:
    """``N_g(h)``.

    Raises:
        ValueError: ``h`` is not a subgroup of ``g``.
        CapExceededError: ``g`` is too large to scan.
    """
    return generate(g, normalizing_elements(g, h))


def normalizer_index(g: Group, h: Group) -> int:
    """``|g : N_g(h)|`` (the number of ``g``-conjugates of ``h``)."""
    return g.order // len(normalizing_elements(g, h))


def centralizer(g: Group, h: Group) -> Group:
    """``C_g(h)``, by a full scan of ``g``.

    Raises:
        ValueError: ``h`` is not a subgroup of ``g``.
        CapExceededError: ``g`` is too large to scan.
    """
    _require_subgroup(g, h)
    return generate(g, [x for x in g.elements if all(x.commutes_with(y) for y in h.gens)])


def conjugate_subgroup(h: Group, x: Perm) -> Group:
    """The group generated by ``x^-1 * y * x`` for the generators ``y`` of ``h``."""
    if x.degree != h.degree:
        raise ValueError(f"degree mismatch: {x.degree} != {h.degree}")
    return Group(h.degree, tuple(gen.conjugate(x) for gen in h.gens), h.ambient)


def contains(g: Group, x: Perm) -> bool:
    return g.contains(x)


def elements(g: Group) -> tuple[Perm, ...]:
    return g.elements
