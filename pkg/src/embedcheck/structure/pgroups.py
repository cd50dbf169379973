"""Sylow subgroups and subgroup enumeration inside p-groups."""

from __future__ import annotations

from functools import lru_cache

from ..config import current_caps
from ..perm import Group, Perm, trivial_subgroup
from ..perm.group import normalizing_elements
from .primes import PPower, is_p_power, is_prime, p_part, prime_divisors


def group_prime(g: Group) -> int | None:
    """The prime ``p`` when ``g`` is a nontrivial ``p``-group, ``None`` otherwise."""
    divisors = prime_divisors(g.order)
    return divisors[0] if len(divisors) == 1 else None


def is_p_group(g: Group, p: int) -> bool:
    return is_p_power(g.order, p)


def _require_p_group(g: Group, p: int) -> None:
    if not is_p_group(g, p):
        raise ValueError(f"group of order {g.order} is not a {p}-group")


def sylow_subgroup(g: Group, p: int, seed: Group | None = None) -> Group:
    """A Sylow ``p``-subgroup of ``g`` grown from ``seed`` (trivial by default).

    The current ``p``-subgroup ``Q`` is repeatedly enlarged by the least element ``x`` of
    ``N_g(Q) \\ Q`` with ``x**p`` in ``Q``; while ``Q`` is not Sylow such an element exists.

    Raises:
        ValueError: ``p`` is not prime, or ``seed`` is not a ``p``-subgroup of ``g``.
        CapExceededError: ``g`` exceeds the element cap.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = trivial_subgroup(g) if seed is None else seed
    if not q.is_subgroup_of(g) or not is_p_group(q, p):
        raise ValueError(f"seed is not a {p}-subgroup of g")
    target = p_part(g.order, p).value
    while q.order < target:
        members = q.element_set
        grow = next((x for x in normalizing_elements(g, q) if x not in members and x**p in members), None)
        if grow is None:
            raise RuntimeError("normalizer growth stalled below the Sylow order")
        q = Group(g.degree, (*q.gens, grow), g)
    return q


def _extend(p_group: Group, p: int, s: Group) -> list[tuple[frozenset[Perm], Perm]]:
    members = s.element_set
    extensions: list[tuple[frozenset[Perm], Perm]] = []
    for x in normalizing_elements(p_group, s):
        if x in members or x**p not in members:
            continue
        powers = [x**i for i in range(p)]
        extensions.append((frozenset(y * z for y in members for z in powers), x))
    return extensions


@lru_cache(maxsize=128)
def subgroup_levels(p_group: Group) -> tuple[tuple[Group, ...], ...]:
    """All subgroups of a ``p``-group, level ``k`` holding those of order ``p**k``.

    Every subgroup of order ``p**(k+1)`` is ``<S, x>`` for a subgroup ``S`` of order
    ``p**k`` and some ``x`` in ``N(S) \\ S`` with ``x**p`` in ``S``; results are
    deduplicated by element set and sorted canonically.
    """
    p = group_prime(p_group)
    if p is None:
        if p_group.is_trivial():
            return ((p_group,),)
        raise ValueError(f"group of order {p_group.order} is not a p-group")
    levels: list[tuple[Group, ...]] = [(trivial_subgroup(p_group),)]
    while levels[-1][0].order < p_group.order:
        found: dict[frozenset[Perm], Group] = {}
        for s in levels[-1]:
            for members, x in _extend(p_group, p, s):
                if members not in found:
                    found[members] = Group(p_group.degree, (*s.gens, x), p_group, tuple(members))
        levels.append(tuple(sorted(found.values(), key=lambda h: h.key)))
    return tuple(levels)


def all_subgroups(p_group: Group) -> list[Group]:
    return [h for level in subgroup_levels(p_group) for h in level]


def subgroups_of_order(p_group: Group, d: PPower) -> list[Group]:
    """All subgroups of order ``d`` of a ``p``-group, ``d < |p_group|``.

    Raises:
        ValueError: ``p_group`` is not a ``d.p``-group, or ``d`` is not below its order.
    """
    _require_p_group(p_group, d.p)
    if d.value >= p_group.order:
        raise ValueError(f"d = {d.value} is not below the group order {p_group.order}")
    return list(subgroup_levels(p_group)[d.exponent])


def cyclic_subgroups_of_order4(p_group: Group) -> list[Group]:
    """The distinct subgroups ``<x>`` with ``x`` of order 4.

    Raises:
        ValueError: ``p_group`` is not a 2-group.
    """
    _require_p_group(p_group, 2)
    found: dict[frozenset[Perm], Group] = {}
    for x in p_group.elements:
        if x.order == 4:
            powers = tuple(x**i for i in range(4))
            found.setdefault(frozenset(powers), Group(p_group.degree, (x,), p_group, powers))
    return sorted(found.values(), key=lambda h: h.key)


def _is_q8_section(h: Group, k: Group) -> bool:
    # H/K of order 8 is Q8 iff it has exactly one involution and no element of order 8
    kernel = k.element_set
    involution_lifts = 0
    for x in h.elements:
        if x in kernel:
            continue
        square = x * x
        if square in kernel:
            involution_lifts += 1
        elif square * square not in kernel:
            return False
    return involution_lifts == len(kernel)


def _is_normal_subset(k: Group, h: Group) -> bool:
    members = k.element_set
    return all(y.conjugate(x) in members for y in k.gens for x in h.gens)


def is_quaternion_free(p_group: Group) -> bool:
    """Whether a 2-group has no section isomorphic to ``Q8``.

    Raises:
        ValueError: ``p_group`` is not a 2-group.
        CapExceededError: the order exceeds the quaternion-free cap.
    """
    _require_p_group(p_group, 2)
    current_caps().check("quaternion_free_cap", p_group.order)
    if p_group.is_abelian():
        return True
    levels = subgroup_levels(p_group)
    for m in range(3, len(levels)):
        for h in levels[m]:
            if h.is_abelian():
                continue
            members = h.element_set
            for k in levels[m - 3]:
                if k.element_set <= members and _is_normal_subset(k, h) and _is_q8_section(h, k):
                    return False
    return True
