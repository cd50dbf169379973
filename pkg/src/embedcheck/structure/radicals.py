"""Characteristic subgroups read off the normal lattice, and group-class predicates.

``O_p``, ``O_p'`` and the hypercentres are all maximal members of join-closed families
of normal subgroups, so they are computed as lattice nodes. ``O_{p'p}`` needs the
quotient by ``O_p'``.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from ..lattice import (
    ChiefFactorPair,
    NormalLattice,
    chief_series,
    chief_series_through,
    normal_subgroups,
    quotient_group,
)
from ..perm import Group, join
from .pgroups import sylow_subgroup
from .primes import is_p_power, is_prime, prime_divisors


FactorPredicate = Callable[[int], bool]
"""Centrality test applied to the order of a chief factor."""


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _largest_node(lattice: NormalLattice, keep: Callable[[Group], bool]) -> Group:
    return max((node for node in lattice.nodes if keep(node)), key=lambda node: node.order)


def o_p(g: Group, p: int) -> Group:
    """Largest normal ``p``-subgroup of ``g``."""
    _require_prime(p)
    return _largest_node(normal_subgroups(g), lambda node: is_p_power(node.order, p))


def o_p_prime(g: Group, p: int) -> Group:
    """Largest normal subgroup of ``g`` of order coprime to ``p``."""
    _require_prime(p)
    return _largest_node(normal_subgroups(g), lambda node: node.order % p != 0)


def o_p_prime_p(g: Group, p: int) -> Group:
    """``O_{p'p}(g)``, the preimage of ``O_p(g/O_p'(g))``.

    Raises:
        CapExceededError: ``[g : O_p'(g)]`` exceeds the quotient degree cap.
    """
    lower = o_p_prime(g, p)
    if lower.is_trivial():
        return o_p(g, p)
    quotient, epimorphism = quotient_group(g, lower)
    return normal_subgroups(g).node_for(epimorphism.preimage(o_p(quotient, p)))


def _is_p_soluble_factor(order: int, p: int) -> bool:
    return order % p != 0 or is_p_power(order, p)


def _is_p_supersoluble_factor(order: int, p: int) -> bool:
    return order % p != 0 or order == p


def is_p_soluble(g: Group, p: int) -> bool:
    """Every chief factor of ``g`` is a ``p``-group or a ``p'``-group."""
    _require_prime(p)
    return all(_is_p_soluble_factor(pair.factor_order, p) for pair in chief_series(g))


def offending_chief_factor(g: Group, p: int) -> ChiefFactorPair | None:
    """The first chief factor of the series of ``g`` whose order is divisible by ``p`` but not ``p``."""
    _require_prime(p)
    return next((pair for pair in chief_series(g) if not _is_p_supersoluble_factor(pair.factor_order, p)), None)


def is_p_supersoluble(g: Group, p: int) -> bool:
    """Every chief factor of ``g`` has order ``p`` or order coprime to ``p``."""
    return offending_chief_factor(g, p) is None


def is_p_supersoluble_over(g: Group, n: Group, p: int) -> bool:
    """Whether ``g/n`` is ``p``-supersoluble, read off the lattice interval above ``n``."""
    _require_prime(p)
    lattice = normal_subgroups(g)
    return all(
        _is_p_supersoluble_factor(pair.factor_order, p) for pair in chief_series_through(lattice, n, lattice.nodes[-1])
    )


def supersoluble_factor(order: int) -> bool:
    """``𝒰``-centrality: the chief factor has prime order."""
    return is_prime(order)


def p_supersoluble_factor(p: int) -> FactorPredicate:
    """``𝒰_p``-centrality: the chief factor has order ``p`` or order coprime to ``p``."""
    _require_prime(p)
    return lambda order: _is_p_supersoluble_factor(order, p)


def hypercenter(g: Group, central: FactorPredicate) -> Group:
    """Greedy ascent: join every central minimal normal subgroup of ``g/W`` until stable."""
    lattice = normal_subgroups(g)
    current = lattice.nodes[0]
    while True:
        step = current
        for upper in lattice.covers_of(current):
            if central(upper.order // current.order):
                step = join(step, upper)
        if step.order == current.order:
            return current
        current = lattice.node_for(step)


def hypercenter_by_definition(g: Group, central: FactorPredicate) -> Group:
    """The largest normal ``Z`` such that every chief factor of ``g`` below ``Z`` is central.

    By Jordan-Hölder a single chief series through ``Z`` decides the condition. The
    qualifying nodes must all lie inside the largest one.

    Raises:
        RuntimeError: the qualifying nodes have no greatest element.
    """
    lattice = normal_subgroups(g)
    bottom = lattice.nodes[0]
    qualifying = [
        node
        for node in lattice.nodes
        if all(central(pair.factor_order) for pair in chief_series_through(lattice, bottom, node))
    ]
    top = max(qualifying, key=lambda node: node.order)
    if any(not node.element_set <= top.element_set for node in qualifying):
        raise RuntimeError("hypercentral nodes have no greatest element")
    return top


def z_u(g: Group) -> Group:
    """The supersoluble hypercentre ``Z_𝒰(g)``."""
    return hypercenter(g, supersoluble_factor)


def z_u_p(g: Group, p: int) -> Group:
    """The ``p``-supersoluble hypercentre ``Z_{𝒰_p}(g)``."""
    return hypercenter(g, p_supersoluble_factor(p))


@dataclass(frozen=True, slots=True)
class PrimeStructure:
    """Orders of the structural subgroups of a group at one prime."""

    p: int
    sylow_order: int
    o_p_order: int
    o_p_prime_order: int
    o_p_prime_p_order: int
    z_u_order: int
    z_u_p_order: int
    p_soluble: bool
    p_supersoluble: bool

    def __post_init__(self):
        if self.o_p_prime_p_order % self.o_p_prime_order != 0:
            raise ValueError("|O_p'| does not divide |O_p'p|")
        if self.z_u_p_order % self.z_u_order != 0:
            raise ValueError("|Z_U| does not divide |Z_Up|")
        if self.p_supersoluble and not self.p_soluble:
            raise ValueError("p-supersoluble but not p-soluble")


@dataclass(frozen=True, slots=True)
class StructureReport:
    """Per-prime structure of a group.

    Attributes:
        name: Group identifier.
        order: Group order.
        chief_factor_orders: Orders of the factors of the canonical chief series.
        primes: One record per prime divisor of the order, ascending.
    """

    name: str
    order: int
    chief_factor_orders: tuple[int, ...]
    primes: tuple[PrimeStructure, ...]


def structure_report(g: Group, name: str) -> StructureReport:
    zu = z_u(g)
    records: list[PrimeStructure] = []
    for p in prime_divisors(g.order):
        opp = o_p_prime_p(g, p)
        records.append(
            PrimeStructure(
                p=p,
                sylow_order=sylow_subgroup(g, p).order,
                o_p_order=o_p(g, p).order,
                o_p_prime_order=o_p_prime(g, p).order,
                o_p_prime_p_order=opp.order,
                z_u_order=zu.order,
                z_u_p_order=z_u_p(g, p).order,
                p_soluble=is_p_soluble(g, p),
                p_supersoluble=is_p_supersoluble(g, p),
            )
        )
    factors = tuple(pair.factor_order for pair in chief_series(g))
    return StructureReport(name, g.order, factors, tuple(records))
