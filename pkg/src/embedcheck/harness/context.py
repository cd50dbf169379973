"""Per-group state shared by the Theorem A sweep and the lemma suites."""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import TypeVar

from ..config import Caps
from ..errors import CapExceededError
from ..lattice import NormalLattice, QuotientMap, normal_subgroups, quotient_group
from ..perm import Group, Perm
from ..props import satisfies_l_pi
from ..structure import PPower, all_subgroups, prime_divisors, subgroups_of_order, sylow_subgroup


T = TypeVar("T")


@dataclass(frozen=True, slots=True)
class CampaignOptions:
    """Knobs of a verification campaign.

    Attributes:
        seed: Seed of every sampling decision.
        instance_bound: Largest number of subgroups of one order that hypothesis (1) of
            Theorem A may quantify over; beyond it the group is skipped.
        suite_instance_limit: Instances evaluated per suite and group; larger candidate
            pools are sampled.
        jobs: Worker processes.
        caps: Size limits installed in every worker.
    """

    seed: int = 0
    instance_bound: int = 5000
    suite_instance_limit: int = 400
    jobs: int = 1
    caps: Caps = field(default_factory=Caps)

    def __post_init__(self):
        if self.instance_bound < 1:
            raise ValueError("instance_bound < 1")
        if self.suite_instance_limit < 1:
            raise ValueError("suite_instance_limit < 1")
        if self.jobs < 1:
            raise ValueError("jobs < 1")


def cyclic_subgroup(g: Group, x: Perm) -> Group:
    powers = [g.identity()]
    y = x
    while not y.is_identity():
        powers.append(y)
        y = y * x
    return Group(g.degree, (x,), g, tuple(powers))


def subgroups_of_exact_order(p_group: Group, d: PPower) -> list[Group]:
    """Subgroups of order ``d`` of a ``p``-group, allowing ``d`` to be the whole order."""
    if d.value == p_group.order:
        return [p_group]
    return subgroups_of_order(p_group, d)


class GroupContext:
    """A corpus member with memoized lattice, Sylow subgroups, quotients and ``ℒ-Π`` verdicts."""

    def __init__(self, name: str, group: Group, options: CampaignOptions):
        self.name = name
        self.group = group
        self.options = options
        self._lpi: dict[frozenset[Perm], bool] = {}
        self._sylow: dict[int, Group] = {}
        self._quotients: dict[frozenset[Perm], tuple[Group, QuotientMap]] = {}
        self._order_d: dict[PPower, bool] = {}

    @cached_property
    def lattice(self) -> NormalLattice:
        return normal_subgroups(self.group)

    @cached_property
    def primes(self) -> list[int]:
        return prime_divisors(self.group.order)

    def lpi(self, h: Group) -> bool:
        key = h.element_set
        if key not in self._lpi:
            self._lpi[key] = satisfies_l_pi(self.group, h).holds
        return self._lpi[key]

    def sylow(self, p: int) -> Group:
        if p not in self._sylow:
            self._sylow[p] = sylow_subgroup(self.group, p)
        return self._sylow[p]

    def every_subgroup_of_order(self, d: PPower) -> bool:
        """Whether every subgroup of order ``d`` of the Sylow ``d.p``-subgroup satisfies the ``ℒ-Π``-property.

        Raises:
            CapExceededError: More than ``instance_bound`` subgroups have order ``d``.
        """
        if d not in self._order_d:
            candidates = subgroups_of_exact_order(self.sylow(d.p), d)
            bound = self.options.instance_bound
            if len(candidates) > bound:
                raise CapExceededError("instance_bound", bound, len(candidates))
            self._order_d[d] = all(self.lpi(h) for h in candidates)
        return self._order_d[d]

    def quotient(self, n: Group) -> tuple[Group, QuotientMap]:
        key = n.element_set
        if key not in self._quotients:
            self._quotients[key] = quotient_group(self.group, n)
        return self._quotients[key]

    def rng(self, suite: str) -> random.Random:
        return random.Random(f"{self.options.seed}:{self.name}:{suite}")

    def limit(self, candidates: Sequence[T], suite: str) -> list[T]:
        """``candidates`` itself when within the per-suite limit, else a seeded sample in the original order."""
        limit = self.options.suite_instance_limit
        if len(candidates) <= limit:
            return list(candidates)
        chosen = sorted(self.rng(suite).sample(range(len(candidates)), limit))
        return [candidates[i] for i in chosen]

    @cached_property
    def subgroup_pool(self) -> list[Group]:
        """Cyclic subgroups, subgroups of the Sylow subgroups and normal subgroups, deduplicated."""
        found: dict[frozenset[Perm], Group] = {}
        for x in self.group.elements:
            if x.is_identity():
                continue
            h = cyclic_subgroup(self.group, x)
            found.setdefault(h.element_set, h)
        for p in self.primes:
            for h in all_subgroups(self.sylow(p)):
                found.setdefault(h.element_set, h)
        for h in self.lattice.nodes:
            found.setdefault(h.element_set, h)
        return sorted(found.values(), key=lambda h: h.key)

    def minimal_normal(self) -> list[Group]:
        if self.group.is_trivial():
            return []
        return self.lattice.covers_of(self.lattice.nodes[0])
