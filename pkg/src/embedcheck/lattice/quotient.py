"""Quotients ``G/K`` as permutation groups on the right cosets of ``K``.

Cosets are labelled ``1..[G:K]`` in the canonical order of their least element, so the
quotient group and its epimorphism are deterministic. Since ``K`` is normal the coset
action is regular with kernel exactly ``K``.
"""

from __future__ import annotations

from dataclasses import dataclass

from frozendict import frozendict

from ..config import current_caps
from ..perm import Group, Perm
from .normal import normal_subgroups


@dataclass(frozen=True, eq=False)
class QuotientMap:
    """The epimorphism ``G -> G/K``.

    Attributes:
        source: The group ``G``.
        kernel: The normal subgroup ``K``.
        target: ``G/K`` acting on the labelled cosets.
        labels: Coset label of every element of ``G``.
        representatives: Least element of each coset, by label.
    """

    source: Group
    kernel: Group
    target: Group
    labels: frozendict[Perm, int]
    representatives: tuple[Perm, ...]

    def __call__(self, x: Perm) -> Perm:
        if x not in self.labels:
            raise ValueError(f"{x} is not an element of the source group")
        labels = self.labels
        return Perm(tuple(labels[rep * x] for rep in self.representatives))

    def lift(self, q: Perm) -> Perm:
        """An element of the source mapping to ``q``."""
        return self.representatives[q(1) - 1]

    def image(self, h: Group) -> Group:
        """``hK/K`` as a subgroup of the target."""
        return Group(self.target.degree, tuple(self(x) for x in h.gens), self.target)

    def preimage(self, q: Group) -> Group:
        """The full preimage of a subgroup of the target; it contains the kernel."""
        lifted = tuple(self.lift(x) for x in q.gens)
        return Group(self.source.degree, self.kernel.gens + lifted, self.source)


def quotient_group(g: Group, k: Group) -> tuple[Group, QuotientMap]:
    """``g/k`` with its epimorphism.

    Raises:
        ValueError: ``k`` is not normal in ``g``.
        CapExceededError: ``[g:k]`` exceeds the quotient degree cap.
    """
    if not normal_subgroups(g).is_normal(k):
        raise ValueError("k is not normal in g")
    index = g.order // k.order
    current_caps().check("quotient_degree_cap", index)

    labels: dict[Perm, int] = {}
    representatives: list[Perm] = []
    for x in g.elements:
        if x in labels:
            continue
        representatives.append(x)
        for y in k.elements:
            labels[y * x] = len(representatives)

    def act(x: Perm) -> Perm:
        return Perm(tuple(labels[rep * x] for rep in representatives))

    target = Group(index, tuple(act(x) for x in g.gens), None, tuple(act(rep) for rep in representatives))
    return target, QuotientMap(g, k, target, frozendict(labels), tuple(representatives))
