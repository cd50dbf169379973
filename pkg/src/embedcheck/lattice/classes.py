from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..perm import Group, Perm


@dataclass(frozen=True, slots=True)
class ConjClass:
    """A conjugacy class of a group.

    Attributes:
        representative: Canonically least member.
        members: All members in canonical order.
    """

    representative: Perm
    members: tuple[Perm, ...]

    def __post_init__(self):
        if not self.members or self.members[0] != self.representative:
            raise ValueError("representative is not the least member")
        order = self.representative.order
        if any(x.order != order for x in self.members):
            raise ValueError("members of a class must share the element order")

    def __len__(self) -> int:
        return len(self.members)


@lru_cache(maxsize=256)
def conjugacy_classes(g: Group) -> tuple[ConjClass, ...]:
    """Conjugacy classes of ``g``, identity class first, ordered by representative.

    Raises:
        CapExceededError: ``g`` exceeds the element cap.
    """
    assigned: set[Perm] = set()
    classes: list[ConjClass] = []
    for x in g.elements:
        if x in assigned:
            continue
        orbit = {x}
        queue = [x]
        for y in queue:
            for s in g.gens:
                z = y.conjugate(s)
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        assigned |= orbit
        members = tuple(sorted(orbit))
        classes.append(ConjClass(members[0], members))
    return tuple(classes)
