"""Normal-subgroup lattice of a fixed ambient group.

Every normal subgroup is a union of conjugacy classes and is generated by the classes
it contains, so the lattice is the join-closure of the normal closures of single
classes. Nodes are deduplicated by element set and ordered canonically (order, then
element sequence); chief series and every other enumeration follow that order.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property, lru_cache

from ..perm import Group, Perm, join, trivial_subgroup
from .classes import conjugacy_classes


@dataclass(frozen=True, slots=True)
class ChiefFactorPair:
    """A covering pair ``lower < upper`` of normal subgroups of the ambient group.

    Attributes:
        lower: The ``K`` of the chief factor ``L/K``.
        upper: The ``L`` of the chief factor ``L/K``.
    """

    lower: Group
    upper: Group

    def __post_init__(self):
        if not self.lower.is_subgroup_of(self.upper) or self.lower.order == self.upper.order:
            raise ValueError("lower is not a proper subgroup of upper")

    @property
    def factor_order(self) -> int:
        return self.upper.order // self.lower.order


@dataclass(frozen=True, eq=False)
class NormalLattice:
    """All normal subgroups of ``ambient`` with their covering relation.

    Attributes:
        ambient: The group ``G``.
        nodes: Normal subgroups in canonical order; ``nodes[0]`` is trivial and
            ``nodes[-1]`` is ``G``.
        covers: Covering pairs, ordered by the indices of their ends.
    """

    ambient: Group
    nodes: tuple[Group, ...]
    covers: tuple[ChiefFactorPair, ...]

    @cached_property
    def _index(self) -> dict[frozenset[Perm], int]:
        return {node.element_set: i for i, node in enumerate(self.nodes)}

    def __iter__(self) -> Iterator[Group]:
        return iter(self.nodes)

    def __len__(self) -> int:
        return len(self.nodes)

    def index_of(self, h: Group) -> int | None:
        return self._index.get(h.element_set)

    def node_for(self, h: Group) -> Group:
        """The lattice node with the same elements as ``h``.

        Raises:
            ValueError: ``h`` is not normal in the ambient group.
        """
        i = self.index_of(h)
        if i is None:
            raise ValueError("subgroup is not normal in the ambient group")
        return self.nodes[i]

    def is_normal(self, h: Group) -> bool:
        return h.degree == self.ambient.degree and self.index_of(h) is not None

    def covers_of(self, lower: Group) -> list[Group]:
        """Nodes covering ``lower``."""
        node = self.node_for(lower)
        return [pair.upper for pair in self.covers if pair.lower is node]

    def covered_by(self, upper: Group) -> list[Group]:
        """Nodes covered by ``upper``."""
        node = self.node_for(upper)
        return [pair.lower for pair in self.covers if pair.upper is node]

    def interval(self, lower: Group, upper: Group) -> list[Group]:
        """Nodes ``X`` with ``lower <= X <= upper``."""
        low = self.node_for(lower).element_set
        high = self.node_for(upper).element_set
        return [node for node in self.nodes if low <= node.element_set <= high]


def _class_closures(g: Group) -> list[Group]:
    closures: dict[frozenset[Perm], Group] = {}
    for cls in conjugacy_classes(g)[1:]:
        closure = Group(g.degree, cls.members, g)
        closures.setdefault(closure.element_set, closure)
    return sorted(closures.values(), key=lambda n: n.key)


@lru_cache(maxsize=256)
def normal_subgroups(g: Group) -> NormalLattice:
    """The complete lattice of normal subgroups of ``g``.

    Raises:
        CapExceededError: ``g`` exceeds the element cap.
    """
    generators = _class_closures(g)
    trivial = trivial_subgroup(g)
    found: dict[frozenset[Perm], Group] = {trivial.element_set: trivial}
    queue = [trivial]
    for node in queue:
        for closure in generators:
            joined = join(node, closure)
            if joined.element_set not in found:
                found[joined.element_set] = joined
                queue.append(joined)

    nodes = tuple(sorted(found.values(), key=lambda n: n.key))
    sets = [node.element_set for node in nodes]
    covers: list[ChiefFactorPair] = []
    for j, upper in enumerate(sets):
        for i in range(j):
            lower = sets[i]
            if lower < upper and not any(lower < sets[m] < upper for m in range(i + 1, j)):
                covers.append(ChiefFactorPair(nodes[i], nodes[j]))
    return NormalLattice(g, nodes, tuple(covers))


def _require_normal(lattice: NormalLattice, h: Group) -> Group:
    if not lattice.is_normal(h):
        raise ValueError("subgroup is not normal in g")
    return lattice.node_for(h)


def normal_closure(g: Group, h: Group) -> Group:
    """``h^g``, the smallest normal subgroup of ``g`` containing ``h``.

    Raises:
        ValueError: ``h`` is not a subgroup of ``g``.
    """
    if not h.is_subgroup_of(g):
        raise ValueError("h is not a subgroup of g")
    closure = Group(g.degree, h.gens, g)
    queue = list(closure.gens)
    for y in queue:
        for s in g.gens:
            z = y.conjugate(s)
            if not closure.contains(z):
                closure = Group(g.degree, (*closure.gens, z), g)
                queue.append(z)
    return closure


def minimal_normal_subgroups(g: Group) -> list[Group]:
    """Minimal normal subgroups of ``g`` in canonical order.

    Raises:
        ValueError: ``g`` is trivial.
    """
    if g.is_trivial():
        raise ValueError("the trivial group has no minimal normal subgroups")
    lattice = normal_subgroups(g)
    return lattice.covers_of(lattice.nodes[0])


def maximal_g_invariant_in(g: Group, n: Group) -> list[Group]:
    """Normal subgroups ``K`` of ``g`` with ``n/K`` a chief factor of ``g``.

    Raises:
        ValueError: ``n`` is not normal in ``g``.
    """
    lattice = normal_subgroups(g)
    node = _require_normal(lattice, n)
    return lattice.covered_by(node)


def is_chief_factor(g: Group, k: Group, upper: Group) -> bool:
    """Whether ``upper/k`` is a chief factor of ``g``.

    Raises:
        ValueError: ``k`` or ``upper`` is not normal in ``g``.
    """
    lattice = normal_subgroups(g)
    lower = _require_normal(lattice, k)
    upper = _require_normal(lattice, upper)
    return any(pair.lower is lower and pair.upper is upper for pair in lattice.covers)


def chief_series(g: Group) -> list[ChiefFactorPair]:
    """An ascending chief series of ``g`` as consecutive covering pairs.

    At each step the least cover of the current term (by order, then canonical element
    sequence) is chosen, so the series is reproducible.

    Raises:
        CapExceededError: ``g`` exceeds the element cap.
    """
    lattice = normal_subgroups(g)
    return chief_series_through(lattice, lattice.nodes[0], lattice.nodes[-1])


def chief_series_through(lattice: NormalLattice, lower: Group, upper: Group) -> list[ChiefFactorPair]:
    """Chief factors of a series of the ambient group running from ``lower`` up to ``upper``."""
    current = lattice.node_for(lower)
    top = lattice.node_for(upper).element_set
    if not current.element_set <= top:
        raise ValueError("lower is not contained in upper")
    series: list[ChiefFactorPair] = []
    while current.element_set != top:
        step = next(node for node in lattice.covers_of(current) if node.element_set <= top)
        series.append(ChiefFactorPair(current, step))
        current = step
    return series
