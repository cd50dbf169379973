"""Deterministic Schreier-Sims construction of a stabilizer chain."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from frozendict import frozendict

from ..perm import Perm


@dataclass(frozen=True, slots=True)
class ChainLevel:
    """One level of a stabilizer chain.

    Attributes:
        point: Base point fixed by every deeper level.
        transversal: Maps each point of the orbit of ``point`` to a group element
            sending ``point`` there.
    """

    point: int
    transversal: frozendict[int, Perm]


class _Level:
    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {point: Perm.identity(degree)}

    def rebuild(self) -> None:
        root = self.transversal[self.point]
        transversal = {self.point: root}
        queue = [self.point]
        for beta in queue:
            u = transversal[beta]
            for gen in self.gens:
                image = gen(beta)
                if image not in transversal:
                    transversal[image] = u * gen
                    queue.append(image)
        self.transversal = transversal


def _strip(levels: Sequence[_Level], start: int, g: Perm) -> tuple[Perm, int]:
    for j in range(start, len(levels)):
        level = levels[j]
        beta = g(level.point)
        u = level.transversal.get(beta)
        if u is None:
            return g, j
        g = g * u.inverse()
    return g, len(levels)


def strip(levels: Sequence[ChainLevel], g: Perm) -> Perm:
    """Sift ``g`` through a finished chain; the residue is the identity iff ``g`` is in the group."""
    for level in levels:
        u = level.transversal.get(g(level.point))
        if u is None:
            return g
        g = g * u.inverse()
    return g


def _first_moved(g: Perm) -> int:
    return g.moved_points()[0]


def schreier_sims(degree: int, gens: Sequence[Perm]) -> tuple[ChainLevel, ...]:
    """Build a base and strong generating set for ``<gens>``.

    ``gens`` must already be in canonical order; the output depends only on that sequence.
    """
    levels: list[_Level] = []
    for gen in gens:
        if gen.is_identity():
            continue
        if all(gen(level.point) == level.point for level in levels):
            levels.append(_Level(_first_moved(gen), degree))
        for level in levels:
            level.gens.append(gen)
            if gen(level.point) != level.point:
                break

    for level in levels:
        level.rebuild()

    i = len(levels) - 1
    while i >= 0:
        restart = _schreier_pass(levels, i, degree)
        i = restart if restart is not None else i - 1

    return tuple(ChainLevel(level.point, frozendict(level.transversal)) for level in levels)


def _schreier_pass(levels: list[_Level], i: int, degree: int) -> int | None:
    # returns the level to resume at when a new strong generator was added
    level = levels[i]
    for beta, u in list(level.transversal.items()):
        for gen in list(level.gens):
            schreier = u * gen * level.transversal[gen(beta)].inverse()
            if schreier.is_identity():
                continue
            residue, j = _strip(levels, i + 1, schreier)
            if j == len(levels) and residue.is_identity():
                continue
            if j == len(levels):
                levels.append(_Level(_first_moved(residue), degree))
            for k in range(i + 1, j + 1):
                levels[k].gens.append(residue)
                levels[k].rebuild()
            return j
    return None
