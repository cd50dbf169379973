"""Permutations of ``{1..degree}``.

Composition is left to right: ``(a * b)(x) == b(a(x))``. Every algorithm in the package
uses this convention; points are 1-based to match cycle notation.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from math import lcm
import sys

if sys.version_info >= (3, 12):
    from typing import override
else:
    from typing_extensions import override


@dataclass(frozen=True, order=True)
class Perm:
    """A bijection of ``{1..degree}`` stored as its image sequence.

    ``images[i - 1]`` is the image of point ``i``. Ordering is lexicographic on the
    image sequence, which is the canonical order used for every enumeration.

    Attributes:
        images: Image of each point, 1-based.

    Example:
        >>> a = Perm.from_cycles(3, [(1, 2)])
        >>> b = Perm.from_cycles(3, [(2, 3)])
        >>> str(a * b)
        '(1,3,2)'
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"images {self.images} is not a bijection of 1..{len(self.images)}")

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Perm:
        # skips the bijection check; only for images computed from valid permutations
        perm = object.__new__(cls)
        object.__setattr__(perm, "images", images)
        return perm

    @staticmethod
    def identity(degree: int) -> Perm:
        if degree < 0:
            raise ValueError("degree < 0")
        return Perm._trusted(tuple(range(1, degree + 1)))

    @staticmethod
    def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Perm:
        """Build the product (left to right) of the given cycles.

        Raises:
            ValueError: A point is outside ``1..degree`` or repeated inside one cycle.
        """
        result = Perm.identity(degree)
        for cycle in cycles:
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"duplicate point in cycle {tuple(cycle)}")
            images = list(range(1, degree + 1))
            for i, point in enumerate(cycle):
                if not 1 <= point <= degree:
                    raise ValueError(f"point {point} out of range 1..{degree}")
                images[point - 1] = cycle[(i + 1) % len(cycle)]
            result = result * Perm(tuple(images))
        return result

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Perm) -> Perm:
        """Left-to-right product: apply ``self`` first, then ``other``."""
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")
        right = other.images
        return Perm._trusted(tuple(right[i - 1] for i in self.images))

    def __pow__(self, exponent: int) -> Perm:
        base = self if exponent >= 0 else self.inverse()
        result = Perm.identity(self.degree)
        exponent = abs(exponent)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> Perm:
        inv = [0] * self.degree
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Perm._trusted(tuple(inv))

    def conjugate(self, x: Perm) -> Perm:
        """Return ``x^-1 * self * x``."""
        return x.inverse() * self * x

    def commutes_with(self, other: Perm) -> bool:
        return self * other == other * self

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images, start=1))

    def moved_points(self) -> tuple[int, ...]:
        return tuple(i for i, image in enumerate(self.images, start=1) if i != image)

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles of length at least 2, each starting at its least point."""
        seen: set[int] = set()
        result: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            result.append(tuple(cycle))
        return tuple(result)

    @cached_property
    def order(self) -> int:
        return lcm(*(len(cycle) for cycle in self.cycles)) if self.cycles else 1

    @override
    def __str__(self) -> str:
        if not self.cycles:
            return "()"
        return "".join("(" + ",".join(map(str, cycle)) + ")" for cycle in self.cycles)


def compose(a: Perm, b: Perm) -> Perm:
    """Return the permutation mapping ``x`` to ``b(a(x))``."""
    return a * b


def element_order(x: Perm) -> int:
    """Least ``k >= 1`` with ``x ** k`` the identity (lcm of the cycle lengths)."""
    return x.order
