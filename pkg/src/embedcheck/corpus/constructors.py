"""Standard permutation groups of textbook order."""

from __future__ import annotations

from ..perm import Group, Perm, build_group


def _cycle(degree: int, points: range | list[int]) -> Perm:
    return Perm.from_cycles(degree, [list(points)])


def cyclic(n: int) -> Group:
    """``C_n`` generated by an ``n``-cycle on ``n`` points."""
    if n < 1:
        raise ValueError("n < 1")
    return build_group(n, [_cycle(n, range(1, n + 1))])


def symmetric(n: int) -> Group:
    """``S_n`` generated by ``(1,2)`` and ``(1,...,n)``."""
    if n < 1:
        raise ValueError("n < 1")
    return build_group(n, [_cycle(n, [1, 2]), _cycle(n, range(1, n + 1))] if n > 1 else [])


def alternating(n: int) -> Group:
    """``A_n`` generated by the 3-cycles ``(1,2,i)``."""
    if n < 1:
        raise ValueError("n < 1")
    return build_group(n, [_cycle(n, [1, 2, i]) for i in range(3, n + 1)])


def dihedral(order: int) -> Group:
    """The dihedral group of order ``order = 2n``, ``n >= 2``.

    For ``n >= 3`` it acts on the vertices of an ``n``-gon; for ``n == 2`` it is the Klein
    four-group acting regularly on 4 points.
    """
    if order < 4 or order % 2:
        raise ValueError(f"dihedral order {order} is not an even number >= 4")
    n = order // 2
    if n == 2:
        return build_group(4, [Perm.from_cycles(4, [(1, 2), (3, 4)]), Perm.from_cycles(4, [(1, 3), (2, 4)])])
    reflection = Perm(tuple(n + 1 - i for i in range(1, n + 1)))
    return build_group(n, [_cycle(n, range(1, n + 1)), reflection])


def generalized_quaternion(order: int) -> Group:
    """``Q_{2^k}``, ``2^k >= 8``, in its regular representation.

    With ``m = 2^(k-1)``, point ``1 + i + m*j`` stands for ``a^i b^j``; the generators are
    right multiplication by ``a`` (of order ``m``) and by ``b`` (with ``b^2 = a^(m/2)``).
    """
    if order < 8 or order & (order - 1):
        raise ValueError(f"quaternion order {order} is not a power of 2 >= 8")
    m = order // 2

    def point(i: int, j: int) -> int:
        return 1 + i % m + m * j

    by_a = [0] * order
    by_b = [0] * order
    for i in range(m):
        by_a[point(i, 0) - 1] = point(i + 1, 0)
        by_a[point(i, 1) - 1] = point(i - 1, 1)
        by_b[point(i, 0) - 1] = point(i, 1)
        by_b[point(i, 1) - 1] = point(i + m // 2, 0)
    return build_group(order, [Perm(tuple(by_a)), Perm(tuple(by_b))])


def direct_product(a: Group, b: Group) -> Group:
    """``a x b`` acting on the disjoint union of their point sets, ``b`` shifted up."""
    degree = a.degree + b.degree
    shift = a.degree
    left = [Perm((*gen.images, *range(shift + 1, degree + 1))) for gen in a.gens]
    right = [Perm((*range(1, shift + 1), *(x + shift for x in gen.images))) for gen in b.gens]
    return build_group(degree, left + right)
