"""Decision procedures for the two embedding properties of a subgroup ``H`` of ``G``.

Both properties quantify over chief factors ``L/K`` of ``G`` and ask that an index in
``G/K`` be a ``π``-number. Since ``K`` is normal and contained in the subgroup ``X`` in
question, ``N_{G/K}(X/K) = N_G(X)/K``, so every index is computed inside ``G`` and no
quotient group is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from ..lattice import maximal_g_invariant_in, normal_closure, normal_subgroups
from ..perm import Group, intersection, join, normalizer_index
from ..structure import PrimeSet, factorization, prime_divisors


PropertyName = Literal["lpi", "pi"]


def pi_number(n: int, pi: PrimeSet) -> bool:
    """Whether every prime divisor of ``n`` lies in ``pi``; ``1`` is a ``π``-number for every ``π``."""
    return all(p in pi for p in prime_divisors(n))


@dataclass(frozen=True, slots=True)
class Witness:
    """One failed condition.

    Attributes:
        lower: The ``K`` of the chief factor.
        subject: ``HK`` for the ``ℒ-Π`` test, ``HK ∩ L`` for the ``Π`` test.
        upper: The ``L`` of the chief factor; ``None`` for the ``ℒ-Π`` test.
        index: ``|G : N_G(subject)|``.
        pi_set: Prime divisors of ``|subject/lower|``.
        offending_prime: Least prime divisor of ``index`` outside ``pi_set``.
    """

    lower: Group
    subject: Group
    upper: Group | None
    index: int
    pi_set: PrimeSet
    offending_prime: int

    def __post_init__(self):
        if self.index % self.offending_prime != 0:
            raise ValueError(f"offending prime {self.offending_prime} does not divide {self.index}")
        if self.offending_prime in self.pi_set:
            raise ValueError(f"offending prime {self.offending_prime} lies in {self.pi_set}")


@dataclass(frozen=True, slots=True)
class PropertyVerdict:
    """Outcome of a property check.

    Attributes:
        name: ``"lpi"`` or ``"pi"``.
        witnesses: Every failed condition, in lattice order.
        checked: Number of conditions examined.
    """

    name: PropertyName
    witnesses: tuple[Witness, ...] = field(default=())
    checked: int = 0

    def __post_init__(self):
        if self.checked < len(self.witnesses):
            raise ValueError("more witnesses than checked conditions")

    @property
    def holds(self) -> bool:
        return not self.witnesses

    def __bool__(self) -> bool:
        return self.holds


def _check(g: Group, lower: Group, subject: Group, upper: Group | None) -> Witness | None:
    pi = PrimeSet.of(subject.order // lower.order)
    index = normalizer_index(g, subject)
    outside = [p for p in prime_divisors(index) if p not in pi]
    if not outside:
        return None
    return Witness(lower, subject, upper, index, pi, outside[0])


def satisfies_l_pi(g: Group, h: Group) -> PropertyVerdict:
    """The ``ℒ-Π``-property of ``h`` in ``g``.

    For every maximal ``g``-invariant subgroup ``K`` of ``h^g``, ``|G : N_G(HK)|`` must be
    a ``π(HK/K)``-number. Trivially satisfied when ``h^g`` has no such ``K``.

    Raises:
        ValueError: ``h`` is not a subgroup of ``g``.
    """
    closure = normal_closure(g, h)
    witnesses: list[Witness] = []
    tops = maximal_g_invariant_in(g, closure)
    for k in tops:
        witness = _check(g, k, join(h, k), None)
        if witness is not None:
            witnesses.append(witness)
    return PropertyVerdict("lpi", tuple(witnesses), len(tops))


def satisfies_pi(g: Group, h: Group) -> PropertyVerdict:
    """The ``Π``-property of ``h`` in ``g``, over every covering pair of the normal lattice.

    For a pair ``(K, L)`` with ``X = HK ∩ L``, ``|G : N_G(X)|`` must be a
    ``π(X/K)``-number. When ``X = K`` the index is 1 and the condition holds.

    Raises:
        ValueError: ``h`` is not a subgroup of ``g``.
    """
    if not h.is_subgroup_of(g):
        raise ValueError("h is not a subgroup of g")
    lattice = normal_subgroups(g)
    witnesses: list[Witness] = []
    for pair in lattice.covers:
        x = intersection(join(h, pair.lower), pair.upper)
        if x.order == pair.lower.order:
            continue
        witness = _check(g, pair.lower, x, pair.upper)
        if witness is not None:
            witnesses.append(witness)
    return PropertyVerdict("pi", tuple(witnesses), len(lattice.covers))


def check_property(g: Group, h: Group, prop: PropertyName) -> PropertyVerdict:
    if prop == "lpi":
        return satisfies_l_pi(g, h)
    return satisfies_pi(g, h)


def _render_index(n: int) -> str:
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in factorization(n)]
    if len(parts) <= 1 and str(n) in (*parts, "1"):
        return str(n)
    return f"{n} = " + " * ".join(parts)


def _render_witness(witness: Witness) -> str:
    if witness.upper is None:
        head = f"K of order {witness.lower.order} below the normal closure"
        subject = "HK"
    else:
        head = f"chief factor L/K with |K| = {witness.lower.order}, |L| = {witness.upper.order}, L = {witness.upper}"
        subject = "HK ∩ L"
    return (
        f"  {head}: {subject} = {witness.subject} of order {witness.subject.order}, "
        f"|G : N_G({subject})| = {_render_index(witness.index)}, "
        f"π = {witness.pi_set}, offending prime {witness.offending_prime}"
    )


def explain(verdict: PropertyVerdict) -> str:
    """Human-readable rendering of a verdict and its witnesses."""
    if verdict.holds:
        if verdict.checked == 0:
            return "PASS (vacuous)"
        return f"PASS ({verdict.checked} conditions checked)"
    lines = [f"FAIL ({len(verdict.witnesses)} of {verdict.checked} conditions failed)"]
    lines.extend(_render_witness(witness) for witness in verdict.witnesses)
    return "\n".join(lines)
