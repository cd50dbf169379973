"""Statement suites checked instance by instance over the corpus.

Each suite turns one universally quantified statement into a list of instances and
classifies every instance: ``hypothesis-failed`` when the premise does not hold,
``verified`` when premise and conclusion hold, ``violated`` otherwise. Biconditionals and
equalities have no premise and are either ``verified`` or ``violated``.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from functools import reduce
from itertools import combinations
from math import gcd

from ..corpus import symmetric
from ..corpus.manifest import CorpusEntry
from ..perm import Group, centralizer, conjugate_subgroup, join
from ..props import satisfies_l_pi, satisfies_pi
from ..structure import (
    PPower,
    all_subgroups,
    cyclic_subgroups_of_order4,
    hypercenter_by_definition,
    is_p_group,
    is_p_soluble,
    is_p_supersoluble,
    is_p_supersoluble_over,
    is_prime,
    is_quaternion_free,
    o_p_prime_p,
    p_part,
    p_supersoluble_factor,
    prime_divisors,
    supersoluble_factor,
    sylow_subgroup,
    z_u,
    z_u_p,
)
from .context import GroupContext, subgroups_of_exact_order
from .report import InstanceStatus, LemmaInstance


logger = logging.getLogger(__name__)

Suite = Callable[[GroupContext], list[LemmaInstance]]


def implication(hypothesis: bool, conclusion: Callable[[], bool]) -> InstanceStatus:
    """Classify ``hypothesis => conclusion``; ``conclusion`` is only evaluated when needed."""
    if not hypothesis:
        return "hypothesis-failed"
    return "verified" if conclusion() else "violated"


def agreement(left: bool, right: bool) -> InstanceStatus:
    return "verified" if left == right else "violated"


def _inside(h: Group, n: Group) -> bool:
    return h.element_set <= n.element_set


def _describe(h: Group) -> str:
    return f"{h} (order {h.order})"


def _proper_nodes(ctx: GroupContext) -> list[Group]:
    return list(ctx.lattice.nodes[1:-1])


def _p_subgroup_hypotheses(ctx: GroupContext, p_group: Group, p: int) -> bool:
    """Every subgroup of order ``p`` satisfies the ``ℒ-Π``-property, and so does every cyclic
    subgroup of order 4 when ``p_group`` is a 2-group that is not quaternion-free."""
    if not all(ctx.lpi(x) for x in subgroups_of_exact_order(p_group, PPower(p, 1))):
        return False
    if p != 2 or is_quaternion_free(p_group):
        return True
    return all(ctx.lpi(c) for c in cyclic_subgroups_of_order4(p_group))


def lpi_join_normal(ctx: GroupContext) -> list[LemmaInstance]:
    """``H`` satisfies the ``ℒ-Π``-property => so does ``HN`` for every normal ``N``."""
    suite = "lpi-join-normal"
    candidates = [(h, n) for h in ctx.subgroup_pool for n in ctx.lattice.nodes]
    return [
        LemmaInstance(
            suite,
            ctx.name,
            f"H={_describe(h)} N={_describe(n)}",
            implication(ctx.lpi(h), lambda h=h, n=n: ctx.lpi(join(h, n))),
        )
        for h, n in ctx.limit(candidates, suite)
    ]


def _lpi_in_quotient(ctx: GroupContext, h: Group, n: Group) -> bool:
    quotient, epimorphism = ctx.quotient(n)
    return satisfies_l_pi(quotient, epimorphism.image(h)).holds


def lpi_quotient(ctx: GroupContext) -> list[LemmaInstance]:
    """``H`` satisfies the ``ℒ-Π``-property in ``G`` => ``HN/N`` does in ``G/N``."""
    suite = "lpi-quotient"
    candidates = [(h, n) for h in ctx.subgroup_pool for n in _proper_nodes(ctx)]
    return [
        LemmaInstance(
            suite,
            ctx.name,
            f"H={_describe(h)} N={_describe(n)}",
            implication(ctx.lpi(h), lambda h=h, n=n: _lpi_in_quotient(ctx, h, n)),
        )
        for h, n in ctx.limit(candidates, suite)
    ]


def lpi_quotient_converse(ctx: GroupContext) -> list[LemmaInstance]:
    """When ``N <= H`` or ``gcd(|H|, |N|) = 1``: ``H`` has the property in ``G`` iff ``HN/N`` has it in ``G/N``."""
    suite = "lpi-quotient-converse"
    candidates = [
        (h, n)
        for h in ctx.subgroup_pool
        for n in _proper_nodes(ctx)
        if _inside(n, h) or gcd(h.order, n.order) == 1
    ]
    return [
        LemmaInstance(
            suite,
            ctx.name,
            f"H={_describe(h)} N={_describe(n)}",
            agreement(ctx.lpi(h), _lpi_in_quotient(ctx, h, n)),
        )
        for h, n in ctx.limit(candidates, suite)
    ]


def opp_p_part(ctx: GroupContext) -> list[LemmaInstance]:
    """``G`` ``p``-soluble with ``p | |G|`` => ``|G/O_{p'p}(G)|_p < |O_{p'p}(G)|_p``."""
    g = ctx.group

    def conclusion(p: int) -> bool:
        opp = o_p_prime_p(g, p)
        return p_part(g.order // opp.order, p).value < p_part(opp.order, p).value

    return [
        LemmaInstance(
            "opp-p-part", ctx.name, f"p={p}", implication(is_p_soluble(g, p), lambda p=p: conclusion(p))
        )
        for p in ctx.primes
    ]


def hypercenter_sylow_test(ctx: GroupContext) -> list[LemmaInstance]:
    """For normal ``N`` with Sylow ``p``-subgroup ``P``: ``N <= Z_{𝒰_p}(G)`` iff every subgroup of
    ``P`` of order ``p`` lies in it, and, when ``P`` is not quaternion-free, every cyclic
    subgroup of order 4 does too."""
    suite = "hypercenter-sylow-test"
    g = ctx.group
    candidates = [(n, p) for n in ctx.lattice.nodes[1:] for p in prime_divisors(n.order)]
    instances: list[LemmaInstance] = []
    hypercenters = {p: z_u_p(g, p) for p in ctx.primes}
    for n, p in ctx.limit(candidates, suite):
        z = hypercenters[p]
        sylow = sylow_subgroup(n, p)
        tested = subgroups_of_exact_order(sylow, PPower(p, 1))
        if p == 2 and not is_quaternion_free(sylow):
            tested = tested + cyclic_subgroups_of_order4(sylow)
        left = _inside(n, z)
        right = all(_inside(x, z) for x in tested)
        instances.append(LemmaInstance(suite, ctx.name, f"N={_describe(n)} p={p}", agreement(left, right)))
    return instances


def nonabelian_normal_p_part(ctx: GroupContext) -> list[LemmaInstance]:
    """``N`` a product of nonabelian minimal normal subgroups of order divisible by ``p`` with
    ``C_G(N) = 1`` => ``|G/N|_p < |N|_p``."""
    suite = "nonabelian-normal-p-part"
    g = ctx.group
    minimal = [m for m in ctx.minimal_normal() if not m.is_abelian()]
    instances: list[LemmaInstance] = []
    for size in range(1, len(minimal) + 1):
        for chosen in combinations(minimal, size):
            n = ctx.lattice.node_for(reduce(join, chosen))
            faithful = centralizer(g, n).is_trivial()
            for p in prime_divisors(n.order):
                hypothesis = faithful and all(m.order % p == 0 for m in chosen)

                def conclusion(n: Group = n, p: int = p) -> bool:
                    return p_part(g.order // n.order, p).value < p_part(n.order, p).value

                status = implication(hypothesis, conclusion)
                instances.append(LemmaInstance(suite, ctx.name, f"N={_describe(n)} p={p}", status))
    return instances


def lpi_minimal_normal_drop(ctx: GroupContext) -> list[LemmaInstance]:
    """``N`` minimal normal, ``|N| = |K| = p``, ``KN`` satisfies the ``ℒ-Π``-property => so does ``K``."""
    suite = "lpi-minimal-normal-drop"
    candidates = [
        (n, k)
        for n in ctx.minimal_normal()
        if is_prime(n.order)
        for k in ctx.subgroup_pool
        if k.order == n.order
    ]
    return [
        LemmaInstance(
            suite,
            ctx.name,
            f"N={_describe(n)} K={_describe(k)}",
            implication(ctx.lpi(join(k, n)), lambda k=k: ctx.lpi(k)),
        )
        for n, k in ctx.limit(candidates, suite)
    ]


def minimal_normal_order(ctx: GroupContext) -> list[LemmaInstance]:
    """``p <= d <= |P|``, every subgroup of ``P`` of order ``d`` satisfies the ``ℒ-Π``-property and
    ``N`` is minimal normal with ``d | |N|`` => ``|N| = d``, and when ``d >= p^2`` ``N`` is the
    only minimal normal subgroup of order divisible by ``p``."""
    suite = "minimal-normal-order"
    minimal = ctx.minimal_normal()
    instances: list[LemmaInstance] = []
    for p in ctx.primes:
        top = p_part(ctx.group.order, p).exponent
        for exponent in range(1, top + 1):
            d = PPower(p, exponent)
            for n in minimal:
                if n.order % d.value:
                    continue

                def conclusion(n: Group = n, d: PPower = d, p: int = p) -> bool:
                    if n.order != d.value:
                        return False
                    others = [m for m in minimal if m.element_set != n.element_set and m.order % p == 0]
                    return d.exponent < 2 or not others

                status = implication(ctx.every_subgroup_of_order(d), conclusion)
                instances.append(LemmaInstance(suite, ctx.name, f"p={p} d={d} N={_describe(n)}", status))
    return instances


def lpi_minimal_normal_p_group(ctx: GroupContext) -> list[LemmaInstance]:
    """``H`` a nontrivial ``p``-subgroup of a minimal normal ``N`` with the ``ℒ-Π``-property
    => ``N`` is a ``p``-group."""
    suite = "lpi-minimal-normal-p-group"
    candidates = [
        (n, h, p)
        for n in ctx.minimal_normal()
        for p in prime_divisors(n.order)
        for h in all_subgroups(sylow_subgroup(n, p))
        if not h.is_trivial()
    ]
    return [
        LemmaInstance(
            suite,
            ctx.name,
            f"N={_describe(n)} H={_describe(h)}",
            implication(ctx.lpi(h), lambda n=n, p=p: is_p_group(n, p)),
        )
        for n, h, p in ctx.limit(candidates, suite)
    ]


def p_subgroup_hypercentral(ctx: GroupContext) -> list[LemmaInstance]:
    """A normal ``p``-subgroup ``P`` whose subgroups of order ``p`` (and, if ``P`` is not
    quaternion-free, cyclic subgroups of order 4) satisfy the ``ℒ-Π``-property lies in ``Z_𝒰(G)``."""
    suite = "p-subgroup-hypercentral"
    hypercenter = z_u(ctx.group)
    instances: list[LemmaInstance] = []
    for node in ctx.lattice.nodes[1:]:
        divisors = prime_divisors(node.order)
        if len(divisors) != 1:
            continue
        p = divisors[0]
        status = implication(_p_subgroup_hypotheses(ctx, node, p), lambda node=node: _inside(node, hypercenter))
        instances.append(LemmaInstance(suite, ctx.name, f"P={_describe(node)}", status))
    return instances


def normal_subgroup_p_hypercentral(ctx: GroupContext) -> list[LemmaInstance]:
    """Normal ``N`` with Sylow ``p``-subgroup ``P`` satisfying the same hypotheses => ``N <= Z_{𝒰_p}(G)``."""
    suite = "normal-subgroup-p-hypercentral"
    g = ctx.group
    instances: list[LemmaInstance] = []
    for n in ctx.lattice.nodes[1:]:
        for p in prime_divisors(n.order):
            sylow = sylow_subgroup(n, p)
            status = implication(
                _p_subgroup_hypotheses(ctx, sylow, p), lambda n=n, p=p: _inside(n, z_u_p(g, p))
            )
            instances.append(LemmaInstance(suite, ctx.name, f"N={_describe(n)} p={p}", status))
    return instances


def _quotient_suite(ctx: GroupContext, suite: str, shift: int) -> list[LemmaInstance]:
    # minimal normal N with |N| = d / p**shift, p^2 <= d < |P|
    g = ctx.group
    minimal = ctx.minimal_normal()
    instances: list[LemmaInstance] = []
    for p in ctx.primes:
        top = p_part(g.order, p).exponent
        for exponent in range(2, top):
            d = PPower(p, exponent)
            for n in minimal:
                if n.order != p ** (exponent - shift):
                    continue
                status = implication(
                    ctx.every_subgroup_of_order(d), lambda n=n, p=p: is_p_supersoluble_over(g, n, p)
                )
                instances.append(LemmaInstance(suite, ctx.name, f"p={p} d={d} N={_describe(n)}", status))
    return instances


def quotient_below_d(ctx: GroupContext) -> list[LemmaInstance]:
    """``p^2 <= d < |P|``, hypothesis (1) for ``d`` and ``N`` minimal normal of order ``d/p``
    => ``G/N`` is ``p``-supersoluble."""
    return _quotient_suite(ctx, "quotient-below-d", 1)


def quotient_at_d(ctx: GroupContext) -> list[LemmaInstance]:
    """``p^2 <= d < |P|``, hypothesis (1) for ``d`` and ``N`` minimal normal of order ``d``
    => ``G/N`` is ``p``-supersoluble."""
    return _quotient_suite(ctx, "quotient-at-d", 0)


def _criterion_suite(
    ctx: GroupContext, suite: str, admissible: Callable[[PPower, int, int], bool]
) -> list[LemmaInstance]:
    g = ctx.group
    instances: list[LemmaInstance] = []
    for p in ctx.primes:
        sylow_order = p_part(g.order, p).value
        opp = p_part(o_p_prime_p(g, p).order, p).value
        exponent = 2
        while p**exponent < sylow_order:
            d = PPower(p, exponent)
            exponent += 1
            if not admissible(d, sylow_order, opp):
                continue
            status = implication(ctx.every_subgroup_of_order(d), lambda p=p: is_p_supersoluble(g, p))
            instances.append(LemmaInstance(suite, ctx.name, f"p={p} d={d}", status))
    return instances


def criterion_opp(ctx: GroupContext) -> list[LemmaInstance]:
    """``p^2 <= d <= |P ∩ O_{p'p}(G)|/p`` and hypothesis (1) for ``d`` => ``G`` is ``p``-supersoluble."""
    return _criterion_suite(ctx, "criterion-opp", lambda d, _, opp: d.value * d.p <= opp)


def criterion_sqrt(ctx: GroupContext) -> list[LemmaInstance]:
    """``p^2 <= d <= sqrt|P|`` and hypothesis (1) for ``d`` => ``G`` is ``p``-supersoluble."""
    return _criterion_suite(ctx, "criterion-sqrt", lambda d, sylow_order, _: d.value * d.value <= sylow_order)


def pi_implies_lpi(ctx: GroupContext) -> list[LemmaInstance]:
    """The ``Π``-property implies the ``ℒ-Π``-property."""
    suite = "pi-implies-lpi"
    g = ctx.group
    return [
        LemmaInstance(
            suite, ctx.name, f"H={_describe(h)}", implication(satisfies_pi(g, h).holds, lambda h=h: ctx.lpi(h))
        )
        for h in ctx.limit(ctx.subgroup_pool, suite)
    ]


def lpi_conjugation(ctx: GroupContext) -> list[LemmaInstance]:
    """The ``ℒ-Π``-property is invariant under conjugation in ``G``."""
    suite = "lpi-conjugation"
    candidates = [(h, x) for h in ctx.subgroup_pool for x in ctx.group.gens]
    return [
        LemmaInstance(
            suite,
            ctx.name,
            f"H={_describe(h)} x={x}",
            agreement(ctx.lpi(h), ctx.lpi(conjugate_subgroup(h, x))),
        )
        for h, x in ctx.limit(candidates, suite)
    ]


def hypercenter_definition(ctx: GroupContext) -> list[LemmaInstance]:
    """The greedy ``Z_𝒰`` and ``Z_{𝒰_p}`` agree with the largest normal subgroup all of whose
    chief factors below it are central."""
    suite = "hypercenter-definition"
    g = ctx.group

    def status(greedy: Group, central: Callable[[int], bool]) -> InstanceStatus:
        try:
            by_definition = hypercenter_by_definition(g, central)
        except RuntimeError:
            return "violated"
        return "verified" if greedy.element_set == by_definition.element_set else "violated"

    instances = [LemmaInstance(suite, ctx.name, "Z_U", status(z_u(g), supersoluble_factor))]
    instances.extend(
        LemmaInstance(suite, ctx.name, f"Z_U{p}", status(z_u_p(g, p), p_supersoluble_factor(p))) for p in ctx.primes
    )
    return instances


SUITES: dict[str, Suite] = {
    "lpi-join-normal": lpi_join_normal,
    "lpi-quotient": lpi_quotient,
    "lpi-quotient-converse": lpi_quotient_converse,
    "opp-p-part": opp_p_part,
    "hypercenter-sylow-test": hypercenter_sylow_test,
    "nonabelian-normal-p-part": nonabelian_normal_p_part,
    "lpi-minimal-normal-drop": lpi_minimal_normal_drop,
    "minimal-normal-order": minimal_normal_order,
    "lpi-minimal-normal-p-group": lpi_minimal_normal_p_group,
    "p-subgroup-hypercentral": p_subgroup_hypercentral,
    "normal-subgroup-p-hypercentral": normal_subgroup_p_hypercentral,
    "quotient-below-d": quotient_below_d,
    "quotient-at-d": quotient_at_d,
    "criterion-opp": criterion_opp,
    "criterion-sqrt": criterion_sqrt,
    "pi-implies-lpi": pi_implies_lpi,
    "lpi-conjugation": lpi_conjugation,
    "hypercenter-definition": hypercenter_definition,
}

FIXTURE_SUITES = ("nonabelian-normal-p-part",)
"""Suites also run on :func:`suite_fixtures`, whatever the corpus."""


def suite_fixtures() -> list[CorpusEntry]:
    """Groups with a nonabelian minimal normal subgroup and trivial centralizer, whatever the corpus order bound."""
    return [CorpusEntry("S5", symmetric(5), "constructed"), CorpusEntry("S6", symmetric(6), "constructed")]


def run_suites(ctx: GroupContext, suites: tuple[str, ...]) -> list[LemmaInstance]:
    instances: list[LemmaInstance] = []
    for suite in suites:
        found = SUITES[suite](ctx)
        for instance in found:
            if instance.status == "violated":
                logger.error("%s violated on %s: %s", suite, ctx.name, instance.instance)
        logger.debug("%s: %s produced %d instances", ctx.name, suite, len(found))
        instances.extend(found)
    return instances
