"""Theorem A sweep.

For a Sylow ``p``-subgroup ``P`` of ``G`` and ``1 < d < |P|``: if every subgroup of ``P``
of order ``d`` satisfies the ``ℒ-Π``-property (and, when ``d = p = 2`` and ``P`` is not
quaternion-free, so does every cyclic subgroup of order 4), then ``G`` is
``p``-supersoluble as soon as ``d = p``, or ``d <= |P ∩ O_{p'p}(G)|/p``, or ``d <= sqrt|P|``.
"""

from __future__ import annotations

import logging

from ..structure import (
    PPower,
    cyclic_subgroups_of_order4,
    is_p_supersoluble,
    is_quaternion_free,
    o_p_prime_p,
    p_part,
)
from .context import GroupContext
from .report import SIZE_CONDITIONS, TheoremACase, classify_case


logger = logging.getLogger(__name__)


def size_conditions(d: PPower, sylow_order: int, opp_p_part: int) -> tuple[str, ...]:
    """Size conditions holding for ``d``.

    ``|P ∩ O_{p'p}(G)|`` is the ``p``-part of ``|O_{p'p}(G)|`` since the intersection is a
    Sylow subgroup of the normal subgroup ``O_{p'p}(G)``; the square root test is
    ``d**2 <= |P|``.
    """
    holds = (d.exponent == 1, d.value * d.p <= opp_p_part, d.value * d.value <= sylow_order)
    return tuple(name for name, ok in zip(SIZE_CONDITIONS, holds, strict=True) if ok)


def theorem_a_cases(ctx: GroupContext) -> list[TheoremACase]:
    """Every ``(p, d)`` case of ``ctx.group``.

    Raises:
        CapExceededError: A cap is hit, or more than ``instance_bound`` subgroups of one
            order would have to be checked.
    """
    g = ctx.group
    cases: list[TheoremACase] = []
    for p in ctx.primes:
        sylow = ctx.sylow(p)
        top = p_part(sylow.order, p).exponent
        if top < 2:
            continue
        opp_p_part = p_part(o_p_prime_p(g, p).order, p).value
        conclusion = is_p_supersoluble(g, p)
        for exponent in range(1, top):
            d = PPower(p, exponent)
            hyp1 = ctx.every_subgroup_of_order(d)
            hyp2_applicable = d.value == 2 and not is_quaternion_free(sylow)
            hyp2 = all(ctx.lpi(c) for c in cyclic_subgroups_of_order4(sylow)) if hyp2_applicable else None
            conditions = size_conditions(d, sylow.order, opp_p_part)
            status = classify_case(conditions, hyp1, hyp2, conclusion)
            case = TheoremACase(
                group=ctx.name,
                order=g.order,
                p=p,
                d=d,
                size_conditions=conditions,
                hyp1=hyp1,
                hyp2_applicable=hyp2_applicable,
                hyp2=hyp2,
                conclusion=conclusion,
                status=status,
                converse=conclusion and not hyp1,
            )
            if status == "violated":
                logger.error("theorem A violated: %s p=%d d=%d", ctx.name, p, d.value)
            cases.append(case)
    logger.debug("%s: %d theorem A cases", ctx.name, len(cases))
    return cases
