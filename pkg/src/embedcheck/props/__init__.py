"""Embedding properties of subgroups, with failure witnesses."""

from .embedding import (
    PropertyName,
    PropertyVerdict,
    Witness,
    check_property,
    explain,
    pi_number,
    satisfies_l_pi,
    satisfies_pi,
)


__all__ = [
    "PropertyName",
    "PropertyVerdict",
    "Witness",
    "check_property",
    "explain",
    "pi_number",
    "satisfies_l_pi",
    "satisfies_pi",
]
