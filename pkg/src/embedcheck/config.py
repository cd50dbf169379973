"""Run-wide limits.

All algorithms in the package are exact; when an input is too large for the
desk-scale methods they fail loudly through :class:`~embedcheck.errors.CapExceededError`
instead of approximating. The limits live in a context variable so a CLI invocation
or a worker process can override them for a block of work.
"""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass

from .errors import CapExceededError


@dataclass(frozen=True, slots=True)
class Caps:
    """Size limits.

    Attributes:
        element_cap: Largest group whose element set may be enumerated.
        quotient_degree_cap: Largest index allowed for a coset-action quotient.
        quaternion_free_cap: Largest 2-group accepted by the quaternion-free test.
        max_degree: Largest permutation degree.
    """

    element_cap: int = 20000
    quotient_degree_cap: int = 1024
    quaternion_free_cap: int = 256
    max_degree: int = 64

    def __post_init__(self):
        for name in ("element_cap", "quotient_degree_cap", "quaternion_free_cap", "max_degree"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} < 1")

    def check(self, cap: str, actual: int) -> None:
        limit: int = getattr(self, cap)
        if actual > limit:
            raise CapExceededError(cap, limit, actual)


_caps: ContextVar[Caps] = ContextVar("embedcheck_caps", default=Caps())


def current_caps() -> Caps:
    return _caps.get()


@contextmanager
def use_caps(caps: Caps) -> Iterator[Caps]:
    """Install ``caps`` for the duration of the ``with`` block."""
    token = _caps.set(caps)
    try:
        yield caps
    finally:
        _caps.reset(token)
