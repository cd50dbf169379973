from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
import sys
from typing import TYPE_CHECKING

if sys.version_info >= (3, 12):
    from typing import override
else:
    from typing_extensions import override


if TYPE_CHECKING:

    def isprime(n: int) -> bool: ...
    def primefactors(n: int) -> list[int]: ...
    def multiplicity(p: int, n: int) -> int: ...

else:
    from sympy import isprime, multiplicity, primefactors


@dataclass(frozen=True, slots=True)
class PrimeSet:
    """A finite set of primes, the ``π`` of a ``π``-number.

    Attributes:
        primes: Sorted, duplicate-free primes.
    """

    primes: tuple[int, ...]

    def __post_init__(self):
        if any(not isprime(p) for p in self.primes):
            raise ValueError(f"{self.primes} contains a non-prime")
        if list(self.primes) != sorted(set(self.primes)):
            raise ValueError(f"{self.primes} is not sorted and duplicate-free")

    @staticmethod
    def of(n: int) -> PrimeSet:
        """The prime divisors of ``n`` (empty for ``n == 1``)."""
        if n < 1:
            raise ValueError("n < 1")
        return PrimeSet(tuple(primefactors(n)))

    @staticmethod
    def from_primes(primes: Iterable[int]) -> PrimeSet:
        return PrimeSet(tuple(sorted(set(primes))))

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    @override
    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.primes)) + "}"


@dataclass(frozen=True, slots=True, order=True)
class PPower:
    """A power ``p ** exponent`` of a prime.

    Attributes:
        p: The prime.
        exponent: Non-negative exponent.
    """

    p: int
    exponent: int

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.exponent < 0:
            raise ValueError("exponent < 0")

    @staticmethod
    def of(value: int, p: int) -> PPower:
        """Raises ``ValueError`` unless ``value`` is a power of ``p``."""
        part = p_part(value, p)
        if part.value != value:
            raise ValueError(f"{value} is not a power of {p}")
        return part

    @property
    def value(self) -> int:
        return self.p**self.exponent

    @override
    def __str__(self) -> str:
        return str(self.value)


def is_prime(n: int) -> bool:
    return isprime(n)


def prime_divisors(n: int) -> list[int]:
    return primefactors(n)


def p_part(n: int, p: int) -> PPower:
    """The largest power of ``p`` dividing ``n``."""
    if n < 1:
        raise ValueError("n < 1")
    return PPower(p, multiplicity(p, n))


def is_p_power(n: int, p: int) -> bool:
    return p_part(n, p).value == n


def factorization(n: int) -> list[tuple[int, int]]:
    """``(p, exponent)`` pairs of ``n`` in ascending ``p``; empty for ``n == 1``."""
    if n < 1:
        raise ValueError("n < 1")
    return [(p, multiplicity(p, n)) for p in primefactors(n)]
