"""Sequences of positive integers used as spine edge lengths."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArgumentError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def primes(n: int) -> list[int]:
    """The first ``n`` primes."""
    out: list[int] = []
    k = 2
    while len(out) < n:
        if is_prime(k):
            out.append(k)
        k += 1
    return out


def _primitive(cycle: tuple) -> tuple:
    n = len(cycle)
    for d in range(1, n + 1):
        if n % d == 0 and cycle[:d] * (n // d) == cycle:
            return cycle[:d]
    return cycle


def normalize_periodic(prefix: tuple, cycle: tuple) -> tuple[tuple, tuple]:
    """Shortest prefix and primitive cycle describing the same sequence."""
    cycle = _primitive(tuple(cycle))
    prefix = list(prefix)
    while prefix and prefix[-1] == cycle[-1]:
        prefix.pop()
        cycle = (cycle[-1],) + cycle[:-1]
    return tuple(prefix), cycle


@dataclass(frozen=True)
class PeriodicNat:
    prefix: tuple[int, ...] = ()
    cycle: tuple[int, ...] = (1,)

    def __post_init__(self):
        if not self.cycle:
            raise ArgumentError("cycle must be nonempty")
        if any((not isinstance(v, int)) or v < 1 for v in (*self.prefix, *self.cycle)):
            raise ArgumentError("edge lengths must be positive integers")
        prefix, cycle = normalize_periodic(tuple(self.prefix), tuple(self.cycle))
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "cycle", cycle)

    def value(self, n: int) -> int:
        p = len(self.prefix)
        return self.prefix[n] if n < p else self.cycle[(n - p) % len(self.cycle)]

    @property
    def is_periodic(self) -> bool:
        return True

    @property
    def is_all_ones(self) -> bool:
        return not self.prefix and self.cycle == (1,)


@dataclass(frozen=True)
class PrimePowers:
    """n-th value ``p ** (n + 1)``."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ArgumentError(f"{self.p} is not prime")

    def value(self, n: int) -> int:
        return self.p ** (n + 1)

    @property
    def is_periodic(self) -> bool:
        return False

    @property
    def is_all_ones(self) -> bool:
        return False


NatSeqSpec = PeriodicNat | PrimePowers
ONES = PeriodicNat((), (1,))


def occurs_infinitely(spec: NatSeqSpec, v: int) -> bool:
    """Prime powers are injective, so only a periodic cycle repeats a value."""
    return isinstance(spec, PeriodicNat) and v in spec.cycle


def in_range(spec: NatSeqSpec, v: int) -> bool:
    if isinstance(spec, PeriodicNat):
        return v in spec.prefix or v in spec.cycle
    k = spec.p
    while k < v:
        k *= spec.p
    return k == v
