"""Ordinals below w^w in Cantor normal form.

An ordinal is a tuple of ``(exponent, coefficient)`` terms with strictly
decreasing exponents and positive coefficients; the empty tuple is 0.  Text
syntax: terms ``w^k*c`` joined by ``+`` (``w`` alone means ``w^1``, a bare
integer is the finite part), e.g. ``w^2*1+w*3+4``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

from .errors import ArgumentError, ParseError


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = None
        for exp, coeff in self.terms:
            if exp < 0 or coeff < 1:
                raise ArgumentError(f"bad CNF term {(exp, coeff)}")
            if prev is not None and exp >= prev:
                raise ArgumentError("CNF exponents must strictly decrease")
            prev = exp

    @classmethod
    def of(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ArgumentError("ordinals are nonnegative")
        return cls(((0, n),)) if n else cls()

    def __lt__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) < 0

    def __str__(self):
        return to_text(self)

    @property
    def is_finite(self) -> bool:
        return all(exp == 0 for exp, _ in self.terms)

    def finite_value(self) -> int:
        if not self.is_finite:
            raise ArgumentError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0


ZERO = Ordinal()
ONE = Ordinal.of(1)
OMEGA = Ordinal(((1, 1),))


def compare(a: Ordinal, b: Ordinal) -> int:
    """-1, 0 or 1.  Lexicographic on terms; a longer list wins a common prefix."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        if ea != eb:
            return 1 if ea > eb else -1
        if ca != cb:
            return 1 if ca > cb else -1
    return (len(a.terms) > len(b.terms)) - (len(a.terms) < len(b.terms))


def succ(a: Ordinal) -> Ordinal:
    if a.terms and a.terms[-1][0] == 0:
        return Ordinal(a.terms[:-1] + ((0, a.terms[-1][1] + 1),))
    return Ordinal(a.terms + ((0, 1),))


def is_limit(a: Ordinal) -> bool:
    return bool(a.terms) and a.terms[-1][0] >= 1


def ord_max(a: Ordinal, b: Ordinal) -> Ordinal:
    return a if compare(a, b) >= 0 else b


def predecessor(a: Ordinal) -> Ordinal | None:
    """The immediate predecessor of a successor ordinal, else None."""
    if not a.terms or a.terms[-1][0] != 0:
        return None
    coeff = a.terms[-1][1]
    if coeff == 1:
        return Ordinal(a.terms[:-1])
    return Ordinal(a.terms[:-1] + ((0, coeff - 1),))


def fundamental(a: Ordinal, n: int) -> Ordinal:
    """n-th element of the canonical cofinal sequence of a limit ordinal.

    Split off the last term as ``gamma + w^k``; the n-th element is
    ``gamma + w^(k-1)*(n+1)``.
    """
    if not is_limit(a):
        raise ArgumentError(f"{a} is not a limit ordinal")
    if n < 0:
        raise ArgumentError("index must be nonnegative")
    *head, (k, c) = a.terms
    if c > 1:
        head.append((k, c - 1))
    head.append((k - 1, n + 1))
    return Ordinal(tuple(head))


def to_text(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    parts = []
    for exp, coeff in a.terms:
        if exp == 0:
            parts.append(str(coeff))
            continue
        base = "w" if exp == 1 else f"w^{exp}"
        parts.append(base if coeff == 1 else f"{base}*{coeff}")
    return "+".join(parts)


_TERM = re.compile(r"\s*(?:(w)\s*(?:\^\s*(\d+))?\s*(?:\*\s*(\d+))?|(\d+))\s*")


def parse_ordinal(text: str) -> Ordinal:
    """Parse ordinal text.  Terms must already be in normal-form order."""
    pos = 0
    terms: list[tuple[int, int]] = []
    while True:
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"expected ordinal term in {text!r}", 1, pos + 1)
        if m.group(1):
            exp = int(m.group(2)) if m.group(2) is not None else 1
            coeff = int(m.group(3)) if m.group(3) is not None else 1
        else:
            exp, coeff = 0, int(m.group(4))
        if coeff > 0:
            if terms and exp >= terms[-1][0]:
                raise ParseError(f"terms out of normal-form order in {text!r}", 1, m.start() + 1)
            terms.append((exp, coeff))
        elif exp > 0:
            raise ParseError("zero coefficient", 1, m.start() + 1)
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "+":
            raise ParseError(f"unexpected {text[pos]!r} in ordinal", 1, pos + 1)
        pos += 1
    return Ordinal(tuple(terms))
