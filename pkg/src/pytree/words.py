"""Words in the free product <U^2> * <L^2>, which is Gamma(2) projectively.

A word is a tuple of syllables read left to right; the leftmost syllable is
applied last, so ``evaluate`` multiplies the generator powers in written
order. Syllable exponents are half-exponents: ``Syllable("U", k)`` stands
for the matrix ``U^(2k)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Literal

from .matrix import E, IDENTITY, IntMat2, conjugate, mul, triple_extract

Generator = Literal["U", "L"]


@dataclass(frozen=True)
class Syllable:
    generator: Generator
    exponent: int

    def __post_init__(self) -> None:
        if self.generator not in ("U", "L"):
            raise ValueError(f"unknown generator {self.generator!r}")
        if self.exponent == 0:
            raise ValueError("syllable exponent must be nonzero")

    def matrix(self) -> IntMat2:
        """``U^(2k) = (1, 2k; 0, 1)`` and ``L^(2k) = (1, 0; 2k, 1)``."""
        k2 = 2 * self.exponent
        if self.generator == "U":
            return IntMat2(1, k2, 0, 1)
        return IntMat2(1, 0, k2, 1)

    def inverse(self) -> Syllable:
        return Syllable(self.generator, -self.exponent)


@dataclass(frozen=True)
class Gamma2Word:
    """Alternating word; adjacent syllables never share a generator."""

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        for left, right in zip(self.syllables, self.syllables[1:]):
            if left.generator == right.generator:
                raise ValueError("word is not in alternating normal form")

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __mul__(self, other: Gamma2Word) -> Gamma2Word:
        return normalize(self.syllables + other.syllables)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def head(self) -> Syllable | None:
        return self.syllables[0] if self.syllables else None

    @property
    def tail(self) -> Syllable | None:
        return self.syllables[-1] if self.syllables else None


EMPTY = Gamma2Word()


def word(*pairs: tuple[str, int]) -> Gamma2Word:
    """Shorthand: ``word(("U", 1), ("L", 1))`` is the matrix word U^2 L^2."""
    return normalize(Syllable(g, k) for g, k in pairs)


def normalize(raw: Iterable[Syllable]) -> Gamma2Word:
    """Merge neighbouring syllables with equal generators and drop zeros."""
    out: list[tuple[str, int]] = []
    for syl in raw:
        if out and out[-1][0] == syl.generator:
            total = out[-1][1] + syl.exponent
            if total:
                out[-1] = (syl.generator, total)
            else:
                out.pop()
        else:
            out.append((syl.generator, syl.exponent))
    return Gamma2Word(tuple(Syllable(g, k) for g, k in out))


def evaluate(w: Gamma2Word) -> IntMat2:
    result = IDENTITY
    for syl in w.syllables:
        result = mul(result, syl.matrix())
    return result


def delta(w: Gamma2Word) -> Gamma2Word:
    """The outer automorphism U^2 -> U^-2, L^2 -> L^-2 (conjugation by D)."""
    return Gamma2Word(tuple(s.inverse() for s in w.syllables))


def inverse(w: Gamma2Word) -> Gamma2Word:
    return Gamma2Word(tuple(s.inverse() for s in reversed(w.syllables)))


def prepend(syl: Syllable, w: Gamma2Word) -> Gamma2Word:
    return normalize((syl,) + w.syllables)


def word_to_triple(w: Gamma2Word) -> tuple[int, int, int]:
    """Conjugate E by the word's matrix and read off ``(S, C, N)``.

    Only coset representatives modulo <U^2> are accepted, i.e. nonempty
    words whose rightmost syllable is a power of L.
    """
    if w.tail is None or w.tail.generator != "L":
        raise ValueError(f"{format_word(w)} is not a coset representative (must end in L)")
    return triple_extract(conjugate(evaluate(w), E))


@dataclass(frozen=True)
class CosetLevel:
    """The four word families at one level of the enumeration.

    ``l_plus`` / ``l_minus`` hold words whose leftmost syllable is a
    positive / negative power of L, and likewise for ``u_plus`` /
    ``u_minus``.
    """

    level: int
    l_plus: tuple[Gamma2Word, ...] = ()
    l_minus: tuple[Gamma2Word, ...] = ()
    u_plus: tuple[Gamma2Word, ...] = ()
    u_minus: tuple[Gamma2Word, ...] = ()
    words: tuple[Gamma2Word, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "words", self.l_plus + self.l_minus + self.u_plus + self.u_minus
        )

    def __len__(self) -> int:
        return len(self.words)

    def next(self) -> CosetLevel:
        L, Li = Syllable("L", 1), Syllable("L", -1)
        U, Ui = Syllable("U", 1), Syllable("U", -1)
        us = self.u_plus + self.u_minus
        ls = self.l_plus + self.l_minus
        return CosetLevel(
            self.level + 1,
            l_plus=tuple(prepend(L, x) for x in self.l_plus + us),
            l_minus=tuple(prepend(Li, x) for x in self.l_minus + us),
            u_plus=tuple(prepend(U, x) for x in self.u_plus + ls),
            u_minus=tuple(prepend(Ui, x) for x in self.u_minus + ls),
        )


LEVEL_ZERO = CosetLevel(0, l_plus=(Gamma2Word((Syllable("L", 1),)),))


def coset_level(i: int) -> CosetLevel:
    if i < 0:
        raise ValueError("level must be non-negative")
    lvl = LEVEL_ZERO
    for _ in range(i):
        lvl = lvl.next()
    return lvl


# Wire format: "U^-2,L^2" with full (even) matrix exponents; "e" is the identity.

_TOKEN = re.compile(r"^\s*([UL])\^?(-?\d+)?\s*$")


def format_word(w: Gamma2Word) -> str:
    if not w.syllables:
        return "e"
    return ",".join(f"{s.generator}^{2 * s.exponent}" for s in w.syllables)


def parse_word(text: str) -> Gamma2Word:
    """Inverse of ``format_word``. Rejects odd exponents, which leave Gamma(2)."""
    text = text.strip()
    if text in ("e", ""):
        return EMPTY
    syllables = []
    for token in text.split(","):
        match = _TOKEN.match(token)
        if match is None:
            raise ValueError(f"bad word token {token!r}")
        gen, exp = match.group(1), int(match.group(2) or 1)
        if exp % 2:
            raise ValueError(f"odd exponent in {token!r}: not in Gamma(2)")
        syllables.append(Syllable(gen, exp // 2))
    return Gamma2Word(tuple(syllables))
