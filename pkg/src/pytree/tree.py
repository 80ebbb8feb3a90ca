"""The ternary tree of positive primitive Pythagorean triples rooted at (3, 4, 5)."""

from __future__ import annotations

import enum
import math
from collections.abc import Iterator, Sequence
from typing import NamedTuple

from .arith import exact_sqrt
from .words import Gamma2Word, Syllable, normalize


class PrimTriple(tuple):
    """Primitive triple ``(s, c, n)``: s odd, c even, s^2 + c^2 = n^2."""

    __slots__ = ()

    def __new__(cls, s: int, c: int, n: int) -> PrimTriple:
        if s <= 0 or c <= 0 or n <= 0:
            raise ValueError(f"({s}, {c}, {n}): entries must be positive")
        if s % 2 == 0 or c % 2:
            raise ValueError(f"({s}, {c}, {n}): need s odd and c even")
        if s * s + c * c != n * n:
            raise ValueError(f"({s}, {c}, {n}): s^2 + c^2 != n^2")
        if math.gcd(s, c) != 1:
            raise ValueError(f"({s}, {c}, {n}): not primitive")
        return tuple.__new__(cls, (s, c, n))

    @property
    def s(self) -> int:
        return self[0]

    @property
    def c(self) -> int:
        return self[1]

    @property
    def n(self) -> int:
        return self[2]

    def __getnewargs__(self) -> tuple[int, int, int]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"PrimTriple({self[0]}, {self[1]}, {self[2]})"


class ParamPair(NamedTuple):
    m: int
    n: int

    @classmethod
    def checked(cls, m: int, n: int) -> ParamPair:
        if not is_valid_pair(m, n):
            raise ValueError(
                f"(m, n) = ({m}, {n}): need m > n >= 1, coprime, opposite parity"
            )
        return cls(m, n)


def is_valid_pair(m: int, n: int) -> bool:
    return m > n >= 1 and (m + n) % 2 == 1 and math.gcd(m, n) == 1


class ChildKind(enum.Enum):
    U_MINUS = "U-"
    L_PLUS = "L+"
    U_PLUS = "U+"

    def __lt__(self, other: ChildKind) -> bool:
        return _ORDER[self] < _ORDER[other]


KINDS = (ChildKind.U_MINUS, ChildKind.L_PLUS, ChildKind.U_PLUS)
_ORDER = {k: i for i, k in enumerate(KINDS)}

TreePath = tuple[ChildKind, ...]

ROOT = PrimTriple(3, 4, 5)


def triple_from_params(p: ParamPair | tuple[int, int]) -> PrimTriple:
    m, n = ParamPair.checked(*p)
    return PrimTriple(m * m - n * n, 2 * m * n, m * m + n * n)


def params_from_triple(t: PrimTriple) -> ParamPair:
    s, _, n = t
    m, k = exact_sqrt((n + s) // 2), exact_sqrt((n - s) // 2)
    if m is None or k is None:
        raise ValueError(f"{t}: (N+S)/2 and (N-S)/2 must both be perfect squares")
    return ParamPair(m, k)


def child(t: PrimTriple, kind: ChildKind) -> PrimTriple:
    s, c, n = t
    if kind is ChildKind.U_MINUS:
        k = 2 * (n + s - c)
        return PrimTriple(k - s, k + c, k + n)
    if kind is ChildKind.L_PLUS:
        k = 2 * (n - s + c)
        return PrimTriple(k + s, k - c, k + n)
    k = 2 * (n + s + c)
    return PrimTriple(k - s, k - c, k + n)


def child_params(p: ParamPair, kind: ChildKind) -> ParamPair:
    m, n = p
    if kind is ChildKind.U_MINUS:
        return ParamPair(2 * m - n, m)
    if kind is ChildKind.L_PLUS:
        return ParamPair(m + 2 * n, n)
    return ParamPair(2 * m + n, m)


def children(t: PrimTriple) -> tuple[PrimTriple, PrimTriple, PrimTriple]:
    """The three children in left-to-right order U-, L+, U+."""
    return tuple(child(t, k) for k in KINDS)


def parent(t: PrimTriple) -> tuple[PrimTriple, ChildKind] | None:
    """Unique (parent, kind) with ``child(parent, kind) == t``; None at the root."""
    m, n = params_from_triple(t)
    candidates = [
        ((n, 2 * n - m), ChildKind.U_MINUS),
        ((m - 2 * n, n), ChildKind.L_PLUS),
        ((n, m - 2 * n), ChildKind.U_PLUS),
    ]
    valid = [(p, k) for p, k in candidates if is_valid_pair(*p)]
    if not valid:
        return None
    assert len(valid) == 1, (t, valid)
    p, k = valid[0]
    return triple_from_params(p), k


def node_at(path: Sequence[ChildKind]) -> PrimTriple:
    t = ROOT
    for kind in path:
        t = child(t, kind)
    return t


def locate(t: PrimTriple) -> TreePath:
    """Path from the root to t."""
    steps = []
    while (up := parent(t)) is not None:
        t, kind = up
        steps.append(kind)
    return tuple(reversed(steps))


def level_of(t: PrimTriple) -> int:
    return len(locate(t))


def level_iter(k: int) -> Iterator[PrimTriple]:
    """All 3^k triples at depth k in path-lexicographic order (U- < L+ < U+).

    Memory stays O(k) regardless of the output size.
    """
    for _, t in level_items(k):
        yield t


def level_items(k: int) -> Iterator[tuple[TreePath, PrimTriple]]:
    """Like :func:`level_iter` but yields ``(path, triple)`` pairs."""
    if k < 0:
        raise ValueError("depth must be non-negative")
    # Depth-first; each frame holds the not-yet-visited siblings at one depth.
    stack: list[list[tuple[ChildKind | None, PrimTriple]]] = [[(None, ROOT)]]
    path: list[ChildKind] = []
    while stack:
        pending = stack[-1]
        if not pending:
            stack.pop()
            if path:
                path.pop()
            continue
        kind, t = pending.pop()
        if len(stack) > 1:
            path[len(stack) - 2:] = [kind]
        if len(stack) == k + 1:
            yield tuple(path), t
        else:
            stack.append([(kd, child(t, kd)) for kd in reversed(KINDS)])


def walk(max_hypotenuse: int) -> Iterator[tuple[PrimTriple, TreePath]]:
    """Pre-order traversal pruned at the hypotenuse bound.

    Pruning is exact because hypotenuses strictly increase along edges.
    """
    if ROOT.n > max_hypotenuse:
        return
    stack: list[tuple[PrimTriple, TreePath]] = [(ROOT, ())]
    while stack:
        t, path = stack.pop()
        yield t, path
        for kind in reversed(KINDS):
            c = child(t, kind)
            if c.n <= max_hypotenuse:
                stack.append((c, path + (kind,)))


# Navigation in the word calculus. A word's matrix has first column (a, c);
# conjugating E by it gives (S, C, N) = (|c^2 - a^2|, 2|ac|, a^2 + c^2), so
# the tree parameters are (max, min) of (|a|, |c|).

_ROOT_WORD = Gamma2Word((Syllable("L", 1),))
_STEPS = (Syllable("U", -1), Syllable("L", 1), Syllable("U", 1), Syllable("L", -1))


def _column_step(col: tuple[int, int], syl: Syllable) -> tuple[int, int]:
    a, c = col
    if syl.generator == "U":
        return (a + 2 * syl.exponent * c, c)
    return (a, c + 2 * syl.exponent * a)


def word_for(path: Sequence[ChildKind]) -> Gamma2Word:
    """Coset representative whose triple is ``node_at(path)``.

    Each tree edge is left multiplication by one of U^-2, L^2, U^2, L^-2, but
    which generator realises which child kind depends on the node, so the
    generator is picked by matching the child's parameters.
    """
    w, col, p = _ROOT_WORD, (1, 2), ParamPair(2, 1)
    for kind in path:
        target = child_params(p, kind)
        for syl in _STEPS:
            a, c = _column_step(col, syl)
            if (max(abs(a), abs(c)), min(abs(a), abs(c))) == target:
                break
        else:  # pragma: no cover - would contradict the tree/coset bijection
            raise AssertionError(f"no generator realises {kind} at {p}")
        w = normalize((syl,) + w.syllables)
        col, p = (a, c), target
    return w


# Path wire format: "U-,L+,U+" (emitted); "-", "0", "+" also accepted.

_PATH_TOKENS = {
    "U-": ChildKind.U_MINUS, "L+": ChildKind.L_PLUS, "U+": ChildKind.U_PLUS,
    "-": ChildKind.U_MINUS, "0": ChildKind.L_PLUS, "+": ChildKind.U_PLUS,
}


def format_path(path: Sequence[ChildKind]) -> str:
    return ",".join(k.value for k in path)


def parse_path(text: str) -> TreePath:
    text = text.strip()
    if not text:
        return ()
    if "," not in text and set(text) <= {"-", "0", "+"}:
        tokens = list(text)
    else:
        tokens = [tok.strip() for tok in text.split(",")]
    try:
        return tuple(_PATH_TOKENS[tok] for tok in tokens)
    except KeyError as exc:
        raise ValueError(f"bad path token {exc.args[0]!r}") from None
