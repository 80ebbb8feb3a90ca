"""Coordinate differences along tree paths and the Z[sqrt 2] norm-form solver.

Vocabulary for a triple (S, C, N) with tree parameters (m, n):

* ``P = N - C = (m - n)^2``, constant along U- edges;
* ``Q = N - S = 2 n^2``, constant along L+ edges;
* ``R = C - S = 2mn - m^2 + n^2``, which flips sign along U+ edges.

The "difference" D handled by :func:`root_triple_for_difference` is
``S - C = -R``, so D = 17 is realised by (45, 28, 53).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .arith import factorize, is_prime, sqrt_mod_prime
from .tree import ChildKind, PrimTriple, child, triple_from_params


class NotRepresentableError(ValueError):
    """The requested integer is not a value of the relevant norm form."""


@dataclass(frozen=True)
class QuadInt:
    """``a + b*sqrt(2)`` in Z[sqrt 2]."""

    a: int
    b: int = 0

    @property
    def norm(self) -> int:
        return self.a * self.a - 2 * self.b * self.b

    def conj(self) -> QuadInt:
        return QuadInt(self.a, -self.b)

    def __mul__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.a * other, self.b * other)
        return QuadInt(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b)

    def __pow__(self, k: int) -> QuadInt:
        if k < 0:
            raise ValueError("negative powers are only defined for units")
        result = QuadInt(1)
        for _ in range(k):
            result = result * self
        return result

    def exact_div(self, other: QuadInt) -> QuadInt | None:
        """``other / self`` if it lies in Z[sqrt 2], else None."""
        num, den = other * self.conj(), self.norm
        if num.a % den or num.b % den:
            return None
        return QuadInt(num.a // den, num.b // den)

    def __str__(self) -> str:
        return f"{self.a}{'-' if self.b < 0 else '+'}{abs(self.b)}√2"

    def ascii(self) -> str:
        return f"{self.a}{'-' if self.b < 0 else '+'}{abs(self.b)}*sqrt2"


SQRT2 = QuadInt(0, 1)
# Units: 1 + sqrt 2 generates them; -1 + sqrt 2 is the paper-style norm -1 unit.
FUNDAMENTAL_UNIT = QuadInt(1, 1)
NEG_NORM_UNIT = QuadInt(-1, 1)
SQUARE_UNIT = QuadInt(3, 2)
SQUARE_UNIT_INV = QuadInt(3, -2)


# -- differences ------------------------------------------------------------


class DiffForm(enum.Enum):
    P = "P"
    Q = "Q"
    R = "R"


class Differences(NamedTuple):
    p: int
    q: int
    r: int


def differences(t: PrimTriple) -> Differences:
    s, c, n = t
    return Differences(n - c, n - s, c - s)


_INVARIANT_KIND = {
    DiffForm.P: ChildKind.U_MINUS,
    DiffForm.Q: ChildKind.L_PLUS,
    DiffForm.R: ChildKind.U_PLUS,
}


def invariant_child_kind(form: DiffForm) -> ChildKind:
    return _INVARIANT_KIND[form]


def difference_value(t: PrimTriple, form: DiffForm) -> int:
    return differences(t)[list(DiffForm).index(form)]


def difference_path(t0: PrimTriple, form: DiffForm, k: int) -> list[PrimTriple]:
    """``t0`` and the next ``k - 1`` nodes along the edge kind preserving ``form``."""
    if k < 1:
        raise ValueError("path length must be at least 1")
    kind = invariant_child_kind(form)
    path = [t0]
    for _ in range(k - 1):
        path.append(child(path[-1], kind))
    return path


# -- representability ---------------------------------------------------------


def _require_odd(D: int) -> None:
    if D % 2 == 0:
        raise ValueError(f"D = {D} must be odd")


def is_norm(D: int) -> bool:
    """True iff ``a^2 - 2b^2 = D`` has an integer solution.

    Z[sqrt 2] is a PID with a unit of norm -1, so this holds exactly when
    every prime = 3, 5 (mod 8) divides D to an even power.
    """
    if D == 0:
        return False
    return all(e % 2 == 0 for p, e in factorize(abs(D)).items() if p % 8 in (3, 5))


def is_representable_R(D: int) -> bool:
    """True iff ``x^2 - 8y^2 = D`` has an integer solution (y = 0 allowed).

    For odd D a solution of ``a^2 - 2b^2 = D`` has b even exactly when
    D = 1 (mod 8), so the test is: D = 1 (mod 8) and D is a norm. Primes
    = 7 (mod 8) may divide D to any power, e.g. -7 = 1 - 8.
    """
    _require_odd(D)
    return D % 8 == 1 and is_norm(D)


def is_difference(D: int) -> bool:
    """True iff some primitive triple has ``S - C = D``.

    That needs a primitive solution of ``x^2 - 8y^2 = D`` or ``-D``, which
    exists exactly when every prime factor of D is = 1 or 7 (mod 8).
    """
    _require_odd(D)
    return all(p % 8 in (1, 7) for p in factorize(abs(D)))


# -- Lagrange descent -----------------------------------------------------------


@dataclass(frozen=True)
class DescentTrace:
    """``steps[i] = (z_i, q_{i+1})`` with ``z_i^2 - 8 = q_i * q_{i+1}``, ``q_0 = p``."""

    p: int
    steps: tuple[tuple[int, int], ...]

    @property
    def moduli(self) -> tuple[int, ...]:
        return (self.p,) + tuple(q for _, q in self.steps)


def _descend(p: int) -> DescentTrace:
    z = sqrt_mod_prime(8, p)
    q, steps = p, []
    while True:
        q_next = (z * z - 8) // q
        steps.append((z, q_next))
        if abs(q_next) <= 2:
            return DescentTrace(p, tuple(steps))
        # z stays a root of 8 modulo q_next; keep the same residue class so
        # every reconstruction division below is exact.
        r = z % q_next
        z, q = min(r, q_next - r), q_next


def lagrange_descent(p: int) -> DescentTrace:
    """Shrink ``z^2 = 8 (mod q)`` from q = p down to q <= 2.

    For p = 89: z_0 = 39, q_1 = 17, z_1 = 5, q_2 = 1.
    """
    if p % 8 != 1:
        raise ValueError(f"p = {p} is not 1 mod 8; z^2 = 8 (mod p) has no useful descent")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    return _descend(p)


def reconstruct(trace: DescentTrace) -> QuadInt:
    """Element of norm exactly ``trace.p`` built from the descent.

    ``z_0 + 2 sqrt 2`` has norm ``p q_1``; each later step multiplies by the
    conjugate of ``z_i +- 2 sqrt 2`` and divides by ``q_i``, choosing the sign
    that keeps the quotient integral.
    """
    (z0, _), *rest = trace.steps
    beta = QuadInt(z0, 2)
    q = trace.steps[0][1]
    for z, q_next in rest:
        for sign in (1, -1):
            quotient = QuadInt(q).exact_div(beta * QuadInt(z, -2 * sign))
            if quotient is not None:
                beta = quotient
                break
        else:  # pragma: no cover
            raise AssertionError(f"descent for {trace.p}: no exact division by {q}")
        q = q_next
    if abs(q) == 2:
        beta = SQRT2.exact_div(beta)
        assert beta is not None
    if beta.norm == -trace.p:
        beta = beta * NEG_NORM_UNIT
    assert beta.norm == trace.p, (trace, beta)
    return beta


# -- solving the norm form ----------------------------------------------------


def reduce_by_units(u: QuadInt) -> QuadInt:
    """Associate of u (times a power of 3 + 2 sqrt 2) with the smallest |b|."""
    while True:
        up, down = u * SQUARE_UNIT, u * SQUARE_UNIT_INV
        best = min((up, down), key=lambda v: abs(v.b))
        if abs(best.b) >= abs(u.b):
            return u
        u = best


def _canonical_sign(u: QuadInt) -> QuadInt:
    return QuadInt(abs(u.a), abs(u.b))


def prime_element(p: int) -> QuadInt:
    """An element of norm p for a prime p = 1 or 7 (mod 8)."""
    if p % 8 not in (1, 7):
        raise ValueError(f"{p} is inert or ramified in Z[sqrt 2]")
    return reconstruct(_descend(p))


def _split_factors(n: int) -> tuple[int, list[tuple[QuadInt, int]]]:
    """Separate n into an inert square part and split primes with their elements."""
    rational, split = 1, []
    for p, e in factorize(n).items():
        if p % 8 in (3, 5):
            if e % 2:
                raise NotRepresentableError(f"{p}^{e} divides {n} to an odd power")
            rational *= p ** (e // 2)
        elif p == 2:
            raise ValueError("only odd values are supported")
        else:
            split.append((prime_element(p), e))
    return rational, split


def solve_norm(D: int) -> QuadInt:
    """Canonical solution of ``a^2 - 2b^2 = D`` for odd D.

    For D > 0 this is the solution with the smallest |b|, with a > 0 and
    b >= 0. For D < 0 it is ``(-1 + sqrt 2)`` times the answer for -D, so
    -17 gives ``-1 + 3 sqrt 2``.
    """
    _require_odd(D)
    if not is_norm(D):
        raise NotRepresentableError(
            f"{D} is not a norm from Z[sqrt 2]: some prime = 3, 5 (mod 8) "
            "divides it to an odd power"
        )
    if D < 0:
        return NEG_NORM_UNIT * solve_norm(-D)
    rational, split = _split_factors(D)
    best: QuadInt | None = None
    # Every solution is an associate of one of these products.
    for choice in itertools.product(*(range(e + 1) for _, e in split)):
        u = QuadInt(rational)
        for (pi, e), j in zip(split, choice):
            u = u * pi ** (e - j) * pi.conj() ** j
        u = _canonical_sign(reduce_by_units(u))
        if best is None or u.b < best.b:
            best = u
    assert best is not None and best.norm == D
    return best


def _primitive_norm_elements(T: int) -> list[QuadInt]:
    """One element per unit orbit (up to conjugation) of primitive norm-T elements."""
    rational, split = _split_factors(abs(T))
    if rational != 1:
        return []
    out = []
    first, *others = split if split else [(QuadInt(1), 0)]
    for flips in itertools.product((False, True), repeat=len(others)):
        u = first[0] ** first[1]
        for (pi, e), flip in zip(others, flips):
            u = u * (pi.conj() if flip else pi) ** e
        if T < 0:
            u = u * FUNDAMENTAL_UNIT
        assert u.norm == T
        out.append(reduce_by_units(u))
    return out


def _triple_from_rep(x: int, y: int, n_even: bool) -> PrimTriple | None:
    """Tree triple from ``x^2 - 8y^2 = T`` (x, y > 0), or None if out of range."""
    if n_even:
        m, n = x + 2 * y, 2 * y
    else:
        m, n = 2 * y, x - 2 * y
    if not m > n >= 1:
        return None
    return triple_from_params((m, n))


def _orbit_root(u: QuadInt, n_even: bool) -> PrimTriple:
    best = None
    for step in (SQUARE_UNIT, SQUARE_UNIT_INV):
        v = u
        # |b| grows geometrically away from the reduced element; the
        # parameter constraints are met after a few steps.
        while True:
            if v.b % 2 == 0 and v.b:
                t = _triple_from_rep(abs(v.a), abs(v.b) // 2, n_even)
                if t is not None:
                    if best is None or t.n < best.n:
                        best = t
                    break
            v = v * step
    assert best is not None
    return best


def root_triple_for_difference(D: int) -> PrimTriple:
    """Smallest-hypotenuse primitive triple with ``S - C = D``.

    Along its U+ path the difference alternates D, -D, D, ... so every later
    triple with the same signed difference descends from this one.
    """
    _require_odd(D)
    if not is_difference(D):
        bad = [p for p in factorize(abs(D)) if p % 8 not in (1, 7)]
        raise NotRepresentableError(
            f"{D} is not a coordinate difference: prime factor(s) {bad} "
            "are not = 1 or 7 (mod 8)"
        )
    # S - C = x^2 - 8y^2 when the tree parameter n is even, and
    # -(x^2 - 8y^2) when m is even; only the target = 1 (mod 8) is solvable.
    target = D if D % 8 == 1 else -D
    n_even = target == D
    roots = [_orbit_root(u, n_even) for u in _primitive_norm_elements(target)]
    root = min(roots, key=lambda t: t.n)
    assert root.s - root.c == D
    return root
