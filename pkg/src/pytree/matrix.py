"""Exact 2x2 integer matrices, the nilpotent cone, and the conjugation action."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class IntMat2:
    """Row-major integer matrix ``(a, b; c, d)``."""

    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, other: IntMat2) -> IntMat2:
        return mul(self, other)

    def __neg__(self) -> IntMat2:
        return IntMat2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, k: int) -> IntMat2:
        return IntMat2(k * self.a, k * self.b, k * self.c, k * self.d)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def adjugate(self) -> IntMat2:
        return IntMat2(self.d, -self.b, -self.c, self.a)

    def transpose(self) -> IntMat2:
        return IntMat2(self.a, self.c, self.b, self.d)

    def inverse(self) -> IntMat2:
        """Exact inverse; only unimodular matrices have one over Z."""
        det = self.det
        if det not in (1, -1):
            raise ValueError(f"matrix is not unimodular (det = {det})")
        return self.adjugate().scale(det)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return self.a == self.b == self.c == self.d == 0

    def __str__(self) -> str:
        return f"({self.a}, {self.b}; {self.c}, {self.d})"


IDENTITY = IntMat2(1, 0, 0, 1)
ZERO = IntMat2(0, 0, 0, 0)
# Root of the nilpotent orbit that carries the Pythagorean triples.
E = IntMat2(0, -1, 0, 0)
# Conjugation by D flips the off-diagonal signs.
D = IntMat2(-1, 0, 0, 1)
SWAP = IntMat2(0, 1, 1, 0)


def mul(A: IntMat2, B: IntMat2) -> IntMat2:
    return IntMat2(
        A.a * B.a + A.b * B.c,
        A.a * B.b + A.b * B.d,
        A.c * B.a + A.d * B.c,
        A.c * B.b + A.d * B.d,
    )


def conjugate(T: IntMat2, X: IntMat2) -> IntMat2:
    """Return ``T X T^-1``. T must have determinant +1 or -1."""
    return mul(mul(T, X), T.inverse())


def is_nilpotent(X: IntMat2) -> bool:
    # The zero matrix counts.
    return X.trace == 0 and X.det == 0


@dataclass(frozen=True)
class NilpotentMat:
    """Nilpotent matrix ``(x, y; z, -x)``, with ``y*z + x**2 == 0``."""

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if self.y * self.z + self.x * self.x != 0:
            raise ValueError(
                f"(x, y, z) = ({self.x}, {self.y}, {self.z}) violates y*z + x^2 = 0"
            )

    @classmethod
    def from_matrix(cls, X: IntMat2) -> NilpotentMat:
        if not is_nilpotent(X):
            raise ValueError(f"{X} is not nilpotent")
        return cls(X.a, X.b, X.c)

    @property
    def matrix(self) -> IntMat2:
        return IntMat2(self.x, self.y, self.z, -self.x)


@dataclass(frozen=True)
class NilpotentDecomposition:
    """``X = sign * lam * (m*n, -n^2; m^2, -m*n)`` with gcd(m, n) = 1.

    ``lam`` is the content of X (the gcd of its entries). ``sign`` is needed
    because ``-E`` is nilpotent but is not a non-negative multiple of any
    ``(m*n, -n^2; m^2, -m*n)``; it does not affect the similarity class.
    """

    lam: int
    m: int
    n: int
    sign: int = 1

    def reconstruct(self) -> IntMat2:
        m, n, k = self.m, self.n, self.sign * self.lam
        return IntMat2(m * n * k, -n * n * k, m * m * k, -m * n * k)


def decompose(X: NilpotentMat | IntMat2) -> NilpotentDecomposition:
    """Split a nilpotent matrix into content, sign and a primitive column (n, m).

    Normalized so that ``m >= 0`` and ``n > 0`` whenever ``m == 0``. The zero
    matrix decomposes as ``lam = 0, (m, n) = (1, 0)``.
    """
    if isinstance(X, IntMat2):
        X = NilpotentMat.from_matrix(X)
    lam = math.gcd(X.x, X.y, X.z)
    if lam == 0:
        return NilpotentDecomposition(0, 1, 0)
    x, y, z = X.x // lam, X.y // lam, X.z // lam
    # z = sign*m^2 and y = -sign*n^2 cannot both vanish for a primitive matrix.
    sign = 1 if (z > 0 or y < 0) else -1
    m = math.isqrt(sign * z)
    n = math.isqrt(-sign * y)
    if m * n != sign * x:
        n = -n
    if m == 0 and n < 0:
        n = -n
    assert (m * m, n * n, m * n) == (sign * z, -sign * y, sign * x), X
    return NilpotentDecomposition(lam, m, n, sign)


def triple_extract(T: IntMat2) -> tuple[int, int, int]:
    """Read ``(|S|, |C|, |N|)`` off a nilpotent matrix.

    For ``(m*n, -n^2; m^2, -m*n)`` this is ``(|m^2 - n^2|, 2|mn|, m^2 + n^2)``.
    """
    if not is_nilpotent(T):
        raise ValueError(f"{T} is not nilpotent")
    return (abs(T.c + T.b), abs(2 * T.a), abs(T.c - T.b))
