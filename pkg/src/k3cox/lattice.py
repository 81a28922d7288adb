"""Rank-2 Picard lattices of K3 surfaces and their section counts.

Classes are written ``(a, b)`` for ``a*G1 + b*G2`` where ``G1, G2`` are the
curve classes generating the effective cone.  Three intersection forms occur::

    A: [[-2, d], [d, -2]]   d >= 3
    B: [[-2, d], [d,  0]]   d >= 1
    C: [[ 0, d], [d,  0]]   d >= 2
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

FAMILIES = ("A", "B", "C")

_SQUARES = {"A": (-2, -2), "B": (-2, 0), "C": (0, 0)}
_MIN_D = {"A": 3, "B": 1, "C": 2}


class LatticeError(ValueError):
    """Raised for invalid intersection forms or out-of-domain classes."""


@dataclass(frozen=True, order=True)
class DivisorClass:
    a: int
    b: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.a, k * self.b)

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.b

    def __str__(self) -> str:
        return f"({self.a},{self.b})"

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def swap(self) -> DivisorClass:
        return DivisorClass(self.b, self.a)


ZERO = DivisorClass(0, 0)
G1 = DivisorClass(1, 0)
G2 = DivisorClass(0, 1)
H = DivisorClass(1, 1)
N1 = DivisorClass(2, 3)
N2 = DivisorClass(3, 2)


def as_class(value) -> DivisorClass:
    if isinstance(value, DivisorClass):
        return value
    a, b = value
    return DivisorClass(int(a), int(b))


@dataclass(frozen=True)
class IntersectionMatrix:
    g11: int
    g22: int
    d: int
    family: str

    @classmethod
    def of(cls, family: str, d: int) -> IntersectionMatrix:
        """Build the form for ``family`` and ``d`` without validating it."""
        family = family.upper()
        if family not in _SQUARES:
            raise LatticeError(f"unknown family {family!r}; expected one of A, B, C")
        g11, g22 = _SQUARES[family]
        return cls(g11, g22, int(d), family)

    @property
    def determinant(self) -> int:
        return self.g11 * self.g22 - self.d * self.d

    @property
    def gram(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.g11, self.d), (self.d, self.g22))

    def __str__(self) -> str:
        return f"{self.family}{self.d}"


def validate(M: IntersectionMatrix) -> str | None:
    """Return ``None`` when ``M`` is one of the admissible forms, else the violated constraint."""
    if M.family not in _SQUARES:
        return f"unknown family {M.family!r}"
    if (M.g11, M.g22) != _SQUARES[M.family]:
        return (
            f"family {M.family} requires diagonal {_SQUARES[M.family]}, "
            f"got ({M.g11}, {M.g22})"
        )
    if M.determinant >= 0:
        lead = M.g11 * M.g22
        return f"Hodge index: {lead}-d^2 >= 0 (d={M.d})"
    if M.d < _MIN_D[M.family]:
        return f"family {M.family} requires d >= {_MIN_D[M.family]} (d={M.d})"
    return None


def lattice(family: str, d: int) -> IntersectionMatrix:
    """Validated constructor; raises :class:`LatticeError` on a bad ``(family, d)``."""
    M = IntersectionMatrix.of(family, d)
    problem = validate(M)
    if problem:
        raise LatticeError(problem)
    return M


def pairing(D1, D2, M: IntersectionMatrix) -> int:
    D1, D2 = as_class(D1), as_class(D2)
    return D1.a * D2.a * M.g11 + (D1.a * D2.b + D2.a * D1.b) * M.d + D1.b * D2.b * M.g22


def self_intersection(D, M: IntersectionMatrix) -> int:
    return pairing(D, D, M)


def riemann_roch(D, M: IntersectionMatrix) -> int:
    """``D^2/2 + 2``; the lattice is even so this is always an integer."""
    return self_intersection(D, M) // 2 + 2


def is_nef(D, M: IntersectionMatrix) -> bool:
    D = as_class(D)
    return pairing(D, G1, M) >= 0 and pairing(D, G2, M) >= 0


def is_effective(D, M: IntersectionMatrix | None = None) -> bool:
    # Eff is generated by G1, G2 in all three families.
    D = as_class(D)
    return D.a >= 0 and D.b >= 0


def h0_nef(D, M: IntersectionMatrix) -> int:
    """Number of sections of a nonzero nef class.

    Big classes follow Riemann-Roch.  A square-zero nef class is ``k*E`` with
    ``E`` primitive and moves in a pencil, giving ``k + 1``.
    """
    D = as_class(D)
    if D.is_zero:
        raise LatticeError("h0_nef is undefined for the zero class; its h0 is 1")
    if not is_nef(D, M):
        raise LatticeError(f"{D} is not nef for {M}")
    square = self_intersection(D, M)
    if square > 0:
        return square // 2 + 2
    return gcd(D.a, D.b) + 1


def reduce_to_nef(D, M: IntersectionMatrix) -> DivisorClass:
    """Strip fixed (-2)-curve components until the class is nef (or zero)."""
    D = as_class(D)
    if not is_effective(D, M):
        raise LatticeError(f"{D} is not effective")
    minus_two = [C for C, sq in ((G1, M.g11), (G2, M.g22)) if sq == -2]
    while not D.is_zero:
        for C in minus_two:
            if pairing(D, C, M) < 0:
                D = D - C
                break
        else:
            return D
    return D


def h0_effective(D, M: IntersectionMatrix) -> int:
    D = reduce_to_nef(D, M)
    if D.is_zero:
        return 1
    return h0_nef(D, M)
