"""Effective and nef monoids of the rank-2 lattice.

The nef monoid is the set of lattice points of the dual cone
``{D : D.G1 >= 0, D.G2 >= 0}``.  Its Hilbert basis is found by brute force
inside the box spanned by the two primitive extremal rays, which always
contains the basis of a two-dimensional pointed cone.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .lattice import (
    DivisorClass,
    IntersectionMatrix,
    LatticeError,
    as_class,
    is_effective,
    is_nef,
    riemann_roch,
)


@dataclass(frozen=True)
class MonoidDescription:
    extremal_rays: tuple[DivisorClass, DivisorClass]
    hilbert_basis: tuple[DivisorClass, ...]


def _primitive(a: int, b: int) -> DivisorClass:
    g = gcd(a, b)
    return DivisorClass(a // g, b // g)


def nef_extremal_rays(M: IntersectionMatrix) -> tuple[DivisorClass, DivisorClass]:
    """Primitive generators of the rays ``D.G1 = 0`` and ``D.G2 = 0``, in that order."""
    # D.G1 = g11*a + d*b = 0  ->  (d, -g11);  D.G2 = d*a + g22*b = 0  ->  (-g22, d)
    return _primitive(M.d, -M.g11), _primitive(-M.g22, M.d)


def _decomposable(p: DivisorClass, points: set[DivisorClass]) -> bool:
    for q in points:
        if q != p and (p - q) in points:
            return True
    return False


def nef_hilbert_basis(M: IntersectionMatrix) -> MonoidDescription:
    r1, r2 = nef_extremal_rays(M)
    amax, bmax = r1.a + r2.a, r1.b + r2.b
    points = {
        DivisorClass(a, b)
        for a in range(amax + 1)
        for b in range(bmax + 1)
        if (a, b) != (0, 0) and is_nef((a, b), M)
    }
    basis = sorted(p for p in points if not _decomposable(p, points))
    return MonoidDescription((r1, r2), tuple(basis))


def quoted_nef_generators(M: IntersectionMatrix) -> tuple[DivisorClass, ...]:
    """The nef generators exactly as listed for each family in the source classification."""
    d, n = M.d, M.d // 2
    if M.family == "A":
        out = {DivisorClass(j, 1) for j in range(1, n + 1)}
        out |= {DivisorClass(1, j) for j in range(1, n + 1)}
        if d % 2:
            out |= {DivisorClass(2, d), DivisorClass(d, 2)}
    elif M.family == "B":
        out = {DivisorClass(j, 1) for j in range(1, n + 1)}
        if d % 2:
            out.add(DivisorClass(d, 2))
    else:
        out = {DivisorClass(1, 0), DivisorClass(0, 1)}
    return tuple(sorted(out))


def nef_basis_discrepancy(M: IntersectionMatrix) -> dict[str, tuple[DivisorClass, ...]]:
    """Compare the computed Hilbert basis with the quoted list.

    For family B the quoted list leaves out ``G2 = (0, 1)`` although it is nef
    and indecomposable; this shows up under ``"missing_from_quoted"``.
    """
    computed = set(nef_hilbert_basis(M).hilbert_basis)
    quoted = set(quoted_nef_generators(M))
    return {
        "missing_from_quoted": tuple(sorted(computed - quoted)),
        "extra_in_quoted": tuple(sorted(quoted - computed)),
    }


def generated_by(basis, targets) -> bool:
    """True when every class in ``targets`` is a nonnegative integer combination of ``basis``."""
    targets = [as_class(t) for t in targets]
    if not targets:
        return True
    if any(t.a < 0 or t.b < 0 for t in targets):
        return False
    amax = max(t.a for t in targets)
    bmax = max(t.b for t in targets)
    reach = [[False] * (bmax + 1) for _ in range(amax + 1)]
    reach[0][0] = True
    for g in basis:
        if g.a > amax or g.b > bmax:
            continue
        for a in range(g.a, amax + 1):
            row, prev = reach[a], reach[a - g.a]
            for b in range(g.b, bmax + 1):
                if prev[b - g.b]:
                    row[b] = True
    return all(reach[t.a][t.b] for t in targets)


def enumerate_nef_region(M: IntersectionMatrix, bound: int) -> list[DivisorClass]:
    """Nonzero nef classes with ``a + b <= bound``, ordered by total degree then by ``-a``.

    The zero class is excluded.
    """
    if bound < 0:
        raise LatticeError("bound must be nonnegative")
    out = []
    for total in range(1, bound + 1):
        for a in range(total, -1, -1):
            D = DivisorClass(a, total - a)
            if is_nef(D, M):
                out.append(D)
    return out


def enumerate_effective_region(M: IntersectionMatrix, bound: int) -> list[DivisorClass]:
    """Effective classes (zero included) with ``a + b <= bound``, same order as the nef scan."""
    return [
        DivisorClass(a, total - a)
        for total in range(bound + 1)
        for a in range(total, -1, -1)
        if is_effective((a, total - a), M)
    ]


def generator_lower_bound(M: IntersectionMatrix) -> int:
    d = M.d
    if M.family == "A":
        return d * (d - 2) // 2 + 3 if d % 2 == 0 else (d - 1) ** 2 // 2 + 4
    if M.family == "B":
        return d * d // 4 + 3 if d % 2 == 0 else (d * d - 1) // 4 + 4
    raise LatticeError("no generator lower bound is stated for family C; see expected_generator_count")


def new_generator_deficit(M: IntersectionMatrix, D) -> int:
    """``h0(a*G1 + G2) - h0((a-1)*G1 + G2) = d - 2a + 1`` for family A.

    Accepts ``(a, 1)`` with ``1 <= a <= ceil(d/2)`` and, by the G1<->G2
    symmetry of family A, ``(1, a)`` in the same range.  Such a class need not
    be nef (e.g. ``(2, 1)`` when ``d = 3``); the count is still taken.
    """
    if M.family != "A":
        raise LatticeError("new_generator_deficit is defined for family A only")
    D = as_class(D)
    a = D.a if D.b == 1 else D.b if D.a == 1 else None
    top = (M.d + 1) // 2
    if a is None or not 1 <= a <= top:
        raise LatticeError(f"{D} is outside the range (a,1), 1 <= a <= {top}")
    return M.d - 2 * a + 1


def deficit_summation_bound(M: IntersectionMatrix) -> int:
    """Rebuild the family-A generator bound from the per-degree deficits.

    Counts ``x, y``, the deficits at ``(a, 1)`` for ``1 <= a <= ceil(d/2)``,
    the mirrored deficits at ``(1, a)`` for ``a >= 2``, and for odd ``d`` one
    generator on each extremal ray ``(d, 2)``, ``(2, d)``.
    """
    if M.family != "A":
        raise LatticeError("deficit summation applies to family A only")
    top = (M.d + 1) // 2
    total = 2
    total += sum(new_generator_deficit(M, (a, 1)) for a in range(1, top + 1))
    total += sum(new_generator_deficit(M, (1, a)) for a in range(2, top + 1))
    if M.d % 2:
        total += 2
    return total


def rr_difference(M: IntersectionMatrix, a: int) -> int:
    """Riemann-Roch difference ``chi(a*G1 + G2) - chi((a-1)*G1 + G2)``, independent of nefness."""
    return riemann_roch((a, 1), M) - riemann_roch((a - 1, 1), M)
