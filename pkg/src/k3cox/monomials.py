"""Monomials of fixed multidegree in a Z^2-graded polynomial ring.

``count_monomials`` is a vector-partition count done by dynamic programming;
``enumerate_monomials`` is the independent backtracking oracle for it.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

from .lattice import DivisorClass, as_class, lattice, is_nef

DEFAULT_CAP = 10**6


class EnumerationCapExceeded(RuntimeError):
    def __init__(self, degree, cap: int):
        super().__init__(f"more than {cap} monomials in degree {as_class(degree)}")
        self.degree = as_class(degree)
        self.cap = cap


@dataclass(frozen=True)
class GeneratorSet:
    names: tuple[str, ...]
    degrees: tuple[DivisorClass, ...]

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names in {self.names}")
        for name, deg in zip(self.names, self.degrees):
            if deg.a < 0 or deg.b < 0 or deg.is_zero:
                raise ValueError(f"generator {name} has non-effective or zero degree {deg}")

    @classmethod
    def from_pairs(cls, pairs) -> GeneratorSet:
        pairs = list(pairs)
        return cls(tuple(n for n, _ in pairs), tuple(as_class(d) for _, d in pairs))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def degree_of(self, exponents: Sequence[int]) -> DivisorClass:
        a = sum(e * g.a for e, g in zip(exponents, self.degrees))
        b = sum(e * g.b for e, g in zip(exponents, self.degrees))
        return DivisorClass(a, b)

    def subset(self, names) -> GeneratorSet:
        keep = [self.index(n) for n in names]
        return GeneratorSet(tuple(self.names[i] for i in keep), tuple(self.degrees[i] for i in keep))

    def format_monomial(self, exponents: Sequence[int]) -> str:
        parts = []
        for name, e in zip(self.names, exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"

    def parse_monomial(self, text: str) -> tuple[int, ...]:
        """Inverse of :meth:`format_monomial` (``"x*v^2"`` style)."""
        exps = [0] * len(self)
        if text.strip() != "1":
            for factor in text.split("*"):
                name, _, power = factor.strip().partition("^")
                exps[self.index(name)] += int(power) if power else 1
        return tuple(exps)


def count_monomials(G: GeneratorSet, D) -> int:
    D = as_class(D)
    if D.a < 0 or D.b < 0:
        return 0
    # table[a][b] = number of monomials of degree (a, b) in the generators seen so far
    table = [[0] * (D.b + 1) for _ in range(D.a + 1)]
    table[0][0] = 1
    for g in G.degrees:
        if g.a > D.a or g.b > D.b:
            continue
        for a in range(g.a, D.a + 1):
            row, prev = table[a], table[a - g.a]
            for b in range(g.b, D.b + 1):
                row[b] += prev[b - g.b]
    return table[D.a][D.b]


def enumerate_monomials(G: GeneratorSet, D, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All exponent vectors of degree ``D``, in decreasing lexicographic order."""
    D = as_class(D)
    if D.a < 0 or D.b < 0:
        return []
    n = len(G)
    out: list[tuple[int, ...]] = []
    exps = [0] * n

    def rec(i: int, a: int, b: int) -> None:
        if i == n:
            if a == 0 and b == 0:
                if len(out) >= cap:
                    raise EnumerationCapExceeded(D, cap)
                out.append(tuple(exps))
            return
        g = G.degrees[i]
        if i == n - 1:
            # the last exponent is forced: (a, b) must be a multiple of g
            e = a // g.a if g.a else b // g.b
            if e * g.a == a and e * g.b == b:
                exps[i] = e
                rec(n, 0, 0)
                exps[i] = 0
            return
        top = min(a // g.a if g.a else b // g.b, b // g.b if g.b else a // g.a)
        for e in range(top, -1, -1):
            exps[i] = e
            rec(i + 1, a - e * g.a, b - e * g.b)
        exps[i] = 0

    rec(0, D.a, D.b)
    return out


def koszul_quotient_dim(G: GeneratorSet, relation_degrees, D) -> int:
    """Inclusion-exclusion count of a complete intersection in degree ``D``."""
    rels = [as_class(r) for r in relation_degrees]
    if len(rels) > 2:
        raise ValueError("the Koszul formula here covers at most two relations")
    D = as_class(D)
    total = 0
    for k in range(len(rels) + 1):
        for subset in combinations(rels, k):
            shift = D
            for r in subset:
                shift = shift - r
            total += (-1) ** k * count_monomials(G, shift)
    return total


class CountCheck(NamedTuple):
    """An enumerated count next to the closed form it is supposed to match."""

    enumerated: int
    closed_form: int

    @property
    def agrees(self) -> bool:
        return self.enumerated == self.closed_form


A3_GENERATORS = GeneratorSet.from_pairs(
    [("x", (1, 0)), ("y", (0, 1)), ("z1", (1, 1)), ("z2", (1, 1)), ("v", (2, 3)), ("w", (3, 2))]
)
_W_PIECE = A3_GENERATORS.subset(["x", "z1", "z2", "w"])
_H_PIECE = A3_GENERATORS.subset(["x", "y", "z1", "z2", "v"])
_A3 = lattice("A", 3)


def _check_piece_domain(a: int, b: int) -> None:
    if a < b:
        raise ValueError(f"piece counts need a >= b (got ({a},{b})); swap the roles of G1 and G2")
    if not is_nef((a, b), _A3):
        raise ValueError(f"({a},{b}) is not nef for A3")


def piece_count_w(a: int, b: int) -> CountCheck:
    """Monomials ``x^i z1^j z2^k w^n`` with ``n >= 1`` in degree ``(a, b)`` against ``3ab - a^2 - 2b^2``."""
    _check_piece_domain(a, b)
    w = _W_PIECE.index("w")
    count = sum(1 for m in enumerate_monomials(_W_PIECE, (a, b)) if m[w] >= 1)
    return CountCheck(count, 3 * a * b - a * a - 2 * b * b)


def chi(a: int, b: int) -> int:
    """Number of monomials in ``x, y, z1, z2, v`` of degree ``(a, b)``, by enumeration."""
    return len(enumerate_monomials(_H_PIECE, (a, b)))


def piece_count_h(a: int, b: int) -> CountCheck:
    """``chi(a, b) - chi(a-5, b-6)``, the quotient by the degree-(5,6) eliminant, against ``b^2 + 2``."""
    _check_piece_domain(a, b)
    return CountCheck(chi(a, b) - chi(a - 5, b - 6), b * b + 2)


def _mul_series(p: list[int], q: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, c in enumerate(p[: n + 1]):
        if c:
            for j, e in enumerate(q[: n + 1 - i]):
                out[i + j] += c * e
    return out


def series_coefficient(n: int) -> CountCheck:
    """Coefficient of ``x^n`` in ``(1 - x^6) / ((1 - x)^3 (1 - x^3))`` by truncated convolution."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    geometric = [1] * (n + 1)
    every_third = [1 if i % 3 == 0 else 0 for i in range(n + 1)]
    numerator = [0] * (n + 1)
    numerator[0] = 1
    if n >= 6:
        numerator[6] = -1
    series = numerator
    for factor in (geometric, geometric, geometric, every_third):
        series = _mul_series(series, factor, n)
    return CountCheck(series[n], n * n + 2 if n >= 1 else 1)
