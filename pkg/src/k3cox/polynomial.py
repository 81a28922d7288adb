"""Sparse homogeneous polynomials over a prime field or the rationals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .lattice import as_class
from .monomials import GeneratorSet

DEFAULT_MODULUS = 2147483647


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CoefficientField:
    """``modulus=None`` means the rationals."""

    modulus: int | None = DEFAULT_MODULUS

    def __post_init__(self):
        if self.modulus is not None and not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is not None

    def __call__(self, c):
        if self.modulus is None:
            return Fraction(c)
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.modulus) % self.modulus
        return int(c) % self.modulus

    def inv(self, c):
        if self.modulus is None:
            return 1 / Fraction(c)
        return pow(int(c), -1, self.modulus)

    def __str__(self) -> str:
        return "QQ" if self.modulus is None else f"GF({self.modulus})"


PRIME_FIELD = CoefficientField()
RATIONALS = CoefficientField(None)


class DegreeMismatch(ValueError):
    pass


class SparsePolynomial:
    """Homogeneous polynomial stored as ``{exponent tuple: nonzero coefficient}``.

    The degree is carried explicitly so that a zero polynomial still has one.
    """

    __slots__ = ("ring", "field", "terms", "degree")

    def __init__(self, ring: GeneratorSet, terms: Mapping[tuple[int, ...], object], degree=None,
                 field: CoefficientField = PRIME_FIELD):
        clean = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != len(ring):
                raise ValueError(f"exponent vector {exps} does not match ring of size {len(ring)}")
            c = field(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if field.is_prime_field:
                    clean[exps] %= field.modulus
                if not clean[exps]:
                    del clean[exps]
        if degree is None:
            if not clean:
                raise ValueError("a zero polynomial needs an explicit degree")
            degree = ring.degree_of(next(iter(clean)))
        degree = as_class(degree)
        for exps in clean:
            if ring.degree_of(exps) != degree:
                raise DegreeMismatch(
                    f"monomial {ring.format_monomial(exps)} has degree {ring.degree_of(exps)}, expected {degree}"
                )
        self.ring = ring
        self.field = field
        self.terms = clean
        self.degree = degree

    @classmethod
    def monomial(cls, ring: GeneratorSet, exps, coeff=1, field: CoefficientField = PRIME_FIELD):
        exps = tuple(exps)
        return cls(ring, {exps: coeff}, ring.degree_of(exps), field)

    @classmethod
    def parse(cls, ring: GeneratorSet, text: str, field: CoefficientField = PRIME_FIELD):
        """Parse sums of signed monomials such as ``"x*v + y*w - 3*z1^3"``."""
        terms: dict[tuple[int, ...], object] = {}
        for chunk in text.replace("-", "+-").split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            sign = -1 if chunk.startswith("-") else 1
            chunk = chunk.lstrip("-").strip()
            coeff = 1
            head, _, rest = chunk.partition("*")
            if head.strip().lstrip("-").isdigit():
                coeff, chunk = int(head), rest or "1"
            exps = ring.parse_monomial(chunk)
            terms[exps] = field(terms.get(exps, 0)) + field(sign * coeff)
        return cls(ring, terms, None, field)

    @classmethod
    def zero(cls, ring: GeneratorSet, degree, field: CoefficientField = PRIME_FIELD):
        return cls(ring, {}, degree, field)

    def _check(self, other: SparsePolynomial) -> None:
        if other.ring != self.ring:
            raise DegreeMismatch("polynomials live in different rings")
        if other.field != self.field:
            raise DegreeMismatch("polynomials have different coefficient fields")

    def __add__(self, other: SparsePolynomial) -> SparsePolynomial:
        self._check(other)
        if other.degree != self.degree:
            raise DegreeMismatch(f"cannot add degree {self.degree} and {other.degree}")
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return SparsePolynomial(self.ring, terms, self.degree, self.field)

    def __neg__(self) -> SparsePolynomial:
        return self.scale(-1)

    def __sub__(self, other: SparsePolynomial) -> SparsePolynomial:
        return self + (-other)

    def scale(self, c) -> SparsePolynomial:
        c = self.field(c)
        return SparsePolynomial(self.ring, {e: c * v for e, v in self.terms.items()}, self.degree, self.field)

    def __mul__(self, other) -> SparsePolynomial:
        if not isinstance(other, SparsePolynomial):
            return self.scale(other)
        self._check(other)
        terms: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return SparsePolynomial(self.ring, terms, self.degree + other.degree, self.field)

    __rmul__ = scale

    def __pow__(self, k: int) -> SparsePolynomial:
        out = SparsePolynomial.monomial(self.ring, [0] * len(self.ring), 1, self.field)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return (self.ring, self.field, self.degree, self.terms) == (
            other.ring, other.field, other.degree, other.terms)

    def __hash__(self):
        return hash((self.ring, self.degree, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> set[tuple[int, ...]]:
        return set(self.terms)

    def coefficient(self, exps) -> object:
        return self.terms.get(tuple(exps), self.field(0))

    def uses(self, name: str) -> bool:
        i = self.ring.index(name)
        return any(e[i] for e in self.terms)

    def split_linear(self, name: str) -> tuple[SparsePolynomial, SparsePolynomial]:
        """Write ``self = c1 * name + c0`` with ``c0, c1`` free of ``name``.

        Raises ``ValueError`` if ``name`` occurs with exponent above one.
        """
        i = self.ring.index(name)
        g = self.ring.degrees[i]
        c0, c1 = {}, {}
        for e, c in self.terms.items():
            if e[i] == 0:
                c0[e] = c
            elif e[i] == 1:
                c1[e[:i] + (0,) + e[i + 1:]] = c
            else:
                raise ValueError(f"{name} occurs to power {e[i]}")
        return (SparsePolynomial(self.ring, c1, self.degree - g, self.field),
                SparsePolynomial(self.ring, c0, self.degree, self.field))

    def restrict(self, ring: GeneratorSet) -> SparsePolynomial:
        """Re-express in a sub-ring; every variable outside ``ring`` must be absent."""
        keep = [self.ring.index(n) for n in ring.names]
        dropped = [i for i in range(len(self.ring)) if i not in keep]
        terms = {}
        for e, c in self.terms.items():
            if any(e[i] for i in dropped):
                raise ValueError(f"{self.ring.format_monomial(e)} uses a variable outside {ring.names}")
            terms[tuple(e[i] for i in keep)] = c
        return SparsePolynomial(ring, terms, self.degree, self.field)

    def substitute(self, images: Iterable[SparsePolynomial]) -> SparsePolynomial:
        """Apply the ring endomorphism sending generator ``i`` to ``images[i]``."""
        images = list(images)
        out = SparsePolynomial.zero(self.ring, self.degree, self.field)
        for e, c in self.terms.items():
            term = SparsePolynomial.monomial(self.ring, [0] * len(self.ring), c, self.field)
            for img, k in zip(images, e):
                for _ in range(k):
                    term = term * img
            out = out + term
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = self.ring.format_monomial(e)
            if c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}" if mono != "1" else f"{c}")
        return " + ".join(parts)

    __repr__ = __str__


def linear_combination(polys: Iterable[SparsePolynomial], coeffs: Iterable) -> SparsePolynomial:
    polys = list(polys)
    out = SparsePolynomial.zero(polys[0].ring, polys[0].degree, polys[0].field)
    for p, c in zip(polys, coeffs):
        out = out + p.scale(c)
    return out


def polynomial_from_coefficients(ring: GeneratorSet, degree, monomials, coeffs,
                                 field: CoefficientField = PRIME_FIELD) -> SparsePolynomial:
    return SparsePolynomial(ring, dict(zip(map(tuple, monomials), coeffs)), as_class(degree), field)

