"""Concrete presented rings and their graded dimensions.

An instance fills the free coefficients of a :class:`PresentationTemplate`
from a seed.  Graded pieces of the relation ideal are measured by exact rank
of the matrix whose rows are the products ``m * f`` (``m`` a monomial) written
in the monomial basis of the target degree.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .catalog import PresentationTemplate
from .cones import enumerate_effective_region
from .lattice import DivisorClass, as_class
from .linalg import rank
from .monomials import (
    DEFAULT_CAP,
    GeneratorSet,
    count_monomials,
    enumerate_monomials,
    koszul_quotient_dim,
)
from .polynomial import PRIME_FIELD, CoefficientField, SparsePolynomial

# Coefficients are integers in [1, COEFF_BOUND); the same draws are valid over GF(p) and QQ,
# so an instance can be compared across the two fields.
COEFF_BOUND = 2**20

MODES = ("auto", "independent", "coherent")


@dataclass(frozen=True)
class PresentationInstance:
    template_key: str
    ring: GeneratorSet
    relations: tuple[SparsePolynomial, ...]
    seed: int | None
    field: CoefficientField
    mode: str = "independent"

    @property
    def relation_degrees(self) -> tuple[DivisorClass, ...]:
        return tuple(r.degree for r in self.relations)

    def with_relations(self, relations, key: str | None = None) -> PresentationInstance:
        relations = tuple(relations)
        ring = relations[0].ring if relations else self.ring
        return PresentationInstance(key or self.template_key, ring, relations, self.seed, self.field, self.mode)


def default_mode(T: PresentationTemplate) -> str:
    """Family C with ``d >= 5`` has more relations than its codimension; see :func:`_coherent_c`."""
    return "coherent" if T.family == "C" and T.d >= 5 else "independent"


# -- construction helpers ---------------------------------------------------------------

def _draw(rng: random.Random, field: CoefficientField):
    return field(rng.randrange(1, COEFF_BOUND))


def _general_form(ring, degree, support, rng, field) -> SparsePolynomial:
    return SparsePolynomial(ring, {m: _draw(rng, field) for m in support}, degree, field)


def _mono(ring: GeneratorSet, text: str, field: CoefficientField) -> SparsePolynomial:
    return SparsePolynomial.monomial(ring, ring.parse_monomial(text), 1, field)


def _fixed_part(ring, shape, field) -> SparsePolynomial:
    out = SparsePolynomial.zero(ring, shape.degree, field)
    for text in shape.fixed:
        out = out + _mono(ring, text, field)
    return out


def _divisible_by_x(ring: GeneratorSet, m) -> bool:
    return any(m[ring.index(n)] for n in ring.names if n.startswith("x"))


def _a3_relations(T, rng, field):
    ring = T.generators
    x, y, z1, z2 = (ring.index(n) for n in ("x", "y", "z1", "z2"))

    def invariant_form(k: int) -> SparsePolynomial:
        # general degree-k form in the three degree-(1,1) quantities xy, z1, z2
        terms = {}
        for i in range(k, -1, -1):
            for j in range(k - i, -1, -1):
                e = [0] * len(ring)
                e[x] = e[y] = i
                e[z1], e[z2] = j, k - i - j
                terms[tuple(e)] = _draw(rng, field)
        return SparsePolynomial(ring, terms, (k, k), field)

    f_shape, g_shape = T.relations
    f = _fixed_part(ring, f_shape, field) - invariant_form(3)
    g = _fixed_part(ring, g_shape, field) - invariant_form(5)
    return f, g


def _monomial_support_relations(T, rng, field):
    ring = T.generators
    out = []
    for shape in T.relations:
        fixed = _fixed_part(ring, shape, field)
        support = [m for m in enumerate_monomials(ring, shape.degree) if m not in fixed.terms]
        if T.key == "B3":
            support = [m for m in support if not m[ring.index("t")]]
        if T.family == "C":
            support = [m for m in support if _divisible_by_x(ring, m)]
        out.append(fixed - _general_form(ring, shape.degree, support, rng, field))
    return tuple(out)


def _pencil_split_relations(T, rng, field):
    """``z_i z_j - c z1 z2 - x1 P - x2 Q`` with every coefficient drawn independently."""
    ring = T.generators
    x1, x2 = _mono(ring, "x1", field), _mono(ring, "x2", field)
    z12 = _mono(ring, "z1*z2", field)
    pq_support = enumerate_monomials(ring, (1, 2))
    out = []
    for shape in T.relations:
        P = _general_form(ring, (1, 2), pq_support, rng, field)
        Q = _general_form(ring, (1, 2), pq_support, rng, field)
        rel = _fixed_part(ring, shape, field) - z12.scale(_draw(rng, field)) - x1 * P - x2 * Q
        out.append(rel)
    return tuple(out)


def _invertible(rows, n, field) -> bool:
    return rank([dict(enumerate(r)) for r in rows], n, field) == n


def _coherent_c(T, rng, field):
    """Family-C relations obtained from a Gorenstein model by a random graded change of coordinates.

    The model ``z_i z_j = 0 (i < j)``, ``z_i^2 = z_1^2`` makes the quotient a free
    module over ``k[x1, x2, y1, y2]`` with basis ``1, z_1..z_n, z_1^2``, whose
    Hilbert function is ``abd + 2``.  A random automorphism
    ``z_i -> sum g_ij z_j + l_i(x, y)``, ``x -> GL2 x``, ``y -> GL2 y`` preserves that
    Hilbert function; the transformed relations are then row-reduced so that
    each reads ``z_i z_j - c_ij z1 z2 - (terms divisible by x1 or x2)``.
    """
    ring = T.generators
    n = T.d - 2
    if n < 2:
        raise ValueError("coherent instances need d >= 4")
    zs = [_mono(ring, f"z{i}", field) for i in range(1, n + 1)]
    model = [zs[i] * zs[j] for i in range(n) for j in range(i + 1, n)]
    model += [zs[i] * zs[i] - zs[0] * zs[0] for i in range(1, n)]

    xy_monos = [_mono(ring, f"x{a}*y{b}", field) for a in (1, 2) for b in (1, 2)]
    pivots = [ring.parse_monomial(s.fixed[0]) for s in T.relations]
    z12 = ring.parse_monomial("z1*z2")

    while True:
        gl = {}
        for block in ("x", "y"):
            while True:
                m = [[_draw(rng, field) for _ in range(2)] for _ in range(2)]
                if _invertible(m, 2, field):
                    break
            gl[block] = m
        while True:
            g = [[_draw(rng, field) for _ in range(n)] for _ in range(n)]
            if _invertible(g, n, field):
                break
        images = []
        for name in ring.names:
            kind, idx = name[0], int(name[1:]) - 1
            if kind in "xy":
                row = gl[kind][idx]
                images.append(sum((_mono(ring, f"{kind}{k + 1}", field).scale(row[k]) for k in range(2)),
                                  SparsePolynomial.zero(ring, ring.degrees[ring.index(name)], field)))
            else:
                img = SparsePolynomial.zero(ring, (1, 1), field)
                for k in range(n):
                    img = img + zs[k].scale(g[idx][k])
                for mono in xy_monos:
                    img = img + mono.scale(_draw(rng, field))
                images.append(img)
        moved = [r.substitute(images) for r in model]
        reduced = _normalise(moved, pivots, field)
        if reduced is not None:
            break
    for rel, piv in zip(reduced, pivots):
        stray = [m for m in rel.terms if not _divisible_by_x(ring, m) and m not in (piv, z12)]
        assert not stray, "normal form left a z-quadratic outside the pivot and z1*z2"
    return tuple(reduced)


def _normalise(polys, pivots, field):
    """Gauss-Jordan on the pivot-monomial coefficients; ``None`` if they are singular."""
    k = len(polys)
    mat = [[p.coefficient(m) for m in pivots] + [field(int(i == j)) for j in range(k)]
           for i, p in enumerate(polys)]
    for col in range(k):
        piv = next((r for r in range(col, k) if mat[r][col]), None)
        if piv is None:
            return None
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = field.inv(mat[col][col])
        mat[col] = [field(v * inv) for v in mat[col]]
        for r in range(k):
            if r != col and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [field(a - factor * b) for a, b in zip(mat[r], mat[col])]
    out = []
    for i in range(k):
        comb = SparsePolynomial.zero(polys[0].ring, polys[0].degree, field)
        for j, p in enumerate(polys):
            c = mat[i][k + j]
            if c:
                comb = comb + p.scale(c)
        out.append(comb)
    return out


def instantiate_template(T: PresentationTemplate, seed: int, field: CoefficientField = PRIME_FIELD,
                         mode: str = "auto") -> PresentationInstance:
    """Fill the free coefficients of ``T`` deterministically from ``seed``.

    ``mode="independent"`` draws every free coefficient on its own;
    ``mode="coherent"`` (family C, ``d >= 4``) uses :func:`_coherent_c`;
    ``mode="auto"`` picks :func:`default_mode`.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if mode == "auto":
        mode = default_mode(T)
    if mode == "coherent" and not (T.family == "C" and T.d >= 4):
        raise ValueError(f"coherent mode is only defined for family C with d >= 4, not {T.key}")
    rng = random.Random(f"{T.key}/{seed}")
    if T.key == "A3":
        relations = _a3_relations(T, rng, field)
    elif T.family == "C" and T.d >= 4:
        relations = _coherent_c(T, rng, field) if mode == "coherent" else _pencil_split_relations(T, rng, field)
    else:
        relations = _monomial_support_relations(T, rng, field)
    return PresentationInstance(T.key, T.generators, tuple(relations), seed, field, mode)


def instance_from_relations(key: str, relations, field: CoefficientField | None = None) -> PresentationInstance:
    relations = tuple(relations)
    return PresentationInstance(key, relations[0].ring, relations, None, field or relations[0].field, "explicit")


# -- graded dimensions ------------------------------------------------------------------

def _slice_rows(ring: GeneratorSet, relations, D: DivisorClass, cap: int):
    cols = enumerate_monomials(ring, D, cap)
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    for f in relations:
        for m in enumerate_monomials(ring, D - f.degree, cap):
            rows.append({index[tuple(a + b for a, b in zip(m, e))]: c for e, c in f.terms.items()})
    return cols, rows


def ideal_slice_dim(P: PresentationInstance, D, relations=None, cap: int = DEFAULT_CAP) -> int:
    """Dimension of the degree-``D`` part of the ideal generated by ``relations`` (default: all)."""
    D = as_class(D)
    rels = P.relations if relations is None else tuple(relations)
    if D.a < 0 or D.b < 0:
        return 0
    cols, rows = _slice_rows(P.ring, rels, D, cap)
    return rank(rows, len(cols), P.field)


def quotient_dim(P: PresentationInstance, D, cap: int = DEFAULT_CAP) -> int:
    return count_monomials(P.ring, D) - ideal_slice_dim(P, D, cap=cap)


def in_ideal_slice(P: PresentationInstance, poly: SparsePolynomial, cap: int = DEFAULT_CAP) -> bool:
    cols, rows = _slice_rows(P.ring, P.relations, poly.degree, cap)
    index = {m: i for i, m in enumerate(cols)}
    extra = {index[e]: c for e, c in poly.terms.items()}
    return rank(rows, len(cols), P.field) == rank(rows + [extra], len(cols), P.field)


def resultant_eliminate(P: PresentationInstance, variable: str = "w") -> SparsePolynomial:
    """Eliminate ``variable`` from the two A3 relations.

    With ``f = f1*w + f0`` and ``g = g1*w + g0`` the determinant
    ``g1*f - f1*g`` is free of ``w``; for the A3 shapes ``f1 = y``, ``g1 = v``
    so this is ``v*f - y*g = x v^2 - alpha v + beta y``.
    """
    if P.template_key != "A3" or len(P.relations) != 2:
        raise ValueError("resultant elimination is set up for the A3 presentation")
    f, g = P.relations
    f1, _ = f.split_linear(variable)
    g1, _ = g.split_linear(variable)
    h = g1 * f - f1 * g
    if h.uses(variable):
        raise ValueError(f"{variable}-terms did not cancel; relations are not linear in {variable} as expected")
    if h.degree != DivisorClass(5, 6):
        raise ValueError(f"eliminant has degree {h.degree}, expected (5,6)")
    if not in_ideal_slice(P, h):
        raise ValueError("eliminant does not lie in the ideal slice at (5,6)")
    return h


def eliminant_instance(P: PresentationInstance, variable: str = "w") -> PresentationInstance:
    """``k[x, y, z1, z2, v] / (h)`` for the A3 eliminant ``h``."""
    h = resultant_eliminate(P, variable)
    sub = P.ring.subset([n for n in P.ring.names if n != variable])
    return P.with_relations([h.restrict(sub)], key=f"{P.template_key}/eliminant")


def regular_sequence_mismatches(P: PresentationInstance, region_bound: int, cap: int = DEFAULT_CAP):
    """Effective degrees ``a + b <= region_bound`` where the quotient departs from the Koszul count."""
    if len(P.relations) > 2:
        raise ValueError("regular-sequence certificate covers at most two relations")
    out = []
    for D in enumerate_effective_region(None, region_bound):
        q = quotient_dim(P, D, cap)
        k = koszul_quotient_dim(P.ring, P.relation_degrees, D)
        if q != k:
            out.append((D, q, k))
    return out


def regular_sequence_certificate(P: PresentationInstance, region_bound: int, cap: int = DEFAULT_CAP) -> bool:
    return not regular_sequence_mismatches(P, region_bound, cap)
