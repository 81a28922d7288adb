"""Presentation templates: generator degrees and relation shapes per family and d."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .lattice import DivisorClass, IntersectionMatrix, lattice
from .monomials import GeneratorSet


@dataclass(frozen=True)
class RelationShape:
    name: str
    degree: DivisorClass
    fixed: tuple[str, ...]
    free: str


@dataclass(frozen=True)
class PresentationTemplate:
    family: str
    d: int
    generators: GeneratorSet
    relations: tuple[RelationShape, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def key(self) -> str:
        return f"{self.family}{self.d}"

    @property
    def matrix(self) -> IntersectionMatrix:
        return lattice(self.family, self.d)

    @property
    def relation_degrees(self) -> tuple[DivisorClass, ...]:
        return tuple(r.degree for r in self.relations)

    @property
    def is_complete_intersection(self) -> bool:
        # every catalog entry with at most two relations is a complete intersection
        return len(self.relations) <= 2


@dataclass(frozen=True)
class OutOfCatalog:
    family: str
    d: int
    reason: str


class OutOfCatalogError(LookupError):
    def __init__(self, entry: OutOfCatalog):
        super().__init__(entry.reason)
        self.entry = entry


def _gens(*pairs) -> GeneratorSet:
    return GeneratorSet.from_pairs(pairs)


def _c_generators(d: int) -> GeneratorSet:
    zs = [(f"z{i}", (1, 1)) for i in range(1, d - 1)]
    return _gens(("x1", (1, 0)), ("x2", (1, 0)), ("y1", (0, 1)), ("y2", (0, 1)), *zs)


def _build(family: str, d: int) -> PresentationTemplate | OutOfCatalog:
    D = DivisorClass
    if family == "A" and d == 3:
        return PresentationTemplate(
            "A", 3,
            _gens(("x", (1, 0)), ("y", (0, 1)), ("z1", (1, 1)), ("z2", (1, 1)), ("v", (2, 3)), ("w", (3, 2))),
            (
                RelationShape("f", D(3, 3), ("x*v", "y*w"), "minus a cubic in xy, z1, z2"),
                RelationShape("g", D(5, 5), ("v*w",), "minus a quintic in xy, z1, z2"),
            ),
        )
    if family == "B" and d == 1:
        return PresentationTemplate(
            "B", 1,
            _gens(("x", (1, 0)), ("y1", (0, 1)), ("y2", (0, 1)), ("z", (2, 4)), ("t", (3, 6))),
            (RelationShape("f", D(6, 12), ("t^2",), "all other monomials of degree (6,12)"),),
            ("the degree of the last generator is printed as deg(z); it is read as deg(t)",),
        )
    if family == "B" and d == 2:
        return PresentationTemplate(
            "B", 2,
            _gens(("x", (1, 0)), ("y1", (0, 1)), ("y2", (0, 1)), ("z", (1, 1)), ("t", (2, 3))),
            (RelationShape("g", D(4, 6), ("t^2",), "all other monomials of degree (4,6)"),),
            ("the degree of the last generator is printed as deg(z); it is read as deg(t)",),
        )
    if family == "B" and d == 3:
        return PresentationTemplate(
            "B", 3,
            _gens(("x", (1, 0)), ("y1", (0, 1)), ("y2", (0, 1)), ("z1", (1, 1)), ("z2", (1, 1)), ("t", (3, 2))),
            (
                RelationShape("f1", D(3, 3), ("t*y1",), "minus a form in x, y1, y2, z1, z2"),
                RelationShape("f2", D(3, 3), ("t*y2",), "minus a form in x, y1, y2, z1, z2"),
            ),
            ("the generator of degree G1 is printed as z; it is read as x",),
        )
    if family == "C" and d == 2:
        return PresentationTemplate(
            "C", 2,
            _gens(("x1", (1, 0)), ("x2", (1, 0)), ("y1", (0, 1)), ("y2", (0, 1)), ("z", (2, 2))),
            (RelationShape("f", D(4, 4), ("z^2",), "minus F, every term divisible by x1 or x2"),),
        )
    if family == "C" and d == 3:
        return PresentationTemplate(
            "C", 3, _c_generators(3),
            (RelationShape("f", D(3, 3), ("z1^3",), "minus x1*P + x2*Q"),),
            ("degree-2H count leaves no room for a quadric, so the single relation is cubic",),
        )
    if family == "C" and d >= 4:
        n = d - 2
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1) if (i, j) != (1, 2)]
        rels = tuple(
            RelationShape(
                f"r{i}_{j}", D(2, 2),
                (f"z{i}^2" if i == j else f"z{i}*z{j}",),
                "minus c*z1*z2 + x1*P + x2*Q",
            )
            for i, j in pairs
        )
        assert len(rels) == comb(d - 1, 2) - 1
        return PresentationTemplate("C", d, _c_generators(d), rels)
    if family == "A":
        return OutOfCatalog(family, d, "family A has a known presentation only for d = 3; "
                                       "for d >= 4 at least three relations are needed and none is given")
    if family == "B":
        return OutOfCatalog(family, d, "family B has known presentations only for d = 1, 2, 3")
    return OutOfCatalog(family, d, f"no presentation for family {family} with d = {d}")


def catalog_entry(family: str, d: int) -> PresentationTemplate | OutOfCatalog:
    """Template for ``(family, d)``, or an :class:`OutOfCatalog` record.

    Raises :class:`~k3cox.lattice.LatticeError` if the pair is not even a valid lattice.
    """
    family = family.upper()
    lattice(family, d)
    return _build(family, d)


def template(family: str, d: int) -> PresentationTemplate:
    entry = catalog_entry(family, d)
    if isinstance(entry, OutOfCatalog):
        raise OutOfCatalogError(entry)
    return entry


def expected_generator_count(family: str, d: int) -> int:
    return len(template(family, d).generators)


def supported_pairs(max_c: int = 8) -> list[tuple[str, int]]:
    return [("A", 3), ("B", 1), ("B", 2), ("B", 3), ("C", 2)] + [("C", d) for d in range(3, max_c + 1)]
