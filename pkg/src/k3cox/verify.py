"""End-to-end checks of presented rings against Riemann-Roch, and the fixed table of quoted numbers."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb
from typing import Iterable

from . import cones
from .catalog import catalog_entry, template
from .lattice import DivisorClass, h0_effective, h0_nef, lattice, self_intersection, validate, IntersectionMatrix
from .monomials import (
    A3_GENERATORS,
    count_monomials,
    koszul_quotient_dim,
    series_coefficient,
)
from .polynomial import PRIME_FIELD, CoefficientField
from .presentation import (
    ideal_slice_dim,
    instantiate_template,
    regular_sequence_mismatches,
)

DEFAULT_BOUND = 16
B1_BOUND = 20


@dataclass
class DegreeRow:
    seed: int
    degree: DivisorClass
    monomials: int
    slice_dim: int
    quotient: int
    predicted: int
    koszul: int | None
    boundary: bool

    @property
    def ok(self) -> bool:
        return self.quotient == self.predicted and self.koszul in (None, self.quotient)

    def as_dict(self) -> dict:
        out = asdict(self)
        out["degree"] = [self.degree.a, self.degree.b]
        out["match"] = self.ok
        return out


@dataclass
class ClaimRow:
    item: str
    claim: str
    expected: object
    observed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.observed

    def as_dict(self) -> dict:
        return {"item": self.item, "claim": self.claim, "expected": _jsonable(self.expected),
                "observed": _jsonable(self.observed), "match": self.ok}


def _jsonable(value):
    if isinstance(value, DivisorClass):
        return [value.a, value.b]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class VerificationReport:
    template: str
    seeds: list[int]
    bound: int | None
    rows: list = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.flags and all(r.ok for r in self.rows)

    def failing_rows(self) -> list:
        return [r for r in self.rows if not r.ok]

    def summary(self) -> dict:
        out = {"rows": len(self.rows), "failing": len(self.failing_rows()), "flags": len(self.flags)}
        boundary = [r for r in self.rows if getattr(r, "boundary", False)]
        if boundary:
            out["boundary_rows"] = len(boundary)
            out["boundary_failing"] = sum(not r.ok for r in boundary)
        return out


def verify_presentation(family: str, d: int, bound: int | None = None, seeds: Iterable[int] = (1, 2, 3),
                        field: CoefficientField = PRIME_FIELD, mode: str = "auto") -> VerificationReport:
    """Compare quotient dimensions with h0 at every nonzero nef degree ``a + b <= bound``.

    Square-zero (boundary) degrees use the pencil count and are marked
    ``boundary`` in the rows.  Templates with at most two relations also get the
    Koszul comparison per row and a regular-sequence check over all effective
    degrees in the window.
    """
    T = template(family, d)
    M = T.matrix
    seeds = list(seeds)
    if not seeds:
        raise ValueError("at least one seed is required")
    if bound is None:
        bound = B1_BOUND if T.key == "B1" else DEFAULT_BOUND
    top = max(r.degree.a + r.degree.b for r in T.relations)
    if bound < top:
        raise ValueError(f"bound {bound} is below the largest relation degree total {top}")

    report = VerificationReport(T.key, seeds, bound, metadata={
        "family": T.family, "d": T.d,
        "generators": {n: [g.a, g.b] for n, g in zip(T.generators.names, T.generators.degrees)},
        "relations": [{"name": r.name, "degree": [r.degree.a, r.degree.b], "fixed": list(r.fixed),
                       "free": r.free} for r in T.relations],
        "notes": list(T.notes),
        "field": str(field),
    })
    ci = len(T.relations) <= 2
    by_degree: dict[DivisorClass, set[int]] = {}
    for seed in seeds:
        P = instantiate_template(T, seed, field, mode)
        report.metadata.setdefault("modes", {})[str(seed)] = P.mode
        for D in cones.enumerate_nef_region(M, bound):
            n = count_monomials(T.generators, D)
            s = ideal_slice_dim(P, D)
            k = koszul_quotient_dim(T.generators, T.relation_degrees, D) if ci else None
            row = DegreeRow(seed, D, n, s, n - s, h0_nef(D, M), k, self_intersection(D, M) == 0)
            report.rows.append(row)
            by_degree.setdefault(D, set()).add(row.quotient)
        if ci:
            bad = regular_sequence_mismatches(P, bound)
            report.metadata.setdefault("regular_sequence", {})[str(seed)] = not bad
            for D, q, kz in bad:
                report.flags.append(f"seed {seed}: quotient {q} != Koszul {kz} at {D}")
    for D, values in sorted(by_degree.items()):
        if len(values) > 1:
            report.flags.append(f"seed-dependent quotient dimension at {D}: {sorted(values)}")
    report.rows.sort(key=lambda r: (r.degree.a + r.degree.b, -r.degree.a, r.seed))
    return report


def _claim_rows() -> list[ClaimRow]:
    rows: list[ClaimRow] = []
    A3, B3, C2 = lattice("A", 3), lattice("B", 3), lattice("C", 2)

    def add(item, claim, expected, observed):
        rows.append(ClaimRow(item, claim, expected, observed))

    for D, val in [((3, 3), 11), ((4, 6), 22), ((4, 5), 21), ((5, 5), 27)]:
        add(f"h0 A3 {D}", f"h0(A3, {D}) = {val}", val, h0_effective(D, A3))
    add("h0 B3 (3,3)", "h0(B3, 3G1+3G2) = 20", 20, h0_effective((3, 3), B3))
    add("h0 C2 (4,4)", "h0(C2, 4H) = 34", 34, h0_effective((4, 4), C2))
    for d in range(2, 9):
        add(f"h0 C{d} H", "h0(H) = d + 2", d + 2, h0_effective((1, 1), lattice("C", d)))

    a3 = A3_GENERATORS
    for D, val in [((3, 3), 12), ((5, 5), 34), ((2, 2), 6)]:
        add(f"monomials A3 {D}", f"#monomials of degree {D} = {val}", val, count_monomials(a3, D))
    add("monomials A3 (2,3) without v, w", "only 6 monomials in x, y, z1, z2", 6,
        count_monomials(a3.subset(["x", "y", "z1", "z2"]), (2, 3)))
    add("monomials B3 (3,3)", "22 monomials of degree 3G1+3G2", 22,
        count_monomials(template("B", 3).generators, (3, 3)))
    add("monomials C2 (4,4)", "35 monomials of degree 4H", 35,
        count_monomials(template("C", 2).generators, (4, 4)))

    pa3 = instantiate_template(template("A", 3), 1)
    add("slice A3 (3,3)", "I_3H = (f)_3H, one-dimensional", 1, ideal_slice_dim(pa3, (3, 3)))
    add("slice A3 (5,5)", "dim I_5H = 7", 7, ideal_slice_dim(pa3, (5, 5)))
    add("slice A3 (5,5) of f alone", "dim (f)_5H = 6", 6, ideal_slice_dim(pa3, (5, 5), pa3.relations[:1]))
    add("slice C2 (4,4)", "single relation z^2 - F in degree 4H", 1,
        ideal_slice_dim(instantiate_template(template("C", 2), 1), (4, 4)))
    for d in range(4, 9):
        P = instantiate_template(template("C", d), 1)
        add(f"slice C{d} (2,2)", "dim I_2H = binom(d-1,2) - 1", comb(d - 1, 2) - 1, ideal_slice_dim(P, (2, 2)))

    add("series n=0", "constant term 1", 1, series_coefficient(0).enumerated)
    for n in (1, 7, 10):
        add(f"series n={n}", "coefficient n^2 + 2", n * n + 2, series_coefficient(n).enumerated)

    H, N1, N2 = DivisorClass(1, 1), DivisorClass(2, 3), DivisorClass(3, 2)
    add("Hilbert basis A3", "nef monoid generated by H, N1, N2", [H, N1, N2],
        list(cones.nef_hilbert_basis(A3).hilbert_basis))
    for d in (2, 5):
        add(f"Hilbert basis C{d}", "nef = effective, generated by G1, G2", [DivisorClass(0, 1), DivisorClass(1, 0)],
            list(cones.nef_hilbert_basis(lattice("C", d)).hilbert_basis))
    for fam, d, val in [("A", 3, 6), ("A", 4, 7), ("A", 5, 12), ("B", 2, 4), ("B", 3, 6)]:
        add(f"generator bound {fam}{d}", "closed-form lower bound", val,
            cones.generator_lower_bound(lattice(fam, d)))
    add("deficit A3 (1,1)", "two new generators z1, z2 in degree H", 2, cones.new_generator_deficit(A3, (1, 1)))
    add("Hodge index A2", "family A needs d >= 3", False,
        validate(IntersectionMatrix.of("A", 2)) is None)
    return rows


def verify_paper_counts() -> VerificationReport:
    report = VerificationReport("paper-counts", [1], None, rows=_claim_rows())
    return report


def info(family: str, d: int) -> dict:
    """Lattice, cone and catalog data for ``(family, d)``; validation failures are returned, not raised."""
    M = IntersectionMatrix.of(family, d)
    problem = validate(M)
    out: dict = {"family": M.family, "d": M.d, "matrix": [list(r) for r in M.gram], "validation": problem or "ok"}
    if problem:
        return out
    desc = cones.nef_hilbert_basis(M)
    out["effective_generators"] = [[1, 0], [0, 1]]
    out["nef_extremal_rays"] = [list(r) for r in desc.extremal_rays]
    out["nef_hilbert_basis"] = [list(r) for r in desc.hilbert_basis]
    if M.family in ("A", "B"):
        out["generator_lower_bound"] = cones.generator_lower_bound(M)
    gap = cones.nef_basis_discrepancy(M)
    if gap["missing_from_quoted"] or gap["extra_in_quoted"]:
        out["quoted_basis_discrepancy"] = {k: [list(c) for c in v] for k, v in gap.items()}
    entry = catalog_entry(M.family, M.d)
    if hasattr(entry, "generators"):
        out["catalog"] = {
            "generators": {n: [g.a, g.b] for n, g in zip(entry.generators.names, entry.generators.degrees)},
            "relation_degrees": [[r.degree.a, r.degree.b] for r in entry.relations],
            "notes": list(entry.notes),
        }
    else:
        out["catalog"] = {"out_of_catalog": entry.reason}
    return out
