from math import comb

import pytest

from k3cox.catalog import template
from k3cox.cones import enumerate_nef_region
from k3cox.lattice import DivisorClass, lattice
from k3cox.monomials import count_monomials, piece_count_w
from k3cox.polynomial import PRIME_FIELD, RATIONALS, SparsePolynomial
from k3cox.presentation import (
    default_mode,
    eliminant_instance,
    ideal_slice_dim,
    in_ideal_slice,
    instance_from_relations,
    instantiate_template,
    quotient_dim,
    regular_sequence_certificate,
    resultant_eliminate,
)
from k3cox.verify import verify_presentation

SEEDS = (1, 2, 3)
A3T = template("A", 3)


def a3(seed=1, field=PRIME_FIELD):
    return instantiate_template(A3T, seed, field)


def test_a3_slices():
    P = a3()
    assert ideal_slice_dim(P, (3, 3)) == 1
    assert ideal_slice_dim(P, (5, 5)) == 7
    assert ideal_slice_dim(P, (5, 5), P.relations[:1]) == 6
    assert ideal_slice_dim(P, (2, 2)) == 0
    assert ideal_slice_dim(P, (-1, 4)) == 0


def test_a3_relation_shapes():
    f, g = a3().relations
    R = A3T.generators
    for text in ("x*v", "y*w"):
        assert f.coefficient(R.parse_monomial(text)) == 1
    assert g.coefficient(R.parse_monomial("v*w")) == 1
    x, y = R.index("x"), R.index("y")
    for rel, fixed in ((f, {"x*v", "y*w"}), (g, {"v*w"})):
        for m in rel.support() - {R.parse_monomial(t) for t in fixed}:
            assert not m[R.index("v")] and not m[R.index("w")]
            assert m[x] == m[y]


def test_c2_relation_shape():
    P = instantiate_template(template("C", 2), 1)
    (rel,) = P.relations
    R = P.ring
    zsq = R.parse_monomial("z^2")
    assert rel.coefficient(zsq) == 1
    assert all(m[R.index("x1")] or m[R.index("x2")] for m in rel.support() - {zsq})
    assert ideal_slice_dim(P, (4, 4)) == 1


@pytest.mark.parametrize("d", range(4, 9))
def test_c_slice_at_2h(d):
    P = instantiate_template(template("C", d), 1)
    assert ideal_slice_dim(P, (2, 2)) == comb(d - 1, 2) - 1


@pytest.mark.parametrize("d", range(4, 8))
def test_c_normal_form(d):
    P = instantiate_template(template("C", d), 2)
    R = P.ring
    z12 = R.parse_monomial("z1*z2")
    xs = [R.index("x1"), R.index("x2")]
    for rel, shape in zip(P.relations, template("C", d).relations):
        pivot = R.parse_monomial(shape.fixed[0])
        assert rel.coefficient(pivot) == 1
        for m in rel.support() - {pivot, z12}:
            assert any(m[i] for i in xs)


def test_default_modes():
    assert default_mode(template("C", 4)) == "independent"
    assert default_mode(template("C", 5)) == "coherent"
    assert default_mode(A3T) == "independent"
    with pytest.raises(ValueError):
        instantiate_template(A3T, 1, mode="coherent")
    with pytest.raises(ValueError):
        instantiate_template(A3T, 1, mode="sideways")


def test_instances_are_deterministic():
    assert a3(5).relations == a3(5).relations
    assert a3(5).relations != a3(6).relations
    C6 = template("C", 6)
    assert instantiate_template(C6, 7).relations == instantiate_template(C6, 7).relations


def test_resultant_special_case():
    R = A3T.generators
    f = SparsePolynomial.parse(R, "x*v + y*w")
    g = SparsePolynomial.parse(R, "v*w")
    P = instance_from_relations("A3", [f, g])
    assert resultant_eliminate(P) == SparsePolynomial.parse(R, "x*v^2")


@pytest.mark.parametrize("seed", SEEDS)
def test_resultant_generic(seed):
    P = a3(seed)
    h = resultant_eliminate(P)
    assert not h.uses("w")
    assert h.degree == DivisorClass(5, 6)
    assert in_ideal_slice(P, h)
    f, g = P.relations
    v = SparsePolynomial.parse(P.ring, "v")
    y = SparsePolynomial.parse(P.ring, "y")
    assert h == v * f - y * g


def test_resultant_rejects_other_templates():
    with pytest.raises(ValueError):
        resultant_eliminate(instantiate_template(template("B", 3), 1))


def _a3_nef_half(bound=16):
    return [D for D in enumerate_nef_region(lattice("A", 3), bound) if D.a >= D.b]


@pytest.mark.parametrize("seed", SEEDS)
def test_eliminant_quotient(seed):
    P = a3(seed)
    E = eliminant_instance(P)
    assert E.ring.names == ("x", "y", "z1", "z2", "v")
    for D in _a3_nef_half():
        e = quotient_dim(E, D)
        assert e == D.b ** 2 + 2, D
        # the full quotient splits into the w-divisible part and S/(h)
        assert piece_count_w(D.a, D.b).enumerated + e == quotient_dim(P, D), D


def test_regular_sequence_certificates():
    assert regular_sequence_certificate(a3(), 12)
    assert regular_sequence_certificate(instantiate_template(template("B", 1), 1), 20)
    R = A3T.generators
    f = a3().relations[0]
    g = SparsePolynomial.parse(R, "z1^2") * f
    assert not regular_sequence_certificate(instance_from_relations("A3", [f, g]), 12)


def test_slices_grow_along_nef_directions():
    P = a3(2)
    for D in _a3_nef_half(12):
        assert ideal_slice_dim(P, D + DivisorClass(1, 1)) >= ideal_slice_dim(P, D)


AGREEMENT = [("A", 3, 16), ("B", 1, 20), ("B", 2, 16), ("B", 3, 16), ("C", 2, 16),
             ("C", 3, 10), ("C", 4, 10), ("C", 5, 7), ("C", 6, 6)]


@pytest.mark.parametrize("family,d,bound", AGREEMENT, ids=lambda v: str(v))
def test_prime_field_and_rationals_agree(family, d, bound):
    T = template(family, d)
    for seed in SEEDS:
        Pp = instantiate_template(T, seed, PRIME_FIELD)
        Pq = instantiate_template(T, seed, RATIONALS)
        for D in enumerate_nef_region(T.matrix, bound):
            assert ideal_slice_dim(Pp, D) == ideal_slice_dim(Pq, D), (seed, D)


@pytest.mark.parametrize("seed", (1, 2))
def test_independent_draws_fail_for_c5(seed):
    # with more relations than codimension, independently drawn coefficients are not
    # the relations of a ring with the K3 Hilbert function
    P = instantiate_template(template("C", 5), seed, mode="independent")
    assert quotient_dim(P, (3, 3)) < 47
    report = verify_presentation("C", 5, bound=6, seeds=(seed,), mode="independent")
    assert not report.passed


def test_coherent_c_matches_free_module_count():
    for d in (5, 6):
        P = instantiate_template(template("C", d), 3)
        for a, b in [(1, 1), (2, 2), (3, 2), (4, 1), (3, 3)]:
            assert quotient_dim(P, (a, b)) == a * b * d + 2
        assert count_monomials(P.ring, (2, 0)) == quotient_dim(P, (2, 0)) == 3
