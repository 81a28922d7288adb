from math import comb

import pytest
from hypothesis import given, strategies as st

from k3cox.catalog import supported_pairs, template
from k3cox.lattice import DivisorClass, h0_effective, is_nef, lattice
from k3cox.monomials import (
    A3_GENERATORS,
    EnumerationCapExceeded,
    GeneratorSet,
    count_monomials,
    enumerate_monomials,
    koszul_quotient_dim,
    piece_count_h,
    piece_count_w,
    series_coefficient,
)

A3 = lattice("A", 3)


def test_generator_set_validation():
    with pytest.raises(ValueError):
        GeneratorSet.from_pairs([("x", (1, 0)), ("x", (0, 1))])
    with pytest.raises(ValueError):
        GeneratorSet.from_pairs([("x", (0, 0))])
    with pytest.raises(ValueError):
        GeneratorSet.from_pairs([("x", (-1, 2))])


def test_format_parse_roundtrip():
    G = A3_GENERATORS
    assert G.format_monomial((1, 0, 0, 0, 2, 0)) == "x*v^2"
    assert G.format_monomial((0,) * 6) == "1"
    for m in enumerate_monomials(G, (5, 5)):
        assert G.parse_monomial(G.format_monomial(m)) == m
        assert G.degree_of(m) == DivisorClass(5, 5)


@pytest.mark.parametrize("D,expected", [((3, 3), 12), ((5, 5), 34), ((2, 2), 6), ((0, 0), 1), ((-1, 3), 0)])
def test_a3_counts(D, expected):
    assert count_monomials(A3_GENERATORS, D) == expected


def test_quoted_counts_other_templates():
    assert count_monomials(A3_GENERATORS.subset(["x", "y", "z1", "z2"]), (2, 3)) == 6
    assert count_monomials(template("B", 3).generators, (3, 3)) == 22
    assert count_monomials(template("C", 2).generators, (4, 4)) == 35


def test_enumeration_order_is_decreasing_lex():
    ms = enumerate_monomials(A3_GENERATORS, (4, 4))
    assert ms == sorted(ms, reverse=True)
    assert len(set(ms)) == len(ms)


def test_enumeration_cap():
    with pytest.raises(EnumerationCapExceeded) as err:
        enumerate_monomials(A3_GENERATORS, (6, 6), cap=5)
    assert err.value.degree == DivisorClass(6, 6)


@pytest.mark.parametrize("pair", supported_pairs(8), ids=lambda p: f"{p[0]}{p[1]}")
def test_dp_matches_enumeration(pair):
    # the acceptance suite runs the same comparison out to a + b = 20
    G = template(*pair).generators
    for total in range(13):
        for a in range(total + 1):
            D = (a, total - a)
            assert count_monomials(G, D) == len(enumerate_monomials(G, D)), D


def test_c_family_two_h_decomposition():
    # z_i z_j pairs, z_i times a bidegree-(1,1) monomial in x, y, and x_i x_j y_k y_l
    for d in range(3, 9):
        assert count_monomials(template("C", d).generators, (2, 2)) == comb(d - 1, 2) + 4 * (d - 2) + 9


@given(st.integers(0, 12), st.integers(0, 12))
def test_symmetric_generators_give_symmetric_counts(a, b):
    G = template("C", 5).generators
    assert count_monomials(G, (a, b)) == count_monomials(G, (b, a))
    assert count_monomials(A3_GENERATORS, (a, b)) == count_monomials(A3_GENERATORS, (b, a))


def test_koszul_examples():
    G = A3_GENERATORS
    degs = [(3, 3), (5, 5)]
    assert koszul_quotient_dim(G, degs, (3, 3)) == 11
    assert koszul_quotient_dim(G, degs, (5, 5)) == 27
    assert koszul_quotient_dim(G, [], (2, 2)) == 6
    with pytest.raises(ValueError):
        koszul_quotient_dim(G, [(1, 1)] * 3, (2, 2))


def _direct_w_count(a, b):
    # x^i z1^j z2^k w^n, n >= 1: i + j + k + 3n = a and j + k + 2n = b
    total = 0
    for n in range(1, b // 2 + 1):
        jk = b - 2 * n
        i = a - 3 * n - jk
        if i >= 0:
            total += jk + 1
    return total


def _nef_grid(limit=20):
    return [(a, b) for a in range(limit + 1) for b in range(limit + 1 - a)
            if a >= b and (a, b) != (0, 0) and is_nef((a, b), A3)]


@pytest.mark.parametrize("a,b", _nef_grid())
def test_piece_counts(a, b):
    w, h = piece_count_w(a, b), piece_count_h(a, b)
    assert w.agrees and h.agrees
    assert w.enumerated == _direct_w_count(a, b)
    assert w.enumerated + h.enumerated == h0_effective((a, b), A3)


def test_piece_count_domain():
    with pytest.raises(ValueError):
        piece_count_w(2, 3)
    with pytest.raises(ValueError):
        piece_count_h(3, 0)


def _series_oracle(n):
    # (1-x^6)/((1-x)^3 (1-x^3)): sum over multiples of 3 of binomial coefficients
    def base(m):
        return sum(comb(m - 3 * k + 2, 2) for k in range(m // 3 + 1)) if m >= 0 else 0
    return base(n) - base(n - 6)


@pytest.mark.parametrize("n", range(0, 51))
def test_series_coefficients(n):
    c = series_coefficient(n)
    assert c.agrees
    assert c.enumerated == _series_oracle(n)
    assert c.enumerated == (n * n + 2 if n else 1)


def test_series_rejects_negative():
    with pytest.raises(ValueError):
        series_coefficient(-1)
