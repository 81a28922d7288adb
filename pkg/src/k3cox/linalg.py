"""Exact rank of sparse row sets over GF(p) or QQ."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .polynomial import CoefficientField

# rows are dicts {column index: coefficient}


def rank_mod_p(rows: list[dict[int, int]], ncols: int, p: int) -> int:
    """Row rank over GF(p) by dense elimination on int64 arrays.

    Requires ``p < 2**31`` so that products of reduced entries fit in int64.
    """
    if p >= 2**31:
        raise ValueError("rank_mod_p needs p < 2**31")
    rows = [r for r in rows if r]
    if not rows or ncols == 0:
        return 0
    A = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, r in enumerate(rows):
        for j, c in r.items():
            A[i, j] = c % p
    return _dense_rank_mod_p(A, p)


def _dense_rank_mod_p(A: np.ndarray, p: int) -> int:
    m, n = A.shape
    rank = 0
    for c in range(n):
        if rank == m:
            break
        nz = np.flatnonzero(A[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, c]), p - 2, p)
        A[rank, c:] = A[rank, c:] * inv % p
        below = rank + 1 + np.flatnonzero(A[rank + 1:, c])
        if below.size:
            A[below, c:] = (A[below, c:] - np.outer(A[below, c], A[rank, c:])) % p
        rank += 1
    return rank


def rank_rational(rows: list[dict[int, Fraction]], ncols: int) -> int:
    """Row rank over QQ with integer rows kept primitive (gcd-reduced) during elimination."""
    work = []
    for r in rows:
        if not r:
            continue
        den = lcm(*(Fraction(c).denominator for c in r.values()))
        work.append({j: int(Fraction(c) * den) for j, c in r.items() if c})
    pivots: dict[int, dict[int, int]] = {}
    for r in work:
        r = dict(r)
        while r:
            col = min(r)
            if col not in pivots:
                pivots[col] = _primitive(r)
                break
            prow = pivots[col]
            a, b = prow[col], r[col]
            # r <- a*r - b*prow clears column col
            new = {j: a * v for j, v in r.items()}
            for j, v in prow.items():
                new[j] = new.get(j, 0) - b * v
            r = _primitive({j: v for j, v in new.items() if v})
    return len(pivots)


def _primitive(r: dict[int, int]) -> dict[int, int]:
    if not r:
        return r
    g = 0
    for v in r.values():
        g = gcd(g, v)
    return {j: v // g for j, v in r.items()} if g > 1 else r


def rank(rows: list[dict[int, object]], ncols: int, field: CoefficientField) -> int:
    if field.is_prime_field:
        return rank_mod_p(rows, ncols, field.modulus)
    return rank_rational(rows, ncols)
