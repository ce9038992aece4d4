"""Closed-form determinant formulas, as exact polynomials.

Every formula depends only on the multiset of edge weights (or only on the
vertex count), never on the tree shape; the test suite checks each one
against the corresponding exact determinant.  All arithmetic stays in the
integer polynomial ring: the per-pair terms of the structure-independent
bracket formula are assembled in cleared form, multiplying by the
complementary bracket product instead of ever dividing.
"""

from __future__ import annotations

from typing import Sequence

from .polyring import ONE, Poly, _make, qbracket, qpower

__all__ = [
    "graham_pollak",
    "bkn_det_xj",
    "bkn_det",
    "dq_star_closed",
    "dq_closed",
    "f_cleared",
    "corner_minor_closed",
    "dq_star_simple",
    "dq_simple",
]

WeightMultiset = Sequence[int]


def _check_weights(weights: WeightMultiset, minimum: int = 1) -> tuple[int, ...]:
    ws = tuple(int(w) for w in weights)
    if len(ws) < minimum:
        raise ValueError(f"need at least {minimum} edge weights, got {len(ws)}")
    if any(w < 1 for w in ws):
        raise ValueError("edge weights must be positive integers")
    return ws


def graham_pollak(n: int) -> int:
    """Determinant of a simple tree's distance matrix: -(n-1)(-2)^(n-2)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return -(n - 1) * (-2) ** (n - 2)


def bkn_det_xj(weights: WeightMultiset) -> Poly:
    """det(D(T) + xJ) as a degree-1 polynomial in x.

    Equals (-1)^(n-1) 2^(n-2) (prod w) (2x + sum w) for a weighted tree
    with n-1 edges.
    """
    ws = _check_weights(weights)
    n = len(ws) + 1
    scale = (-1) ** (n - 1) * 2 ** (n - 2)
    prod = 1
    for w in ws:
        prod *= w
    return _make((scale * prod * sum(ws), scale * prod * 2))


def bkn_det(weights: WeightMultiset) -> int:
    """det(D(T)): the constant term of the x-shifted determinant."""
    ws = _check_weights(weights)
    n = len(ws) + 1
    prod = 1
    for w in ws:
        prod *= w
    return (-1) ** (n - 1) * 2 ** (n - 2) * prod * sum(ws)


def dq_star_closed(weights: WeightMultiset) -> Poly:
    """det of the monomial q-distance matrix: prod over edges of 1 - q^(2w)."""
    ws = _check_weights(weights)
    acc = ONE
    for w in ws:
        acc = acc * (ONE - qpower(2 * w))
    return acc


def _ring_pairs(m: int) -> list[tuple[int, int]]:
    # 0-based index pairs of the structure-independent sum for m >= 3 weights:
    # (1,2), (n-2,n-1), and (i,i+2) for i = 1..n-3 in the 1-based layout
    pairs = [(0, 1), (m - 2, m - 1)]
    pairs.extend((i, i + 2) for i in range(m - 2))
    return pairs


def f_cleared(weights: WeightMultiset) -> Poly:
    """Cleared form of the symmetric per-pair sum (needs >= 3 weights).

    Sum over the index pairs of [w_i][w_j][w_i + w_j] times the product of
    [2 w_k] over all other k; symmetric in the weights despite the
    asymmetric-looking pair layout.
    """
    ws = _check_weights(weights, minimum=3)
    m = len(ws)
    acc = Poly()
    for i, j in _ring_pairs(m):
        term = qbracket(ws[i]) * qbracket(ws[j]) * qbracket(ws[i] + ws[j])
        for k in range(m):
            if k != i and k != j:
                term = term * qbracket(2 * ws[k])
        acc = acc + term
    return acc


def dq_closed(weights: WeightMultiset) -> Poly:
    """det of the bracket q-distance matrix, from the weight multiset alone."""
    ws = _check_weights(weights)
    n = len(ws) + 1
    if n == 2:
        b = qbracket(ws[0])
        return -(b * b)
    if n == 3:
        return 2 * (qbracket(ws[0]) * qbracket(ws[1]) * qbracket(ws[0] + ws[1]))
    f = f_cleared(ws)
    return f if n % 2 else -f


def corner_minor_closed(w_first: int, w_last: int, w_rest: WeightMultiset) -> Poly:
    """det of the corner minor (first row, last column deleted).

    For a tree whose vertices v_1 and v_n are pendant with pendant-edge
    weights w_first and w_last: [w_first][w_last] prod [2w] over the rest.
    """
    if w_first < 1 or w_last < 1:
        raise ValueError("pendant-edge weights must be positive integers")
    acc = qbracket(w_first) * qbracket(w_last)
    for w in w_rest:
        if w < 1:
            raise ValueError("edge weights must be positive integers")
        acc = acc * qbracket(2 * w)
    return acc


def dq_star_simple(n: int) -> Poly:
    """Simple-tree case of the monomial determinant: (1 - q^2)^(n-1)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return (ONE - qpower(2)) ** (n - 1)


def dq_simple(n: int) -> Poly:
    """Simple-tree case of the bracket determinant: (-1)^(n-1)(n-1)(1+q)^(n-2)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    base = _make((1, 1)) ** (n - 2)
    return (-1) ** (n - 1) * (n - 1) * base
