"""Exact determinants over the integer polynomial ring.

Three routes with different jobs: fraction-free Bareiss elimination is the
production path; cofactor expansion is the small-order oracle; iterated
2x2 condensation exercises the classical determinant identity

    det(A) det(A with first+last rows/cols deleted)
        = det(NW minor) det(SE minor) - det(NE minor) det(SW minor)

which also powers check_dodgson_identity.
"""

from __future__ import annotations

from typing import Optional

from . import _kernels
from .polyring import Poly, _make
from .qmatrix import PolyMatrix, minor

__all__ = [
    "det_bareiss",
    "det_cofactor",
    "dodgson",
    "check_dodgson_identity",
    "COFACTOR_MAX_ORDER",
]

COFACTOR_MAX_ORDER = 6


def det_bareiss(m: PolyMatrix) -> Poly:
    """Exact determinant by fraction-free single-step elimination."""
    rows = [[list(e.coeffs) for e in row] for row in m.rows]
    return _make(_kernels.bareiss_det(rows))


def det_cofactor(m: PolyMatrix) -> Poly:
    """Determinant by Laplace expansion along the first row (order <= 6)."""
    if m.n > COFACTOR_MAX_ORDER:
        raise ValueError(f"cofactor oracle capped at order {COFACTOR_MAX_ORDER}")
    return _cofactor(m.rows)


def _cofactor(rows) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = Poly()
    for j in range(n):
        a = rows[0][j]
        if not a:
            continue
        sub = tuple(row[:j] + row[j + 1 :] for row in rows[1:])
        term = a * _cofactor(sub)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def dodgson(m: PolyMatrix) -> Optional[Poly]:
    """Determinant by iterated condensation, or None when inapplicable.

    Each step replaces a k x k matrix by the (k-1) x (k-1) matrix of its
    connected 2x2 minors, divided entrywise by the interior of the matrix
    two steps back.  A zero divisor makes the scheme inapplicable (returned
    as None, not an error); a nonzero divisor that fails to divide exactly
    would be a bug and raises.
    """
    n = m.n
    if n == 1:
        return m.rows[0][0]
    one = _make((1,))
    prev = [[one] * (n + 1) for _ in range(n + 1)]
    cur = [list(row) for row in m.rows]
    while len(cur) > 1:
        k = len(cur)
        nxt = [[None] * (k - 1) for _ in range(k - 1)]
        for i in range(k - 1):
            for j in range(k - 1):
                num = cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j]
                div = prev[i + 1][j + 1]
                if not div:
                    return None
                nxt[i][j] = num.exact_div(div)
        prev, cur = cur, nxt
    return cur[0][0]


def check_dodgson_identity(m: PolyMatrix) -> bool:
    """Evaluate both sides of the condensation identity on a full matrix.

    Uses Bareiss determinants of the five minors; order must be at least 3.
    """
    n = m.n
    if n < 3:
        raise ValueError("identity check needs order >= 3")
    lhs = det_bareiss(m) * det_bareiss(minor(m, {1, n}, {1, n}))
    rhs = det_bareiss(minor(m, {1}, {1})) * det_bareiss(minor(m, {n}, {n})) - det_bareiss(
        minor(m, {1}, {n})
    ) * det_bareiss(minor(m, {n}, {1}))
    return lhs == rhs
