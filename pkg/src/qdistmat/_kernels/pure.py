"""Pure-Python implementations of the hot kernels.

Coefficient lists are little-endian by degree, hold plain Python ints, and
are canonical: the last entry is nonzero, the zero polynomial is ``[]``.
The compiled module in ``_speedups`` implements the same surface with
machine-word fast paths; results must be identical.
"""

import itertools

__all__ = [
    "poly_mul",
    "poly_exact_div",
    "bareiss_det",
    "perm_n_table",
    "perm_m_coeffs",
]


def _trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    del coeffs[n:]
    return coeffs


def poly_mul(a, b):
    """Convolution product of two canonical coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out  # leading product of nonzeros is nonzero over the integers


def _sub_inplace(a, b):
    # a -= b, both plain lists; result canonical
    if len(b) > len(a):
        a.extend([0] * (len(b) - len(a)))
    for j, bj in enumerate(b):
        a[j] -= bj
    return _trim(a)


def poly_exact_div(a, b):
    """Exact quotient a / b in the integer polynomial ring.

    Raises ZeroDivisionError if b is zero, ValueError if b does not divide
    a exactly (which callers treat as an internal invariant violation).
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        raise ValueError("not exactly divisible")
    rem = list(a)
    lead = b[-1]
    quot = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = rem[k + db]
        if c:
            coef, r = divmod(c, lead)
            if r:
                raise ValueError("not exactly divisible")
            quot[k] = coef
            for j in range(db + 1):
                rem[k + j] -= coef * b[j]
    if any(rem):
        raise ValueError("not exactly divisible")
    return quot


def bareiss_det(rows):
    """Exact determinant of a square matrix of coefficient lists.

    Single-step fraction-free elimination; every division is by the
    previous pivot and is exact by the Sylvester minor identity.  A zero
    pivot is repaired by swapping in the first column to its right whose
    entry in the pivot row is nonzero (sign tracked); if the whole pivot
    row is zero the determinant is zero.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    m = [[list(e) for e in row] for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = None  # pivot of the previous step; first step divides by 1
    for k in range(n - 1):
        if not m[k][k]:
            for j in range(k + 1, n):
                if m[k][j]:
                    for row in m:
                        row[k], row[j] = row[j], row[k]
                    sign = -sign
                    break
            else:
                return []
        piv = m[k][k]
        for i in range(k + 1, n):
            rik = m[i][k]
            for j in range(k + 1, n):
                t = _sub_inplace(poly_mul(piv, m[i][j]), poly_mul(rik, m[k][j]))
                m[i][j] = t if prev is None else poly_exact_div(t, prev)
        prev = piv
    det = m[n - 1][n - 1]
    if sign < 0:
        det = [-c for c in det]
    return det


_SIGN_CACHE = {}


def _perm_signs(n):
    # parity of every permutation of range(n) in lexicographic order
    signs = _SIGN_CACHE.get(n)
    if signs is None:
        signs = bytearray()
        for p in itertools.permutations(range(n)):
            inv = 0
            for i in range(n):
                pi = p[i]
                for j in range(i + 1, n):
                    if pi > p[j]:
                        inv += 1
            signs.append(inv & 1)
        signs = bytes(signs)
        _SIGN_CACHE[n] = signs
    return signs


def perm_n_table(dist, n):
    """Signed histogram of permutation lengths sum_i d(i, p(i)).

    Returns a dict mapping each attained length to the even-minus-odd
    signed count, zero entries omitted.
    """
    signs = _perm_signs(n)
    table = {}
    for idx, p in enumerate(itertools.permutations(range(n))):
        s = 0
        for i in range(n):
            s += dist[i][p[i]]
        table[s] = table.get(s, 0) + (-1 if signs[idx] else 1)
    return {k: v for k, v in table.items() if v}


def _ones_mul(a, width):
    # a * (1 + q + ... + q^(width-1)) via a sliding window of prefix sums
    m = len(a)
    prefix = [0] * (m + 1)
    acc = 0
    for i, c in enumerate(a):
        acc += c
        prefix[i + 1] = acc
    out = [0] * (m + width - 1)
    for k in range(len(out)):
        hi = k + 1 if k < m else m
        lo = k - width + 1
        out[k] = prefix[hi] - (prefix[lo] if lo > 0 else 0)
    return out


def perm_m_coeffs(dist, n):
    """Signed sum over permutations of products of all-ones polynomials.

    Term for p is sgn(p) * prod_i (1 + q + ... + q^(d(i,p(i))-1)); any zero
    distance kills the term, which subsumes the fixed-point rule for
    genuine distance tables.  Returns a canonical coefficient list.
    """
    signs = _perm_signs(n)
    acc = []
    for idx, p in enumerate(itertools.permutations(range(n))):
        widths = []
        ok = True
        for i in range(n):
            d = dist[i][p[i]]
            if d == 0:
                ok = False
                break
            widths.append(d)
        if not ok:
            continue
        prod = [1]
        for w in widths:
            if w > 1:
                prod = _ones_mul(prod, w)
        if len(prod) > len(acc):
            acc.extend([0] * (len(prod) - len(acc)))
        if signs[idx]:
            for k, c in enumerate(prod):
                acc[k] -= c
        else:
            for k, c in enumerate(prod):
                acc[k] += c
    return _trim(acc)
