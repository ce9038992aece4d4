# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: 64-bit fast paths for the hot loops.

Same surface and semantics as the pure module.  Every function returns
None whenever the computation cannot be completed safely in machine words
(value conversion overflow, or an arithmetic step that would wrap); the
dispatcher then reruns the pure-Python kernel, so results are identical
whichever backend executes.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.limits cimport LLONG_MIN
from libc.string cimport memcpy, memset

cdef extern from *:
    """
    static inline int qdm_add_ovf(long long a, long long b, long long *r)
    { return __builtin_saddll_overflow(a, b, r); }
    static inline int qdm_sub_ovf(long long a, long long b, long long *r)
    { return __builtin_ssubll_overflow(a, b, r); }
    static inline int qdm_mul_ovf(long long a, long long b, long long *r)
    { return __builtin_smulll_overflow(a, b, r); }
    """
    int qdm_add_ovf(long long a, long long b, long long *r) nogil
    int qdm_sub_ovf(long long a, long long b, long long *r) nogil
    int qdm_mul_ovf(long long a, long long b, long long *r) nogil

ctypedef long long ll

# workspace ceiling for the elimination kernel, in 8-byte words
cdef long MAX_WORKSPACE = 4_000_000


cdef int _seq_to_ll(object seq, ll* out, Py_ssize_t n) except -1:
    # 0 on success, 1 when some value does not fit in 64 bits
    cdef Py_ssize_t i
    try:
        for i in range(n):
            out[i] = seq[i]
    except OverflowError:
        return 1
    return 0


cdef inline int _trimmed(ll* buf, int length) nogil:
    while length and buf[length - 1] == 0:
        length -= 1
    return length


cdef int _ll_mul(ll* a, int la, ll* b, int lb, ll* out, int* olen) nogil:
    # out = a * b; inputs canonical; 0 ok, 1 overflow
    cdef int i, j
    cdef ll t
    if la == 0 or lb == 0:
        olen[0] = 0
        return 0
    memset(out, 0, (la + lb - 1) * sizeof(ll))
    for i in range(la):
        if a[i] != 0:
            for j in range(lb):
                if qdm_mul_ovf(a[i], b[j], &t):
                    return 1
                if qdm_add_ovf(out[i + j], t, &out[i + j]):
                    return 1
    olen[0] = la + lb - 1
    return 0


cdef int _ll_sub_into(ll* a, int* la, ll* b, int lb) nogil:
    # a -= b in place (a has capacity >= lb); trims; 0 ok, 1 overflow
    cdef int i, n = la[0]
    if lb > n:
        for i in range(n, lb):
            a[i] = 0
        n = lb
    for i in range(lb):
        if qdm_sub_ovf(a[i], b[i], &a[i]):
            return 1
    la[0] = _trimmed(a, n)
    return 0


cdef int _ll_exactdiv(ll* a, int la, ll* b, int lb, ll* out, int* olen) nogil:
    # out = a / b exactly; a is clobbered as the remainder workspace.
    # 0 ok; 1 overflow or not exactly divisible (caller falls back).
    cdef int k, j, nq
    cdef ll c, coef, lead, t
    if la == 0:
        olen[0] = 0
        return 0
    if la < lb:
        return 1
    lead = b[lb - 1]
    nq = la - lb + 1
    for k in range(nq - 1, -1, -1):
        c = a[k + lb - 1]
        if c != 0:
            if lead == -1 and c == LLONG_MIN:
                return 1
            coef = c / lead
            if coef * lead != c:
                return 1
            out[k] = coef
            for j in range(lb):
                if qdm_mul_ovf(coef, b[j], &t):
                    return 1
                if qdm_sub_ovf(a[k + j], t, &a[k + j]):
                    return 1
        else:
            out[k] = 0
    for j in range(lb - 1 if lb - 1 < la else la):
        if a[j] != 0:
            return 1
    olen[0] = _trimmed(out, nq)
    return 0


def poly_mul(a, b):
    """Convolution product of canonical coefficient lists, or None."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef Py_ssize_t nr = na + nb - 1
    cdef ll* buf = <ll*> PyMem_Malloc((na + nb + nr) * sizeof(ll))
    if buf == NULL:
        raise MemoryError()
    cdef ll* pa = buf
    cdef ll* pb = buf + na
    cdef ll* pr = buf + na + nb
    cdef int olen = 0
    cdef Py_ssize_t i
    try:
        if _seq_to_ll(a, pa, na) or _seq_to_ll(b, pb, nb):
            return None
        if _ll_mul(pa, <int> na, pb, <int> nb, pr, &olen):
            return None
        return [pr[i] for i in range(olen)]
    finally:
        PyMem_Free(buf)


def poly_exact_div(a, b):
    """Exact quotient of canonical coefficient lists, or None.

    Raises ZeroDivisionError on a zero divisor, like the pure kernel;
    inexact division surfaces as None so the pure kernel reruns and raises
    the canonical ValueError.
    """
    cdef Py_ssize_t na = len(a), nb = len(b)
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if na == 0:
        return []
    if na < nb:
        raise ValueError("not exactly divisible")
    cdef ll* buf = <ll*> PyMem_Malloc((2 * na + nb) * sizeof(ll))
    if buf == NULL:
        raise MemoryError()
    cdef ll* pa = buf
    cdef ll* pb = buf + na
    cdef ll* pq = buf + na + nb
    cdef int olen = 0
    cdef Py_ssize_t i
    try:
        if _seq_to_ll(a, pa, na) or _seq_to_ll(b, pb, nb):
            return None
        if _ll_exactdiv(pa, <int> na, pb, <int> nb, pq, &olen):
            return None
        return [pq[i] for i in range(olen)]
    finally:
        PyMem_Free(buf)


def bareiss_det(rows):
    """Fraction-free elimination determinant, or None on overflow."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    cdef Py_ssize_t i, j
    for i in range(n):
        if len(rows[i]) != n:
            raise ValueError("matrix is not square")

    # capacity bound: any minor's degree is at most the sum of row maxima
    cdef long cap = 0
    cdef long rowmax, L
    for i in range(n):
        rowmax = 0
        for j in range(n):
            L = len(rows[i][j]) - 1
            if L > rowmax:
                rowmax = L
        cap += rowmax
    cdef long stride = cap + 1
    cdef long tcap = 2 * cap + 1
    cdef long words = n * n * stride + 3 * tcap
    if words > MAX_WORKSPACE:
        return None

    cdef ll* ents = <ll*> PyMem_Malloc(words * sizeof(ll))
    if ents == NULL:
        raise MemoryError()
    cdef ll* t1 = ents + n * n * stride
    cdef ll* t2 = t1 + tcap
    cdef ll* t3 = t2 + tcap
    cdef int* lens = <int*> PyMem_Malloc(n * n * sizeof(int))
    cdef int* colidx = <int*> PyMem_Malloc(n * sizeof(int))
    if lens == NULL or colidx == NULL:
        PyMem_Free(ents)
        if lens != NULL:
            PyMem_Free(lens)
        if colidx != NULL:
            PyMem_Free(colidx)
        raise MemoryError()

    cdef int sign = 1
    cdef int k, col, jj, ii, lt1, lt2, lt3, lp, lik, lkj, lij
    cdef ll* piv
    cdef ll* prev = NULL
    cdef int lprev = 0
    cdef object entry
    cdef bint failed = False
    cdef bint zero_det = False
    try:
        for i in range(n):
            for j in range(n):
                entry = rows[i][j]
                L = len(entry)
                if _seq_to_ll(entry, ents + (i * n + j) * stride, L):
                    return None
                lens[i * n + j] = _trimmed(ents + (i * n + j) * stride, <int> L)
        for k in range(n):
            colidx[k] = k

        for k in range(n - 1):
            if lens[k * n + colidx[k]] == 0:
                zero_det = True
                for jj in range(k + 1, n):
                    if lens[k * n + colidx[jj]] != 0:
                        col = colidx[k]
                        colidx[k] = colidx[jj]
                        colidx[jj] = col
                        sign = -sign
                        zero_det = False
                        break
                if zero_det:
                    return []
            piv = ents + (k * n + colidx[k]) * stride
            lp = lens[k * n + colidx[k]]
            for ii in range(k + 1, n):
                lik = lens[ii * n + colidx[k]]
                for jj in range(k + 1, n):
                    col = colidx[jj]
                    lkj = lens[k * n + col]
                    lij = lens[ii * n + col]
                    if _ll_mul(piv, lp, ents + (ii * n + col) * stride, lij, t1, &lt1):
                        failed = True
                        break
                    if _ll_mul(ents + (ii * n + colidx[k]) * stride, lik,
                               ents + (k * n + col) * stride, lkj, t2, &lt2):
                        failed = True
                        break
                    if _ll_sub_into(t1, &lt1, t2, lt2):
                        failed = True
                        break
                    if prev == NULL:
                        lt3 = lt1
                        if lt3 > stride:
                            failed = True
                            break
                        memcpy(t3, t1, lt3 * sizeof(ll))
                    else:
                        if _ll_exactdiv(t1, lt1, prev, lprev, t3, &lt3):
                            failed = True
                            break
                        if lt3 > stride:
                            failed = True
                            break
                    memcpy(ents + (ii * n + col) * stride, t3, lt3 * sizeof(ll))
                    lens[ii * n + col] = lt3
                if failed:
                    break
            if failed:
                return None
            prev = piv
            lprev = lp

        piv = ents + ((n - 1) * n + colidx[n - 1]) * stride
        lp = lens[(n - 1) * n + colidx[n - 1]]
        if sign > 0:
            return [piv[k] for k in range(lp)]
        return [-piv[k] for k in range(lp)]
    finally:
        PyMem_Free(ents)
        PyMem_Free(lens)
        PyMem_Free(colidx)


cdef inline bint _next_perm(int* a, int n, int* sign) nogil:
    # lexicographic successor; updates the permutation sign incrementally
    cdef int i = n - 2, j, lo, hi, t, flips
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    flips = 1
    lo = i + 1
    hi = n - 1
    while lo < hi:
        t = a[lo]; a[lo] = a[hi]; a[hi] = t
        flips += 1
        lo += 1
        hi -= 1
    if flips & 1:
        sign[0] = -sign[0]
    return True


def perm_n_table(dist, n_obj):
    """Signed histogram of permutation lengths, or None."""
    cdef int n = n_obj
    if n < 1 or n > 12:
        return None
    cdef ll* nd = <ll*> PyMem_Malloc(n * n * sizeof(ll))
    if nd == NULL:
        raise MemoryError()
    cdef int* perm = <int*> PyMem_Malloc(n * sizeof(int))
    cdef ll* hist = NULL
    cdef int i, j, sign
    cdef ll smin = 0, smax = 0, rmin, rmax, span, s
    cdef object row
    try:
        if perm == NULL:
            raise MemoryError()
        for i in range(n):
            row = dist[i]
            if _seq_to_ll(row, nd + i * n, n):
                return None
        for i in range(n):
            rmin = nd[i * n]
            rmax = nd[i * n]
            for j in range(1, n):
                if nd[i * n + j] < rmin:
                    rmin = nd[i * n + j]
                if nd[i * n + j] > rmax:
                    rmax = nd[i * n + j]
            if qdm_add_ovf(smin, rmin, &smin) or qdm_add_ovf(smax, rmax, &smax):
                return None
        span = smax - smin
        if span < 0 or span > (1 << 22):
            return None
        hist = <ll*> PyMem_Malloc((span + 1) * sizeof(ll))
        if hist == NULL:
            raise MemoryError()
        memset(hist, 0, (span + 1) * sizeof(ll))
        for i in range(n):
            perm[i] = i
        sign = 1
        while True:
            s = 0
            for i in range(n):
                s += nd[i * n + perm[i]]
            hist[s - smin] += sign
            if not _next_perm(perm, n, &sign):
                break
        out = {}
        for i in range(<int> span + 1):
            if hist[i] != 0:
                out[smin + i] = hist[i]
        return out
    finally:
        PyMem_Free(nd)
        if perm != NULL:
            PyMem_Free(perm)
        if hist != NULL:
            PyMem_Free(hist)


def perm_m_coeffs(dist, n_obj):
    """Signed sum of all-ones-polynomial products over permutations, or None."""
    cdef int n = n_obj
    if n < 1 or n > 12:
        return None
    cdef ll* nd = <ll*> PyMem_Malloc(n * n * sizeof(ll))
    if nd == NULL:
        raise MemoryError()
    cdef int* perm = <int*> PyMem_Malloc(n * sizeof(int))
    cdef ll* work = NULL
    cdef ll* cur
    cdef ll* nxt
    cdef ll* pref
    cdef ll* acc
    cdef ll* swp
    cdef int i, j, k, sign, m, newlen, acclen, hi, lo
    cdef ll rmax, bound, nfact, width, d
    cdef long dcap
    cdef object row
    try:
        if perm == NULL:
            raise MemoryError()
        for i in range(n):
            row = dist[i]
            if _seq_to_ll(row, nd + i * n, n):
                return None
        # coefficient bound: n! times the product of per-row maxima must
        # stay below 2^62 for the whole sweep to be overflow-free
        bound = 1
        dcap = 0
        for i in range(n):
            rmax = 0
            for j in range(n):
                d = nd[i * n + j]
                if d < 0:
                    return None
                if d > rmax:
                    rmax = d
            if rmax > 0:
                if qdm_mul_ovf(bound, rmax, &bound):
                    return None
                dcap += rmax - 1
        nfact = 1
        for i in range(2, n + 1):
            nfact *= i
        if qdm_mul_ovf(bound, nfact, &bound):
            return None
        if bound >= (<ll> 1) << 62:
            return None
        if dcap > (1 << 22):
            return None

        work = <ll*> PyMem_Malloc((3 * (dcap + 1) + (dcap + 2)) * sizeof(ll))
        if work == NULL:
            raise MemoryError()
        cur = work
        nxt = work + (dcap + 1)
        acc = work + 2 * (dcap + 1)
        pref = work + 3 * (dcap + 1)
        memset(acc, 0, (dcap + 1) * sizeof(ll))
        acclen = 0

        for i in range(n):
            perm[i] = i
        sign = 1
        while True:
            m = 1
            cur[0] = 1
            for i in range(n):
                width = nd[i * n + perm[i]]
                if width == 0:
                    m = 0
                    break
                if width == 1:
                    continue
                # multiply by 1 + q + ... + q^(width-1) via prefix sums
                pref[0] = 0
                for j in range(m):
                    pref[j + 1] = pref[j] + cur[j]
                newlen = m + <int> width - 1
                for k in range(newlen):
                    hi = k + 1 if k < m else m
                    lo = k - <int> width + 1
                    nxt[k] = pref[hi] - (pref[lo] if lo > 0 else 0)
                swp = cur; cur = nxt; nxt = swp
                m = newlen
            if m > 0:
                if sign > 0:
                    for k in range(m):
                        acc[k] += cur[k]
                else:
                    for k in range(m):
                        acc[k] -= cur[k]
                if m > acclen:
                    acclen = m
            if not _next_perm(perm, n, &sign):
                break
        acclen = _trimmed(acc, acclen)
        return [acc[k] for k in range(acclen)]
    finally:
        PyMem_Free(nd)
        if perm != NULL:
            PyMem_Free(perm)
        if work != NULL:
            PyMem_Free(work)
