"""Backend parity: the compiled kernels must match the pure ones exactly."""

import random

import pytest

from qdistmat._kernels import BACKEND, _speedups, pure

needs_compiled = pytest.mark.skipif(
    _speedups is None, reason="compiled kernels not built"
)


def canon(items):
    out = list(items)
    while out and out[-1] == 0:
        out.pop()
    return out


def random_coeffs(rng, max_len=8, bound=60):
    return canon(rng.randint(-bound, bound) for _ in range(rng.randint(0, max_len)))


def test_backend_reported():
    assert BACKEND in ("compiled", "pure")


@needs_compiled
def test_poly_mul_parity():
    rng = random.Random(1)
    for _ in range(1000):
        a, b = random_coeffs(rng), random_coeffs(rng)
        assert _speedups.poly_mul(a, b) == pure.poly_mul(a, b), (a, b)


@needs_compiled
def test_poly_mul_overflow_falls_back():
    big = [2 ** 62, 1]
    assert _speedups.poly_mul(big, big) is None
    assert pure.poly_mul(big, big) == [2 ** 124, 2 ** 63, 1]


@needs_compiled
def test_exact_div_parity():
    rng = random.Random(2)
    for _ in range(1000):
        c = random_coeffs(rng, 6, 9)
        b = random_coeffs(rng, 4, 9)
        if not b:
            continue
        a = pure.poly_mul(c, b)
        assert _speedups.poly_exact_div(a, b) == c
    with pytest.raises(ZeroDivisionError):
        _speedups.poly_exact_div([1], [])
    with pytest.raises(ValueError):
        _speedups.poly_exact_div([1], [1, 1])


@needs_compiled
def test_exact_div_inexact_returns_none():
    # inexact division is reported by the pure kernel after fallback
    assert _speedups.poly_exact_div([1, 1, 1], [1, 1]) is None
    with pytest.raises(ValueError):
        pure.poly_exact_div([1, 1, 1], [1, 1])


@needs_compiled
def test_bareiss_parity():
    rng = random.Random(3)
    for _ in range(400):
        n = rng.randint(1, 6)
        rows = [[random_coeffs(rng, 3, 9) for _ in range(n)] for _ in range(n)]
        assert _speedups.bareiss_det(rows) == pure.bareiss_det(rows)


@needs_compiled
def test_bareiss_overflow_falls_back():
    big = 10 ** 25
    rows = [[[big], [1]], [[1], [big]]]
    assert _speedups.bareiss_det(rows) is None
    assert pure.bareiss_det(rows) == [big * big - 1]


@needs_compiled
def test_perm_table_parity():
    rng = random.Random(4)
    for _ in range(60):
        n = rng.randint(1, 6)
        dist = [[rng.randint(0, 6) for _ in range(n)] for _ in range(n)]
        assert _speedups.perm_n_table(dist, n) == pure.perm_n_table(dist, n)
        assert _speedups.perm_m_coeffs(dist, n) == pure.perm_m_coeffs(dist, n)
    for _ in range(30):
        n = rng.randint(1, 5)
        dist = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert _speedups.perm_n_table(dist, n) == pure.perm_n_table(dist, n)


@needs_compiled
def test_perm_m_bound_guard():
    # distances this large make the coefficient buffers unreasonable, so
    # the compiled kernel declines and the pure path takes over
    dist = [[0, 10 ** 9], [10 ** 9, 0]]
    assert _speedups.perm_m_coeffs(dist, 2) is None


def test_pure_kernel_division_errors():
    with pytest.raises(ZeroDivisionError):
        pure.poly_exact_div([1], [])
    with pytest.raises(ValueError):
        pure.poly_exact_div([1, 2], [3, 3])


def test_pure_bareiss_rejects_bad_shapes():
    with pytest.raises(ValueError):
        pure.bareiss_det([])
    with pytest.raises(ValueError):
        pure.bareiss_det([[[1]], [[1], [2]]])
