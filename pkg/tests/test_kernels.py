"""The compiled kernel and the pure-python kernel must agree exactly."""

import random

from gmpy2 import mpq

from spinalg._kernels import IMPL, pure

try:
    from spinalg._kernels import _fast
except ImportError:
    _fast = None

import pytest

needs_fast = pytest.mark.skipif(_fast is None, reason="compiled kernel not built")


def random_rows(n_rows, n_cols, density, rng):
    rows = []
    for _ in range(n_rows):
        row = {}
        for j in range(n_cols):
            if rng.random() < density:
                row[j] = (mpq(rng.randint(-9, 9), rng.randint(1, 5)), mpq(rng.randint(-9, 9)))
        rows.append(row)
    return rows


@needs_fast
def test_matmul_agreement():
    rng = random.Random(7)
    for _ in range(25):
        a = random_rows(6, 5, 0.4, rng)
        b = random_rows(5, 7, 0.4, rng)
        assert _fast.matmul(a, b) == pure.matmul(a, b)


@needs_fast
def test_add_scaled_agreement():
    rng = random.Random(11)
    for _ in range(25):
        a = random_rows(6, 6, 0.4, rng)
        b = random_rows(6, 6, 0.4, rng)
        c = (mpq(rng.randint(-5, 5), 3), mpq(rng.randint(-5, 5)))
        assert _fast.add_scaled(a, b, *c) == pure.add_scaled(a, b, *c)


@needs_fast
def test_scale_agreement():
    rng = random.Random(13)
    rows = random_rows(8, 8, 0.5, rng)
    for c in ((mpq(2), mpq(0)), (mpq(0), mpq(1)), (mpq(-1, 3), mpq(5))):
        assert _fast.scale(rows, *c) == pure.scale(rows, *c)


def test_no_explicit_zero_entries():
    a = [{0: (mpq(1), mpq(0))}]
    b = [{0: (mpq(0), mpq(1))}]
    for impl in filter(None, (pure, _fast)):
        out = impl.add_scaled(a, b, mpq(0), mpq(1))  # a + i*(i) = a - 1 = 0
        assert out == [{}]


def test_impl_is_reported():
    assert IMPL in ("pure", "fast")
