"""SparseMatrix semantics, cross-checked against dense Fraction matrices."""

from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from spinalg.scalars import GaussianRational
from spinalg.sparse import SparseMatrix


def dense_of(m: SparseMatrix):
    """Independent dense image over (Fraction, Fraction) pairs."""
    out = [[(Fraction(0), Fraction(0))] * m.n_cols for _ in range(m.n_rows)]
    for i, row in enumerate(m.rows):
        for j, (re, im) in row.items():
            out[i][j] = (Fraction(re.numerator, re.denominator), Fraction(im.numerator, im.denominator))
    return out


def dense_matmul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[(Fraction(0), Fraction(0))] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            are, aim = a[i][k]
            if not are and not aim:
                continue
            for j in range(cols):
                bre, bim = b[k][j]
                cre, cim = out[i][j]
                out[i][j] = (cre + are * bre - aim * bim, cim + are * bim + aim * bre)
    return out


small = st.integers(min_value=-6, max_value=6)


@st.composite
def matrices(draw, n_rows=None, n_cols=None):
    r = n_rows if n_rows is not None else draw(st.integers(1, 5))
    c = n_cols if n_cols is not None else draw(st.integers(1, 5))
    entries = {}
    for _ in range(draw(st.integers(0, 8))):
        i, j = draw(st.integers(0, r - 1)), draw(st.integers(0, c - 1))
        entries[(i, j)] = GaussianRational(mpq(draw(small), 1 + abs(draw(small))), mpq(draw(small)))
    return SparseMatrix.from_entries(r, c, entries)


def test_identity_and_getitem():
    m = SparseMatrix.identity(3)
    assert m[0, 0] == GaussianRational(1)
    assert m[0, 1] == GaussianRational(0)
    assert m.nnz() == 3


def test_no_explicit_zeros():
    a = SparseMatrix.from_entries(2, 2, {(0, 0): GaussianRational(1)})
    assert (a - a).nnz() == 0
    assert (a - a).is_zero()


def test_shape_mismatch():
    a = SparseMatrix.zeros(2, 3)
    with pytest.raises(ValueError):
        a + SparseMatrix.zeros(3, 2)
    with pytest.raises(ValueError):
        a @ SparseMatrix.zeros(2, 2)


def test_first_nonzero_is_deterministic():
    e = {(1, 2): GaussianRational(5), (1, 1): GaussianRational(3)}
    m = SparseMatrix.from_entries(3, 3, e)
    i, j, v = m.first_nonzero()
    assert (i, j) == (1, 1)
    assert v == GaussianRational(3)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(matrices(3, n), matrices(n, 3))))
def test_matmul_matches_dense_oracle(pair):
    a, b = pair
    got = dense_of(a @ b)
    want = dense_matmul(dense_of(a), dense_of(b))
    assert got == want


@settings(max_examples=60, deadline=None)
@given(matrices(3, 3), matrices(3, 3), matrices(3, 3))
def test_ring_identities(a, b, c):
    assert ((a + b) @ c) == (a @ c + b @ c)
    assert ((a @ b) @ c) == (a @ (b @ c))
    assert (a - a).is_zero()


@settings(max_examples=40, deadline=None)
@given(matrices(), matrices())
def test_kron_mixed_product(a, b):
    ia = SparseMatrix.identity(a.n_cols)
    ib = SparseMatrix.identity(b.n_rows)
    # (a (x) I)(I (x) b) == a (x) b
    lhs = a.kron(ib) @ ia.kron(b)
    assert lhs == a.kron(b)


@settings(max_examples=40, deadline=None)
@given(matrices(3, 4), matrices(4, 2))
def test_dagger_antihomomorphism(a, b):
    assert (a @ b).dagger() == b.dagger() @ a.dagger()


def test_scale():
    a = SparseMatrix.from_entries(2, 2, {(0, 1): GaussianRational(2, -1)})
    s = a.scale(GaussianRational(0, 1))
    assert s[0, 1] == GaussianRational(1, 2)
    assert a.scale(GaussianRational(0)).is_zero()
