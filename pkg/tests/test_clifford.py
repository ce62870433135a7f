"""Gamma matrix construction, checked against an independent dense oracle."""

from fractions import Fraction

import pytest

from spinalg.clifford import build_gammas, corrupt_gamma
from spinalg.scalars import GaussianRational
from spinalg.sparse import SparseMatrix


def to_dense(m):
    return [
        [
            (Fraction(int(v.re.numerator), int(v.re.denominator)), Fraction(int(v.im.numerator), int(v.im.denominator)))
            for v in (m[i, j] for j in range(m.n_cols))
        ]
        for i in range(m.n_rows)
    ]


def dense_mul(a, b):
    n = len(a)
    out = [[(Fraction(0), Fraction(0))] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            ar, ai = a[i][k]
            if not ar and not ai:
                continue
            for j in range(n):
                br, bi = b[k][j]
                cr, ci = out[i][j]
                out[i][j] = (cr + ar * br - ai * bi, ci + ar * bi + ai * br)
    return out


def dense_eye(n, scale=Fraction(1)):
    return [
        [(scale if i == j else Fraction(0), Fraction(0)) for j in range(n)] for i in range(n)
    ]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_anticommutators(n):
    g = build_gammas(n)
    dense = [to_dense(g.gamma(mu)) for mu in range(1, 2 * n + 1)]
    for a in range(2 * n):
        for b in range(2 * n):
            prod = dense_mul(dense[a], dense[b])
            anti = [
                [tuple(x + y for x, y in zip(p, q)) for p, q in zip(r1, r2)]
                for r1, r2 in zip(prod, dense_mul(dense[b], dense[a]))
            ]
            want = dense_eye(2**n, Fraction(-2)) if a == b else dense_eye(2**n, Fraction(0))
            assert anti == want, (a + 1, b + 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_involution_squares_to_identity(n):
    g = build_gammas(n)
    full = list(range(1, 2 * n + 1))
    s = g.involution(full)
    dense = to_dense(s)
    assert dense_mul(dense, dense) == dense_eye(2**n)


def test_involution_subset():
    g = build_gammas(3)
    for sub in ([1, 2], [3, 4], [1, 2, 3, 4], [1, 2, 5, 6]):
        s = g.involution(sub)
        assert (s @ s) == SparseMatrix.identity(8), sub


def test_involution_odd_size_rejected():
    g = build_gammas(2)
    with pytest.raises(ValueError):
        g.involution([1, 2, 3])


def test_pair_spin_squares_to_identity():
    g = build_gammas(3)
    for j in (1, 2, 3):
        sig = g.pair_spin(j)
        assert sig @ sig == SparseMatrix.identity(8)


def test_recursion_nests_lower_rank():
    # the first gamma of rank n+1 is gamma_1 of rank n tensored with the
    # 2x2 chirality block
    g2, g3 = build_gammas(2), build_gammas(3)
    got = g3.gamma(1)
    sub = g2.gamma(1)
    for i in range(4):
        for j in range(4):
            assert got[2 * i, 2 * j] == sub[i, j]
            assert got[2 * i + 1, 2 * j + 1] == -sub[i, j]


def test_corrupt_gamma_breaks_clifford():
    g = corrupt_gamma(build_gammas(2))
    broken = g.gamma(1) @ g.gamma(1) + SparseMatrix.identity(4).scale(GaussianRational(2))
    assert not broken.is_zero()


def test_gamma_index_bounds():
    g = build_gammas(2)
    with pytest.raises(IndexError):
        g.gamma(5)
    with pytest.raises(IndexError):
        g.gamma(0)
