"""Gamma matrices for Cl_{2n} via the recursive Pauli tensor construction.

Base case gamma_1 = i*sigma_1, gamma_2 = i*sigma_2 on C^2; each step maps
a set {gamma_k} for Cl_{2m} to {gamma_k (x) (i gamma_1 gamma_2)} joined
with {1 (x) gamma_1, 1 (x) gamma_2}, doubling the spinor space.  All
gammas satisfy {gamma_mu, gamma_nu} = -2 delta_{mu,nu} and are i times a
Hermitian matrix.
"""

from __future__ import annotations

from spinalg.scalars import GaussianRational, I, i_power
from spinalg.sparse import SparseMatrix

SIGMA1 = SparseMatrix.from_dense([[0, 1], [1, 0]])
SIGMA2 = SparseMatrix.from_dense([[0, GaussianRational(0, -1)], [GaussianRational(0, 1), 0]])
SIGMA3 = SparseMatrix.from_dense([[1, 0], [0, -1]])


class GammaSet:
    """The 2n gamma matrices of Cl_{2n}, each of size 2^n x 2^n."""

    __slots__ = ("n_pairs", "gammas")

    def __init__(self, n_pairs: int, gammas: list):
        self.n_pairs = n_pairs
        self.gammas = gammas

    @property
    def spinor_dim(self) -> int:
        return 2 ** self.n_pairs

    def gamma(self, mu: int) -> SparseMatrix:
        """gamma_mu with 1-based index mu in [1, 2n]."""
        if not 1 <= mu <= 2 * self.n_pairs:
            raise IndexError(f"gamma index {mu} outside [1, {2 * self.n_pairs}]")
        return self.gammas[mu - 1]

    def spin(self, mu: int, nu: int) -> SparseMatrix:
        """Spin operator Sigma_{mu,nu} = i gamma_mu gamma_nu."""
        if mu == nu:
            raise ValueError("spin operator needs distinct indices")
        return (self.gamma(mu) @ self.gamma(nu)).scale(I)

    def pair_spin(self, j: int) -> SparseMatrix:
        """Sigma for the coordinate pair {2j-1, 2j}."""
        return self.spin(2 * j - 1, 2 * j)

    def involution(self, indices) -> SparseMatrix:
        """Grading involution i^{|A|/2} prod_{mu in A} gamma_mu.

        The product is taken in increasing index order; |A| must be even
        (no grading involution exists for odd subsets in this scheme).
        The result squares to the identity.
        """
        idx = sorted(indices)
        if len(idx) != len(set(idx)):
            raise ValueError("index set must not contain duplicates")
        if not idx or len(idx) % 2 != 0:
            raise ValueError(
                f"grading involution needs a nonempty even-size index set, got {idx}"
            )
        out = SparseMatrix.identity(self.spinor_dim)
        for mu in idx:
            out = out @ self.gamma(mu)
        return out.scale(i_power(len(idx) // 2))


def build_gammas(n_pairs: int) -> GammaSet:
    if n_pairs < 1:
        raise ValueError("n_pairs must be at least 1")
    base = [SIGMA1.scale(I), SIGMA2.scale(I)]
    # i gamma_1 gamma_2 of the appended 2D block is sigma_3
    chirality = (base[0] @ base[1]).scale(I)
    gammas = list(base)
    for _ in range(n_pairs - 1):
        ident = SparseMatrix.identity(gammas[0].n_rows)
        gammas = [g.kron(chirality) for g in gammas]
        gammas.append(ident.kron(base[0]))
        gammas.append(ident.kron(base[1]))
    return GammaSet(n_pairs, gammas)


def corrupt_gamma(gs: GammaSet) -> GammaSet:
    """Negative-control hook: flip the sign of one entry of gamma_1.

    The returned set violates the Clifford relations, which downstream
    verifications must detect.
    """
    g1 = gs.gammas[0]
    hit = g1.first_nonzero()
    if hit is None:
        raise ValueError("gamma_1 is zero?")
    i, j, v = hit
    bad = SparseMatrix(g1.n_rows, g1.n_cols, [dict(r) for r in g1.rows])
    bad.rows[i][j] = (-v.re, -v.im)
    return GammaSet(gs.n_pairs, [bad] + gs.gammas[1:])
