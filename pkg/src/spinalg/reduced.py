"""Dimensionally reduced operators with fixed angular momenta k_j.

The reduced model lives on the bounded Laurent module over the radial
variables rho_1..rho_n tensored with the 2^n spinors:

    D~ = sum_j ( gamma_{2j-1} d/d rho_j + gamma_{2j} i k_j / rho_j )
    x~ = sum_j rho_j gamma_{2j-1}
    E~ = sum_j rho_j d/d rho_j

Both ends of the Laurent box truncate, so every verification restricts
its zero test to safe columns: exponent vectors far enough from the
boundary that the whole operator word stays inside the box.
"""

from __future__ import annotations

import time

from gmpy2 import mpq

from spinalg.bases import LaurentBox, drho_op, euler_diag, inv_rho_op, rho_op
from spinalg.clifford import GammaSet, build_gammas
from spinalg.report import CheckReport, matrix_zero_check
from spinalg.scalars import GaussianRational
from spinalg.sparse import SparseMatrix

HALF = GaussianRational(mpq(1, 2))
TWO = GaussianRational(2)


class RationalCirclePoint:
    """Exact point (c, s) on the unit circle: c^2 + s^2 = 1."""

    __slots__ = ("c", "s")

    def __init__(self, c, s):
        self.c = mpq(c)
        self.s = mpq(s)
        if self.c * self.c + self.s * self.s != 1:
            raise ValueError(f"({c}, {s}) is not on the unit circle")

    def __str__(self):
        return f"({self.c},{self.s})"


class ReducedModel:
    def __init__(self, n: int, k, box: LaurentBox, gammas: GammaSet | None = None):
        if box.n_vars != n:
            raise ValueError("Laurent box arity must match the number of pairs")
        k = [mpq(v) for v in k]
        if len(k) != n:
            raise ValueError(f"need {n} angular momentum values, got {len(k)}")
        self.n = n
        self.k = k
        self.box = box
        self.gammas = gammas if gammas is not None else build_gammas(n)
        self.spin_dim = self.gammas.spinor_dim
        self.dim = len(box) * self.spin_dim
        self._ident_spin = SparseMatrix.identity(self.spin_dim)

    # -- operator assembly ------------------------------------------------

    def x_tilde(self, pairs=None) -> SparseMatrix:
        return self._sum(
            rho_op(self.box, j).kron(self.gammas.gamma(2 * j - 1))
            for j in self._labels(pairs)
        )

    def d_tilde(self, pairs=None) -> SparseMatrix:
        terms = []
        for j in self._labels(pairs):
            terms.append(drho_op(self.box, j).kron(self.gammas.gamma(2 * j - 1)))
            terms.append(
                inv_rho_op(self.box, j)
                .kron(self.gammas.gamma(2 * j))
                .scale(GaussianRational(0, self.k[j - 1]))
            )
        return self._sum(terms)

    def euler(self) -> SparseMatrix:
        return euler_diag(self.box).kron(self._ident_spin)

    def j_minus(self, pairs=None) -> SparseMatrix:
        return self.d_tilde(pairs).scale(GaussianRational(0, -1))

    def j_plus(self, pairs=None) -> SparseMatrix:
        return self.x_tilde(pairs).scale(GaussianRational(0, -1))

    def j_zero(self) -> SparseMatrix:
        # the full-space J_0 = E + n picks up -n/2 from the radial gauge
        # factor prod_j rho_j^{-1/2}, leaving E~ + n/2
        return self.euler() + self.identity().scale(GaussianRational(mpq(self.n, 2)))

    def sigma_tilde(self, pairs) -> SparseMatrix:
        mat = self._ident_spin
        for j in sorted(pairs):
            mat = mat @ self.gammas.pair_spin(j)
        return SparseMatrix.identity(len(self.box)).kron(mat)

    def identity(self) -> SparseMatrix:
        return SparseMatrix.identity(self.dim)

    def reduced_casimir(self, pairs) -> SparseMatrix:
        """Gamma~_A = (1/2)([x~_A, D~_A] - 1) Sigma~_A."""
        pairs = sorted(pairs)
        if not pairs:
            raise ValueError("reduced Casimir needs a nonempty pair set")
        x, d = self.x_tilde(pairs), self.d_tilde(pairs)
        comm = x @ d - d @ x
        return ((comm - self.identity()).scale(HALF)) @ self.sigma_tilde(pairs)

    def safe_cols(self, margin: int) -> list:
        idx = self.box.safe_indices(margin)
        s = self.spin_dim
        return [i * s + q for i in idx for q in range(s)]

    def _labels(self, pairs):
        return sorted(pairs) if pairs is not None else range(1, self.n + 1)

    @staticmethod
    def _sum(mats):
        mats = list(mats)
        out = mats[0]
        for m in mats[1:]:
            out = out + m
        return out


def build_reduced(n: int, k, bound: int = 4) -> ReducedModel:
    return ReducedModel(n, k, LaurentBox(n, bound))


def verify_reduced_osp(model: ReducedModel) -> list[CheckReport]:
    """The reduced operators still generate osp(1|2), whatever the k_j."""
    cols = model.safe_cols(1)
    jm, jp, j0 = model.j_minus(), model.j_plus(), model.j_zero()
    tag = {"n": model.n, "k": ",".join(map(str, model.k))}
    reports = [
        matrix_zero_check("reduced-osp-raise", tag, j0 @ jp - jp @ j0 - jp, cols),
        matrix_zero_check("reduced-osp-lower", tag, j0 @ jm - jm @ j0 + jm, cols),
        matrix_zero_check(
            "reduced-osp-anticommutator", tag, jp @ jm + jm @ jp - j0.scale(TWO), cols
        ),
    ]
    return reports


def verify_reduced_casimirs(model: ReducedModel) -> list[CheckReport]:
    """One-pair reduced Casimirs equal the angular momenta k_j; the
    full-set Casimir commutes with the reduced J_+-."""
    reports = []
    cols = model.safe_cols(1)
    for j in range(1, model.n + 1):
        res = model.reduced_casimir([j]) - model.identity().scale(
            GaussianRational(model.k[j - 1])
        )
        reports.append(
            matrix_zero_check(
                "reduced-pair-casimir", {"j": j, "k": str(model.k[j - 1])}, res, cols
            )
        )
    full = list(range(1, model.n + 1))
    gam = model.reduced_casimir(full)
    cols2 = model.safe_cols(2)
    jm, jp = model.j_minus(), model.j_plus()
    reports.append(
        matrix_zero_check("reduced-casimir-Jminus", {"A": "full"}, gam @ jm - jm @ gam, cols2)
    )
    reports.append(
        matrix_zero_check("reduced-casimir-Jplus", {"A": "full"}, gam @ jp - jp @ gam, cols2)
    )
    return reports


def verify_reduced_bi(model: ReducedModel) -> list[CheckReport]:
    """Reduced Bannai-Ito relations for all cyclic triples of pair labels."""
    if model.n < 3:
        raise ValueError("reduced Bannai-Ito check needs n >= 3")
    cols = model.safe_cols(2)
    reports = []
    gam = {}

    def g(labels):
        key = tuple(sorted(labels))
        if key not in gam:
            gam[key] = model.reduced_casimir(key)
        return gam[key]

    from itertools import combinations

    for i, j, k in combinations(range(1, model.n + 1), 3):
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            lhs = g([a, b]) @ g([b, c]) + g([b, c]) @ g([a, b])
            rhs = (
                g([a, c])
                + (g([b]) @ g([a, b, c])).scale(TWO)
                + (g([a]) @ g([c])).scale(TWO)
            )
            reports.append(
                matrix_zero_check(
                    "reduced-bi-relation", {"i": a, "j": b, "k": c}, lhs - rhs, cols
                )
            )
    return reports


def rotation_identity_check(g: GammaSet, points) -> CheckReport:
    """Exact spin-rotation identity S^{-1} gammabar_mu S = gamma_mu.

    With (c, s) on the unit circle and cos(theta) = c^2 - s^2,
    sin(theta) = 2cs, the rotation is realized in closed form as
    S_j = c - i s Sigma_{2j-1,2j} (exact, since Sigma^2 = 1)."""
    t0 = time.perf_counter()
    points = list(points)
    if len(points) != g.n_pairs:
        raise ValueError("need one circle point per coordinate pair")
    dim = g.spinor_dim
    s_fwd = SparseMatrix.identity(dim)
    s_inv = SparseMatrix.identity(dim)
    for j, pt in enumerate(points, start=1):
        sigma = g.pair_spin(j)
        ident = SparseMatrix.identity(dim)
        s_fwd = s_fwd @ (
            ident.scale(GaussianRational(pt.c)) + sigma.scale(GaussianRational(0, -pt.s))
        )
        s_inv = s_inv @ (
            ident.scale(GaussianRational(pt.c)) + sigma.scale(GaussianRational(0, pt.s))
        )
    witness = None
    for j, pt in enumerate(points, start=1):
        cos_t = pt.c * pt.c - pt.s * pt.s
        sin_t = 2 * pt.c * pt.s
        g1, g2 = g.gamma(2 * j - 1), g.gamma(2 * j)
        bars = [
            g1.scale(GaussianRational(cos_t)) + g2.scale(GaussianRational(sin_t)),
            g1.scale(GaussianRational(-sin_t)) + g2.scale(GaussianRational(cos_t)),
        ]
        for offset, bar in enumerate(bars):
            res = s_inv @ bar @ s_fwd - g.gamma(2 * j - 1 + offset)
            hit = res.first_nonzero()
            if hit is not None and witness is None:
                r, c, v = hit
                witness = {"mu": 2 * j - 1 + offset, "row": r, "col": c, "value": repr(v)}
    report = CheckReport(
        name="rotation-identity",
        params={"points": ";".join(map(str, points))},
        blocks=[],
        status="pass" if witness is None else "fail",
        witness=witness,
    )
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report


def fubini_checks(k, bound: int = 4) -> list[CheckReport]:
    """Appendix identities for the reduced 2D oscillator at momentum k:

    D~^2 - x~^2 = -d^2/d rho^2 + k(k - sigma_3)/rho^2 + rho^2, and the
    residual even symmetry [H~, Sigma_12] = 0."""
    k = mpq(k)
    model = build_reduced(1, [k], bound)
    box = model.box
    tag = {"k": str(k)}
    d, x = model.d_tilde(), model.x_tilde()
    h = d @ d - x @ x
    dr = drho_op(box, 1)
    inv = inv_rho_op(box, 1)
    rho = rho_op(box, 1)
    ident2 = SparseMatrix.identity(2)
    sigma3 = model.gammas.pair_spin(1)
    rhs = (
        (dr @ dr).kron(ident2).scale(GaussianRational(-1))
        + (inv @ inv).kron(ident2.scale(GaussianRational(k * k)) - sigma3.scale(GaussianRational(k)))
        + (rho @ rho).kron(ident2)
    )
    cols = model.safe_cols(2)
    sig = model.sigma_tilde([1])
    return [
        matrix_zero_check("fubini-hamiltonian", tag, h - rhs, cols),
        matrix_zero_check("fubini-even-symmetry", tag, h @ sig - sig @ h, cols),
    ]
