"""Named verification suites.

Each suite function returns a list of CheckReport in a deterministic
order, so two runs with the same configuration produce identical output
regardless of how the work is scheduled.
"""

from __future__ import annotations

from itertools import combinations, permutations

from spinalg.bases import LaurentBox, Module
from spinalg.casimir import scalar_module, spin_module, verify_coproduct_factorization
from spinalg.clifford import GammaSet, build_gammas, corrupt_gamma
from spinalg.racah import verify_embedding, verify_racah
from spinalg.reduced import (
    RationalCirclePoint,
    ReducedModel,
    fubini_checks,
    rotation_identity_check,
    verify_reduced_bi,
    verify_reduced_casimirs,
    verify_reduced_osp,
)
from spinalg.report import CheckReport, matrix_zero_check, operator_zero_check
from spinalg.scalars import GaussianRational
from spinalg.sparse import SparseMatrix
from spinalg.verify import verify_bi_all, verify_centralizer, verify_commutant, verify_osp_suite

TWO = GaussianRational(2)

ROTATION_POINTS = (("1", "0"), ("3/5", "4/5"), ("0", "1"))


def check_gamma_table(n: int, gammas: GammaSet | None = None) -> list[CheckReport]:
    """Anticommutators gamma_mu gamma_nu + gamma_nu gamma_mu = -2 delta_mu_nu,
    plus antihermiticity of each generator."""
    g = gammas if gammas is not None else build_gammas(n)
    ident = SparseMatrix.identity(g.spinor_dim)
    reports = []
    for mu in range(1, 2 * n + 1):
        for nu in range(mu, 2 * n + 1):
            a, b = g.gamma(mu), g.gamma(nu)
            res = a @ b + b @ a
            if mu == nu:
                res = res + ident.scale(TWO)
            reports.append(
                matrix_zero_check("gamma-anticommutator", {"n": n, "mu": mu, "nu": nu}, res)
            )
        reports.append(
            matrix_zero_check(
                "gamma-antihermitian", {"n": n, "mu": mu}, g.gamma(mu).dagger() + g.gamma(mu)
            )
        )
    return reports


def _angular(module: Module, a: int, b: int):
    if a == b:
        return None
    if a < b:
        return module.angular_op(a, b)
    return module.angular_op(b, a).scale(GaussianRational(-1))


def check_o2n_table(module: Module, degrees) -> list[CheckReport]:
    """[L_ab, L_cd] = d_bc L_ad - d_bd L_ac - d_ac L_bd + d_ad L_bc
    for all generator pairs, on every requested degree block."""
    m = module.n_vars
    pairs = list(combinations(range(1, m + 1), 2))
    ls = {p: module.angular_op(*p) for p in pairs}
    reports = []
    for a, b in pairs:
        for c, d in pairs:
            res = ls[(a, b)].bracket(ls[(c, d)])
            for sign, cond, p, q in (
                (-1, b == c, a, d),
                (1, b == d, a, c),
                (1, a == c, b, d),
                (-1, a == d, b, c),
            ):
                if cond and p != q:
                    res = res + _angular(module, p, q).scale(GaussianRational(sign))
            reports.append(
                operator_zero_check(
                    "o2n-bracket", {"ab": f"{a}{b}", "cd": f"{c}{d}"}, res, degrees
                )
            )
    return reports


def check_l_quadratic(module: Module, degrees) -> list[CheckReport]:
    """L_ab L_cd + L_ac L_db + L_ad L_bc = 0 for all distinct quadruples."""
    m = module.n_vars
    reports = []
    for quad in combinations(range(1, m + 1), 4):
        for a, b, c, d in permutations(quad):
            res = (
                _angular(module, a, b) @ _angular(module, c, d)
                + _angular(module, a, c) @ _angular(module, d, b)
                + _angular(module, a, d) @ _angular(module, b, c)
            )
            reports.append(
                operator_zero_check(
                    "L-quadratic", {"abcd": "".join(map(str, (a, b, c, d)))}, res, degrees
                )
            )
    return reports


# -- suite drivers ---------------------------------------------------------


def _degrees(cfg):
    return list(range(cfg.max_degree + 1))


def _gammas(cfg, n):
    g = build_gammas(n)
    return corrupt_gamma(g) if cfg.corrupt else g


def suite_clifford(cfg) -> list[CheckReport]:
    reports = []
    for n in range(1, cfg.pairs + 1):
        reports.extend(check_gamma_table(n, _gammas(cfg, n)))
    mod = scalar_module(cfg.pairs, cfg.max_degree)
    degrees = _degrees(cfg)
    reports.extend(check_o2n_table(mod, degrees))
    reports.extend(check_l_quadratic(mod, degrees))
    return reports


def suite_osp(cfg) -> list[CheckReport]:
    mod = spin_module(cfg.pairs, cfg.max_degree + 1, _gammas(cfg, cfg.pairs))
    return verify_osp_suite(mod, _degrees(cfg))


def suite_coproduct(cfg) -> list[CheckReport]:
    return verify_coproduct_factorization(top=4)


def suite_bi(cfg) -> list[CheckReport]:
    mod = spin_module(cfg.pairs, cfg.max_degree + 1, _gammas(cfg, cfg.pairs))
    return verify_bi_all(cfg.pairs, mod, cfg.pairs, _degrees(cfg))


def suite_commutant(cfg) -> list[CheckReport]:
    mod = spin_module(cfg.pairs, cfg.max_degree + 1, _gammas(cfg, cfg.pairs))
    return verify_commutant(mod, _degrees(cfg))


def suite_centralizer(cfg) -> list[CheckReport]:
    mod = spin_module(cfg.pairs, cfg.max_degree + 1, _gammas(cfg, cfg.pairs))
    return verify_centralizer(mod, _degrees(cfg))


def suite_racah(cfg) -> list[CheckReport]:
    mod = scalar_module(cfg.pairs, cfg.max_degree)
    return verify_racah(cfg.pairs, mod, _degrees(cfg))


def suite_embedding(cfg) -> list[CheckReport]:
    mod = spin_module(cfg.pairs, cfg.max_degree + 1, _gammas(cfg, cfg.pairs))
    return verify_embedding(cfg.pairs, mod, _degrees(cfg))


def suite_dimred(cfg) -> list[CheckReport]:
    n = len(cfg.k)
    model = ReducedModel(n, cfg.k, LaurentBox(n, cfg.window), _gammas(cfg, n))
    reports = verify_reduced_osp(model)
    reports.extend(verify_reduced_casimirs(model))
    if n >= 3:
        reports.extend(verify_reduced_bi(model))
    points = [
        RationalCirclePoint(*ROTATION_POINTS[(j - 1) % len(ROTATION_POINTS)])
        for j in range(1, n + 1)
    ]
    reports.append(rotation_identity_check(model.gammas, points))
    return reports


def suite_appendix(cfg) -> list[CheckReport]:
    reports = []
    for kj in cfg.k:
        reports.extend(fubini_checks(kj, bound=cfg.window))
    return reports


SUITES = {
    "clifford": suite_clifford,
    "osp": suite_osp,
    "coproduct": suite_coproduct,
    "bi": suite_bi,
    "commutant": suite_commutant,
    "centralizer": suite_centralizer,
    "racah": suite_racah,
    "embedding": suite_embedding,
    "dimred": suite_dimred,
    "appendix": suite_appendix,
}

SUITE_ORDER = tuple(SUITES)
