"""Racah invariants on the scalar polynomial module and their embedding
into the Bannai-Ito generators through the sCasimirs.

The invariants contain no gamma matrices, so the structure relations run
on the plain polynomial module (a 2^n-fold dimension saving); only the
embedding check needs the spinor factor.
"""

from __future__ import annotations

from gmpy2 import mpq
from itertools import combinations, permutations

from spinalg.bases import Module
from spinalg.casimir import scasimir_closed, total_J
from spinalg.graded import GradedOperator
from spinalg.report import CheckReport, operator_zero_check
from spinalg.scalars import GaussianRational

QUARTER = GaussianRational(mpq(1, 4))
HALF = GaussianRational(mpq(1, 2))
TWO = GaussianRational(2)


def _pair_indices(i: int, j: int):
    return [2 * i - 1, 2 * i, 2 * j - 1, 2 * j]


class RacahGenerators:
    """Lazy container for G^i, K^{ij} and the redefined C, P, F generators.

    G^i is the square of the pair rotation L_{2i-1,2i}; K^{ij} is the sum
    of the six squared rotations inside the four indices of pairs i, j.
    F^{ijk} is taken as (1/2)[P^{ij}, P^{jk}] by definition.
    """

    def __init__(self, n: int, module: Module):
        if n < 3:
            raise ValueError("Racah relations need at least 3 pair labels")
        if module.n_vars != 2 * n:
            raise ValueError(f"module must have {2 * n} variables")
        if module.spin_dim != 1:
            raise ValueError("Racah invariants live on the scalar module")
        self.n = n
        self.module = module
        self._G: dict = {}
        self._K: dict = {}
        self._C1: dict = {}
        self._C2: dict = {}
        self._P: dict = {}
        self._F: dict = {}

    def G(self, i: int) -> GradedOperator:
        op = self._G.get(i)
        if op is None:
            l = self.module.angular_op(2 * i - 1, 2 * i)
            op = self._G[i] = l @ l
        return op

    def K(self, i: int, j: int) -> GradedOperator:
        i, j = min(i, j), max(i, j)
        op = self._K.get((i, j))
        if op is None:
            acc = None
            for mu, nu in combinations(_pair_indices(i, j), 2):
                l = self.module.angular_op(mu, nu)
                term = l @ l
                acc = term if acc is None else acc + term
            op = self._K[(i, j)] = acc
        return op

    def C(self, i: int) -> GradedOperator:
        op = self._C1.get(i)
        if op is None:
            op = self._C1[i] = self.G(i).scale(-QUARTER) + GradedOperator.scalar(
                self.module, -QUARTER
            )
        return op

    def Cij(self, i: int, j: int) -> GradedOperator:
        i, j = min(i, j), max(i, j)
        op = self._C2.get((i, j))
        if op is None:
            op = self._C2[(i, j)] = self.K(i, j).scale(-QUARTER)
        return op

    def P(self, i: int, j: int) -> GradedOperator:
        i, j = min(i, j), max(i, j)
        op = self._P.get((i, j))
        if op is None:
            op = self._P[(i, j)] = self.Cij(i, j) - self.C(i) - self.C(j)
        return op

    def F(self, i: int, j: int, k: int) -> GradedOperator:
        op = self._F.get((i, j, k))
        if op is None:
            op = self._F[(i, j, k)] = self.P(i, j).bracket(self.P(j, k)).scale(HALF)
        return op


def racah_generators(n: int, module: Module) -> RacahGenerators:
    return RacahGenerators(n, module)


def verify_racah(n: int, module: Module, degrees) -> list[CheckReport]:
    """Check every defining relation compatible with the rank:

    three distinct labels  -> F antisymmetry and the PPF relation,
    four distinct labels   -> the mixed PF and FF relations,
    five distinct labels   -> the disjoint FF relation.
    """
    gen = racah_generators(n, module)
    reports = []

    for i, j, k in permutations(range(1, n + 1), 3):
        tag = {"i": i, "j": j, "k": k}
        res = gen.F(i, j, k) + gen.F(k, j, i)
        reports.append(operator_zero_check("racah-F-antisymmetry", tag, res, degrees))
        lhs = gen.P(j, k).bracket(gen.F(i, j, k))
        rhs = (
            gen.P(i, k) @ gen.P(j, k)
            - gen.P(j, k) @ gen.P(i, j)
            + (gen.P(i, k) @ gen.C(j)).scale(TWO)
            - (gen.P(i, j) @ gen.C(k)).scale(TWO)
        )
        reports.append(operator_zero_check("racah-PPF", tag, lhs - rhs, degrees))

    if n >= 4:
        for i, j, k, l in permutations(range(1, n + 1), 4):
            tag = {"i": i, "j": j, "k": k, "l": l}
            lhs = gen.P(k, l).bracket(gen.F(i, j, k))
            rhs = gen.P(i, k) @ gen.P(j, l) - gen.P(i, l) @ gen.P(j, k)
            reports.append(operator_zero_check("racah-PF-mixed", tag, lhs - rhs, degrees))
            lhs = gen.F(i, j, k).bracket(gen.F(j, k, l))
            rhs = (
                gen.F(j, k, l) @ gen.P(i, j)
                - gen.F(i, k, l) @ (gen.P(j, k) + gen.C(j).scale(TWO))
                - gen.F(i, j, k) @ gen.P(j, l)
            )
            reports.append(operator_zero_check("racah-FF-adjacent", tag, lhs - rhs, degrees))

    if n >= 5:
        for i, j, k, l, m in permutations(range(1, n + 1), 5):
            tag = {"i": i, "j": j, "k": k, "l": l, "m": m}
            lhs = gen.F(i, j, k).bracket(gen.F(k, l, m))
            rhs = gen.F(i, l, m) @ gen.P(j, k) - gen.P(i, k) @ gen.F(j, l, m)
            reports.append(operator_zero_check("racah-FF-disjoint", tag, lhs - rhs, degrees))

    return reports


def verify_embedding(n: int, spin_mod: Module, degrees) -> list[CheckReport]:
    """Recover C^i and C^{ij} from the sCasimirs on the spinor module:

        C = (1/4)(S^2 - S - 3/4)

    with S the two- or four-index sCasimir, and check that the raw
    invariants commute with each J_{2k-1,2k}.
    """
    if n < 2:
        raise ValueError("embedding check needs n >= 2")
    reports = []
    three_quarters = GradedOperator.scalar(spin_mod, GaussianRational(mpq(3, 4)))
    js = {k: total_J(2 * k - 1, 2 * k, spin_mod) for k in range(1, n + 1)}

    def c_from_scasimir(indices):
        s = scasimir_closed(indices, spin_mod)
        return (s @ s - s - three_quarters).scale(QUARTER)

    def lifted_G(i):
        l = spin_mod.angular_op(2 * i - 1, 2 * i)
        return l @ l

    def lifted_K(i, j):
        acc = None
        for mu, nu in combinations(_pair_indices(i, j), 2):
            l = spin_mod.angular_op(mu, nu)
            term = l @ l
            acc = term if acc is None else acc + term
        return acc

    quarter_ident = GradedOperator.scalar(spin_mod, QUARTER)
    for i in range(1, n + 1):
        ci = lifted_G(i).scale(-QUARTER) - quarter_ident
        res = ci - c_from_scasimir([2 * i - 1, 2 * i])
        reports.append(operator_zero_check("embedding-Ci", {"i": i}, res, degrees))
        gi = lifted_G(i)
        for k, jk in js.items():
            reports.append(
                operator_zero_check(
                    "embedding-G-commutant", {"i": i, "J": k}, gi.bracket(jk), degrees
                )
            )
    for i, j in combinations(range(1, n + 1), 2):
        cij = lifted_K(i, j).scale(-QUARTER)
        res = cij - c_from_scasimir(_pair_indices(i, j))
        reports.append(operator_zero_check("embedding-Cij", {"i": i, "j": j}, res, degrees))
        kij = lifted_K(i, j)
        for k, jk in js.items():
            reports.append(
                operator_zero_check(
                    "embedding-K-commutant", {"i": i, "j": j, "J": k}, kij.bracket(jk), degrees
                )
            )
    return reports
