"""Structure-relation verification: anticommutation relations of the
subset Casimirs, commutant and centralizer properties.

All checks are exact: a report passes iff the residual operator is
identically zero on every safe requested block.
"""

from __future__ import annotations

from gmpy2 import mpq
from itertools import combinations

from spinalg.bases import Module
from spinalg.casimir import (
    casimir,
    commutant_generator,
    osp_realization,
    scasimir,
    scasimir_closed,
    total_J,
)
from spinalg.graded import GradedOperator
from spinalg.report import CheckReport, operator_zero_check
from spinalg.scalars import GaussianRational

MINUS_HALF = GaussianRational(mpq(-1, 2))
TWO = GaussianRational(2)


class PairSet:
    """A sorted subset of pair labels; pair j covers coordinates 2j-1, 2j."""

    __slots__ = ("labels",)

    def __init__(self, labels):
        self.labels = tuple(sorted(set(labels)))

    @property
    def doubled(self) -> tuple:
        out = []
        for j in self.labels:
            out.extend((2 * j - 1, 2 * j))
        return tuple(out)

    def __len__(self):
        return len(self.labels)

    def __str__(self):
        return "{" + ",".join(map(str, self.labels)) + "}"

    def union(self, other):
        return PairSet(set(self.labels) | set(other.labels))

    def intersection(self, other):
        return PairSet(set(self.labels) & set(other.labels))

    def difference(self, other):
        return PairSet(set(self.labels) - set(other.labels))

    def symmetric_difference(self, other):
        return PairSet(set(self.labels) ^ set(other.labels))


class CasimirCache:
    """Bracket-method Casimirs keyed by pair-label subset.

    The empty set maps to the scalar -1/2 by convention.
    """

    def __init__(self, module: Module):
        self.module = module
        self._cache: dict[tuple, GradedOperator] = {}

    def gamma(self, pairs: PairSet) -> GradedOperator:
        key = pairs.labels
        op = self._cache.get(key)
        if op is None:
            if not key:
                op = GradedOperator.scalar(self.module, MINUS_HALF)
            else:
                op = casimir(pairs.doubled, self.module, method="bracket")
            self._cache[key] = op
        return op


def verify_bi_pair(
    A: PairSet, B: PairSet, module: Module, degrees, cache: CasimirCache | None = None
) -> CheckReport:
    """{Gamma_A, Gamma_B} = Gamma_{A xor B} + 2 Gamma_{A&B} Gamma_{A|B}
    + 2 Gamma_{A-B} Gamma_{B-A}, exactly, on the requested degrees."""
    if cache is None:
        cache = CasimirCache(module)
    ga, gb = cache.gamma(A), cache.gamma(B)
    lhs = ga.bracket(gb, anti=True)
    rhs = (
        cache.gamma(A.symmetric_difference(B))
        + (cache.gamma(A.intersection(B)) @ cache.gamma(A.union(B))).scale(TWO)
        + (cache.gamma(A.difference(B)) @ cache.gamma(B.difference(A))).scale(TWO)
    )
    return operator_zero_check(
        "bi-relation", {"A": str(A), "B": str(B)}, lhs - rhs, degrees
    )


def _subsets_lex(n: int, max_size: int):
    """Nonempty subsets of pair labels [1..n] in bitmask-lexicographic order."""
    for mask in range(1, 1 << n):
        labels = [j + 1 for j in range(n) if mask >> j & 1]
        if len(labels) <= max_size:
            yield PairSet(labels)


def verify_bi_all(
    n: int, module: Module, max_pair_size: int, degrees, cache: CasimirCache | None = None
) -> list[CheckReport]:
    """All unordered pairs of nonempty subsets, plus centrality of the
    one-pair Casimirs and the full-set Casimir."""
    if n < 2:
        raise ValueError("Bannai-Ito check needs n >= 2")
    if cache is None:
        cache = CasimirCache(module)
    family = list(_subsets_lex(n, max_pair_size))
    reports = []
    for i, A in enumerate(family):
        for B in family[i:]:
            reports.append(verify_bi_pair(A, B, module, degrees, cache))
    central = [PairSet([j]) for j in range(1, n + 1)] + [PairSet(range(1, n + 1))]
    for C in central:
        gc = cache.gamma(C)
        for A in family:
            res = gc.bracket(cache.gamma(A))
            reports.append(
                operator_zero_check(
                    "bi-centrality", {"central": str(C), "A": str(A)}, res, degrees
                )
            )
    return reports


def verify_commutant(module: Module, degrees) -> list[CheckReport]:
    """One- and two-pair Casimirs and the raw commutant generators all
    commute with each J_{2k-1,2k}."""
    n = module.gammas.n_pairs
    js = {k: total_J(2 * k - 1, 2 * k, module) for k in range(1, n + 1)}
    reports = []
    for i in range(1, n + 1):
        gi = casimir([2 * i - 1, 2 * i], module, method="closed_form")
        for k, jk in js.items():
            reports.append(
                operator_zero_check(
                    "commutant-pair", {"i": i, "J": k}, gi.bracket(jk), degrees
                )
            )
    for i, j in combinations(range(1, n + 1), 2):
        gij = casimir([2 * i - 1, 2 * i, 2 * j - 1, 2 * j], module, method="closed_form")
        mij = commutant_generator(i, j, module)
        for k, jk in js.items():
            reports.append(
                operator_zero_check(
                    "commutant-two-pair", {"i": i, "j": j, "J": k}, gij.bracket(jk), degrees
                )
            )
            reports.append(
                operator_zero_check(
                    "commutant-generator", {"i": i, "j": j, "J": k}, mij.bracket(jk), degrees
                )
            )
    return reports


def verify_centralizer(module: Module, degrees) -> list[CheckReport]:
    """Every pair-union Casimir commutes with the total osp(1|2) action."""
    n = module.gammas.n_pairs
    total = osp_realization(range(1, 2 * n + 1), module)
    cache = CasimirCache(module)
    dmax = max(degrees)
    reports = []
    for A in _subsets_lex(n, n):
        ga = cache.gamma(A)
        reports.append(
            operator_zero_check(
                "centralizer-Jplus",
                {"A": str(A)},
                ga.bracket(total.j_plus),
                [d for d in degrees if d < dmax],
            )
        )
        reports.append(
            operator_zero_check(
                "centralizer-Jminus", {"A": str(A)}, ga.bracket(total.j_minus), degrees
            )
        )
        reports.append(
            operator_zero_check(
                "centralizer-Jzero", {"A": str(A)}, ga.bracket(total.j_zero), degrees
            )
        )
        reports.append(
            operator_zero_check(
                "centralizer-involution", {"A": str(A)}, ga.bracket(total.s_op), degrees
            )
        )
    return reports


def verify_osp_suite(module: Module, degrees) -> list[CheckReport]:
    """osp(1|2) relations, sCasimir properties, involution properties and
    the bracket-vs-closed-form Casimir agreement for each pair, each
    two-pair union, and the full index set."""
    n = module.gammas.n_pairs
    dmax = max(degrees)
    inner = [d for d in degrees if d < dmax]
    subsets = [
        [2 * j - 1, 2 * j] for j in range(1, n + 1)
    ] + [
        [2 * i - 1, 2 * i, 2 * j - 1, 2 * j]
        for i, j in combinations(range(1, n + 1), 2)
    ]
    if n > 2:
        subsets.append(list(range(1, 2 * n + 1)))
    ident = GradedOperator.identity(module)
    reports = []
    for A in subsets:
        tag = {"A": "{" + ",".join(map(str, A)) + "}"}
        r = osp_realization(A, module)
        reports.append(
            operator_zero_check(
                "osp-raise", tag, r.j_zero.bracket(r.j_plus) - r.j_plus, degrees
            )
        )
        reports.append(
            operator_zero_check(
                "osp-lower", tag, r.j_zero.bracket(r.j_minus) + r.j_minus, degrees
            )
        )
        reports.append(
            operator_zero_check(
                "osp-anticommutator",
                tag,
                r.j_plus.bracket(r.j_minus, anti=True) - r.j_zero.scale(TWO),
                degrees,
            )
        )
        reports.append(
            operator_zero_check(
                "osp-involution-even", tag, r.s_op.bracket(r.j_zero), degrees
            )
        )
        reports.append(
            operator_zero_check(
                "osp-involution-odd-plus",
                tag,
                r.s_op.bracket(r.j_plus, anti=True),
                inner,
            )
        )
        reports.append(
            operator_zero_check(
                "osp-involution-odd-minus",
                tag,
                r.s_op.bracket(r.j_minus, anti=True),
                degrees,
            )
        )
        reports.append(
            operator_zero_check(
                "osp-involution-square", tag, r.s_op @ r.s_op - ident, degrees
            )
        )
        sc = scasimir(r)
        reports.append(
            operator_zero_check("osp-scasimir-even", tag, sc.bracket(r.j_zero), degrees)
        )
        reports.append(
            operator_zero_check(
                "osp-scasimir-odd-plus", tag, sc.bracket(r.j_plus, anti=True), inner
            )
        )
        reports.append(
            operator_zero_check(
                "osp-scasimir-odd-minus", tag, sc.bracket(r.j_minus, anti=True), degrees
            )
        )
        if len(A) in (2, 4):
            reports.append(
                operator_zero_check(
                    "osp-scasimir-closed-form", tag, sc - scasimir_closed(A, module), degrees
                )
            )
        if len(A) in (2, 4) or len(A) == module.n_vars:
            diff = casimir(A, module, "bracket") - casimir(A, module, "closed_form")
            reports.append(
                operator_zero_check("osp-casimir-agreement", tag, diff, degrees)
            )
        gam = sc @ r.s_op
        reports.append(
            operator_zero_check("osp-casimir-central-plus", tag, gam.bracket(r.j_plus), inner)
        )
        reports.append(
            operator_zero_check("osp-casimir-central-minus", tag, gam.bracket(r.j_minus), degrees)
        )
        reports.append(
            operator_zero_check("osp-casimir-central-zero", tag, gam.bracket(r.j_zero), degrees)
        )
        reports.append(
            operator_zero_check("osp-casimir-central-invol", tag, gam.bracket(r.s_op), degrees)
        )
        if len(A) == 2 and A[1] == A[0] + 1 and A[0] % 2 == 1:
            j = (A[0] + 1) // 2
            diff = casimir(A, module, "closed_form") - total_J(A[0], A[1], module)
            reports.append(
                operator_zero_check("osp-pair-casimir-is-J", {"j": j}, diff, degrees)
            )
    return reports
