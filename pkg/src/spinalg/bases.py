"""Monomial bases and the exact multiplication/differentiation operators.

Polynomial degree blocks are ordered graded-lexicographically (within one
degree, exponent vectors in increasing lexicographic order) so all block
matrices are reproducible across runs and platforms.  The Laurent box is
the bounded module used by the dimensionally reduced model; it allows
negative exponents and truncates at both ends, so verifications on it are
restricted to safe columns (see reduced.py).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb

from gmpy2 import mpq

from spinalg.graded import GradedOperator
from spinalg.scalars import QONE, QZERO
from spinalg.sparse import SparseMatrix


@lru_cache(maxsize=None)
def monomials(n_vars: int, degree: int) -> tuple:
    """All exponent vectors of the given total degree, lex increasing."""
    if degree < 0:
        return ()
    if n_vars == 1:
        return ((degree,),)
    out = []
    for e in range(degree + 1):
        for rest in monomials(n_vars - 1, degree - e):
            out.append((e,) + rest)
    return tuple(out)


class MonomialBasis:
    """Ordered basis of the degree-d homogeneous polynomials in n variables."""

    __slots__ = ("n_vars", "degree", "exponents", "index")

    def __init__(self, n_vars: int, degree: int):
        self.n_vars = n_vars
        self.degree = degree
        self.exponents = monomials(n_vars, degree)
        self.index = {e: i for i, e in enumerate(self.exponents)}

    def __len__(self):
        return len(self.exponents)


class Module:
    """Polynomial module P(x_1..x_m) (x) C^{spin_dim}, graded by degree.

    Basis order is monomial-major, spinor-minor.  dim(d) is 0 below
    degree 0 (the module is exact at the bottom: derivatives of constants
    vanish identically, with no truncation) and unknown above `top`.
    """

    def __init__(self, n_vars: int, top: int, gammas=None):
        self.n_vars = n_vars
        self.top = top
        self.gammas = gammas
        self.spin_dim = gammas.spinor_dim if gammas is not None else 1
        self._bases: dict[int, MonomialBasis] = {}

    def basis(self, d: int) -> MonomialBasis:
        b = self._bases.get(d)
        if b is None:
            b = self._bases[d] = MonomialBasis(self.n_vars, d)
        return b

    def dim(self, d: int):
        if d < 0:
            return 0
        if d > self.top:
            return None
        return comb(d + self.n_vars - 1, self.n_vars - 1) * self.spin_dim

    # -- poly-only blocks ------------------------------------------------

    def _mult_block(self, mu: int, d: int) -> SparseMatrix:
        src, dst = self.basis(d), self.basis(d + 1)
        m = SparseMatrix(len(dst), len(src))
        k = mu - 1
        for col, e in enumerate(src.exponents):
            raised = e[:k] + (e[k] + 1,) + e[k + 1:]
            m.rows[dst.index[raised]][col] = (QONE, QZERO)
        return m

    def _deriv_block(self, mu: int, d: int) -> SparseMatrix:
        src, dst = self.basis(d), self.basis(d - 1)
        m = SparseMatrix(len(dst), len(src))
        k = mu - 1
        for col, e in enumerate(src.exponents):
            if e[k] == 0:
                continue
            lowered = e[:k] + (e[k] - 1,) + e[k + 1:]
            m.rows[dst.index[lowered]][col] = _pair_int(e[k])
        return m

    def _angular_block(self, mu: int, nu: int, d: int) -> SparseMatrix:
        """L_{mu,nu} = x_mu d/dx_nu - x_nu d/dx_mu on the degree-d block."""
        b = self.basis(d)
        m = SparseMatrix(len(b), len(b))
        a, c = mu - 1, nu - 1
        for col, e in enumerate(b.exponents):
            if e[c]:
                shifted = list(e)
                shifted[c] -= 1
                shifted[a] += 1
                _acc(m.rows[b.index[tuple(shifted)]], col, e[c])
            if e[a]:
                shifted = list(e)
                shifted[a] -= 1
                shifted[c] += 1
                _acc(m.rows[b.index[tuple(shifted)]], col, -e[a])
        return m

    def _diag_partial_degree(self, subset, d: int) -> SparseMatrix:
        b = self.basis(d)
        cols = set(v - 1 for v in subset) if subset is not None else None
        m = SparseMatrix(len(b), len(b))
        for col, e in enumerate(b.exponents):
            val = sum(e) if cols is None else sum(e[k] for k in cols)
            if val:
                m.rows[col][col] = _pair_int(val)
        return m

    # -- graded operators --------------------------------------------------

    def _lift(self, shift: int, poly_block_fn, spin=None, scalar=None) -> GradedOperator:
        """Tensor per-degree polynomial blocks with a spinor-space matrix."""
        def block(d):
            blk = poly_block_fn(d)
            if self.spin_dim > 1:
                s = spin if spin is not None else SparseMatrix.identity(self.spin_dim)
                blk = blk.kron(s)
            elif spin is not None:
                raise ValueError("spinor factor on a scalar module")
            if scalar is not None:
                blk = blk.scale(scalar)
            return blk

        return GradedOperator.build(self, shift, block)

    def mult_op(self, mu: int, spin=None, scalar=None) -> GradedOperator:
        self._check_var(mu)
        return self._lift(+1, lambda d: self._mult_block(mu, d), spin, scalar)

    def deriv_op(self, mu: int, spin=None, scalar=None) -> GradedOperator:
        self._check_var(mu)
        return self._lift(-1, lambda d: self._deriv_block(mu, d), spin, scalar)

    def angular_op(self, mu: int, nu: int, spin=None, scalar=None) -> GradedOperator:
        if mu == nu:
            raise ValueError("angular operator needs distinct indices")
        self._check_var(mu)
        self._check_var(nu)
        return self._lift(0, lambda d: self._angular_block(mu, nu, d), spin, scalar)

    def euler_op(self, subset=None, constant=None, spin=None) -> GradedOperator:
        """Sum of x_mu d_mu over the subset (all variables when None),
        plus an optional scalar constant."""
        op = self._lift(0, lambda d: self._diag_partial_degree(subset, d), spin)
        if constant is not None:
            op = op + GradedOperator.scalar(self, constant)
        return op

    def spin_matrix_op(self, mat: SparseMatrix) -> GradedOperator:
        """A pure spinor-space matrix acting degree-wise."""
        if mat.n_rows != self.spin_dim:
            raise ValueError("spinor matrix has wrong dimension")
        return self._lift(0, lambda d: SparseMatrix.identity(len(self.basis(d))), mat)

    def _check_var(self, mu):
        if not 1 <= mu <= self.n_vars:
            raise IndexError(f"variable index {mu} outside [1, {self.n_vars}]")


def _pair_int(v: int):
    return (mpq(v), QZERO)


def _acc(row: dict, col: int, v: int):
    cur = row.get(col)
    val = mpq(v) if cur is None else cur[0] + v
    if val:
        row[col] = (val, QZERO)
    elif cur is not None:
        del row[col]


class LaurentBox:
    """All exponent vectors with each component in [-W, W], ordered
    lexicographically on the shifted (nonnegative) exponents."""

    __slots__ = ("n_vars", "bound", "exponents", "index")

    def __init__(self, n_vars: int, bound: int):
        if bound < 2:
            raise ValueError("Laurent bound must be at least 2")
        self.n_vars = n_vars
        self.bound = bound
        self.exponents = tuple(product(range(-bound, bound + 1), repeat=n_vars))
        self.index = {e: i for i, e in enumerate(self.exponents)}

    def __len__(self):
        return len(self.exponents)

    def safe_indices(self, margin: int) -> list:
        """Columns whose exponents keep any word of per-variable excursion
        <= margin inside the box."""
        lo, hi = -self.bound + margin, self.bound - margin
        return [
            i
            for i, e in enumerate(self.exponents)
            if all(lo <= c <= hi for c in e)
        ]


def laurent_shift_matrix(box: LaurentBox, j: int, step: int, coeff_fn) -> SparseMatrix:
    """Single-exponent shift operator on the box.

    Maps exponent e to e + step*e_j with coefficient coeff_fn(e_j); images
    falling outside the box are dropped (truncation, handled by safe
    columns downstream).
    """
    if not 1 <= j <= box.n_vars:
        raise IndexError(f"variable index {j} outside [1, {box.n_vars}]")
    k = j - 1
    m = SparseMatrix(len(box), len(box))
    for col, e in enumerate(box.exponents):
        c = coeff_fn(e[k])
        if not c:
            continue
        target = e[k] + step
        if not -box.bound <= target <= box.bound:
            continue
        shifted = e[:k] + (target,) + e[k + 1:]
        m.rows[box.index[shifted]][col] = (mpq(c), QZERO)
    return m


def rho_op(box: LaurentBox, j: int) -> SparseMatrix:
    """Multiplication by rho_j."""
    return laurent_shift_matrix(box, j, +1, lambda e: 1)


def drho_op(box: LaurentBox, j: int) -> SparseMatrix:
    """d/d rho_j: rho^e -> e * rho^(e-1), including negative e."""
    return laurent_shift_matrix(box, j, -1, lambda e: e)


def inv_rho_op(box: LaurentBox, j: int) -> SparseMatrix:
    """Multiplication by 1/rho_j."""
    return laurent_shift_matrix(box, j, -1, lambda e: 1)


def euler_diag(box: LaurentBox) -> SparseMatrix:
    """Sum of rho_j d/d rho_j: diagonal with the total exponent.

    Assembled directly rather than by composition so the boundary columns
    stay exact (the composed form would truncate at e_j = -W)."""
    m = SparseMatrix(len(box), len(box))
    for col, e in enumerate(box.exponents):
        t = sum(e)
        if t:
            m.rows[col][col] = (mpq(t), QZERO)
    return m
