"""Sparse matrices over the Gaussian rationals.

Row-major dict-of-dicts storage; no explicit zeros are kept.  Instances
are immutable by convention: every operation returns a new matrix, so
matrices can be shared freely across threads.
"""

from __future__ import annotations

from gmpy2 import mpq

from spinalg import _kernels
from spinalg.scalars import GaussianRational, QZERO, QONE

_ZPAIR = (QZERO, QZERO)


def _pair(value) -> tuple:
    if isinstance(value, GaussianRational):
        return (value.re, value.im)
    if isinstance(value, tuple):
        return (mpq(value[0]), mpq(value[1]))
    return (mpq(value), QZERO)


class SparseMatrix:
    __slots__ = ("n_rows", "n_cols", "rows")

    def __init__(self, n_rows: int, n_cols: int, rows=None):
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.rows = rows if rows is not None else [{} for _ in range(n_rows)]

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "SparseMatrix":
        return cls(n_rows, n_cols)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, [{i: (QONE, QZERO)} for i in range(n)])

    @classmethod
    def from_entries(cls, n_rows: int, n_cols: int, entries: dict) -> "SparseMatrix":
        m = cls(n_rows, n_cols)
        for (i, j), value in entries.items():
            if not (0 <= i < n_rows and 0 <= j < n_cols):
                raise IndexError(f"entry ({i},{j}) outside {n_rows}x{n_cols}")
            re, im = _pair(value)
            if re or im:
                m.rows[i][j] = (re, im)
        return m

    @classmethod
    def from_dense(cls, dense) -> "SparseMatrix":
        m = cls(len(dense), len(dense[0]) if dense else 0)
        for i, row in enumerate(dense):
            for j, value in enumerate(row):
                re, im = _pair(value)
                if re or im:
                    m.rows[i][j] = (re, im)
        return m

    # -- element access -------------------------------------------------

    def __getitem__(self, ij) -> GaussianRational:
        i, j = ij
        re, im = self.rows[i].get(j, _ZPAIR)
        return GaussianRational._raw(re, im)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def first_nonzero(self):
        """Deterministic (row, col, value) witness, or None."""
        for i, row in enumerate(self.rows):
            if row:
                j = min(row)
                re, im = row[j]
                return (i, j, GaussianRational._raw(re, im))
        return None

    # -- arithmetic -----------------------------------------------------

    def _check_same_shape(self, other):
        if self.n_rows != other.n_rows or self.n_cols != other.n_cols:
            raise ValueError(
                f"shape mismatch: {self.n_rows}x{self.n_cols} vs "
                f"{other.n_rows}x{other.n_cols}"
            )

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_same_shape(other)
        rows = _kernels.add_scaled(self.rows, other.rows, QONE, QZERO)
        return SparseMatrix(self.n_rows, self.n_cols, rows)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_same_shape(other)
        rows = _kernels.add_scaled(self.rows, other.rows, -QONE, QZERO)
        return SparseMatrix(self.n_rows, self.n_cols, rows)

    def __neg__(self) -> "SparseMatrix":
        return self.scale(GaussianRational(-1))

    def scale(self, c) -> "SparseMatrix":
        cre, cim = _pair(c)
        if not (cre or cim):
            return SparseMatrix.zeros(self.n_rows, self.n_cols)
        rows = _kernels.scale(self.rows, cre, cim)
        return SparseMatrix(self.n_rows, self.n_cols, rows)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.n_cols != other.n_rows:
            raise ValueError(
                f"dimension mismatch: {self.n_rows}x{self.n_cols} @ "
                f"{other.n_rows}x{other.n_cols}"
            )
        rows = _kernels.matmul(self.rows, other.rows)
        return SparseMatrix(self.n_rows, other.n_cols, rows)

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        """Kronecker product; first factor is the major index."""
        out = SparseMatrix(self.n_rows * other.n_rows, self.n_cols * other.n_cols)
        for i, arow in enumerate(self.rows):
            if not arow:
                continue
            for k, brow in enumerate(other.rows):
                if not brow:
                    continue
                target = out.rows[i * other.n_rows + k]
                for j, (ar, ai) in arow.items():
                    base = j * other.n_cols
                    for l, (br, bi) in brow.items():
                        re = ar * br - ai * bi
                        im = ar * bi + ai * br
                        if re or im:
                            target[base + l] = (re, im)
        return out

    def dagger(self) -> "SparseMatrix":
        """Conjugate transpose."""
        out = SparseMatrix(self.n_cols, self.n_rows)
        for i, row in enumerate(self.rows):
            for j, (re, im) in row.items():
                out.rows[j][i] = (re, -im)
        return out

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (
            self.n_rows == other.n_rows
            and self.n_cols == other.n_cols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"SparseMatrix({self.n_rows}x{self.n_cols}, nnz={self.nnz()})"
