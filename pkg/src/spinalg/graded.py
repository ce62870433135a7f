"""Graded operators: sums of homogeneous degree-shift parts.

An operator is a map shift -> {input degree -> block}.  The block at
(shift s, degree d) maps the degree-d basis into the degree-(d+s) basis.
A block is *stored* exactly when it is known exactly; blocks lost to the
truncation window are omitted, and compositions only emit blocks whose
every intermediate degree stays inside the window (the safe-block rule).
Zero blocks are stored explicitly (as empty matrices) so that "absent"
always means "unknown", never "zero".  Blocks whose source or target
space has dimension zero carry no content and are never stored.
"""

from __future__ import annotations

from spinalg.scalars import GaussianRational
from spinalg.sparse import SparseMatrix


class WindowTooSmall(Exception):
    """A verification requested degrees outside the safely computed range."""


class GradedOperator:
    __slots__ = ("module", "parts")

    def __init__(self, module, parts: dict):
        self.module = module
        self.parts = parts

    # -- constructors ---------------------------------------------------

    @classmethod
    def build(cls, module, shift: int, block_fn) -> "GradedOperator":
        """Operator with the given shift, block_fn(d) -> SparseMatrix."""
        blocks = {}
        for d in range(module.top + 1):
            dt = d + shift
            if dt < 0 or dt > module.top:
                continue
            if module.dim(d) == 0 or module.dim(dt) == 0:
                continue
            blocks[d] = block_fn(d)
        return cls(module, {shift: blocks})

    @classmethod
    def identity(cls, module) -> "GradedOperator":
        return cls.build(module, 0, lambda d: SparseMatrix.identity(module.dim(d)))

    @classmethod
    def scalar(cls, module, c) -> "GradedOperator":
        return cls.identity(module).scale(c)

    @classmethod
    def zero(cls, module) -> "GradedOperator":
        return cls.build(
            module, 0, lambda d: SparseMatrix.zeros(module.dim(d), module.dim(d))
        )

    # -- linear structure -------------------------------------------------

    def scale(self, c) -> "GradedOperator":
        out = {}
        for s, blocks in self.parts.items():
            out[s] = {d: blk.scale(c) for d, blk in blocks.items()}
        return GradedOperator(self.module, out)

    def __neg__(self):
        return self.scale(GaussianRational(-1))

    def _combine(self, other: "GradedOperator", sign: int) -> "GradedOperator":
        if self.module is not other.module:
            raise ValueError("operators live on different modules")
        out = {}
        for s in sorted(set(self.parts) | set(other.parts)):
            a = self.parts.get(s)
            b = other.parts.get(s)
            if a is None:
                # self is identically zero at this shift
                out[s] = {d: (blk if sign > 0 else -blk) for d, blk in b.items()}
            elif b is None:
                out[s] = dict(a)
            else:
                # absent on one side means unknown there: intersect
                out[s] = {
                    d: (a[d] + b[d] if sign > 0 else a[d] - b[d])
                    for d in sorted(set(a) & set(b))
                }
        return GradedOperator(self.module, out)

    def __add__(self, other):
        return self._combine(other, +1)

    def __sub__(self, other):
        return self._combine(other, -1)

    # -- composition ------------------------------------------------------

    def __matmul__(self, other: "GradedOperator") -> "GradedOperator":
        """Safe-block product self @ other.

        The output block at (s, d) is emitted only if every contributing
        pair of parts is fully known along the path d -> d+s_other -> d+s;
        otherwise the block is omitted as unsafe.
        """
        if self.module is not other.module:
            raise ValueError("operators live on different modules")
        mod = self.module
        top = mod.top
        by_shift: dict[int, list] = {}
        for sa in self.parts:
            for sb in other.parts:
                by_shift.setdefault(sa + sb, []).append((sa, sb))
        out = {}
        for s in sorted(by_shift):
            blocks = {}
            for d in range(top + 1):
                dt = d + s
                if dt < 0 or dt > top:
                    continue
                nc = mod.dim(d)
                nr = mod.dim(dt)
                if nc == 0 or nr == 0:
                    continue
                acc = None
                safe = True
                for sa, sb in by_shift[s]:
                    mid = d + sb
                    bblk = other.parts[sb].get(d)
                    if bblk is None:
                        # trivially zero when the intermediate space vanishes
                        if mid < 0 or (0 <= mid <= top and mod.dim(mid) == 0):
                            continue
                        safe = False
                        break
                    ablk = self.parts[sa].get(mid)
                    if ablk is None:
                        safe = False
                        break
                    term = ablk @ bblk
                    acc = term if acc is None else acc + term
                if safe:
                    blocks[d] = acc if acc is not None else SparseMatrix.zeros(nr, nc)
            out[s] = blocks
        return GradedOperator(mod, out)

    def bracket(self, other: "GradedOperator", anti: bool = False) -> "GradedOperator":
        """Commutator [A,B], or anticommutator {A,B} when anti is set."""
        ab = self @ other
        ba = other @ self
        return ab + ba if anti else ab - ba

    # -- inspection -------------------------------------------------------

    def defined_degrees(self, shift: int = 0):
        return sorted(self.parts.get(shift, {}))

    def block(self, shift: int, degree: int):
        """Stored block, or None when it was truncated away."""
        return self.parts.get(shift, {}).get(degree)

    def is_zero(self, degrees=None):
        """(verdict, witness): witness is (shift, degree, row, col, value)."""
        wanted = None if degrees is None else set(degrees)
        for s in sorted(self.parts):
            for d in sorted(self.parts[s]):
                if wanted is not None and d not in wanted:
                    continue
                hit = self.parts[s][d].first_nonzero()
                if hit is not None:
                    i, j, v = hit
                    return False, (s, d, i, j, v)
        return True, None

    def require_degrees(self, degrees, what: str = "operator"):
        """Raise WindowTooSmall unless every requested block is stored."""
        top = self.module.top
        for s in sorted(self.parts):
            have = self.parts[s]
            for d in degrees:
                dt = d + s
                # a target below degree zero has dimension zero, so the
                # block is trivially absent rather than truncated
                if dt < 0 or self.module.dim(d) == 0 or self.module.dim(dt) == 0:
                    continue
                if d < 0 or d > top or dt > top:
                    raise WindowTooSmall(
                        f"{what}: degree {d} at shift {s} needs window top "
                        f">= {max(d, dt)} (have {top})"
                    )
                if d not in have:
                    raise WindowTooSmall(
                        f"{what}: block (shift {s}, degree {d}) was truncated; "
                        f"enlarge the degree window beyond {top}"
                    )

    def __repr__(self):
        shape = {s: len(b) for s, b in self.parts.items()}
        return f"GradedOperator(shifts={shape})"
