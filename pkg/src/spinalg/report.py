"""Machine-readable records of verified relations.

Every verification in the suite produces a CheckReport; status is "pass"
exactly when the residual operator is identically zero on every checked
block (there are no tolerances anywhere).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass
class CheckReport:
    name: str
    params: dict = field(default_factory=dict)
    blocks: list = field(default_factory=list)
    status: str = "pass"
    witness: dict | None = None
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        obj = {
            "name": self.name,
            "params": {k: str(v) for k, v in self.params.items()},
            "blocks": list(self.blocks),
            "status": self.status,
        }
        if self.witness is not None:
            obj["witness"] = self.witness
        obj["elapsed_ms"] = round(self.elapsed_ms, 3)
        return obj

    def text_line(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params.items())
        line = f"{'PASS' if self.passed else 'FAIL'}  {self.name}({params})  blocks={self.blocks}"
        if self.witness is not None:
            line += f"  witness={self.witness}"
        return line


def operator_zero_check(name: str, params: dict, op, degrees) -> CheckReport:
    """Assert a graded operator vanishes identically on the given degrees."""
    t0 = time.perf_counter()
    degrees = sorted(degrees)
    op.require_degrees(degrees, what=name)
    ok, wit = op.is_zero(degrees)
    report = CheckReport(name=name, params=params, blocks=degrees)
    if not ok:
        s, d, i, j, v = wit
        report.status = "fail"
        report.witness = {"shift": s, "degree": d, "row": i, "col": j, "value": repr(v)}
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report


def matrix_zero_check(name: str, params: dict, mat, cols=None) -> CheckReport:
    """Assert a plain matrix vanishes, optionally only on selected columns."""
    t0 = time.perf_counter()
    report = CheckReport(name=name, params=params, blocks=[])
    keep = None if cols is None else set(cols)
    for i, row in enumerate(mat.rows):
        hits = sorted(j for j in row if keep is None or j in keep)
        if hits:
            j = hits[0]
            report.status = "fail"
            report.witness = {"row": i, "col": j, "value": repr(mat[i, j])}
            break
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report
