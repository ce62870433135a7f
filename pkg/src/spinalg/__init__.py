"""Exact verification of Bannai-Ito and Racah operator algebras realized
on spinor-valued polynomial modules.

All arithmetic is over the Gaussian rationals, so every check is an
identically-zero residual: there are no tolerances anywhere.
"""

__version__ = "0.1.0"

from spinalg.clifford import GammaSet, build_gammas
from spinalg.graded import GradedOperator, WindowTooSmall
from spinalg.scalars import GaussianRational
from spinalg.sparse import SparseMatrix

__all__ = [
    "GammaSet",
    "GaussianRational",
    "GradedOperator",
    "SparseMatrix",
    "WindowTooSmall",
    "build_gammas",
    "__version__",
]
