"""Exact superintegrability toolkit for multivariate orthogonal polynomials."""
from .algebra import ParamScalar, const, frac_equal, var
from .detquotient import andreief_expectation, inverse_expansion, multivariate
from .models import hermite, jacobi, mp, wilson
from .partitions import Partition, parse_partition, xi
from .report import Report
from .symfun import jack, schur

__version__ = "0.1.0"

__all__ = [
    "ParamScalar", "const", "var", "frac_equal",
    "multivariate", "inverse_expansion", "andreief_expectation",
    "hermite", "jacobi", "mp", "wilson",
    "Partition", "parse_partition", "xi",
    "Report", "schur", "jack",
]
