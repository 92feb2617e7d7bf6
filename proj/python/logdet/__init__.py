"""Log-determinant estimation for sparse symmetric positive definite matrices.

Thin re-export of the compiled extension: monotone estimate sequences from
nested sparsity patterns, graph-spline extrapolation, generators, an exact
oracle, and Matrix Market I/O.
"""

from ._logdet import (
    EstimateSeries,
    LogdetError,
    SparseSpdMatrix,
    estimate_series,
    exact_logdet,
    extrapolate,
    extrapolation_point,
    grid_laplacian,
    hadamard_fischer_check,
    pattern_density,
    principal_minor_logdet,
    random_dd_spd,
    read_matrix_market,
    row_contributions,
    spline_series,
    write_matrix_market,
)

__all__ = [
    "EstimateSeries",
    "LogdetError",
    "SparseSpdMatrix",
    "estimate_series",
    "exact_logdet",
    "extrapolate",
    "extrapolation_point",
    "grid_laplacian",
    "hadamard_fischer_check",
    "pattern_density",
    "principal_minor_logdet",
    "random_dd_spd",
    "read_matrix_market",
    "row_contributions",
    "spline_series",
    "write_matrix_market",
]
