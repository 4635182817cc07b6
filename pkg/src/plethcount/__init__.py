"""Plethysm multiplicities ``s_lam[s_m]`` counted through transpose-twisted integer matrices."""

from .characters import ClassFunction, inner_product, irreducible_character, sqrt_count
from .ehrhart import Quasipolynomial, evaluate, fit, sum_quasipolynomial
from .errors import ConsistencyError, FitError, GuardExceeded, Report
from .matrices import count_fixed, enumerate_M, iter_fixed, n_class_function, plethysm_sum
from .oracle import oracle_sum, plethysm_schur
from .orbits import canonical_form, orbit_classes, transpose_fixed_classes
from .partitions import Partition, Permutation, partitions_of

__all__ = [
    "ClassFunction", "ConsistencyError", "FitError", "GuardExceeded", "Partition", "Permutation",
    "Quasipolynomial", "Report", "canonical_form", "count_fixed", "enumerate_M", "evaluate", "fit",
    "inner_product", "irreducible_character", "iter_fixed", "n_class_function", "oracle_sum",
    "orbit_classes", "partitions_of", "plethysm_schur", "plethysm_sum", "sqrt_count",
    "sum_quasipolynomial", "transpose_fixed_classes",
]
__version__ = "0.1.0"
