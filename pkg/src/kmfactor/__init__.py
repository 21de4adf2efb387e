"""Exact Weyl-Kac numerators, the graph invariant c(G), and unique
factorization of products of irreducible characters for symmetrizable
Kac-Moody algebras."""

from .cartan import (
    CartanMatrix,
    classify,
    deg_lambda,
    dominant_weight,
    dynkin_graph,
    is_indecomposable,
    load_gcm,
    m_lambda,
    parse_gcm,
    rho_shift,
    validate_gcm,
)
from .cgraph import DynkinGraph, c_dc, c_direct, count_k_partitions, leaf_reduce
from .factor import (
    character,
    factorize_numerators,
    factorize_tensor_character,
    numerator_product,
    verify_prop1,
)
from .series import TruncatedSeries, neg_log
from .weyl import (
    finite_positive_roots,
    full_numerator,
    mult_sum_simple_roots,
    numerator,
    orbit_bfs,
    verify_loglem,
)

__version__ = "0.1.0"

__all__ = [
    "CartanMatrix",
    "classify",
    "deg_lambda",
    "dominant_weight",
    "dynkin_graph",
    "is_indecomposable",
    "load_gcm",
    "m_lambda",
    "parse_gcm",
    "rho_shift",
    "validate_gcm",
    "DynkinGraph",
    "c_dc",
    "c_direct",
    "count_k_partitions",
    "leaf_reduce",
    "character",
    "factorize_numerators",
    "factorize_tensor_character",
    "numerator_product",
    "verify_prop1",
    "TruncatedSeries",
    "neg_log",
    "finite_positive_roots",
    "full_numerator",
    "mult_sum_simple_roots",
    "numerator",
    "orbit_bfs",
    "verify_loglem",
]
