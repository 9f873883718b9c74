"""Exact computation of equivariant indices and non-tidiness certificates.

Two families are covered: real Stiefel manifolds ``V(l, k)`` with the
antipodal C_2-action, and the tower ``X(k)`` of iterated S^3-bundles with a
free C_p-action.
"""
from ._backend import BACKEND
from .errors import EquindexError, InternalConsistencyError, ParameterError, StructuralError
from .modp_arith import DigitVector, binom_mod_p, minimal_s, to_digits

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DigitVector",
    "EquindexError",
    "InternalConsistencyError",
    "ParameterError",
    "StructuralError",
    "binom_mod_p",
    "minimal_s",
    "to_digits",
]
