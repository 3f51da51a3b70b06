"""Kernel selection: the compiled extension when it was built, else pure Python."""

try:
    from ._ckernels import BACKEND, add_terms, mul_terms
except ImportError:  # extension not built
    from ._pykernels import BACKEND, add_terms, mul_terms

__all__ = ["BACKEND", "add_terms", "mul_terms"]
