"""Exact mixed Hodge polynomials of moduli of G-Higgs bundles and G-character varieties over abelian varieties."""

from .kernels import BACKEND
from .poly import MultiPoly, exact_div, specialize
from .series import YSeries
from .weyl import GroupSpec, class_table, enumerate_elements, molien_average
from .moduli import ModuliSpec, euler_moduli, mhp, mhp_character, mhp_higgs, poincare_moduli
from .plethystic import pexp, plog
from .hilbert import ResolutionSpec, partition_poincare, resolution_outputs

__version__ = "0.1.0"
