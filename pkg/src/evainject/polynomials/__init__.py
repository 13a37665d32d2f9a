"""Exact univariate and multivariate polynomial algebra.

core   : UniPoly / MultiPoly arithmetic, gcd and Bezout certificates,
         zero multiplicity, rational root extraction
factor : complete factorization over finite fields and over Q, and the
         (c, m, h, d) decomposition profile driving the matrix engine
sturm  : exact real root counting and strict monotonicity on the real line
"""

from .core import (
    MultiPoly,
    UniPoly,
    extended_gcd,
    gcd_poly,
    rational_roots,
    zero_multiplicity,
)
from .factor import (
    FactorProfile,
    factor_finite,
    factor_profile,
    factor_rationals,
    squarefree_decomposition,
)
from .sturm import is_strictly_monotone, sturm_real_roots

__all__ = [
    "UniPoly",
    "MultiPoly",
    "gcd_poly",
    "extended_gcd",
    "zero_multiplicity",
    "rational_roots",
    "FactorProfile",
    "factor_finite",
    "factor_rationals",
    "factor_profile",
    "squarefree_decomposition",
    "sturm_real_roots",
    "is_strictly_monotone",
]
