"""Exact computation of the classifying element Delta for Fermat curves.

Delta lives in the exterior square of H_1(U), U the affine Fermat curve of
degree n, and its image rho in the exterior square of H_1(X) generates the
image of the dual cup product.
"""

from .delta import delta, delta_formula, epsilon_coeff, rho, verify_invariance
from .wedge import WedgeElt, format_wedge, wedge_kernel
from .words import SignedWord, degree2_image, peel_reduction, s_star_word, star_word

__all__ = [
    "SignedWord", "WedgeElt", "degree2_image", "delta", "delta_formula",
    "epsilon_coeff", "format_wedge", "peel_reduction", "rho", "s_star_word",
    "star_word", "verify_invariance", "wedge_kernel",
]
