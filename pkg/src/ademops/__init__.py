"""Steenrod squares and Adem secondary operations on finite simplicial sets."""
from .algebra import Cochain, Z, Z2
from .complex import SimplicialSet, product_complex, simplex_boundary, standard_simplex
from .cup import cup_i, sq_cochain
from .adem import adem_E, adem_E_cochain, adem_relation_residual, e3_normalized
from .reduce import contraction, homology, psi, sq2_matrix

__version__ = "0.1.0"

__all__ = [
    "Cochain", "Z", "Z2", "SimplicialSet", "product_complex", "simplex_boundary",
    "standard_simplex", "cup_i", "sq_cochain", "adem_E", "adem_E_cochain",
    "adem_relation_residual", "e3_normalized", "contraction", "homology", "psi", "sq2_matrix",
]
