"""Eccentricity matrices of trees: spectra, closed forms, quotients and exhaustive search."""

from .errors import EccError, NoConvergence
from .families import FamilySpec, build, parse_family
from .graph import Graph, eccentricity_matrix, from_edge_list, parse_edge_list
from .spectral import ecc_energy, ecc_spectrum, inertia_of, xi_k

__all__ = [
    "EccError", "NoConvergence", "FamilySpec", "build", "parse_family", "Graph",
    "eccentricity_matrix", "from_edge_list", "parse_edge_list", "ecc_energy", "ecc_spectrum",
    "inertia_of", "xi_k",
]
__version__ = "0.1.0"
