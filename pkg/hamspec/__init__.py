# hamspec/__init__.py

"""
hamspec - verification toolkit for spectral conditions on Hamilton paths and cycles.

Main entry point for the hamspec package.
"""

from .config import get_settings
from .graphs import graph6_decode, graph6_encode, is_isomorphic, parse_family, realize, realize_graph
from .hamilton import circumference, has_hamilton_cycle, has_hamilton_path
from .models import FamilySpec, FamilyTag, Graph, SpectralEstimate, VerificationReport
from .spectral import compare_to_threshold, cubic_largest_root, spectral_radius
from .verify import CHECKS, run_check, run_suite

__version__ = "0.1.0"
__author__ = "hamspec developers"
__description__ = "Certified spectral radii, exact Hamiltonicity and exhaustive checks of spectral Hamiltonicity conditions"

__all__ = [
    # Graphs and families
    "Graph",
    "FamilySpec",
    "FamilyTag",
    "parse_family",
    "realize",
    "realize_graph",
    "graph6_encode",
    "graph6_decode",
    "is_isomorphic",
    # Spectral
    "SpectralEstimate",
    "spectral_radius",
    "cubic_largest_root",
    "compare_to_threshold",
    # Hamiltonicity
    "has_hamilton_path",
    "has_hamilton_cycle",
    "circumference",
    # Verification
    "VerificationReport",
    "CHECKS",
    "run_check",
    "run_suite",
    # Configuration
    "get_settings",
]
