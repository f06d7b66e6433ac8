"""
Spectral radius and least adjacency eigenvalue by shifted power iteration.
"""

from spectral.power import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    NikiforovComparison,
    SpectralBoundCheck,
    SpectralResult,
    lambda_complete_bipartite,
    least_eigenvalue,
    nikiforov_comparison,
    spectral_bound_check,
    spectral_radius,
)

__all__ = [
    "DEFAULT_MAX_ITER",
    "DEFAULT_TOL",
    "NikiforovComparison",
    "SpectralBoundCheck",
    "SpectralResult",
    "lambda_complete_bipartite",
    "least_eigenvalue",
    "nikiforov_comparison",
    "spectral_bound_check",
    "spectral_radius",
]
