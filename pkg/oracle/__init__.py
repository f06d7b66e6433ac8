"""
Desk-scale ground truth: exhaustive Turán numbers, threshold scans and spectral extrema.
"""

from oracle.brute import (
    OracleReport,
    bipartite_seeds,
    brute_ex_bipartite,
    brute_ex_general,
    descriptor_graphs,
    descriptor_keys,
    enumerate_free_graphs,
    naive_ex_bipartite,
)
from oracle.spectral_search import SpectralSearchReport, brute_spectral_max
from oracle.threshold import ScanReport, ScanRow, threshold_scan

__all__ = [
    "OracleReport",
    "ScanReport",
    "ScanRow",
    "SpectralSearchReport",
    "bipartite_seeds",
    "brute_ex_bipartite",
    "brute_ex_general",
    "brute_spectral_max",
    "descriptor_graphs",
    "descriptor_keys",
    "enumerate_free_graphs",
    "naive_ex_bipartite",
    "threshold_scan",
]
