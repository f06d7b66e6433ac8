"""
Nodes of the verify workflow: a planner, one checker per theorem family and a reporter.
"""

from nodes.construction_checker import construction_checker
from nodes.forest_checker import forest_checker
from nodes.general_checker import general_checker
from nodes.lemma_checker import lemma_checker
from nodes.path_checker import path_checker
from nodes.planner import CHECKERS, planner
from nodes.reporter import reporter
from nodes.spectral_checker import spectral_checker

__all__ = [
    "CHECKERS",
    "construction_checker",
    "forest_checker",
    "general_checker",
    "lemma_checker",
    "path_checker",
    "planner",
    "reporter",
    "spectral_checker",
]
