"""
Closed-form Turán numbers for paths and linear forests, with case labels.
"""

from formulas.p7_lemmas import LemmaReport, check_lemma_p7_first, check_lemma_p7_second, check_p7_lemmas
from formulas.turan import (
    FormulaResult,
    ex_forest_bipartite,
    ex_forest_general,
    ex_path_bipartite,
    ex_path_bipartite_oriented,
    ex_path_general,
    ex_path_upper,
    f_helper,
    p_value,
    spectral_bound,
    spectral_least_bound,
)

__all__ = [
    "FormulaResult",
    "LemmaReport",
    "check_lemma_p7_first",
    "check_lemma_p7_second",
    "check_p7_lemmas",
    "ex_forest_bipartite",
    "ex_forest_general",
    "ex_path_bipartite",
    "ex_path_bipartite_oriented",
    "ex_path_general",
    "ex_path_upper",
    "f_helper",
    "p_value",
    "spectral_bound",
    "spectral_least_bound",
]
