"""
Planner node

Responsibilities:
- Resolve the theorem id to a checker node
- Load the default parameter grid from data/verify_grids.json
- Merge CLI overrides over the defaults
"""

import json
import logging
from pathlib import Path
from typing import Any

from errors import DomainError
from state import VerifyState

logger = logging.getLogger("Planner")

# Get the project root directory (parent of nodes/)
PROJECT_ROOT = Path(__file__).parent.parent
DATA_DIR = PROJECT_ROOT / "data"
GRIDS_JSON = DATA_DIR / "verify_grids.json"

# Theorem id -> checker node
CHECKERS = {
    "thm1.1": "general_checker",
    "thm1.2": "path_checker",
    "thm1.4": "general_checker",
    "thm1.5": "forest_checker",
    "thm1.6": "spectral_checker",
    "thm1.7": "spectral_checker",
    "cor1.8": "spectral_checker",
    "lemma2.1": "lemma_checker",
    "lemma2.2": "lemma_checker",
    "constructions": "construction_checker",
}


def load_grids(path: Path = GRIDS_JSON) -> dict[str, dict[str, Any]]:
    """Default grids keyed by theorem id."""
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def planner(state: VerifyState) -> VerifyState:
    """
    Planner node.

    Args:
        state: VerifyState with theorem and overrides

    Returns:
        Updated state with grid and checker set

    Raises:
        DomainError: unknown theorem id
    """
    theorem = state["theorem"].lower()
    if theorem not in CHECKERS:
        raise DomainError(f"unknown theorem id {state['theorem']!r}; known: {', '.join(CHECKERS)}")

    grid = dict(load_grids().get(theorem, {}))
    overrides = {k: v for k, v in (state.get("overrides") or {}).items() if v is not None}
    grid.update(overrides)

    checker = CHECKERS[theorem]
    logger.info("%s -> %s with grid %s", theorem, checker, grid)
    return {**state, "theorem": theorem, "grid": grid, "checker": checker, "rows": [], "notes": []}
