"""
LangGraph workflow for `verify`.

planner -> one checker (chosen by theorem id) -> reporter -> END
"""

import logging
from typing import Any, Literal, Optional

from langgraph.graph import END, StateGraph

from config import OracleBudget, get_budget
from nodes import (
    construction_checker,
    forest_checker,
    general_checker,
    lemma_checker,
    path_checker,
    planner,
    reporter,
    spectral_checker,
)
from state import VerifyReport, VerifyState

logger = logging.getLogger("Workflow")

CheckerNode = Literal[
    "path_checker",
    "forest_checker",
    "general_checker",
    "lemma_checker",
    "spectral_checker",
    "construction_checker",
]

_CHECKER_NODES = {
    "path_checker": path_checker,
    "forest_checker": forest_checker,
    "general_checker": general_checker,
    "lemma_checker": lemma_checker,
    "spectral_checker": spectral_checker,
    "construction_checker": construction_checker,
}


def route_after_planner(state: VerifyState) -> CheckerNode:
    """
    Route to the checker the planner picked.

    Args:
        state: VerifyState with checker set by the planner

    Returns:
        Name of the checker node
    """
    checker = state.get("checker")
    logger.info("routing %s to %s", state["theorem"], checker)
    return checker


def build_workflow():
    """
    Build and compile the verify StateGraph.

    Returns:
        Compiled graph ready for invoke()
    """
    workflow = StateGraph(VerifyState)

    workflow.add_node("planner", planner)
    for name, node in _CHECKER_NODES.items():
        workflow.add_node(name, node)
    workflow.add_node("reporter", reporter)

    workflow.set_entry_point("planner")
    workflow.add_conditional_edges("planner", route_after_planner, {name: name for name in _CHECKER_NODES})
    for name in _CHECKER_NODES:
        workflow.add_edge(name, "reporter")
    workflow.add_edge("reporter", END)

    app = workflow.compile()
    logger.debug("verify workflow compiled: planner -> [%s] -> reporter", " | ".join(_CHECKER_NODES))
    return app


# Compiled graph instance
verify_app = build_workflow()


def run_verify(
    theorem: str,
    overrides: Optional[dict[str, Any]] = None,
    budget: Optional[OracleBudget] = None,
    workers: Optional[int] = None,
    progress: bool = False,
) -> VerifyReport:
    """
    Verify one theorem id over its grid.

    Raises:
        DomainError: unknown theorem id
        ForestTuranError: anything a checker raises (budget, domain, ...)
    """
    budget = budget or get_budget()
    initial_state: VerifyState = {
        "theorem": theorem,
        "overrides": overrides or {},
        "grid": {},
        "budget": budget,
        "workers": workers or budget.workers,
        "progress": progress,
        "checker": None,
        "rows": [],
        "notes": [],
        "report": None,
    }
    final_state = verify_app.invoke(initial_state)
    return final_state["report"]
