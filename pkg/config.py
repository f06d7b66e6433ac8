"""
Runtime configuration.

Budgets and tolerances come from (in increasing priority) built-in defaults, the
environment (main.py loads .env once at start-up) and CLI flags.
"""

import logging
import os
import sys
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from errors import ConfigError


# Environment variable -> OracleBudget field
ENV_VARS = {
    "FOREST_TURAN_BUDGET": "max_cells",
    "FOREST_TURAN_MAX_NODES": "max_nodes",
    "FOREST_TURAN_EMBED_STEPS": "embed_steps",
    "FOREST_TURAN_TOL": "spectral_tol",
    "FOREST_TURAN_WORKERS": "workers",
}

LOG_FORMAT = "[%(name)s] %(message)s"


class OracleBudget(BaseModel):
    """Limits for the exhaustive oracle and the searches it drives."""

    model_config = ConfigDict(frozen=True)

    max_cells: int = Field(default=30, ge=1, description="Largest m*n accepted by the bipartite oracle")
    max_general_order: int = Field(default=8, ge=1, description="Largest order accepted by the general oracle")
    max_spectral_bipartite_order: int = Field(default=8, ge=1, description="Largest order for bipartite spectral search")
    max_spectral_general_order: int = Field(default=7, ge=1, description="Largest order for general spectral search")
    max_nodes: int = Field(default=50_000_000, ge=1, description="Search-tree nodes per oracle call, summed over all prefix tasks")
    embed_steps: int = Field(default=100_000_000, ge=1, description="Path-extension budget per containment test")
    spectral_tol: float = Field(default=1e-9, gt=0, description="Power-iteration residual tolerance")
    workers: int = Field(default=1, ge=1, description="Worker processes for oracle searches")


def _parse_env(name: str, raw: str, kind: type):
    try:
        return kind(raw)
    except ValueError as e:
        raise ConfigError(f"{name}={raw!r} is not a valid {kind.__name__}") from e


def get_budget(**overrides: Optional[float]) -> OracleBudget:
    """
    Build the effective budget.

    Args:
        **overrides: OracleBudget fields set from CLI flags; None values are ignored

    Returns:
        OracleBudget with defaults < environment < overrides
    """
    values: dict = {}
    for env_name, field_name in ENV_VARS.items():
        raw = os.getenv(env_name)
        if raw is None or raw.strip() == "":
            continue
        kind = OracleBudget.model_fields[field_name].annotation
        values[field_name] = _parse_env(env_name, raw.strip(), kind)

    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return OracleBudget(**values)
    except ValueError as e:
        raise ConfigError(f"invalid budget settings: {e}") from e


def configure_logging(verbosity: int = 0) -> None:
    """Route component loggers to stderr with the [Tag] prefix."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
