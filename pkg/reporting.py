"""
Text and JSON rendering for CLI output.

Tables go through pandas; every float is printed with exactly 9 decimals so output
is byte-stable across runs.
"""

import json
from typing import Any, Iterable

import pandas as pd
from pydantic import BaseModel

FLOAT_DIGITS = 9


def fmt_float(value: float) -> str:
    return f"{value:.{FLOAT_DIGITS}f}"


def _round_floats(value: Any) -> Any:
    if isinstance(value, float):
        return round(value, FLOAT_DIGITS)
    if isinstance(value, dict):
        return {k: _round_floats(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round_floats(v) for v in value]
    return value


def to_json(model: BaseModel) -> str:
    """model_dump(mode="json") in declaration order, floats rounded to 9 decimals."""
    return json.dumps(_round_floats(model.model_dump(mode="json")), ensure_ascii=False, indent=2)


def _cell(value: Any) -> Any:
    if isinstance(value, float):
        return fmt_float(value)
    if isinstance(value, (list, tuple)):
        return ", ".join(str(_cell(v)) for v in value) if value else "-"
    if value is None:
        return "-"
    return value


def table(records: Iterable[dict[str, Any]]) -> str:
    """Left-aligned table of homogeneous records."""
    rows = [{k: _cell(v) for k, v in record.items()} for record in records]
    if not rows:
        return "(no rows)"
    frame = pd.DataFrame(rows)
    return frame.to_string(index=False, justify="left")


def fields(model: BaseModel, skip: Iterable[str] = ()) -> str:
    """One 'name: value' line per model field, in declaration order."""
    skipped = set(skip)
    lines = []
    for name in type(model).model_fields:
        if name in skipped:
            continue
        lines.append(f"{name}: {_cell(getattr(model, name))}")
    return "\n".join(lines)