"""Helpers shared by the checker nodes."""

from typing import Optional

from state import VerifyRow


def make_row(
    params: str,
    expected: object,
    observed: object,
    ok: bool,
    note: Optional[str] = None,
    fatal: Optional[bool] = None,
) -> VerifyRow:
    """A VerifyRow; a failed instance is fatal unless told otherwise."""
    return VerifyRow(
        params=params,
        expected=str(expected),
        observed=str(observed),
        ok=ok,
        fatal=(not ok) if fatal is None else fatal,
        note=note,
    )


def threshold(rows: list[VerifyRow]) -> Optional[int]:
    """Index of the first row from which every later row holds, or None."""
    start = None
    for i in range(len(rows) - 1, -1, -1):
        if not rows[i].ok:
            break
        start = i
    return start


def mark_asymptotic(rows: list[VerifyRow], label: str, values: list[int]) -> tuple[list[VerifyRow], str]:
    """
    Only the largest tested instance of an asymptotic series can fail; earlier
    misses become notes. Returns the adjusted rows and a threshold note.
    """
    if not rows:
        return rows, f"{label}: nothing tested"
    adjusted = [row.model_copy(update={"fatal": False}) for row in rows[:-1]]
    adjusted.append(rows[-1].model_copy(update={"fatal": not rows[-1].ok}))
    start = threshold(rows)
    if start is None:
        note = f"{label}: largest tested n={values[-1]} disagrees"
    else:
        note = f"{label}: holds for all tested n >= {values[start]}"
    return adjusted, note


def budget_row(params: str, error: Exception) -> VerifyRow:
    """An instance the oracle could not finish: marked, never fatal."""
    return make_row(params, "-", "budget exceeded", False, str(error), fatal=False)
