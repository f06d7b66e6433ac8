"""
Linear forest specifications F = P_{k_1} ∪ ... ∪ P_{k_l}, k_1 >= ... >= k_l >= 2.
"""

import re
from dataclasses import dataclass
from typing import Iterable

from errors import SpecSyntaxError

_PATH_TOKEN = re.compile(r"^[Pp]?(\d+)$")


@dataclass(frozen=True)
class LinearForestSpec:
    """Path orders, stored sorted non-increasing."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(k) for k in self.parts), reverse=True))
        if not parts:
            raise SpecSyntaxError("a linear forest needs at least one path")
        if parts[-1] < 2:
            raise SpecSyntaxError(f"path orders must be >= 2, got {parts[-1]}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "LinearForestSpec":
        return cls(tuple(parts))

    @property
    def ell(self) -> int:
        return len(self.parts)

    @property
    def p(self) -> int:
        """sum floor(k_i / 2) - 1"""
        return sum(k // 2 for k in self.parts) - 1

    @property
    def all_odd(self) -> bool:
        return all(k % 2 == 1 for k in self.parts)

    @property
    def k_min(self) -> int:
        return self.parts[-1]

    @property
    def total_order(self) -> int:
        return sum(self.parts)

    @property
    def half_orders(self) -> int:
        """Vertices every embedding needs on each side of a bipartite host."""
        return sum(k // 2 for k in self.parts)

    def __str__(self) -> str:
        return "+".join(f"P{k}" for k in self.parts)


def parse_spec(text: str) -> LinearForestSpec:
    """
    Parse "5,3,2" or "P5+P3+P2" (order irrelevant, whitespace ignored).

    Raises:
        SpecSyntaxError: empty spec, bad token, or a part below 2
    """
    cleaned = text.strip()
    if not cleaned:
        raise SpecSyntaxError("empty linear forest spec")
    tokens: Iterable[str] = re.split(r"[,+\s]+", cleaned)
    parts = []
    for token in tokens:
        if not token:
            continue
        match = _PATH_TOKEN.match(token)
        if not match:
            raise SpecSyntaxError(f"cannot parse path order {token!r} in {text!r}")
        parts.append(int(match.group(1)))
    return LinearForestSpec(tuple(parts))
