"""
Canonical keys for small graphs.

Bipartite keys are invariant under permutations within X and within Y, and under
side swap when m == n (or when asked). General keys are invariant under the full
symmetric group. Both are brute-force minimisations with invariant-based pruning;
they are meant for oracle-scale graphs only.
"""

from itertools import permutations, product

from errors import CanonicalSizeError
from graphs.bipartite import BipartiteGraph
from graphs.general import GeneralGraph

# Keys permute the shorter side only, so its size bounds the cost.
MAX_BIPARTITE_SHORT_SIDE = 6
MAX_BIPARTITE_ORDER = 64
MAX_GENERAL_ORDER = 9


def _distinct_orderings(values: list[int]) -> list[tuple[int, ...]]:
    return sorted(set(permutations(values)))


def _min_encoding(rows: tuple[int, ...], width: int) -> tuple[int, ...]:
    """
    Minimal column-sorted encoding over row orderings.

    Rows are grouped by popcount (ascending); within a group every distinct ordering
    is tried. For a fixed row order the lexicographically least row-major matrix is
    obtained by sorting the columns, so only row orders need enumerating.
    """
    groups: dict[int, list[int]] = {}
    for row in rows:
        groups.setdefault(row.bit_count(), []).append(row)
    group_orders = [_distinct_orderings(groups[d]) for d in sorted(groups)]

    best = None
    for choice in product(*group_orders):
        ordered = [row for block in choice for row in block]
        height = len(ordered)
        cols = []
        for j in range(width):
            col = 0
            for i, row in enumerate(ordered):
                if row >> j & 1:
                    col |= 1 << (height - 1 - i)
            cols.append(col)
        candidate = tuple(sorted(cols))
        if best is None or candidate < best:
            best = candidate
    return best if best is not None else ()


def _side_key(g: BipartiteGraph) -> bytes:
    # Permute the smaller side; the other side is absorbed by column sorting.
    if g.m <= g.n:
        enc = _min_encoding(g.rows, g.n)
        tag = 0
    else:
        t = g.transpose()
        enc = _min_encoding(t.rows, t.n)
        tag = 1
    width = max(1, (max(g.m, g.n) + 7) // 8)
    body = b"".join(v.to_bytes(width, "big") for v in enc)
    return bytes([g.m, g.n, tag]) + body


def canonical_key(g: BipartiteGraph, swap: bool | None = None) -> bytes:
    """
    Canonical key of a bipartite graph.

    Args:
        g: graph with min(m, n) <= 6 and m + n <= 64
        swap: also identify graphs related by exchanging X and Y; defaults to m == n,
            so the 16 graphs on (2, 2) fall into 6 classes, or 7 with swap=False
            (the two-edge star centred in X is then distinct from the one centred in Y)

    Raises:
        CanonicalSizeError: graph larger than the supported shape
    """
    if min(g.m, g.n) > MAX_BIPARTITE_SHORT_SIDE or g.order > MAX_BIPARTITE_ORDER:
        raise CanonicalSizeError(
            f"canonical keys need min(m,n) <= {MAX_BIPARTITE_SHORT_SIDE} and m+n <= {MAX_BIPARTITE_ORDER}, "
            f"got ({g.m}, {g.n})"
        )
    if swap is None:
        swap = g.m == g.n
    key = _side_key(g)
    if swap and g.m == g.n:
        key = min(key, _side_key(g.transpose()))
    return key


def _refine(g: GeneralGraph) -> list[int]:
    """Colour refinement starting from degrees; colours are ranks of signatures."""
    colors = [g.degree(v) for v in range(g.order)]
    while True:
        sigs = []
        for v in range(g.order):
            nbrs = sorted(colors[u] for u in range(g.order) if g.masks[v] >> u & 1)
            sigs.append((colors[v], tuple(nbrs)))
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(sigs)))}
        refined = [ranking[s] for s in sigs]
        if len(set(refined)) == len(set(colors)):
            return refined
        colors = refined


def canonical_key_general(g: GeneralGraph) -> bytes:
    """
    Canonical key of a simple graph under the full symmetric group.

    Vertices are placed colour class by colour class; at each position the placed
    vertex's adjacency to earlier positions forms the next code word and branches
    whose code prefix already exceeds the best are cut. Twins (same neighbourhood up
    to each other) are interchangeable, so only the first remaining twin is tried.

    Raises:
        CanonicalSizeError: order above the supported limit
    """
    n = g.order
    if n > MAX_GENERAL_ORDER:
        raise CanonicalSizeError(f"general canonical keys need order <= {MAX_GENERAL_ORDER}, got {n}")
    if n == 0:
        return b"\x00"

    colors = _refine(g)
    slots = sorted(range(n), key=lambda v: colors[v])
    slot_colors = [colors[v] for v in slots]
    masks = g.masks

    best: list[list[int] | None] = [None]
    placed: list[int] = []
    code: list[int] = []

    def twins(u: int, v: int) -> bool:
        return (masks[u] & ~(1 << v)) == (masks[v] & ~(1 << u))

    def search(pos: int, remaining: int) -> None:
        if pos == n:
            if best[0] is None or code < best[0]:
                best[0] = list(code)
            return
        tried: list[int] = []
        for v in range(n):
            if not remaining >> v & 1 or colors[v] != slot_colors[pos]:
                continue
            if any(twins(u, v) for u in tried):
                continue
            tried.append(v)
            word = 0
            for i, u in enumerate(placed):
                if masks[v] >> u & 1:
                    word |= 1 << (pos - 1 - i)
            code.append(word)
            current = best[0]
            if current is None or code <= current[: len(code)]:
                placed.append(v)
                search(pos + 1, remaining & ~(1 << v))
                placed.pop()
            code.pop()

    search(0, (1 << n) - 1)
    width = max(1, (n + 7) // 8)
    body = b"".join(w.to_bytes(width, "big") for w in best[0])
    return bytes([n]) + bytes(slot_colors) + body


def key_hex(key: bytes) -> str:
    return key.hex()
