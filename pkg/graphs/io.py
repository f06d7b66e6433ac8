"""
Graph serialization: graph6 (via networkx), the "m n" bipartite sidecar header,
1-indexed edge lists and JSON.

Bipartite graphs serialize their underlying simple graph with X vertices first and
then Y; the sidecar line carries the side sizes so the bipartition survives.
"""

import re
from typing import Union

import networkx as nx

from errors import Graph6ParseError, GraphConstructionError
from graphs.bipartite import BipartiteGraph, build_bipartite
from graphs.general import GeneralGraph, build_general

AnyGraph = Union[BipartiteGraph, GeneralGraph]

GRAPH6_HEADER = b">>graph6<<"
_SIDECAR = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")
_BIP_LABEL = re.compile(r"^([xXyY])(\d+)$")


def _as_general(g: AnyGraph) -> GeneralGraph:
    return g.to_general() if isinstance(g, BipartiteGraph) else g


def to_graph6(g: AnyGraph) -> bytes:
    """Standard graph6 bytes (no header, no trailing newline)."""
    nx_graph = _as_general(g).to_networkx()
    return nx.to_graph6_bytes(nx_graph, header=False).rstrip(b"\n")


def _check_graph6(data: bytes) -> None:
    """Validate characters and length so errors can point at a byte offset."""
    if not data:
        raise Graph6ParseError("empty graph6 string", 0)
    for offset, byte in enumerate(data):
        if byte < 63 or byte > 126:
            raise Graph6ParseError(f"invalid graph6 character {chr(byte)!r}", offset)
    if data[0] != 126:
        order, start = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6ParseError("truncated 36-bit order field", len(data))
        order = 0
        for byte in data[2:8]:
            order = (order << 6) | (byte - 63)
        start = 8
    else:
        if len(data) < 4:
            raise Graph6ParseError("truncated 18-bit order field", len(data))
        order = 0
        for byte in data[1:4]:
            order = (order << 6) | (byte - 63)
        start = 4
    expected = (order * (order - 1) // 2 + 5) // 6
    actual = len(data) - start
    if actual < expected:
        raise Graph6ParseError(f"expected {expected} adjacency bytes for order {order}, got {actual}", len(data))
    if actual > expected:
        raise Graph6ParseError(f"trailing bytes after order-{order} adjacency data", start + expected)


def from_graph6(s: Union[bytes, str]) -> GeneralGraph:
    """
    Decode one graph6 string.

    Raises:
        Graph6ParseError: malformed input, with the offending byte offset
    """
    data = s.encode("ascii", errors="replace") if isinstance(s, str) else bytes(s)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    _check_graph6(data)
    try:
        nx_graph = nx.from_graph6_bytes(data)
    except nx.NetworkXError as e:
        raise Graph6ParseError(str(e), 0) from e
    order = nx_graph.number_of_nodes()
    return build_general(order, nx_graph.edges())


def bipartite_from_general(g: GeneralGraph, m: int, n: int) -> BipartiteGraph:
    """Reinterpret a graph whose first m vertices are X and last n are Y."""
    if g.order != m + n:
        raise GraphConstructionError(f"sidecar says {m}+{n} vertices but graph has {g.order}")
    edges = []
    for u, v in g.edges():
        if (u < m) == (v < m):
            raise GraphConstructionError(f"edge ({u}, {v}) lies inside one side of the ({m}, {n}) bipartition")
        edges.append((u, v - m))
    return build_bipartite(m, n, edges)


def write_graph6(g: AnyGraph) -> bytes:
    """graph6 line, preceded by the "m n" sidecar line for bipartite graphs."""
    body = to_graph6(g) + b"\n"
    if isinstance(g, BipartiteGraph):
        return f"{g.m} {g.n}\n".encode("ascii") + body
    return body


def read_graph6(text: Union[bytes, str]) -> AnyGraph:
    """Inverse of write_graph6: an optional "m n" line followed by one graph6 line."""
    raw = text.decode("ascii", errors="replace") if isinstance(text, bytes) else text
    lines = [line for line in raw.splitlines() if line.strip()]
    if not lines:
        raise Graph6ParseError("empty graph6 string", 0)
    header = _SIDECAR.match(lines[0])
    if header:
        if len(lines) < 2:
            raise Graph6ParseError("sidecar header without a graph6 line", len(raw))
        g = from_graph6(lines[1])
        return bipartite_from_general(g, int(header.group(1)), int(header.group(2)))
    return from_graph6(lines[0])


def to_edgelist(g: AnyGraph) -> str:
    """1-indexed edge list: header "m n" + "x1 y1" lines, or header "n" + "1 2" lines."""
    if isinstance(g, BipartiteGraph):
        lines = [f"{g.m} {g.n}"]
        lines += [f"x{x + 1} y{y + 1}" for x, y in g.edges()]
    else:
        lines = [f"{g.order}"]
        lines += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> AnyGraph:
    """
    Parse the format written by to_edgelist.

    Raises:
        GraphConstructionError: bad header, bad token or out-of-range vertex
    """
    lines = [line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not lines:
        raise GraphConstructionError("empty edge list")
    header = lines[0].split()
    try:
        sizes = [int(tok) for tok in header]
    except ValueError as e:
        raise GraphConstructionError(f"bad edge-list header {lines[0]!r}") from e

    if len(sizes) == 2:
        m, n = sizes
        edges = []
        for line in lines[1:]:
            tokens = line.split()
            if len(tokens) != 2:
                raise GraphConstructionError(f"bad edge line {line!r}")
            ends = {}
            for tok in tokens:
                match = _BIP_LABEL.match(tok)
                if not match:
                    raise GraphConstructionError(f"bad vertex label {tok!r}")
                ends[match.group(1).lower()] = int(match.group(2)) - 1
            if set(ends) != {"x", "y"}:
                raise GraphConstructionError(f"edge {line!r} must join an x vertex to a y vertex")
            edges.append((ends["x"], ends["y"]))
        return build_bipartite(m, n, edges)

    if len(sizes) == 1:
        edges = []
        for line in lines[1:]:
            try:
                u, v = (int(tok) - 1 for tok in line.split())
            except ValueError as e:
                raise GraphConstructionError(f"bad edge line {line!r}") from e
            edges.append((u, v))
        return build_general(sizes[0], edges)

    raise GraphConstructionError(f"bad edge-list header {lines[0]!r}")


def graph_to_json(g: AnyGraph) -> dict:
    """JSON-ready description with 1-indexed labels."""
    if isinstance(g, BipartiteGraph):
        return {
            "kind": "bipartite",
            "m": g.m,
            "n": g.n,
            "edge_count": g.edge_count,
            "edges": [[f"x{x + 1}", f"y{y + 1}"] for x, y in g.edges()],
        }
    return {
        "kind": "general",
        "order": g.order,
        "edge_count": g.edge_count,
        "edges": [[u + 1, v + 1] for u, v in g.edges()],
    }
