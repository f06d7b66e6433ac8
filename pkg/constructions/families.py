"""
Constructors for every named extremal family.

All constructors are deterministic: vertex numbering is fixed, so canonical keys and
serialized output are reproducible byte for byte. Bipartite constructors return
BipartiteGraph; joins and matchings on a single vertex set return GeneralGraph.
"""

from typing import Callable, Literal, Union

from pydantic import BaseModel, Field

from errors import DomainError, UnknownFamilyError
from graphs.bipartite import BipartiteGraph, build_bipartite, disjoint_union
from graphs.general import GeneralGraph, build_general, disjoint_union_general, join

FamilyName = Literal[
    "complete_bipartite",
    "empty_bipartite",
    "kpn_plus_isolated",
    "double_block_same_side",
    "two_block",
    "z_graph",
    "z_graph_plus_isolated",
    "pendant_graph",
    "bipartite_matching",
    "c4_double_star",
    "matching_graph",
    "nikiforov_graph",
]


class FamilyDescriptor(BaseModel):
    """A constructor name plus the integer parameters it is called with."""

    family: FamilyName = Field(description="Constructor name")
    params: list[int] = Field(description="Positional constructor arguments")

    def __str__(self) -> str:
        return f"{self.family}({', '.join(str(v) for v in self.params)})"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    """K_{a,b}"""
    _require(a >= 0 and b >= 0, f"K_{{a,b}} needs a, b >= 0, got ({a}, {b})")
    full = (1 << b) - 1
    return BipartiteGraph(a, b, (full,) * a)


def empty_bipartite(m: int, n: int) -> BipartiteGraph:
    """Edgeless (m, n) bipartite graph."""
    _require(m >= 0 and n >= 0, f"sides must be >= 0, got ({m}, {n})")
    return BipartiteGraph.empty(m, n)


def kpn_plus_isolated(p: int, n: int, q: int) -> BipartiteGraph:
    """K_{p,n} ∪ K̄_q with the q isolated vertices on X."""
    _require(p >= 1 and n >= 1 and q >= 0, f"need p, n >= 1 and q >= 0, got ({p}, {n}, {q})")
    return disjoint_union(complete_bipartite(p, n), empty_bipartite(q, 0))


def double_block_same_side(p: int, i: int, n: int) -> BipartiteGraph:
    """K_{p,i} ∪ K_{p,n-i}: both blocks use p X-vertices, Y split into i and n-i."""
    _require(p >= 0 and 0 <= i <= n, f"need 0 <= i <= n, got i={i}, n={n}")
    return disjoint_union(complete_bipartite(p, i), complete_bipartite(p, n - i))


def two_block(p: int, n: int, m: int, b: int) -> BipartiteGraph:
    """K_{p,n-b} ∪ K_{m-p,b}; edge count f(m, n; p, b)."""
    _require(b >= 0 and m >= p >= 0 and n >= b, f"need b >= 0, m >= p >= 0, n >= b; got p={p} n={n} m={m} b={b}")
    return disjoint_union(complete_bipartite(p, n - b), complete_bipartite(m - p, b))


def z_graph(m: int, n: int, k: int) -> BipartiteGraph:
    """
    Z^k_{m,n}: K_{k,n} on x_0..x_{k-1} and all of Y, plus x_k..x_{m-1} each joined to y_0.

    The star K_{1,m-k} is glued onto y_0, which gives kn + (m - k) edges.
    """
    _require(n >= 1, f"Z^k_{{m,n}} needs n >= 1, got {n}")
    _require(1 <= k <= m, f"Z^k_{{m,n}} needs 1 <= k <= m, got k={k}, m={m}")
    full = (1 << n) - 1
    return BipartiteGraph(m, n, (full,) * k + (1,) * (m - k))


def z_graph_plus_isolated(p: int, n: int, q: int) -> BipartiteGraph:
    """Z^p_{p+1,n} ∪ K̄_q with the q isolated vertices on X."""
    _require(q >= 0, f"q must be >= 0, got {q}")
    return disjoint_union(z_graph(p + 1, n, p), empty_bipartite(q, 0))


def pendant_graph(p: int, n: int, q: int) -> BipartiteGraph:
    """K_{p,n} plus q new X-vertices matched to y_0..y_{q-1}."""
    _require(p >= 0 and n >= 0, f"need p, n >= 0, got ({p}, {n})")
    _require(0 <= q <= n, f"pendant_graph needs 0 <= q <= n, got q={q}, n={n}")
    full = (1 << n) - 1
    return BipartiteGraph(p + q, n, (full,) * p + tuple(1 << j for j in range(q)))


def bipartite_matching(m: int, n: int) -> BipartiteGraph:
    """m independent edges x_i y_i plus n - m isolated Y-vertices."""
    _require(0 <= m <= n, f"bipartite_matching needs 0 <= m <= n, got ({m}, {n})")
    return build_bipartite(m, n, [(i, i) for i in range(m)])


def c4_double_star(c: int, m: int, n: int) -> BipartiteGraph:
    """
    c disjoint copies of C_4 = K_{2,2} plus the double star Z^1 on the remaining
    (m - 2c, n - 2c) vertices (nothing when both are zero).
    """
    rest_m, rest_n = m - 2 * c, n - 2 * c
    _require(c >= 0 and rest_m >= 0 and rest_n >= 0, f"{c} copies of C_4 do not fit in ({m}, {n})")
    _require((rest_m == 0) == (rest_n == 0), f"leftover sides ({rest_m}, {rest_n}) cannot carry a double star")
    g = empty_bipartite(0, 0)
    for _ in range(c):
        g = disjoint_union(g, complete_bipartite(2, 2))
    if rest_m:
        g = disjoint_union(g, z_graph(rest_m, rest_n, 1))
    return g


def matching_graph(t: int) -> GeneralGraph:
    """M_t: floor(t/2) disjoint edges on t vertices (one isolated vertex when t is odd)."""
    _require(t >= 0, f"t must be >= 0, got {t}")
    return build_general(t, [(2 * i, 2 * i + 1) for i in range(t // 2)])


def nikiforov_graph(p_prime: int, n: int, odd: bool) -> GeneralGraph:
    """K_{p'} ∇ K̄_{n-p'} (even case) or K_{p'} ∇ (K̄_{n-p'-2} ∪ K_2) (odd case)."""
    _require(p_prime >= 0 and n >= p_prime + 2, f"need n >= p'+2, got p'={p_prime}, n={n}")
    clique = GeneralGraph.complete(p_prime)
    if odd:
        rest = disjoint_union_general(GeneralGraph.empty(n - p_prime - 2), GeneralGraph.complete(2))
    else:
        rest = GeneralGraph.empty(n - p_prime)
    return join(clique, rest)


_CONSTRUCTORS: dict[str, Callable[..., Union[BipartiteGraph, GeneralGraph]]] = {
    "complete_bipartite": complete_bipartite,
    "empty_bipartite": empty_bipartite,
    "kpn_plus_isolated": kpn_plus_isolated,
    "double_block_same_side": double_block_same_side,
    "two_block": two_block,
    "z_graph": z_graph,
    "z_graph_plus_isolated": z_graph_plus_isolated,
    "pendant_graph": pendant_graph,
    "bipartite_matching": bipartite_matching,
    "c4_double_star": c4_double_star,
    "matching_graph": matching_graph,
    "nikiforov_graph": lambda p_prime, n, odd: nikiforov_graph(p_prime, n, bool(odd)),
}

# Short CLI names
FAMILY_ALIASES = {
    "K": "complete_bipartite",
    "empty": "empty_bipartite",
    "kpn": "kpn_plus_isolated",
    "double-block": "double_block_same_side",
    "two-block": "two_block",
    "z": "z_graph",
    "z-isolated": "z_graph_plus_isolated",
    "pendant": "pendant_graph",
    "bmatching": "bipartite_matching",
    "c4-double-star": "c4_double_star",
    "M": "matching_graph",
    "nikiforov": "nikiforov_graph",
}


def resolve_family(name: str) -> str:
    """Map a CLI alias or full name to the constructor name."""
    full = FAMILY_ALIASES.get(name, name)
    if full not in _CONSTRUCTORS:
        known = ", ".join(sorted(set(FAMILY_ALIASES) | set(_CONSTRUCTORS)))
        raise UnknownFamilyError(f"unknown family {name!r}; known: {known}")
    return full


def build_family(desc: Union[FamilyDescriptor, tuple[str, list[int]]]) -> Union[BipartiteGraph, GeneralGraph]:
    """
    Build the graph a descriptor names.

    Raises:
        UnknownFamilyError: family not registered
        DomainError: parameters violate the constructor's preconditions
    """
    if isinstance(desc, FamilyDescriptor):
        name, params = desc.family, desc.params
    else:
        name, params = resolve_family(desc[0]), list(desc[1])
    constructor = _CONSTRUCTORS.get(name)
    if constructor is None:
        raise UnknownFamilyError(f"unknown family {name!r}")
    try:
        return constructor(*params)
    except TypeError as e:
        raise DomainError(f"{name} called with wrong number of parameters {params}: {e}") from e
