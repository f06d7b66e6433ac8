"""
Turán numbers of paths and linear forests in general and bipartite host graphs.

Each evaluator returns a FormulaResult whose case label names the theorem branch
that produced the value, e.g. "Thm1.5(1)/p+1≤m≤2p". Bipartite evaluators require
m <= n; callers orient sides first (ex_path_bipartite_oriented does it for paths).
"""

import math
from typing import Literal

from pydantic import BaseModel, Field

from constructions.families import FamilyDescriptor
from errors import DomainError, HypothesisError, OutOfRegimeError
from graphs.forest_spec import LinearForestSpec

Validity = Literal["exact", "asymptotic", "upper_bound"]

# C_4 + double star representatives are only listed at oracle scale.
C4_FAMILY_MAX_ORDER = 12


class FormulaResult(BaseModel):
    """A closed-form extremal count and where it came from."""

    value: int = Field(ge=0, description="Extremal edge count")
    case_label: str = Field(description="Theorem branch that produced the value")
    validity: Validity = Field(description="exact, asymptotic (n >> m, p) or upper_bound")
    unique: bool = Field(default=False, description="The theorem states the extremal graph is unique")
    extremal: list[FamilyDescriptor] = Field(default_factory=list, description="Extremal families")


def _desc(family: str, *params: int) -> FamilyDescriptor:
    return FamilyDescriptor(family=family, params=list(params))


def _check_sides(m: int, n: int) -> None:
    if m < 1:
        raise DomainError(f"bipartite formulas need m >= 1, got m={m}")
    if m > n:
        raise DomainError(f"bipartite formulas need m <= n, got m={m}, n={n}; orient the sides first")


def p_value(spec: LinearForestSpec) -> int:
    """p = sum floor(k_i/2) - 1"""
    return spec.p


def f_helper(m: int, n: int, a: int, b: int) -> int:
    """f(m, n; a, b) = a(n - b) + (m - a)b"""
    return a * (n - b) + (m - a) * b


def ex_path_general(n: int, k: int) -> FormulaResult:
    """
    Erdős–Gallai bound ex(n, P_k) <= (k-2)n/2, rounded down.

    Raises:
        DomainError: k < 2 or n < k
    """
    if k < 2:
        raise DomainError(f"path order must be >= 2, got k={k}")
    if n < k:
        raise DomainError(f"the Erdős–Gallai bound needs n >= k, got n={n}, k={k}")
    return FormulaResult(value=(k - 2) * n // 2, case_label="Thm1.1", validity="upper_bound")


def _c4_representatives(m: int, n: int) -> list[FamilyDescriptor]:
    if m + n > C4_FAMILY_MAX_ORDER:
        return [_desc("c4_double_star", 0, m, n)]
    reps = []
    for c in range(min(m, n) // 2 + 1):
        if m - 2 * c >= 1 and n - 2 * c >= 1:
            reps.append(_desc("c4_double_star", c, m, n))
    return reps


def ex_path_bipartite(m: int, n: int, k: int) -> FormulaResult:
    """
    Exact ex(m, n; P_k) for 1 <= m <= n.

    Branches: mn when m <= floor(k/2)-1, then the four cases for k even, k = 3,
    k = 5 and odd k >= 7. k = 2 gives 0.

    Raises:
        DomainError: m > n, m < 1 or k < 2
    """
    _check_sides(m, n)
    if k < 2:
        raise DomainError(f"path order must be >= 2, got k={k}")
    pp = k // 2 - 1

    if k == 2:
        return FormulaResult(
            value=0, case_label="trivial/k=2", validity="exact", unique=True,
            extremal=[_desc("empty_bipartite", m, n)],
        )
    if m <= pp:
        return FormulaResult(
            value=m * n, case_label="mn", validity="exact", unique=True,
            extremal=[_desc("complete_bipartite", m, n)],
        )

    if k % 2 == 0:
        if m <= 2 * pp:
            extremal = [_desc("kpn_plus_isolated", pp, n, m - pp)]
            if m == 2 * pp:
                extremal.append(_desc("two_block", pp, n, m, pp))
            return FormulaResult(
                value=pp * n, case_label="Thm1.2(1)/p′+1≤m≤2p′", validity="exact", extremal=extremal,
            )
        return FormulaResult(
            value=pp * (m + n - 2 * pp), case_label="Thm1.2(1)/m≥2p′+1", validity="exact",
            extremal=[_desc("two_block", pp, n, m, pp)],
        )

    if k == 3:
        return FormulaResult(
            value=m, case_label="Thm1.2(2)", validity="exact", unique=True,
            extremal=[_desc("bipartite_matching", m, n)],
        )

    if k == 5:
        if m == n and n % 2 == 0:
            return FormulaResult(
                value=n + m, case_label="Thm1.2(3)/m=n even", validity="exact", unique=True,
                extremal=[_desc("c4_double_star", m // 2, m, n)],
            )
        return FormulaResult(
            value=n + m - 1, case_label="Thm1.2(3)/otherwise", validity="exact",
            extremal=_c4_representatives(m, n),
        )

    if m == n == pp + 1:
        return FormulaResult(
            value=(pp + 1) ** 2, case_label="Thm1.2(4)/m=n=p′+1", validity="exact", unique=True,
            extremal=[_desc("complete_bipartite", m, n)],
        )
    if m == n == 2 * pp + 2:
        return FormulaResult(
            value=2 * (pp + 1) ** 2, case_label="Thm1.2(4)/m=n=2p′+2", validity="exact", unique=True,
            extremal=[_desc("two_block", pp + 1, n, m, pp + 1)],
        )
    if m >= 2 * pp + 3 or n > m == 2 * pp + 2:
        return FormulaResult(
            value=pp * (m + n - 2 * pp), case_label="Thm1.2(4)/m≥2p′+3 or n>m=2p′+2", validity="exact",
            unique=True, extremal=[_desc("two_block", pp, n, m, pp)],
        )
    return FormulaResult(
        value=pp * n + m - pp, case_label="Thm1.2(4)/otherwise", validity="exact", unique=True,
        extremal=[_desc("z_graph", m, n, pp)],
    )


def ex_path_bipartite_oriented(a: int, b: int, k: int) -> FormulaResult:
    """
    ex(a, b; P_k) for sides in either order; a zero side gives 0.

    When a > b the sides are swapped and " [swapped]" is appended to the case label;
    extremal descriptors then refer to the swapped orientation.
    """
    if min(a, b) < 0:
        raise DomainError(f"side sizes must be >= 0, got ({a}, {b})")
    if min(a, b) == 0:
        return FormulaResult(value=0, case_label="empty side", validity="exact")
    if a <= b:
        return ex_path_bipartite(a, b, k)
    result = ex_path_bipartite(b, a, k)
    return result.model_copy(update={"case_label": result.case_label + " [swapped]"})


def ex_path_upper(m: int, n: int, k: int) -> int:
    """max{m, p'(m + n - 1)} with p' = floor(k/2) - 1."""
    if k < 2:
        raise DomainError(f"path order must be >= 2, got k={k}")
    pp = k // 2 - 1
    return max(m, pp * (m + n - 1))


def ex_forest_general(n: int, spec: LinearForestSpec) -> FormulaResult:
    """
    C(p,2) + p(n-p) + c for large n, c = 1 iff every part is odd.

    Raises:
        HypothesisError: every part equals 3
        DomainError: n < p + 2
    """
    if all(k == 3 for k in spec.parts):
        raise HypothesisError(f"Thm 1.4 hypothesis violated: all parts of {spec} equal 3")
    p = spec.p
    if n < p + 2:
        raise DomainError(f"need n >= p+2 = {p + 2}, got n={n}")
    c = 1 if spec.all_odd else 0
    return FormulaResult(
        value=math.comb(p, 2) + p * (n - p) + c,
        case_label=f"Thm1.4/c={c}",
        validity="asymptotic",
        unique=True,
        extremal=[_desc("nikiforov_graph", p, n, c)],
    )


def ex_forest_bipartite(m: int, n: int, spec: LinearForestSpec) -> FormulaResult:
    """
    ex(m, n; F) for p+1 <= m <= n and n large, following the five-case table.

    Single-path specs delegate to ex_path_bipartite (exact for every m).
    The odd/even and k_l classification is decided before any regime test on m.

    Raises:
        DomainError: m > n
        OutOfRegimeError: m <= p (no formula is claimed there)
    """
    if spec.ell == 1:
        return ex_path_bipartite(m, n, spec.parts[0])
    _check_sides(m, n)

    p = spec.p
    k_last = spec.k_min
    b = k_last // 2 - 1
    if m <= p:
        raise OutOfRegimeError(
            f"no formula for m={m} <= p={p}; use the oracle for the trivial regime"
        )
    two_block_value = f_helper(m, n, p, b)

    if not spec.all_odd:
        if m <= 2 * p:
            if m == 2 * p:
                extremal = [_desc("double_block_same_side", p, i, n) for i in range(min(b, n) + 1)]
            else:
                extremal = [_desc("kpn_plus_isolated", p, n, m - p)]
            return FormulaResult(
                value=p * n, case_label="Thm1.5(1)/p+1≤m≤2p", validity="asymptotic", extremal=extremal,
            )
        return FormulaResult(
            value=two_block_value, case_label="Thm1.5(1)/m≥2p+1", validity="asymptotic",
            extremal=[_desc("two_block", p, n, m, b)],
        )

    if k_last == 3:
        if all(k == 3 for k in spec.parts):
            return FormulaResult(
                value=p * n + m - p, case_label="Thm1.5(3)/all-3", validity="asymptotic", unique=True,
                extremal=[_desc("pendant_graph", p, n, m - p)],
            )
        return FormulaResult(
            value=p * n + 1, case_label="Thm1.5(3)/otherwise", validity="asymptotic", unique=True,
            extremal=[_desc("z_graph_plus_isolated", p, n, m - p - 1)],
        )

    if k_last == 5:
        return FormulaResult(
            value=p * n + m - p, case_label="Thm1.5(4)", validity="asymptotic", unique=True,
            extremal=[_desc("z_graph", m, n, p)],
        )

    if k_last == 7:
        if m <= 3 * p:
            return FormulaResult(
                value=p * n + m - p, case_label="Thm1.5(5)/p+1≤m≤3p", validity="asymptotic",
                extremal=[_desc("z_graph", m, n, p)],
            )
        return FormulaResult(
            value=two_block_value, case_label="Thm1.5(5)/m≥3p+1", validity="asymptotic",
            extremal=[_desc("two_block", p, n, m, b)],
        )

    if m <= 2 * p:
        return FormulaResult(
            value=p * n + m - p, case_label="Thm1.5(2)/p+1≤m≤2p", validity="asymptotic",
            extremal=[_desc("z_graph", m, n, p)],
        )
    return FormulaResult(
        value=two_block_value, case_label="Thm1.5(2)/m≥2p+1", validity="asymptotic",
        extremal=[_desc("two_block", p, n, m, b)],
    )


def spectral_bound(n: int, spec: LinearForestSpec) -> float:
    """
    sqrt(p(n - p)), the largest spectral radius of an F-free bipartite graph of order n.

    Raises:
        DomainError: unless n > p >= 1
    """
    p = spec.p
    if p < 1:
        raise DomainError(f"the spectral bound needs p >= 1, got p={p} for {spec}")
    if n <= p:
        raise DomainError(f"the spectral bound needs n > p, got n={n}, p={p}")
    return math.sqrt(p * (n - p))


def spectral_least_bound(n: int, spec: LinearForestSpec) -> float:
    """-sqrt(p(n - p)), the smallest least eigenvalue of an F-free graph of order n."""
    return -spectral_bound(n, spec)
