"""
Power iteration for adjacency extremes of small graphs.

lambda_max is found per connected component on A + sI with s = 1 + max degree, so the
dominant eigenvalue is lambda_max + s > 0 and the +/- pairs of a bipartite spectrum
cannot make the iterate oscillate. lambda_min of a general graph uses sI - A the same
way. Convergence is declared when ||Ax - mu x|| <= tol for the Rayleigh quotient mu.
"""

import logging
import math
from typing import Union

import numpy as np
from pydantic import BaseModel, Field

from constructions.families import nikiforov_graph
from errors import DomainError, SpectralConvergenceError
from formulas.turan import spectral_bound
from graphs.bipartite import BipartiteGraph
from graphs.forest_spec import LinearForestSpec
from graphs.general import GeneralGraph

logger = logging.getLogger("Spectral")

DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITER = 1_000_000

Graph = Union[BipartiteGraph, GeneralGraph]


class SpectralResult(BaseModel):
    """Extreme adjacency eigenvalues of one graph."""

    lambda_max: float = Field(description="Largest adjacency eigenvalue (spectral radius)")
    lambda_min: float = Field(description="Least adjacency eigenvalue")
    iterations: int = Field(ge=0, description="Power-iteration steps over all components")
    residual: float = Field(ge=0, description="Largest final residual ||Ax - mu x||")


def _adjacency(masks: tuple[int, ...], vertices: list[int]) -> np.ndarray:
    index = {v: i for i, v in enumerate(vertices)}
    a = np.zeros((len(vertices), len(vertices)))
    for v in vertices:
        for u in vertices:
            if masks[v] >> u & 1:
                a[index[v], index[u]] = 1.0
    return a


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _iterate(a: np.ndarray, sign: float, shift: float, x: np.ndarray, tol: float, max_iter: int) -> tuple[float, int, float]:
    """
    Dominant eigenpair of shift*I + sign*A; returns (Rayleigh quotient of A, steps, residual).

    Raises:
        SpectralConvergenceError: max_iter steps without meeting tol
    """
    x = x / np.linalg.norm(x)
    mu = float(x @ a @ x)
    for step in range(1, max_iter + 1):
        y = shift * x + sign * (a @ x)
        x = y / np.linalg.norm(y)
        ax = a @ x
        mu = float(x @ ax)
        residual = float(np.linalg.norm(ax - mu * x))
        if residual <= tol:
            return mu, step, residual
    raise SpectralConvergenceError(f"power iteration did not reach tol={tol} in {max_iter} steps", mu)


def _component_extreme(a: np.ndarray, largest: bool, tol: float, max_iter: int) -> tuple[float, int, float]:
    size = a.shape[0]
    if size == 1:
        return 0.0, 0, 0.0
    degrees = a.sum(axis=1)
    shift = 1.0 + float(degrees.max())
    if largest:
        mu, steps, residual = _iterate(a, 1.0, shift, np.ones(size), tol, max_iter)
        # The Perron vector is positive, so anything below the average degree means the
        # start missed the dominant eigenspace.
        if mu < float(degrees.mean()) - tol:
            logger.debug("all-ones start gave %.9f below average degree; retrying perturbed", mu)
            start = np.ones(size) + np.linspace(0.0, 0.5, size)
            mu, extra, residual = _iterate(a, 1.0, shift, start, tol, max_iter)
            steps += extra
        return mu, steps, residual
    start = np.random.default_rng(0).normal(size=size)
    return _iterate(a, -1.0, shift, start, tol, max_iter)


def _components(g: Graph) -> list[list[int]]:
    general = g.to_general() if isinstance(g, BipartiteGraph) else g
    return [_bits(c) for c in general.components()]


def _check(g: Graph, tol: float) -> None:
    if g.order < 1:
        raise DomainError("spectral computations need order >= 1")
    if tol <= 0:
        raise DomainError(f"tol must be > 0, got {tol}")


def _extreme(g: Graph, largest: bool, tol: float, max_iter: int) -> tuple[float, int, float]:
    masks = g.adjacency_masks()
    best = None
    iterations = 0
    residual = 0.0
    for comp in _components(g):
        value, steps, res = _component_extreme(_adjacency(masks, comp), largest, tol, max_iter)
        iterations += steps
        residual = max(residual, res)
        if best is None or (value > best if largest else value < best):
            best = value
    return best, iterations, residual


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> SpectralResult:
    """
    lambda_max and lambda_min of g.

    Bipartite inputs report lambda_min = -lambda_max; general inputs run a second
    iteration on sI - A.

    Raises:
        DomainError: empty vertex set or tol <= 0
        SpectralConvergenceError: iteration cap exceeded
    """
    _check(g, tol)
    lam_max, iterations, residual = _extreme(g, True, tol, max_iter)
    if isinstance(g, BipartiteGraph):
        lam_min = -lam_max
    else:
        lam_min, extra, res_min = _extreme(g, False, tol, max_iter)
        iterations += extra
        residual = max(residual, res_min)
    logger.debug("order %d: lambda_max=%.9f lambda_min=%.9f after %d steps", g.order, lam_max, lam_min, iterations)
    return SpectralResult(lambda_max=lam_max, lambda_min=lam_min, iterations=iterations, residual=residual)


def least_eigenvalue(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> float:
    """lambda_min of g; bipartite inputs use -lambda_max."""
    _check(g, tol)
    if isinstance(g, BipartiteGraph):
        return -_extreme(g, True, tol, max_iter)[0]
    return _extreme(g, False, tol, max_iter)[0]


def lambda_complete_bipartite(a: int, b: int) -> float:
    """sqrt(ab), the spectral radius of K_{a,b}."""
    if a < 0 or b < 0:
        raise DomainError(f"K_{{a,b}} needs a, b >= 0, got ({a}, {b})")
    return math.sqrt(a * b)


class NikiforovComparison(BaseModel):
    p_prime: int
    n: int
    lambda_even: float = Field(description="Spectral radius of K_{p'} ∇ K̄_{n-p'}")
    lambda_odd: float = Field(description="Spectral radius of K_{p'} ∇ (K̄_{n-p'-2} ∪ K_2)")
    odd_beats_even: bool


def nikiforov_comparison(p_prime: int, n: int, tol: float = DEFAULT_TOL) -> NikiforovComparison:
    """Compare the even-case and odd-case path extremal graphs of order n."""
    even = spectral_radius(nikiforov_graph(p_prime, n, odd=False), tol).lambda_max
    odd = spectral_radius(nikiforov_graph(p_prime, n, odd=True), tol).lambda_max
    return NikiforovComparison(
        p_prime=p_prime, n=n, lambda_even=even, lambda_odd=odd, odd_beats_even=odd > even + tol,
    )


class SpectralBoundCheck(BaseModel):
    order: int
    spec: str
    lambda_max: float
    bound: float = Field(description="sqrt(p(n - p))")
    within_bound: bool


def spectral_bound_check(g: Graph, spec: LinearForestSpec, tol: float = DEFAULT_TOL) -> SpectralBoundCheck:
    """lambda(g) against sqrt(p(n - p)) for n = order of g."""
    bound = spectral_bound(g.order, spec)
    lam = spectral_radius(g, tol).lambda_max
    return SpectralBoundCheck(
        order=g.order, spec=str(spec), lambda_max=lam, bound=bound, within_bound=lam <= bound + tol,
    )
