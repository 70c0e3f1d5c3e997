"""Uniform random-graph baseline with an exact edge count (G(N, M) ensemble).

Matching the clique networks on node count and average degree has to be exact
per realization for side-by-side comparisons, hence fixed M rather than a
Bernoulli edge probability.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class ErConfig:
    n: int
    edges: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n={self.n} must be >= 1")
        max_edges = self.n * (self.n - 1) // 2
        if not 0 <= self.edges <= max_edges:
            raise ValueError(f"edges={self.edges} outside [0, {max_edges}] for n={self.n}")

    @classmethod
    def from_mean_degree(cls, n: int, mean_degree: float, seed: int = 0) -> "ErConfig":
        return cls(n=n, edges=round(n * mean_degree / 2), seed=seed)

    def provenance(self) -> str:
        return f"model=er n={self.n} m_edges={self.edges} seed={self.seed}"


def er_random_graph(cfg: ErConfig) -> Graph:
    """Exactly cfg.edges distinct edges, uniform over all unordered pairs.

    Sparse draws use rejection sampling on pairs; dense draws (more than half
    of all pairs) enumerate and shuffle. Deterministic per seed. Realizations
    may be disconnected; callers needing path lengths must handle that.
    """
    rng = np.random.default_rng(cfg.seed)
    n, m = cfg.n, cfg.edges
    g = Graph(n)
    if m == 0:
        return g
    max_edges = n * (n - 1) // 2
    if m > max_edges // 2:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for idx in rng.permutation(max_edges)[:m]:
            u, v = pairs[idx]
            g.add_edge_if_absent(u, v)
        return g
    seen: set[tuple[int, int]] = set()
    while len(seen) < m:
        u = int(rng.integers(n))
        v = int(rng.integers(n))
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        g.add_edge_if_absent(u, v)
    return g
