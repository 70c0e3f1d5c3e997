"""Hybrid evolving clique-network generator.

Growth rule: start from a single complete clique of a nodes. At every step,
draw the selection mode once for the incoming clique (preferential with
probability p, uniform otherwise), pick m distinct attachment nodes from the
existing network under that mode, create a-m fresh nodes, and complete the
clique on all a members. Existing edges are never duplicated, so attaching at
already-adjacent nodes adds fewer than a(a-1)/2 edges.

Randomness comes from numpy's PCG64 (`numpy.random.default_rng`); a run is
fully determined by (config, seed). Replica seeds are derived as seed + index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .graph import Graph

Mode = Literal["preferential", "uniform"]


@dataclass(frozen=True)
class CliqueNetConfig:
    """Generative parameters.

    Exactly one of `steps` / `target_nodes` drives the run length; with
    `target_nodes` the step count is ceil((target - a) / (a - m)), so the
    final size can overshoot the target by at most a - m - 1 nodes.
    """

    a: int
    m: int
    p: float
    steps: int | None = None
    target_nodes: int | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.a < 3:
            raise ValueError(f"clique size a={self.a} must be >= 3")
        if not 1 <= self.m <= self.a - 1:
            raise ValueError(f"attachment count m={self.m} must satisfy 1 <= m <= a-1")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"inhomogeneity parameter p={self.p} must lie in [0, 1]")
        if (self.steps is None) == (self.target_nodes is None):
            raise ValueError("exactly one of steps / target_nodes must be set")
        if self.steps is not None and self.steps < 0:
            raise ValueError(f"steps={self.steps} must be >= 0")
        if self.target_nodes is not None and self.target_nodes < self.a:
            raise ValueError(f"target_nodes={self.target_nodes} must be >= a={self.a}")

    @property
    def run_steps(self) -> int:
        if self.steps is not None:
            return self.steps
        return steps_for_target_nodes(self.a, self.m, self.target_nodes)

    @property
    def final_nodes(self) -> int:
        return self.a + self.run_steps * (self.a - self.m)

    def provenance(self) -> str:
        return f"a={self.a} m={self.m} p={self.p:g} steps={self.run_steps} seed={self.seed}"


def steps_for_target_nodes(a: int, m: int, target: int) -> int:
    """Smallest step count reaching at least `target` nodes."""
    return max(0, math.ceil((target - a) / (a - m)))


def asymptotic_mean_degree(a: int, m: int) -> float:
    """Large-N limit of 2E/N: a(a-1)/(a-m).

    Exact for m=1 (no attachment pair can pre-exist); an upper bound for
    m >= 2, approached from below as suppressed duplicate edges stay rare.
    """
    return a * (a - 1) / (a - m)


@dataclass
class NodeSelection:
    """Attachment targets plus the per-draw pick probability of each one.

    pi[i] is the probability the i-th accepted node had at the moment of its
    draw, over the nodes not yet chosen (degree-proportional or uniform).
    """

    chosen: list[int]
    pi: list[float]


@dataclass
class AttachmentRecord:
    mode: Mode
    nodes: list[int]
    edges_added: int


def initial_clique(cfg: CliqueNetConfig) -> Graph:
    """The t=0 seed network: one complete clique of cfg.a nodes."""
    g = Graph(cfg.a)
    g.complete_subgraph(list(range(cfg.a)))
    return g


def build_endpoint_list(g: Graph) -> list[int]:
    """Each node repeated once per incident edge.

    A uniform index draw from this list picks node i with probability
    degree_i / sum(degree), which is the degree-proportional rule.
    """
    out: list[int] = []
    for u, nbrs in enumerate(g.adjacency):
        out.extend([u] * len(nbrs))
    return out


def select_attachment_nodes(
    g: Graph,
    m: int,
    mode: Mode,
    rng: np.random.Generator,
    endpoints: list[int] | None = None,
) -> NodeSelection:
    """Draw m pairwise-distinct existing nodes under the given mode.

    Preferential mode draws uniformly from the endpoint list and redraws on
    collision with an already-chosen node, which makes every accepted draw
    degree-proportional over the not-yet-chosen nodes. Uniform mode does the
    same with equiprobable node draws. `endpoints` may carry a caller-maintained
    endpoint list (the evolve loop keeps one incrementally, making each draw
    amortized O(1)); without it, preferential mode rebuilds the list in O(E).
    """
    n = g.node_count
    if not 1 <= m <= n:
        raise ValueError(f"cannot select m={m} distinct nodes from {n}")
    if mode == "preferential":
        if endpoints is None:
            endpoints = build_endpoint_list(g)
        if not endpoints:
            raise ValueError("preferential selection undefined: total degree is zero")
    elif mode != "uniform":
        raise ValueError(f"unknown selection mode {mode!r}")

    chosen: list[int] = []
    chosen_set: set[int] = set()
    pi: list[float] = []
    taken_degree = 0
    while len(chosen) < m:
        if mode == "preferential":
            cand = endpoints[rng.integers(len(endpoints))]
            if cand in chosen_set:
                continue
            pi.append(g.degree[cand] / (len(endpoints) - taken_degree))
            taken_degree += g.degree[cand]
        else:
            cand = int(rng.integers(n))
            if cand in chosen_set:
                continue
            pi.append(1.0 / (n - len(chosen)))
        chosen.append(cand)
        chosen_set.add(cand)
    return NodeSelection(chosen=chosen, pi=pi)


def attach_clique(
    g: Graph,
    cfg: CliqueNetConfig,
    rng: np.random.Generator,
    endpoints: list[int] | None = None,
) -> AttachmentRecord:
    """Attach one clique of size cfg.a at cfg.m existing nodes.

    Adds a-m new nodes and completes the clique; the node count grows by
    exactly a-m while the edge count grows by a(a-1)/2 minus the number of
    already-linked pairs among the attachment nodes. When `endpoints` is
    given it is extended in place with both ends of every edge added.
    """
    mode: Mode = "preferential" if rng.random() < cfg.p else "uniform"
    selection = select_attachment_nodes(g, cfg.m, mode, rng, endpoints=endpoints)
    members = list(selection.chosen)
    for _ in range(cfg.a - cfg.m):
        members.append(g.add_node())
    added = g._complete_subgraph_pairs(members)
    if endpoints is not None:
        for u, v in added:
            endpoints.append(u)
            endpoints.append(v)
    return AttachmentRecord(mode=mode, nodes=selection.chosen, edges_added=len(added))


def evolve(cfg: CliqueNetConfig) -> Graph:
    """Grow a network: initial clique plus cfg.run_steps attachments.

    Deterministic in (cfg, cfg.seed); the final node count is exactly
    a + steps * (a - m).
    """
    g, _ = _evolve(cfg, keep_records=False)
    return g


def evolve_with_records(cfg: CliqueNetConfig) -> tuple[Graph, list[AttachmentRecord]]:
    """evolve() that also returns one AttachmentRecord per step."""
    return _evolve(cfg, keep_records=True)


def _evolve(cfg: CliqueNetConfig, keep_records: bool) -> tuple[Graph, list[AttachmentRecord]]:
    rng = np.random.default_rng(cfg.seed)
    g = initial_clique(cfg)
    endpoints = build_endpoint_list(g)
    records: list[AttachmentRecord] = []
    for _ in range(cfg.run_steps):
        record = attach_clique(g, cfg, rng, endpoints=endpoints)
        if keep_records:
            records.append(record)
    return g, records
