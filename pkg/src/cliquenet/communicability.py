"""Communicability G = exp(A) and the Estrada index EE = Tr(exp(A)).

The production route goes through the dense symmetric eigendecomposition of
the adjacency matrix (EE needs only eigenvalues). A truncated power-series
accumulation of exp(A) is kept alongside as an independent oracle; it shares
no code with the eigensolver path. EE easily overflows doubles once the top
eigenvalue passes ~709, so log EE is the canonical output and comparisons
should be made in log space.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .graph import Graph

DENSE_NODE_CAP = 8000
SERIES_NODE_CAP = 500
TRIPLET_NODE_CAP = 200

_LOG_MAX_DOUBLE = math.log(np.finfo(np.float64).max)


class CapacityError(RuntimeError):
    """Input exceeds the configured dense-solver size cap."""


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.node_count, g.node_count))
    for u, v in g.edges():
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


@dataclass
class SpectralDecomposition:
    """Adjacency spectrum, eigenvalues descending; eigenvectors (as columns,
    aligned with eigenvalues) are carried only when requested."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None = None


def adjacency_spectrum(
    g: Graph,
    want_vectors: bool = False,
    node_cap: int = DENSE_NODE_CAP,
) -> SpectralDecomposition:
    """Full symmetric eigendecomposition of the dense adjacency matrix."""
    if g.node_count == 0:
        raise ValueError("spectrum of an empty graph")
    if g.node_count > node_cap:
        raise CapacityError(
            f"dense eigensolve refused: {g.node_count} nodes exceeds cap {node_cap}")
    a = adjacency_matrix(g)
    if want_vectors:
        w, v = np.linalg.eigh(a)
        return SpectralDecomposition(eigenvalues=w[::-1].copy(), eigenvectors=v[:, ::-1].copy())
    w = np.linalg.eigvalsh(a)
    return SpectralDecomposition(eigenvalues=w[::-1].copy())


@dataclass
class EstradaResult:
    """log EE is always finite; ee is inf when exp(log_ee) is not representable."""

    log_ee: float
    ee: float
    lambda_max: float

    @property
    def overflow(self) -> bool:
        return not math.isfinite(self.ee)


def estrada_index(spec: SpectralDecomposition) -> EstradaResult:
    """EE = sum_i exp(lambda_i), computed as a shifted log-sum-exp."""
    w = np.asarray(spec.eigenvalues, dtype=np.float64)
    lam_max = float(w.max())
    log_ee = lam_max + float(np.log(np.exp(w - lam_max).sum()))
    ee = math.exp(log_ee) if log_ee < _LOG_MAX_DOUBLE else math.inf
    return EstradaResult(log_ee=log_ee, ee=ee, lambda_max=lam_max)


def communicability_series_oracle(g: Graph, terms: int, node_cap: int = SERIES_NODE_CAP) -> np.ndarray:
    """sum_{n=0}^{terms} A^n / n! by repeated dense matrix products.

    Independent of the eigensolver path; intended as a test oracle for small
    graphs (60 terms reach double precision whenever lambda_max stays modest).
    """
    if terms < 1:
        raise ValueError(f"terms={terms} must be >= 1")
    if g.node_count > node_cap:
        raise CapacityError(
            f"series oracle refused: {g.node_count} nodes exceeds cap {node_cap}")
    a = adjacency_matrix(g)
    total = np.eye(g.node_count)
    term = np.eye(g.node_count)
    for n in range(1, terms + 1):
        term = term @ a / n
        total += term
    return total


def estrada_series_oracle(g: Graph, terms: int, node_cap: int = SERIES_NODE_CAP) -> float:
    """Tr(sum A^n / n!): the series-side Estrada value."""
    return float(np.trace(communicability_series_oracle(g, terms, node_cap=node_cap)))


def communicability_matrix(spec: SpectralDecomposition) -> np.ndarray:
    """G = V diag(exp(lambda)) V^T, symmetrized to machine exactness."""
    if spec.eigenvectors is None:
        raise ValueError("communicability matrix needs eigenvectors "
                         "(adjacency_spectrum(..., want_vectors=True))")
    v = spec.eigenvectors
    g = (v * np.exp(spec.eigenvalues)) @ v.T
    return (g + g.T) / 2.0


# ---------------------------------------------------------------------------
# File outputs

ESTRADA_HEADER = ["n", "a", "m", "p", "seed", "lambda_max", "log_ee", "ee"]


def write_estrada_csv(path: str | Path, rows: list[dict]) -> None:
    """estrada.csv: one row per measured graph; ee column is 'inf' on overflow."""
    from .metrics import SCHEMA_PREFIX, fmt

    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"{SCHEMA_PREFIX} estrada\n")
        writer = csv.writer(fh)
        writer.writerow(ESTRADA_HEADER)
        for row in rows:
            writer.writerow([
                row["n"],
                row.get("a", ""),
                row.get("m", ""),
                fmt(row["p"]) if row.get("p") is not None else "",
                row["seed"],
                fmt(row["lambda_max"]),
                fmt(row["log_ee"]),
                fmt(row["ee"]) if math.isfinite(row["ee"]) else "inf",
            ])


def write_communicability_triplets(path: str | Path, gmat: np.ndarray,
                                   node_cap: int = TRIPLET_NODE_CAP) -> None:
    """Edge-list style (u, v, G_uv) dump over u <= v, for small graphs only."""
    n = gmat.shape[0]
    if n > node_cap:
        raise CapacityError(f"triplet dump refused: {n} nodes exceeds cap {node_cap}")
    from .metrics import fmt

    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# nodes={n}\n")
        for u in range(n):
            for v in range(u, n):
                fh.write(f"{u} {v} {fmt(gmat[u, v])}\n")
