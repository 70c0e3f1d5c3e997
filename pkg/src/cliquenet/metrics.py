"""Structural observables: degree distributions, path lengths, clustering, fits.

The heavy kernels (all-sources BFS, sorted-adjacency triangle counting) are
numba-jitted over CSR views of the graph; distance sums are accumulated in
integers, so results are independent of worker count and summation order.
Everything here treats the graph as immutable.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numba import njit, prange

from .graph import Graph


class DisconnectedGraphError(ValueError):
    """Some ordered node pair has no path, so mean geodesic length is undefined."""


# ---------------------------------------------------------------------------
# CSR view


def adjacency_csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """(indptr, indices) arrays over the sorted neighbor lists."""
    indptr = np.zeros(g.node_count + 1, dtype=np.int64)
    np.cumsum(g.degree, out=indptr[1:])
    indices = np.empty(2 * g.edge_count, dtype=np.int64)
    pos = 0
    for nbrs in g.adjacency:
        indices[pos:pos + len(nbrs)] = nbrs
        pos += len(nbrs)
    return indptr, indices


# ---------------------------------------------------------------------------
# Degree distribution


@dataclass
class DegreeHistogram:
    """P(k) over occupied degrees and the inclusive cumulative CP(k).

    cp_of_k covers the contiguous range [k_min, k_max]; use cp() for
    arbitrary k (1 below the range, 0 above it). CP(k) = P(degree >= k).
    """

    p_of_k: dict[int, float]
    cp_of_k: dict[int, float]

    @property
    def k_min(self) -> int:
        return min(self.cp_of_k)

    @property
    def k_max(self) -> int:
        return max(self.cp_of_k)

    def cp(self, k: int) -> float:
        if k <= self.k_min:
            return 1.0
        if k > self.k_max:
            return 0.0
        return self.cp_of_k[k]


def degree_histogram(g: Graph) -> DegreeHistogram:
    """Exact degree counts normalized by N; CP by suffix summation."""
    if g.node_count == 0:
        raise ValueError("degree histogram of an empty graph")
    return histogram_from_degrees(np.asarray(g.degree))


def degree_counts(degrees: np.ndarray) -> dict[int, int]:
    """Occupied-degree counts (the poolable raw form of the histogram)."""
    degrees = np.asarray(degrees)
    counts = np.bincount(degrees)
    return {int(k): int(counts[k]) for k in np.nonzero(counts)[0]}


def histogram_from_counts(counts: dict[int, int]) -> DegreeHistogram:
    """Histogram from degree counts; counts from several equal-size replicas
    may be summed first, which pools the ensemble."""
    if not counts:
        raise ValueError("no degree counts")
    n = sum(counts.values())
    k_min, k_max = min(counts), max(counts)
    p_of_k = {k: counts[k] / n for k in sorted(counts)}
    cp_of_k = {}
    acc = 0
    for k in range(k_max, k_min - 1, -1):
        acc += counts.get(k, 0)
        cp_of_k[k] = acc / n
    return DegreeHistogram(p_of_k=p_of_k, cp_of_k=dict(sorted(cp_of_k.items())))


def histogram_from_degrees(degrees: np.ndarray) -> DegreeHistogram:
    return histogram_from_counts(degree_counts(degrees))


# ---------------------------------------------------------------------------
# Average shortest path length: L = sum of ordered-pair distances / (N(N-1))


@dataclass
class PathStats:
    L: float
    source_count: int
    exact: bool


@njit(cache=True)
def _bfs_dist_sum(indptr, indices, source, dist, queue):
    """Distance sum and reach count of one BFS from `source`."""
    n = dist.shape[0]
    for i in range(n):
        dist[i] = -1
    dist[source] = 0
    queue[0] = source
    head = 0
    tail = 1
    total = 0
    reached = 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if dist[v] < 0:
                dist[v] = du + 1
                total += du + 1
                reached += 1
                queue[tail] = v
                tail += 1
    return total, reached


@njit(cache=True, parallel=True)
def _all_sources_dist_sums(indptr, indices, sources):
    n = indptr.shape[0] - 1
    s = sources.shape[0]
    sums = np.zeros(s, dtype=np.int64)
    reached = np.zeros(s, dtype=np.int64)
    for i in prange(s):
        dist = np.empty(n, dtype=np.int32)
        queue = np.empty(n, dtype=np.int64)
        sums[i], reached[i] = _bfs_dist_sum(indptr, indices, sources[i], dist, queue)
    return sums, reached


def average_shortest_path_length(
    g: Graph,
    sample_sources: int | None = None,
    seed: int = 0,
) -> PathStats:
    """Mean geodesic length over ordered node pairs, by BFS from each source.

    With sample_sources=s, averages over s sources drawn uniformly without
    replacement (an unbiased estimator of the exact mean; s = N reproduces the
    exact value bit for bit because distance sums are accumulated in integers).
    Raises DisconnectedGraphError when any pair is unreachable.
    """
    n = g.node_count
    if n < 2:
        raise ValueError("path length needs at least 2 nodes")
    if sample_sources is None or sample_sources >= n:
        sources = np.arange(n, dtype=np.int64)
    elif sample_sources < 1:
        raise ValueError(f"sample_sources={sample_sources} must be >= 1")
    else:
        rng = np.random.default_rng(seed)
        sources = np.sort(rng.choice(n, size=sample_sources, replace=False)).astype(np.int64)
    indptr, indices = adjacency_csr(g)
    sums, reached = _all_sources_dist_sums(indptr, indices, sources)
    if not (reached == n).all():
        bad = int(sources[np.argmin(reached)])
        raise DisconnectedGraphError(
            f"graph is disconnected: BFS from node {bad} reached "
            f"{int(reached.min())} of {n} nodes")
    total = int(sums.sum())
    count = len(sources)
    return PathStats(L=total / (count * (n - 1)), source_count=count, exact=count == n)


# ---------------------------------------------------------------------------
# Clustering


@njit(cache=True)
def _neighbor_edge_counts(indptr, indices):
    """e_i: edges among the neighbors of i, via sorted-run intersections."""
    n = indptr.shape[0] - 1
    e = np.zeros(n, dtype=np.int64)
    for i in range(n):
        lo_i = indptr[i]
        hi_i = indptr[i + 1]
        common = 0
        for p in range(lo_i, hi_i):
            u = indices[p]
            a = lo_i
            b = indptr[u]
            hi_u = indptr[u + 1]
            while a < hi_i and b < hi_u:
                x = indices[a]
                y = indices[b]
                if x == y:
                    common += 1
                    a += 1
                    b += 1
                elif x < y:
                    a += 1
                else:
                    b += 1
        e[i] = common // 2
    return e


def local_clustering(g: Graph) -> np.ndarray:
    """c_i = 2 e_i / (k_i (k_i - 1)) per node; c_i = 0 where k_i < 2.

    The k_i < 2 convention matters only for sparse baselines (generated clique
    networks have minimum degree a-1 >= 2).
    """
    indptr, indices = adjacency_csr(g)
    e = _neighbor_edge_counts(indptr, indices)
    k = np.asarray(g.degree, dtype=np.float64)
    denom = k * (k - 1)
    c = np.zeros(g.node_count)
    mask = denom > 0
    c[mask] = 2.0 * e[mask] / denom[mask]
    return c


def global_clustering(g: Graph) -> float:
    """Arithmetic mean of all local clustering coefficients."""
    return float(local_clustering(g).mean())


@dataclass
class ClusteringSpectrum:
    """Mean local clustering of the degree-k nodes, for each occupied k."""

    c_of_k: dict[int, float]
    count_of_k: dict[int, int]


def clustering_spectrum(g: Graph, c: np.ndarray | None = None) -> ClusteringSpectrum:
    """Group c_i by exact degree and average within each group.

    Pass a precomputed local_clustering array to avoid recomputation.
    """
    if c is None:
        c = local_clustering(g)
    degrees = np.asarray(g.degree)
    c_of_k: dict[int, float] = {}
    count_of_k: dict[int, int] = {}
    for k in np.unique(degrees):
        sel = degrees == k
        c_of_k[int(k)] = float(c[sel].mean())
        count_of_k[int(k)] = int(sel.sum())
    return ClusteringSpectrum(c_of_k=c_of_k, count_of_k=count_of_k)


# ---------------------------------------------------------------------------
# Scalar summary


@dataclass
class MetricsSummary:
    node_count: int
    edge_count: int
    mean_degree: float
    L: float
    C: float


def metrics_summary(g: Graph, sample_sources: int | None = None, seed: int = 0) -> MetricsSummary:
    path = average_shortest_path_length(g, sample_sources=sample_sources, seed=seed)
    return MetricsSummary(
        node_count=g.node_count,
        edge_count=g.edge_count,
        mean_degree=g.mean_degree,
        L=path.L,
        C=global_clustering(g),
    )


# ---------------------------------------------------------------------------
# Slope fits


@dataclass
class PowerLawFit:
    slope: float
    intercept: float
    r_squared: float
    k_range: tuple[float, float]


def _ols(x: np.ndarray, y: np.ndarray) -> tuple[float, float, float]:
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (intercept + slope * x)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    ss_res = float((resid ** 2).sum())
    r2 = 1.0 if ss_tot < 1e-300 else 1.0 - ss_res / ss_tot
    return float(slope), float(intercept), r2


def _usable_points(points, k_range):
    pts = sorted((float(k), float(y)) for k, y in points)
    if k_range is None:
        lo, hi = -np.inf, np.inf
    else:
        lo, hi = k_range
    xs = [k for k, y in pts if lo <= k <= hi and y > 0 and k > 0]
    ys = [y for k, y in pts if lo <= k <= hi and y > 0 and k > 0]
    if len(xs) < 3:
        raise ValueError(
            f"insufficient data: {len(xs)} usable points in k range {k_range}, need >= 3")
    return np.array(xs), np.array(ys), (min(xs), max(xs))


def fit_loglog_slope(points, k_range: tuple[float, float] | None = None) -> PowerLawFit:
    """OLS of log y against log k over positive points within k_range.

    For CP(k) following k^-gamma the slope recovers -gamma exactly.
    """
    xs, ys, used = _usable_points(points, k_range)
    slope, intercept, r2 = _ols(np.log(xs), np.log(ys))
    return PowerLawFit(slope=slope, intercept=intercept, r_squared=r2, k_range=used)


def fit_semilog_slope(points, k_range: tuple[float, float] | None = None) -> PowerLawFit:
    """OLS of log y against k; a straight line signals exponential decay."""
    xs, ys, used = _usable_points(points, k_range)
    slope, intercept, r2 = _ols(xs, np.log(ys))
    return PowerLawFit(slope=slope, intercept=intercept, r_squared=r2, k_range=used)


def default_fit_window(degrees: np.ndarray) -> tuple[float, float]:
    """Degree mode up to the 99th percentile: drops the flat head and the
    noisy top-1% tail. Override per experiment where needed."""
    degrees = np.asarray(degrees)
    counts = np.bincount(degrees)
    mode = int(np.argmax(counts))
    return float(mode), float(np.quantile(degrees, 0.99))


def central_decade(degrees: np.ndarray) -> tuple[float, float]:
    """One factor-of-10 span centered (geometrically) on the occupied range."""
    degrees = np.asarray(degrees)
    g = np.sqrt(float(degrees.min()) * float(degrees.max()))
    return g / np.sqrt(10.0), g * np.sqrt(10.0)


def midrange_window(degrees: np.ndarray, lower: float = 0.2, upper: float = 0.8) -> tuple[float, float]:
    """Central span of the occupied degree range (default middle 60%)."""
    degrees = np.asarray(degrees)
    k_min, k_max = float(degrees.min()), float(degrees.max())
    span = k_max - k_min
    return k_min + lower * span, k_min + upper * span


# ---------------------------------------------------------------------------
# CSV emission (schema version in a leading comment line; 9 significant digits)

SCHEMA_PREFIX = "# cliquenet-csv v1"


def fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return str(int(x))
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.9g}"


def _open_schema_csv(path: str | Path, kind: str):
    fh = open(path, "w", encoding="utf-8", newline="")
    fh.write(f"{SCHEMA_PREFIX} {kind}\n")
    return fh


def write_degree_dist_csv(path: str | Path, hist: DegreeHistogram) -> None:
    with _open_schema_csv(path, "degree_dist") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "p", "cp"])
        for k in range(hist.k_min, hist.k_max + 1):
            writer.writerow([k, fmt(hist.p_of_k.get(k, 0.0)), fmt(hist.cp_of_k[k])])


def write_clustering_spectrum_csv(path: str | Path, spectrum: ClusteringSpectrum) -> None:
    with _open_schema_csv(path, "clustering_spectrum") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "c_of_k", "count"])
        for k in sorted(spectrum.c_of_k):
            writer.writerow([k, fmt(spectrum.c_of_k[k]), spectrum.count_of_k[k]])


def write_graph_summary_csv(
    path: str | Path,
    summary: MetricsSummary,
    fits: dict[str, PowerLawFit] | None = None,
) -> None:
    """Single-row summary of one graph; fit columns appear as <name>_slope/_r2."""
    fits = fits or {}
    header = ["n", "edges", "mean_degree", "l", "c"]
    row = [summary.node_count, summary.edge_count, fmt(summary.mean_degree),
           fmt(summary.L), fmt(summary.C)]
    for name in sorted(fits):
        header += [f"{name}_slope", f"{name}_r2"]
        row += [fmt(fits[name].slope), fmt(fits[name].r_squared)]
    with _open_schema_csv(path, "graph_summary") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerow(row)
