"""Batch experiment driver: parameter grids -> replica ensembles -> CSV files.

A spec (usually loaded from a YAML config) names a model grid, a replica
count, and a set of measures. Every (grid point, replica) pair is an
independent job seeded with base_seed + replica_index, so any single row is
reproducible in isolation and grids can run on a worker pool. Aggregated
outputs are pure functions of the per-replica rows.
"""

from __future__ import annotations

import csv
import itertools
import logging
import math
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
import yaml

from . import metrics
from .baselines import ErConfig, er_random_graph
from .communicability import adjacency_spectrum, estrada_index, write_estrada_csv
from .generator import CliqueNetConfig, evolve
from .graph import Graph, connected_components, induced_subgraph
from .metrics import (
    DisconnectedGraphError,
    average_shortest_path_length,
    clustering_spectrum,
    default_fit_window,
    fit_loglog_slope,
    fit_semilog_slope,
    histogram_from_counts,
    local_clustering,
)

log = logging.getLogger(__name__)

MEASURES = ("degree", "path_length", "clustering", "spectrum", "estrada")

SCALAR_ORDER = (
    "n_nodes", "edges", "mean_degree",
    "l", "l_sources", "l_exact",
    "c",
    "cp_loglog_slope", "cp_loglog_r2", "cp_semilog_slope", "cp_semilog_r2",
    "ck_loglog_slope", "ck_loglog_r2",
    "lambda_max", "log_ee",
)

ER_RESAMPLE_LIMIT = 10
ER_RESEED_STRIDE = 10_000_019


@dataclass(frozen=True)
class GridPoint:
    """One cell of the sweep: a cliquenet (a, m, p, n) or an er (n, mean_degree)."""

    model: str
    n: int
    a: int | None = None
    m: int | None = None
    p: float | None = None
    mean_degree: float | None = None

    def __post_init__(self) -> None:
        if self.model == "cliquenet":
            if self.a is None or self.m is None or self.p is None:
                raise ValueError(f"cliquenet grid point needs a, m, p: {self}")
            CliqueNetConfig(a=self.a, m=self.m, p=self.p, target_nodes=self.n)
        elif self.model == "er":
            if self.mean_degree is None or self.mean_degree < 0:
                raise ValueError(f"er grid point needs mean_degree >= 0: {self}")
            ErConfig.from_mean_degree(self.n, self.mean_degree)
        else:
            raise ValueError(f"unknown model {self.model!r}")

    def label(self) -> str:
        if self.model == "cliquenet":
            return f"cliquenet_a{self.a}_m{self.m}_p{self.p:g}_N{self.n}"
        return f"er_k{self.mean_degree:g}_N{self.n}"

    def columns(self) -> dict[str, str]:
        return {
            "model": self.model,
            "a": "" if self.a is None else str(self.a),
            "m": "" if self.m is None else str(self.m),
            "p": "" if self.p is None else f"{self.p:g}",
            "n_target": str(self.n),
            "mean_degree_target": "" if self.mean_degree is None else f"{self.mean_degree:g}",
        }


@dataclass(frozen=True)
class ExperimentSpec:
    name: str
    grid: tuple[GridPoint, ...]
    replicas: int
    base_seed: int
    measures: tuple[str, ...]
    output_dir: Path
    sample_sources: int | None = None
    threads: int = 1
    er_disconnected: str = "giant"

    def __post_init__(self) -> None:
        if not self.grid:
            raise ValueError("experiment grid is empty")
        if self.replicas < 1:
            raise ValueError(f"replicas={self.replicas} must be >= 1")
        unknown = set(self.measures) - set(MEASURES)
        if unknown:
            raise ValueError(f"unknown measures {sorted(unknown)}; known: {MEASURES}")
        if not self.measures:
            raise ValueError("no measures requested")
        if self.threads < 1:
            raise ValueError(f"threads={self.threads} must be >= 1")
        if self.er_disconnected not in ("giant", "error"):
            raise ValueError(f"er_disconnected={self.er_disconnected!r} not in (giant, error)")


def _expand_grid_block(block: dict) -> list[GridPoint]:
    model = block.get("model")
    keys = ("a", "m", "p", "n", "mean_degree")
    values = []
    for key in keys:
        v = block.get(key)
        values.append(v if isinstance(v, list) else [v])
    points = []
    for a, m, p, n, mean_degree in itertools.product(*values):
        if n is None:
            raise ValueError(f"grid block missing n: {block}")
        points.append(GridPoint(model=model, n=n, a=a, m=m,
                                p=None if p is None else float(p),
                                mean_degree=mean_degree))
    return points


def load_spec(
    path: str | Path,
    output_dir: str | Path | None = None,
    base_seed: int | None = None,
    threads: int | None = None,
    sample_sources: int | None = None,
) -> ExperimentSpec:
    """Parse a YAML experiment config; keyword arguments override file values."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = yaml.safe_load(fh)
        except yaml.YAMLError as exc:
            raise ValueError(f"{path}: config parse error: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError(f"{path}: config must be a mapping")
    try:
        grid = tuple(pt for block in data["grid"] for pt in _expand_grid_block(block))
        spec = ExperimentSpec(
            name=str(data["name"]),
            grid=grid,
            replicas=int(data["replicas"]),
            base_seed=int(data["base_seed"]),
            measures=tuple(data["measures"]),
            output_dir=Path(data.get("output_dir", f"out/{data['name']}")),
            sample_sources=data.get("sample_sources"),
            threads=int(data.get("threads", 1)),
            er_disconnected=data.get("er_disconnected", "giant"),
        )
    except KeyError as exc:
        raise ValueError(f"{path}: config missing key {exc}") from exc
    if output_dir is not None:
        spec = replace(spec, output_dir=Path(output_dir))
    if base_seed is not None:
        spec = replace(spec, base_seed=base_seed)
    if threads is not None:
        spec = replace(spec, threads=threads)
    if sample_sources is not None:
        spec = replace(spec, sample_sources=sample_sources)
    return spec


# ---------------------------------------------------------------------------
# Per-replica measurement


@dataclass
class ReplicaMeasurement:
    point: GridPoint
    replica: int
    seed: int
    scalars: dict[str, float]
    l_scope: str = ""
    degree_counts: dict[int, int] | None = None
    spectrum_acc: dict[int, tuple[float, int]] | None = None
    estrada_row: dict | None = None


def _is_connected(g: Graph) -> bool:
    return len(connected_components(g)[0]) == g.node_count


def _build_er_graph(point: GridPoint, seed: int, need_connected: bool,
                    policy: str) -> tuple[Graph, Graph, str]:
    """Returns (graph for node-local measures, graph for L, l_scope)."""
    cfg = ErConfig.from_mean_degree(point.n, point.mean_degree, seed)
    g = er_random_graph(cfg)
    if not need_connected:
        return g, g, ""
    attempt = 0
    while not _is_connected(g) and attempt < ER_RESAMPLE_LIMIT:
        attempt += 1
        reseed = seed + attempt * ER_RESEED_STRIDE
        log.warning("er draw (n=%d, edges=%d, seed=%d) disconnected; resampling "
                    "with seed %d (attempt %d/%d)",
                    cfg.n, cfg.edges, seed, reseed, attempt, ER_RESAMPLE_LIMIT)
        g = er_random_graph(ErConfig(n=cfg.n, edges=cfg.edges, seed=reseed))
    if _is_connected(g):
        return g, g, "full"
    if policy == "error":
        raise DisconnectedGraphError(
            f"er resample limit ({ER_RESAMPLE_LIMIT}) exceeded for n={cfg.n}, "
            f"edges={cfg.edges}, seed={seed}")
    giant = connected_components(g)[0]
    log.warning("er resample limit reached; measuring path length on the giant "
                "component (%d of %d nodes)", len(giant), g.node_count)
    return g, induced_subgraph(g, giant), "giant"


def run_replica(
    point: GridPoint,
    replica: int,
    seed: int,
    measures: tuple[str, ...],
    sample_sources: int | None = None,
    er_disconnected: str = "giant",
) -> ReplicaMeasurement:
    """Generate one graph and compute the requested measures on it."""
    if point.model == "cliquenet":
        cfg = CliqueNetConfig(a=point.a, m=point.m, p=point.p,
                              target_nodes=point.n, seed=seed)
        g = evolve(cfg)
        l_graph, l_scope = g, "full" if "path_length" in measures else ""
    else:
        g, l_graph, l_scope = _build_er_graph(
            point, seed, "path_length" in measures, er_disconnected)

    scalars: dict[str, float] = {
        "n_nodes": g.node_count,
        "edges": g.edge_count,
        "mean_degree": g.mean_degree,
    }
    out = ReplicaMeasurement(point=point, replica=replica, seed=seed,
                             scalars=scalars, l_scope=l_scope)

    if "degree" in measures:
        degrees = np.asarray(g.degree)
        out.degree_counts = metrics.degree_counts(degrees)
        hist = metrics.histogram_from_counts(out.degree_counts)
        window = default_fit_window(degrees)
        for name, fit_fn in (("cp_loglog", fit_loglog_slope),
                             ("cp_semilog", fit_semilog_slope)):
            try:
                fit = fit_fn(hist.cp_of_k.items(), k_range=window)
                scalars[f"{name}_slope"] = fit.slope
                scalars[f"{name}_r2"] = fit.r_squared
            except ValueError:
                scalars[f"{name}_slope"] = math.nan
                scalars[f"{name}_r2"] = math.nan

    if "path_length" in measures:
        stats = average_shortest_path_length(
            l_graph, sample_sources=sample_sources, seed=seed)
        scalars["l"] = stats.L
        scalars["l_sources"] = stats.source_count
        scalars["l_exact"] = int(stats.exact)

    c = None
    if "clustering" in measures or "spectrum" in measures:
        c = local_clustering(g)
    if "clustering" in measures:
        scalars["c"] = float(c.mean())
    if "spectrum" in measures:
        spec = clustering_spectrum(g, c=c)
        out.spectrum_acc = {
            k: (spec.c_of_k[k] * spec.count_of_k[k], spec.count_of_k[k])
            for k in spec.c_of_k
        }
        try:
            fit = fit_loglog_slope(spec.c_of_k.items())
            scalars["ck_loglog_slope"] = fit.slope
            scalars["ck_loglog_r2"] = fit.r_squared
        except ValueError:
            scalars["ck_loglog_slope"] = math.nan
            scalars["ck_loglog_r2"] = math.nan

    if "estrada" in measures:
        estrada = estrada_index(adjacency_spectrum(g))
        scalars["lambda_max"] = estrada.lambda_max
        scalars["log_ee"] = estrada.log_ee
        out.estrada_row = {
            "n": g.node_count, "a": point.a, "m": point.m, "p": point.p,
            "seed": seed, "lambda_max": estrada.lambda_max,
            "log_ee": estrada.log_ee, "ee": estrada.ee,
        }
    return out


def _run_job(args) -> ReplicaMeasurement:
    point, replica, seed, measures, sample_sources, er_disconnected = args
    return run_replica(point, replica, seed, measures,
                       sample_sources=sample_sources,
                       er_disconnected=er_disconnected)


def _pool_worker_init() -> None:
    # one numba thread per worker process; the pool supplies the parallelism
    import numba

    numba.set_num_threads(1)


# ---------------------------------------------------------------------------
# Aggregation and file emission


@dataclass
class PointAggregate:
    point: GridPoint
    replicas: int
    mean: dict[str, float]
    std: dict[str, float]


@dataclass
class EnsembleResult:
    spec: ExperimentSpec
    replicas: list[ReplicaMeasurement]
    points: list[PointAggregate] = field(default_factory=list)


def aggregate(spec: ExperimentSpec, rows: list[ReplicaMeasurement]) -> list[PointAggregate]:
    """Per-point mean and sample standard deviation (ddof=1; 0 when R=1)."""
    out = []
    for point in spec.grid:
        mine = [r for r in rows if r.point == point]
        keys = [k for k in SCALAR_ORDER if k in mine[0].scalars]
        mean = {}
        std = {}
        for key in keys:
            vals = np.array([r.scalars[key] for r in mine], dtype=float)
            mean[key] = float(vals.mean())
            std[key] = float(vals.std(ddof=1)) if len(vals) > 1 else 0.0
        out.append(PointAggregate(point=point, replicas=len(mine), mean=mean, std=std))
    return out


def _scalar_columns(rows: list[ReplicaMeasurement]) -> list[str]:
    present = set()
    for r in rows:
        present.update(r.scalars)
    return [k for k in SCALAR_ORDER if k in present]


POINT_COLUMNS = ("model", "a", "m", "p", "n_target", "mean_degree_target")


def write_replicas_csv(path: Path, rows: list[ReplicaMeasurement]) -> None:
    cols = _scalar_columns(rows)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"{metrics.SCHEMA_PREFIX} ensemble_replicas\n")
        writer = csv.writer(fh)
        writer.writerow(list(POINT_COLUMNS) + ["replica", "seed", "l_scope"] + cols)
        for r in rows:
            pc = r.point.columns()
            writer.writerow(
                [pc[c] for c in POINT_COLUMNS]
                + [r.replica, r.seed, r.l_scope]
                + [metrics.fmt(r.scalars[c]) if c in r.scalars else "" for c in cols])


def write_summary_csv(path: Path, aggregates: list[PointAggregate]) -> None:
    cols = [k for k in SCALAR_ORDER if any(k in a.mean for a in aggregates)]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"{metrics.SCHEMA_PREFIX} ensemble_summary\n")
        writer = csv.writer(fh)
        header = list(POINT_COLUMNS) + ["replicas"]
        for c in cols:
            header += [f"mean_{c}", f"std_{c}"]
        writer.writerow(header)
        for a in aggregates:
            pc = a.point.columns()
            row = [pc[c] for c in POINT_COLUMNS] + [a.replicas]
            for c in cols:
                row += [metrics.fmt(a.mean[c]) if c in a.mean else "",
                        metrics.fmt(a.std[c]) if c in a.std else ""]
            writer.writerow(row)


def run_experiment(spec: ExperimentSpec) -> EnsembleResult:
    """Run the full grid x replica job set and write all output CSVs."""
    spec.output_dir.mkdir(parents=True, exist_ok=True)
    jobs = [
        (point, r, spec.base_seed + r, spec.measures, spec.sample_sources,
         spec.er_disconnected)
        for point in spec.grid
        for r in range(spec.replicas)
    ]
    if spec.threads > 1:
        # spawn: numba's OpenMP threading layer is not fork-safe
        with ProcessPoolExecutor(max_workers=spec.threads,
                                 mp_context=multiprocessing.get_context("spawn"),
                                 initializer=_pool_worker_init) as pool:
            rows = list(pool.map(_run_job, jobs, chunksize=1))
    else:
        rows = [_run_job(job) for job in jobs]
    log.info("experiment %s: %d replicas over %d grid points done",
             spec.name, spec.replicas, len(spec.grid))

    aggregates = aggregate(spec, rows)
    write_replicas_csv(spec.output_dir / "replicas.csv", rows)
    write_summary_csv(spec.output_dir / "summary.csv", aggregates)

    if "degree" in spec.measures:
        for point in spec.grid:
            counts: dict[int, int] = {}
            for r in rows:
                if r.point == point:
                    for k, n in r.degree_counts.items():
                        counts[k] = counts.get(k, 0) + n
            hist = histogram_from_counts(counts)
            metrics.write_degree_dist_csv(
                spec.output_dir / f"degree_dist_{point.label()}.csv", hist)

    if "spectrum" in spec.measures:
        for point in spec.grid:
            acc: dict[int, tuple[float, int]] = {}
            for r in rows:
                if r.point == point:
                    for k, (s, n) in r.spectrum_acc.items():
                        s0, n0 = acc.get(k, (0.0, 0))
                        acc[k] = (s0 + s, n0 + n)
            pooled = metrics.ClusteringSpectrum(
                c_of_k={k: s / n for k, (s, n) in acc.items()},
                count_of_k={k: n for k, (s, n) in acc.items()})
            metrics.write_clustering_spectrum_csv(
                spec.output_dir / f"clustering_spectrum_{point.label()}.csv", pooled)

    if "estrada" in spec.measures:
        write_estrada_csv(spec.output_dir / "estrada.csv",
                          [r.estrada_row for r in rows])

    return EnsembleResult(spec=spec, replicas=rows, points=aggregates)


# ---------------------------------------------------------------------------
# Table report


def _find_point(aggregates: list[PointAggregate], model: str,
                p: float | None = None) -> PointAggregate | None:
    for a in aggregates:
        if a.point.model != model:
            continue
        if p is None or (a.point.p is not None and abs(a.point.p - p) < 1e-9):
            return a
    return None


def table1_report(aggregates: list[PointAggregate]) -> str:
    """Four-column text table (er, p=0, p=0.5, p=1) of C and L, mean +- std."""
    wanted = [("er", _find_point(aggregates, "er")),
              ("p=0", _find_point(aggregates, "cliquenet", 0.0)),
              ("p=0.5", _find_point(aggregates, "cliquenet", 0.5)),
              ("p=1", _find_point(aggregates, "cliquenet", 1.0))]
    missing = [name for name, a in wanted if a is None]
    if missing:
        raise ValueError(f"incomplete results: missing columns {missing}")
    for name, a in wanted:
        for key in ("c", "l"):
            if key not in a.mean:
                raise ValueError(f"incomplete results: column {name} lacks measure {key!r}")
    cells = {
        key: [f"{metrics.fmt(a.mean[key])} +- {metrics.fmt(a.std[key])}" for _, a in wanted]
        for key in ("c", "l")
    }
    width = max(len(s) for row in cells.values() for s in row)
    width = max(width, *(len(name) for name, _ in wanted))
    header = "measure  " + "  ".join(name.ljust(width) for name, _ in wanted)
    lines = [header]
    for label, key in (("C", "c"), ("L", "l")):
        lines.append(f"{label:7s}  " + "  ".join(s.ljust(width) for s in cells[key]))
    return "\n".join(lines) + "\n"


def load_summary_aggregates(path: str | Path) -> list[PointAggregate]:
    """Rebuild PointAggregate rows from a summary.csv written by run_experiment."""
    with open(path, "r", encoding="utf-8") as fh:
        first = fh.readline()
        if not first.startswith(metrics.SCHEMA_PREFIX):
            raise ValueError(f"{path}: missing schema header")
        reader = csv.DictReader(fh)
        out = []
        for row in reader:
            point = GridPoint(
                model=row["model"],
                n=int(row["n_target"]),
                a=int(row["a"]) if row["a"] else None,
                m=int(row["m"]) if row["m"] else None,
                p=float(row["p"]) if row["p"] else None,
                mean_degree=float(row["mean_degree_target"]) if row["mean_degree_target"] else None,
            )
            mean = {}
            std = {}
            for col, value in row.items():
                if value == "" or value is None:
                    continue
                if col.startswith("mean_"):
                    mean[col[5:]] = float(value)
                elif col.startswith("std_"):
                    std[col[4:]] = float(value)
            out.append(PointAggregate(point=point, replicas=int(row["replicas"]),
                                      mean=mean, std=std))
    return out
