"""Command-line entry points.

Subcommands: generate (one graph -> edge list), measure (edge list -> metric
CSVs), estrada (edge list -> estrada.csv), run (experiment config -> full
outputs), report table1 (summary.csv -> text table). Every flag of the form
--foo-bar can also be set through the environment as CLIQUENET_FOO_BAR;
explicit flags win over the environment.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .baselines import ErConfig, er_random_graph
from .communicability import (
    adjacency_spectrum,
    communicability_matrix,
    estrada_index,
    write_communicability_triplets,
    write_estrada_csv,
)
from .experiments import load_spec, load_summary_aggregates, run_experiment, table1_report
from .generator import CliqueNetConfig, evolve
from .graph import load_edgelist, save_edgelist
from . import metrics

ENV_PREFIX = "CLIQUENET_"

log = logging.getLogger(__name__)


def _env(flag: str) -> str | None:
    return os.environ.get(ENV_PREFIX + flag.replace("-", "_").upper())


def _env_int(flag: str, fallback: int | None = None) -> int | None:
    raw = _env(flag)
    return int(raw) if raw is not None else fallback


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquenet",
        description="Evolving clique networks: generation, metrics, communicability.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="grow one graph and write its edge list")
    gen.add_argument("--model", choices=["cliquenet", "er"],
                     default=_env("model") or "cliquenet")
    gen.add_argument("--a", type=int, default=_env_int("a", 5))
    gen.add_argument("--m", type=int, default=_env_int("m", 2))
    gen.add_argument("--p", type=float, default=float(_env("p") or 0.0))
    gen.add_argument("--steps", type=int, default=_env_int("steps"))
    gen.add_argument("--target-nodes", type=int, default=_env_int("target-nodes"))
    gen.add_argument("--n", type=int, default=_env_int("n"), help="er node count")
    gen.add_argument("--edges", type=int, default=_env_int("edges"), help="er edge count")
    gen.add_argument("--mean-degree", type=float,
                     default=float(_env("mean-degree") or "nan"),
                     help="er mean degree (alternative to --edges)")
    gen.add_argument("--seed", type=int, default=_env_int("seed", 0))
    gen.add_argument("--out", required=_env("out") is None, default=_env("out"),
                     help="edge-list output path")

    mea = sub.add_parser("measure", help="metrics CSVs for one edge-list file")
    mea.add_argument("--in", dest="infile", required=_env("in") is None, default=_env("in"))
    mea.add_argument("--out", required=_env("out") is None, default=_env("out"),
                     help="output directory")
    mea.add_argument("--sample-sources", type=int, default=_env_int("sample-sources"),
                     help="BFS sources for the path-length estimate (default: exact)")
    mea.add_argument("--seed", type=int, default=_env_int("seed", 0))

    est = sub.add_parser("estrada", help="estrada.csv (and optional G dump) for one edge list")
    est.add_argument("--in", dest="infile", required=_env("in") is None, default=_env("in"))
    est.add_argument("--out", required=_env("out") is None, default=_env("out"),
                     help="output directory")
    est.add_argument("--seed", type=int, default=_env_int("seed", 0),
                     help="seed column value for the csv row")
    est.add_argument("--write-matrix", action="store_true",
                     help="also dump pairwise communicability triplets (small graphs)")

    run = sub.add_parser("run", help="run an experiment config")
    run.add_argument("--config", required=_env("config") is None, default=_env("config"))
    run.add_argument("--out", default=_env("out"), help="override the config output_dir")
    run.add_argument("--seed", type=int, default=_env_int("seed"),
                     help="override the config base seed")
    run.add_argument("--threads", type=int, default=_env_int("threads"))
    run.add_argument("--sample-sources", type=int, default=_env_int("sample-sources"))

    rep = sub.add_parser("report", help="render a report from experiment outputs")
    rep.add_argument("kind", choices=["table1"])
    rep.add_argument("--in", dest="indir", required=_env("in") is None, default=_env("in"),
                     help="experiment output directory (holding summary.csv)")
    return parser


def _cmd_generate(args) -> int:
    if args.model == "cliquenet":
        cfg = CliqueNetConfig(a=args.a, m=args.m, p=args.p, steps=args.steps,
                              target_nodes=args.target_nodes, seed=args.seed)
        g = evolve(cfg)
        save_edgelist(g, args.out, provenance=cfg.provenance())
    else:
        if args.n is None:
            raise ValueError("er model needs --n")
        if args.edges is not None:
            cfg = ErConfig(n=args.n, edges=args.edges, seed=args.seed)
        elif args.mean_degree == args.mean_degree:  # not NaN
            cfg = ErConfig.from_mean_degree(args.n, args.mean_degree, seed=args.seed)
        else:
            raise ValueError("er model needs --edges or --mean-degree")
        g = er_random_graph(cfg)
        save_edgelist(g, args.out, provenance=cfg.provenance())
    log.info("wrote %s (%d nodes, %d edges)", args.out, g.node_count, g.edge_count)
    return 0


def _cmd_measure(args) -> int:
    g = load_edgelist(args.infile)

    # compute everything before writing anything: no partial output on error
    hist = metrics.degree_histogram(g)
    c = metrics.local_clustering(g)
    spectrum = metrics.clustering_spectrum(g, c=c)
    path = metrics.average_shortest_path_length(
        g, sample_sources=args.sample_sources, seed=args.seed)
    summary = metrics.MetricsSummary(
        node_count=g.node_count, edge_count=g.edge_count,
        mean_degree=g.mean_degree, L=path.L, C=float(c.mean()))

    window = metrics.default_fit_window(np.asarray(g.degree))
    fits = {}
    for name, fn in (("cp_loglog", metrics.fit_loglog_slope),
                     ("cp_semilog", metrics.fit_semilog_slope)):
        try:
            fits[name] = fn(hist.cp_of_k.items(), k_range=window)
        except ValueError:
            pass
    try:
        fits["ck_loglog"] = metrics.fit_loglog_slope(spectrum.c_of_k.items())
    except ValueError:
        pass

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    metrics.write_degree_dist_csv(outdir / "degree_dist.csv", hist)
    metrics.write_clustering_spectrum_csv(outdir / "clustering_spectrum.csv", spectrum)
    metrics.write_graph_summary_csv(outdir / "summary.csv", summary, fits)
    log.info("wrote metrics CSVs to %s", outdir)
    return 0


def _cmd_estrada(args) -> int:
    g = load_edgelist(args.infile)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    spec = adjacency_spectrum(g, want_vectors=args.write_matrix)
    result = estrada_index(spec)
    write_estrada_csv(outdir / "estrada.csv", [{
        "n": g.node_count, "a": None, "m": None, "p": None, "seed": args.seed,
        "lambda_max": result.lambda_max, "log_ee": result.log_ee, "ee": result.ee,
    }])
    if args.write_matrix:
        gmat = communicability_matrix(spec)
        write_communicability_triplets(outdir / "communicability.txt", gmat)
    log.info("estrada: lambda_max=%.6g log_ee=%.6g", result.lambda_max, result.log_ee)
    return 0


def _cmd_run(args) -> int:
    spec = load_spec(args.config, output_dir=args.out, base_seed=args.seed,
                     threads=args.threads, sample_sources=args.sample_sources)
    run_experiment(spec)
    log.info("outputs in %s", spec.output_dir)
    return 0


def _cmd_report(args) -> int:
    aggregates = load_summary_aggregates(Path(args.indir) / "summary.csv")
    if args.kind == "table1":
        sys.stdout.write(table1_report(aggregates))
    return 0


COMMANDS = {
    "generate": _cmd_generate,
    "measure": _cmd_measure,
    "estrada": _cmd_estrada,
    "run": _cmd_run,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
