#!/usr/bin/env python3
"""Run the shipped experiment configs and drop their CSVs under outputs/.

Usage:
    python scripts/run_paper_experiments.py [--only table1,fig3] [--threads 2]
                                            [--out-root outputs]

Each config is independent; rerunning one overwrites its output directory
deterministically.
"""

from __future__ import annotations

import argparse
import logging
import time
from pathlib import Path

from cliquenet.experiments import load_spec, run_experiment

CONFIG_ORDER = ["table1", "fig2", "fig3", "fig4", "fig5", "fig6"]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--only", default=None,
                        help="comma-separated subset of configs to run")
    parser.add_argument("--threads", type=int, default=2)
    parser.add_argument("--out-root", default=None,
                        help="redirect outputs under this root (default: config paths)")
    parser.add_argument("--configs-dir", default=Path(__file__).parent.parent / "configs")
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    names = args.only.split(",") if args.only else CONFIG_ORDER
    for name in names:
        path = Path(args.configs_dir) / f"{name}.yaml"
        out = Path(args.out_root) / name if args.out_root else None
        spec = load_spec(path, output_dir=out, threads=args.threads)
        t0 = time.time()
        run_experiment(spec)
        print(f"{name}: {len(spec.grid)} grid points x {spec.replicas} replicas "
              f"-> {spec.output_dir} ({time.time() - t0:.1f}s)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
