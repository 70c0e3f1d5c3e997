import subprocess
import sys

from cliquenet.cli import main
from cliquenet.graph import load_edgelist


def run_cli(*argv):
    return main(list(argv))


def test_generate_cliquenet(tmp_path):
    out = tmp_path / "g.edges"
    assert run_cli("generate", "--a", "5", "--m", "2", "--p", "0.5",
                   "--steps", "30", "--seed", "3", "--out", str(out)) == 0
    g = load_edgelist(out)
    assert g.node_count == 5 + 30 * 3
    assert "# a=5 m=2 p=0.5 steps=30 seed=3" in out.read_text()


def test_generate_target_nodes(tmp_path):
    out = tmp_path / "g.edges"
    assert run_cli("generate", "--a", "5", "--m", "2", "--p", "0",
                   "--target-nodes", "50", "--seed", "1", "--out", str(out)) == 0
    assert load_edgelist(out).node_count == 50
    # steps and target together is a config error
    assert run_cli("generate", "--a", "5", "--m", "2", "--p", "0", "--steps", "3",
                   "--target-nodes", "50", "--out", str(out)) == 2


def test_generate_er_variants(tmp_path):
    out = tmp_path / "er.edges"
    assert run_cli("generate", "--model", "er", "--n", "40", "--edges", "60",
                   "--seed", "2", "--out", str(out)) == 0
    assert load_edgelist(out).edge_count == 60
    assert "# model=er n=40 m_edges=60 seed=2" in out.read_text()
    assert run_cli("generate", "--model", "er", "--n", "40", "--mean-degree", "3",
                   "--seed", "2", "--out", str(out)) == 0
    assert load_edgelist(out).edge_count == 60


def test_generate_er_missing_args(tmp_path):
    out = tmp_path / "er.edges"
    assert run_cli("generate", "--model", "er", "--out", str(out)) == 2
    assert run_cli("generate", "--model", "er", "--n", "40", "--out", str(out)) == 2


def test_generate_deterministic(tmp_path):
    a, b = tmp_path / "a.edges", tmp_path / "b.edges"
    for path in (a, b):
        run_cli("generate", "--a", "4", "--m", "1", "--p", "1", "--steps", "25",
                "--seed", "9", "--out", str(path))
    assert a.read_bytes() == b.read_bytes()


def test_measure_outputs(tmp_path):
    edges = tmp_path / "g.edges"
    run_cli("generate", "--a", "5", "--m", "2", "--p", "0.5", "--steps", "60",
            "--seed", "4", "--out", str(edges))
    outdir = tmp_path / "metrics"
    assert run_cli("measure", "--in", str(edges), "--out", str(outdir)) == 0
    for name in ("degree_dist.csv", "clustering_spectrum.csv", "summary.csv"):
        text = (outdir / name).read_text()
        assert text.startswith("# cliquenet-csv v1")
    summary = (outdir / "summary.csv").read_text().splitlines()
    assert summary[1].split(",")[:2] == ["n", "edges"]


def test_measure_sampled_sources(tmp_path):
    edges = tmp_path / "g.edges"
    run_cli("generate", "--a", "5", "--m", "2", "--p", "0.5", "--steps", "60",
            "--seed", "4", "--out", str(edges))
    outdir = tmp_path / "m2"
    assert run_cli("measure", "--in", str(edges), "--out", str(outdir),
                   "--sample-sources", "50", "--seed", "8") == 0


def test_estrada_command(tmp_path):
    edges = tmp_path / "g.edges"
    run_cli("generate", "--a", "4", "--m", "1", "--p", "0", "--steps", "10",
            "--seed", "1", "--out", str(edges))
    outdir = tmp_path / "est"
    assert run_cli("estrada", "--in", str(edges), "--out", str(outdir),
                   "--write-matrix") == 0
    est = (outdir / "estrada.csv").read_text().splitlines()
    assert est[1].split(",") == ["n", "a", "m", "p", "seed", "lambda_max", "log_ee", "ee"]
    assert (outdir / "communicability.txt").read_text().startswith("# nodes=")


def test_run_and_report(tmp_path):
    cfg = tmp_path / "mini.yaml"
    cfg.write_text(
        "name: mini\n"
        "replicas: 2\n"
        "base_seed: 6\n"
        "measures: [path_length, clustering]\n"
        f"output_dir: {tmp_path / 'out'}\n"
        "grid:\n"
        "  - model: cliquenet\n"
        "    a: 5\n"
        "    m: 2\n"
        "    p: [0.0, 0.5, 1.0]\n"
        "    n: 80\n"
        "  - model: er\n"
        "    n: 80\n"
        "    mean_degree: 6.66\n")
    assert run_cli("run", "--config", str(cfg)) == 0
    assert (tmp_path / "out" / "summary.csv").exists()
    assert run_cli("report", "table1", "--in", str(tmp_path / "out")) == 0


def test_run_missing_config(tmp_path):
    assert run_cli("run", "--config", str(tmp_path / "nope.yaml")) == 2


def test_env_overrides(tmp_path, monkeypatch, capsys):
    out = tmp_path / "env.edges"
    monkeypatch.setenv("CLIQUENET_OUT", str(out))
    monkeypatch.setenv("CLIQUENET_SEED", "17")
    assert run_cli("generate", "--a", "4", "--m", "1", "--p", "0",
                   "--steps", "5") == 0
    assert "seed=17" in out.read_text()
    # explicit flag wins over the environment
    out2 = tmp_path / "flag.edges"
    assert run_cli("generate", "--a", "4", "--m", "1", "--p", "0",
                   "--steps", "5", "--seed", "3", "--out", str(out2)) == 0
    assert "seed=3" in out2.read_text()


def test_console_script_smoke():
    proc = subprocess.run([sys.executable, "-m", "cliquenet.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
