"""Simple undirected graph with sorted adjacency lists and edge-list file I/O.

Node identifiers are dense integers 0..node_count-1, assigned in creation
order, so per-node data can live in flat arrays. Neighbor lists are kept
sorted and duplicate free: edge membership tests are O(log k) and triangle
counting can intersect sorted runs.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from pathlib import Path


class Graph:
    """Undirected simple graph (no self-loops, no parallel edges).

    Invariants maintained by every mutation: adjacency symmetry, sorted
    duplicate-free neighbor lists, sum(degree) == 2 * edge_count.
    """

    __slots__ = ("adjacency", "degree", "edge_count")

    def __init__(self, node_count: int = 0) -> None:
        self.adjacency: list[list[int]] = [[] for _ in range(node_count)]
        self.degree: list[int] = [0] * node_count
        self.edge_count: int = 0

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    @property
    def mean_degree(self) -> float:
        return 2.0 * self.edge_count / self.node_count

    def add_node(self) -> int:
        """Append an isolated node and return its (dense) identifier."""
        self.adjacency.append([])
        self.degree.append(0)
        return len(self.adjacency) - 1

    def _check_node(self, u: int) -> None:
        if not 0 <= u < len(self.adjacency):
            raise ValueError(f"node {u} not in graph of size {len(self.adjacency)}")

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def add_edge_if_absent(self, u: int, v: int) -> bool:
        """Insert edge (u, v) unless present. Returns True iff it was added."""
        if u == v:
            raise ValueError(f"self-loop ({u}, {u}) not allowed")
        self._check_node(u)
        self._check_node(v)
        if self.has_edge(u, v):
            return False
        insort(self.adjacency[u], v)
        insort(self.adjacency[v], u)
        self.degree[u] += 1
        self.degree[v] += 1
        self.edge_count += 1
        return True

    def complete_subgraph(self, nodes: list[int]) -> int:
        """Connect every pair among `nodes`; returns the number of edges added.

        Idempotent: pairs already linked are left alone.
        """
        return len(self._complete_subgraph_pairs(nodes))

    def _complete_subgraph_pairs(self, nodes: list[int]) -> list[tuple[int, int]]:
        nodes = list(nodes)
        if len(set(nodes)) != len(nodes):
            raise ValueError(f"duplicate node identifiers in {nodes}")
        added = []
        for i, u in enumerate(nodes):
            for v in nodes[i + 1:]:
                if self.add_edge_if_absent(u, v):
                    added.append((u, v))
        return added

    def neighbors(self, u: int) -> list[int]:
        """Sorted neighbor list of u (the live list; treat as read-only)."""
        return self.adjacency[u]

    def edges(self):
        """Yield each edge once as (u, v) with u < v, in ascending order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if v > u:
                    yield u, v

    def validate(self) -> None:
        """Full-scan assertion of the structural invariants (test helper)."""
        deg_sum = 0
        for u, nbrs in enumerate(self.adjacency):
            assert self.degree[u] == len(nbrs)
            deg_sum += len(nbrs)
            assert all(nbrs[i] < nbrs[i + 1] for i in range(len(nbrs) - 1)), (
                f"neighbor list of {u} not sorted/distinct")
            assert u not in nbrs, f"self-loop at {u}"
            for v in nbrs:
                assert self.has_edge(v, u), f"asymmetric edge ({u}, {v})"
        assert deg_sum == 2 * self.edge_count


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted node lists, largest first."""
    seen = [False] * g.node_count
    comps: list[list[int]] = []
    for start in range(g.node_count):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comp.sort()
        comps.append(comp)
    comps.sort(key=len, reverse=True)
    return comps


def induced_subgraph(g: Graph, nodes: list[int]) -> Graph:
    """Subgraph on `nodes`, relabeled densely in the given order."""
    index = {u: i for i, u in enumerate(nodes)}
    if len(index) != len(nodes):
        raise ValueError("duplicate node identifiers")
    sub = Graph(len(nodes))
    for u in nodes:
        iu = index[u]
        for v in g.adjacency[u]:
            iv = index.get(v)
            if iv is not None and iu < iv:
                sub.add_edge_if_absent(iu, iv)
    return sub


def save_edgelist(g: Graph, path: str | Path, provenance: str | None = None) -> None:
    """Write the graph as '# nodes=N edges=E' header plus 'u v' lines (u < v).

    `provenance` (for example "a=5 m=2 p=0.5 steps=10 seed=1") is written as an
    extra comment line after the header. Output is byte-deterministic.
    """
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# nodes={g.node_count} edges={g.edge_count}\n")
        if provenance:
            fh.write(f"# {provenance}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def load_edgelist(path: str | Path) -> Graph:
    """Read a graph written by save_edgelist. Round-trips losslessly."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if not header.startswith("# nodes="):
            raise ValueError(f"{path}: missing '# nodes=N edges=E' header")
        try:
            fields = dict(item.split("=") for item in header[2:].split())
            n, e = int(fields["nodes"]), int(fields["edges"])
        except (KeyError, ValueError) as exc:
            raise ValueError(f"{path}: malformed header {header!r}") from exc
        g = Graph(n)
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}: malformed edge line {line!r}")
            u, v = int(parts[0]), int(parts[1])
            if not g.add_edge_if_absent(u, v):
                raise ValueError(f"{path}: duplicate edge ({u}, {v})")
    if g.edge_count != e:
        raise ValueError(f"{path}: header says {e} edges, file has {g.edge_count}")
    return g
