"""The non-nilpotent graph of a group and the metrics we report on it."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import CliqueTimeout
from .groups import FiniteGroup
from .nilpotentizer import nil_table
from .planarity import is_planar_adjacency

DEFAULT_CLIQUE_BUDGET = 10 ** 8


@dataclass
class NnGraph:
    """Simple undirected graph whose vertices are group elements."""

    adjacency: np.ndarray           # symmetric bool matrix, empty diagonal
    vertex_labels: list[str]
    vertex_map: np.ndarray          # graph vertex -> group element index
    reduced: bool = False
    name: str = "G"

    def __post_init__(self):
        self.adjacency = np.asarray(self.adjacency, dtype=bool)
        self.vertex_map = np.asarray(self.vertex_map, dtype=np.int64)

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_labels)

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def neighbour_sets(self) -> list[set[int]]:
        return [set(np.flatnonzero(row).tolist()) for row in self.adjacency]

    def bit_rows(self) -> list[int]:
        out = []
        for row in self.adjacency:
            packed = np.packbits(row, bitorder="little").tobytes()
            out.append(int.from_bytes(packed, "little"))
        return out

    def edges(self) -> list[tuple[int, int]]:
        i, j = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(i.tolist(), j.tolist()))

    @classmethod
    def from_edges(cls, n: int, edges, labels=None, name: str = "G") -> "NnGraph":
        A = np.zeros((n, n), dtype=bool)
        for a, b in edges:
            if a != b:
                A[a, b] = A[b, a] = True
        return cls(A, list(labels) if labels else [str(i) for i in range(n)], np.arange(n),
                   name=name)


def build_full_graph(G: FiniteGroup) -> NnGraph:
    """N_G: all elements, x ~ y iff <x, y> is not nilpotent."""
    A = ~nil_table(G).rows
    np.fill_diagonal(A, False)
    return NnGraph(A, list(G.labels), np.arange(G.order), reduced=False, name=G.name)


def build_reduced_graph(G: FiniteGroup) -> NnGraph:
    """The induced subgraph of N_G on G minus nil(G)."""
    table = nil_table(G)
    keep = np.flatnonzero(~table.nil_of_group.mask)
    A = ~table.rows[keep[:, None], keep[None, :]]
    np.fill_diagonal(A, False)
    return NnGraph(A, [G.labels[i] for i in keep], keep, reduced=True, name=G.name)


def degree_set(g: NnGraph) -> set[int]:
    return set(int(d) for d in np.unique(g.degrees()))


def edge_count(g: NnGraph) -> int:
    return int(g.adjacency.sum()) // 2


def connected_components(g: NnGraph) -> list[int]:
    """Component sizes, ordered by smallest vertex."""
    n = g.vertex_count
    seen = np.zeros(n, dtype=bool)
    sizes = []
    for s in range(n):
        if seen[s]:
            continue
        comp = np.zeros(n, dtype=bool)
        comp[s] = True
        frontier = comp.copy()
        while frontier.any():
            frontier = g.adjacency[frontier].any(axis=0) & ~comp
            comp |= frontier
        seen |= comp
        sizes.append(int(comp.sum()))
    return sizes


def _reach_steps(g: NnGraph) -> int:
    # R_k = pairs at distance <= k; the first k with R_k == R_{k+1} is the
    # largest eccentricity inside any component
    n = g.vertex_count
    if n == 0:
        return 0
    A = g.adjacency.astype(np.float32)
    R = np.eye(n, dtype=bool)
    k = 0
    while True:
        nxt = R | ((R.astype(np.float32) @ A) > 0)
        if np.array_equal(nxt, R):
            return k
        R = nxt
        k += 1


def diameter(g: NnGraph) -> int:
    """Largest diameter over connected components (isolated vertices count 0)."""
    return _reach_steps(g)


def eccentricities(g: NnGraph) -> np.ndarray:
    n = g.vertex_count
    ecc = np.zeros(n, dtype=np.int64)
    A = g.adjacency.astype(np.float32)
    R = np.eye(n, dtype=bool)
    k = 0
    while True:
        nxt = R | ((R.astype(np.float32) @ A) > 0)
        grew = (nxt != R).any(axis=1)
        if not grew.any():
            return ecc
        k += 1
        ecc[grew] = k
        R = nxt


def girth(g: NnGraph) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    A = g.adjacency
    if A.shape[0] >= 3:
        Af = A.astype(np.float32)
        if ((Af @ Af) * Af).any():
            return 3
    nbrs = g.neighbour_sets()
    best = None
    for s in range(g.vertex_count):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for w in nbrs[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    cyc = dist[v] + dist[w] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def _greedy_colour(P: int, adj: list[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    colours: list[int] = []
    colour = 0
    uncoloured = P
    while uncoloured:
        colour += 1
        Q = uncoloured
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~adj[v] & ~low
            uncoloured &= ~low
            order.append(v)
            colours.append(colour)
    return order, colours


def maximum_clique(g: NnGraph, budget: int = DEFAULT_CLIQUE_BUDGET) -> list[int]:
    """An exact maximum clique by branch and bound with greedy-colouring bounds.

    Vertices are renumbered by non-increasing degree so the colouring meets
    high-degree vertices first.  Raises :class:`CliqueTimeout` if more than
    ``budget`` search nodes are expanded.
    """
    n = g.vertex_count
    if n == 0:
        return []
    deg = g.degrees()
    perm = np.argsort(-deg, kind="stable")
    A = g.adjacency[perm[:, None], perm[None, :]]
    adj = NnGraph(A, [""] * n, np.arange(n)).bit_rows()
    best: list[int] = [0]
    nodes = 0

    def expand(R: list[int], P: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise CliqueTimeout(budget, len(best))
        order, colours = _greedy_colour(P, adj)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + colours[i] <= len(best):
                return
            v = order[i]
            R.append(v)
            newP = P & adj[v]
            if newP:
                expand(R, newP)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    expand([], (1 << n) - 1)
    return sorted(int(perm[v]) for v in best)


def clique_number(g: NnGraph, budget: int = DEFAULT_CLIQUE_BUDGET) -> int:
    """Size of a maximum clique: 0 for no vertices, 1 when edgeless."""
    return len(maximum_clique(g, budget))


def is_planar(g: NnGraph) -> bool:
    n, m = g.vertex_count, edge_count(g)
    if n >= 3 and m > 3 * n - 6:
        return False
    return is_planar_adjacency(g.neighbour_sets())


@dataclass
class GraphMetrics:
    vertex_count: int
    degree_set: list[int]
    degree_kinds: int
    component_sizes: list[int]
    diameter: int
    girth: int | None
    clique_number: int | None
    planar: bool
    edge_count: int
    notes: list[str] = field(default_factory=list)

    @property
    def component_count(self) -> int:
        return len(self.component_sizes)

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "degree_set": list(self.degree_set),
            "degree_kinds": self.degree_kinds,
            "component_count": self.component_count,
            "component_sizes": list(self.component_sizes),
            "diameter": self.diameter,
            "girth": self.girth,
            "clique_number": self.clique_number,
            "planar": self.planar,
            "notes": list(self.notes),
        }


def graph_metrics(g: NnGraph, clique_budget: int = DEFAULT_CLIQUE_BUDGET,
                  clique: int | None = None) -> GraphMetrics:
    """All metrics for ``g``.  Pass ``clique`` to reuse a known clique number."""
    notes = []
    if clique is None:
        try:
            clique = clique_number(g, clique_budget)
        except CliqueTimeout as exc:
            notes.append(f"clique timeout: {exc}")
            clique = None
    ds = sorted(degree_set(g))
    return GraphMetrics(
        vertex_count=g.vertex_count,
        degree_set=ds,
        degree_kinds=len(ds),
        component_sizes=connected_components(g),
        diameter=diameter(g),
        girth=girth(g),
        clique_number=clique,
        planar=is_planar(g),
        edge_count=edge_count(g),
        notes=notes,
    )


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: NnGraph) -> str:
    title = ("reduced" if g.reduced else "full") + " " + g.name
    lines = [f"graph {_dot_quote(title)} {{"]
    for v, lab in enumerate(g.vertex_labels):
        lines.append(f"  {v} [label={_dot_quote(lab)}];")
    for a, b in g.edges():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(g: NnGraph, path) -> None:
    Path(path).write_text(to_dot(g))
