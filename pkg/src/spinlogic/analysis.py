"""Interaction graphs of two-local Hamiltonians and simple centrality measures."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DimensionError, LocalityError
from .poly import SpinPolynomial, default_wires


@dataclass(frozen=True)
class Node:
    name: str
    role: str
    field: float


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    weight: float


@dataclass
class InteractionGraph:
    nodes: list[Node]
    edges: list[Edge]
    _adj: list[list[int]] | None = field(default=None, repr=False, compare=False)

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        if self._adj is None:
            adj: list[set[int]] = [set() for _ in self.nodes]
            for e in self.edges:
                adj[e.u].add(e.v)
                adj[e.v].add(e.u)
            self._adj = [sorted(a) for a in adj]
        return self._adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    def to_dict(self) -> dict:
        return {
            "nodes": [{"name": n.name, "role": n.role, "field": n.field} for n in self.nodes],
            "edges": [{"u": e.u, "v": e.v, "weight": e.weight} for e in self.edges],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "InteractionGraph":
        return cls([Node(n["name"], n["role"], float(n["field"])) for n in d["nodes"]],
                   [Edge(int(e["u"]), int(e["v"]), float(e["weight"])) for e in d["edges"]])


def graph_from_polynomial(h: SpinPolynomial, wires: Sequence[str] | None = None,
                          roles: dict[str, str] | None = None) -> InteractionGraph:
    if h.max_weight > 2:
        raise LocalityError(f"polynomial has a {h.max_weight}-spin term; "
                            "interaction graphs need a two-local Hamiltonian")
    wires = list(wires) if wires is not None else default_wires(h.n_spins)
    roles = roles or {}
    nodes = [Node(w, roles.get(w, "spin"), h.coeff(i)) for i, w in enumerate(wires)]
    edges = [Edge(k[0], k[1], c) for k, c in h.items() if len(k) == 2]
    return InteractionGraph(nodes, edges)


def to_graph(c) -> InteractionGraph:
    """Interaction graph of a compiled circuit (or a bare polynomial)."""
    if isinstance(c, SpinPolynomial):
        return graph_from_polynomial(c)
    return graph_from_polynomial(c.hamiltonian, c.wires, c.roles)


def degree_centrality(g: InteractionGraph) -> np.ndarray:
    n = g.n_nodes
    if n < 2:
        raise DimensionError("degree centrality needs at least two nodes")
    return np.asarray(g.degrees(), dtype=float) / (n - 1)


def shortest_path_centrality(g: InteractionGraph) -> np.ndarray:
    """Unnormalized betweenness over unordered pairs, endpoints excluded.

    Brandes' accumulation: one BFS per source, dependencies summed in reverse
    BFS order. Each unordered pair is seen from both ends, hence the final
    halving.
    """
    adj = g.adjacency()
    n = len(adj)
    cb = np.zeros(n)
    for s in range(n):
        stack = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        dist = [-1] * n
        sigma[s], dist[s] = 1, 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != s:
                cb[w] += delta[w]
    return cb / 2.0


def variance_and_mean(values) -> tuple[float, float]:
    """Population mean and variance, returned as ``(mean, variance)``."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise ValueError("no values")
    return float(arr.mean()), float(arr.var())


def _num(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def export_graph(g: InteractionGraph, fmt: str = "dot") -> str:
    """DOT or JSON text.

    In DOT, negative couplings are dashed and nodes with a negative local
    field get a dashed outline. Edge pen width follows coupling magnitude.
    """
    if fmt == "json":
        return json.dumps(g.to_dict(), indent=2) + "\n"
    if fmt != "dot":
        raise ValueError(f"unknown graph format {fmt!r}")
    lines = ["graph spins {"]
    for i, nd in enumerate(g.nodes):
        style = "filled,dashed" if nd.field < 0 else "filled" if nd.field > 0 else "solid"
        lines.append(f'  {i} [label="{nd.name}", role="{nd.role}", field={_num(nd.field)}, '
                     f'style="{style}"];')
    for e in g.edges:
        style = "dashed" if e.weight < 0 else "solid"
        lines.append(f"  {e.u} -- {e.v} [weight={_num(e.weight)}, "
                     f"penwidth={_num(abs(e.weight))}, style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def metrics_table(g: InteractionGraph) -> str:
    """Tab-separated node, role, degree, D_k, SP_k."""
    deg = g.degrees()
    dc = degree_centrality(g)
    sp = shortest_path_centrality(g)
    rows = ["node\trole\tdegree\tD_k\tSP_k"]
    for nd, d, dk, spk in zip(g.nodes, deg, dc, sp):
        rows.append(f"{nd.name}\t{nd.role}\t{d}\t{dk:.6f}\t{spk:.6f}")
    return "\n".join(rows) + "\n"
