"""Immutable undirected simple graphs on vertices ``0..n-1``.

Also holds the Laplacian assembly and the ``p``/``e`` edge-list text format.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Malformed edge list or invalid vertex pair."""


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nb) for nb in self.adjacency)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphFormatError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    m = sum(len(s) for s in nbrs) // 2
    return Graph(n, adjacency, m)


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, ())


def path_graph(n: int) -> Graph:
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return from_edge_list(n, ((i, (i + 1) % n) for i in range(n)))


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} not in graph of order {g.n}")
    return len(g.adjacency[v])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    edges = g1.edges() + [(u + off, v + off) for u, v in g2.edges()]
    return from_edge_list(g1.n + g2.n, edges)


def union_all(graphs: Iterable[Graph]) -> Graph:
    edges: list[tuple[int, int]] = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges())
        off += g.n
    return from_edge_list(off, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    edges = g1.edges() + [(u + off, v + off) for u, v in g2.edges()]
    edges += [(u, off + v) for u in range(g1.n) for v in range(g2.n)]
    return from_edge_list(g1.n + g2.n, edges)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    # K0 counts as connected; it never reaches the theorem code.
    return g.n == 0 or len(connected_components(g)[0]) == g.n


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on ``vertices``, relabelled ``vertices[i] -> i``."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [
        (index[u], index[w])
        for u in vertices
        for w in g.adjacency[u]
        if w in index and u < w
    ]
    return from_edge_list(len(vertices), edges)


def laplacian(g: Graph) -> np.ndarray:
    """``L = D - A`` as an ``int64`` array."""
    L = np.zeros((g.n, g.n), dtype=np.int64)
    for u, nb in enumerate(g.adjacency):
        L[u, u] = len(nb)
        if nb:
            L[u, list(nb)] = -1
    return L


def laplacian_apply(g: Graph, y: Sequence[int]) -> list[int]:
    """Exact integer product ``L y`` without forming the matrix."""
    return [
        len(g.adjacency[u]) * y[u] - sum(y[w] for w in g.adjacency[u])
        for u in range(g.n)
    ]


# -- edge-list text format -------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``p <n> <m>`` / ``e <u> <v>`` text (1-indexed endpoints)."""
    n = declared_m = None
    edges = []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        tag = fields[0]
        try:
            if tag == "p":
                if n is not None:
                    raise GraphFormatError(f"line {lineno}: second 'p' line")
                if len(fields) != 3:
                    raise GraphFormatError(f"line {lineno}: expected 'p <n> <m>'")
                n, declared_m = int(fields[1]), int(fields[2])
            elif tag == "e":
                if n is None:
                    raise GraphFormatError(f"line {lineno}: 'e' line before 'p' line")
                if len(fields) != 3:
                    raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
                edges.append((int(fields[1]) - 1, int(fields[2]) - 1))
            else:
                raise GraphFormatError(f"line {lineno}: unknown line type {tag!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: non-integer field") from exc
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' line")
    if len(edges) != declared_m:
        raise GraphFormatError(f"header declares {declared_m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    with open(path, encoding="ascii", newline="") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path: str | Path, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(g, comments))
