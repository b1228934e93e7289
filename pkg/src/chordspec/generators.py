"""Constructors for the graph families studied here, plus seeded random instances.

Canonical labelings: the windmill hub is 0, core-satellite cores come first,
(k,t)-split separators occupy ``0..rk-1`` (``S_i = [ik, (i+1)k)``) followed by
the twin classes ``A_i`` in the same order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edge_list,
    join,
    path_graph,
    union_all,
)
from .prng import SplitMix64


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def windmill(k: int, l: int) -> Graph:
    _require(k >= 2 and l >= 2, f"windmill needs k >= 2 and l >= 2, got ({k}, {l})")
    return join(complete_graph(1), union_all([complete_graph(k - 1)] * l))


def split_complete(k: int, t: int) -> Graph:
    _require(k >= 1 and t >= 1, f"split_complete needs k, t >= 1, got ({k}, {t})")
    return join(complete_graph(k), empty_graph(t))


def core_satellite(c: int, s: int, eta: int) -> Graph:
    _require(c >= 1 and s >= 1 and eta >= 2, f"core_satellite needs c, s >= 1, eta >= 2, got ({c}, {s}, {eta})")
    return join(complete_graph(c), union_all([complete_graph(s)] * eta))


def _bits(bits: str | Sequence[int]) -> list[int]:
    out = []
    for b in bits:
        if b not in (0, 1, "0", "1"):
            raise ValueError(f"threshold sequence may only hold 0/1, got {b!r}")
        out.append(int(b))
    return out


def threshold_from_sequence(bits: str | Sequence[int]) -> Graph:
    """Vertex ``i`` arrives isolated (0) or adjacent to all earlier vertices (1)."""
    seq = _bits(bits)
    _require(len(seq) > 0, "threshold sequence must be non-empty")
    edges = [(u, i) for i, b in enumerate(seq) if b for u in range(i)]
    return from_edge_list(len(seq), edges)


def kt_split_graph(k: int, t: int, r: int) -> Graph:
    _require(k >= 1 and t >= 1 and r >= 1, f"kt_split_graph needs k, t, r >= 1, got ({k}, {t}, {r})")
    rk = r * k
    edges = [(u, v) for u in range(rk) for v in range(u + 1, rk)]
    for i in range(r):
        for j in range(t):
            a = rk + i * t + j
            edges.extend((s, a) for s in range(i * k, (i + 1) * k))
    return from_edge_list(rk + r * t, edges)


def _relabel(n: int, edges: list[tuple[int, int]], rng: SplitMix64) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return from_edge_list(n, [(perm[u], perm[v]) for u, v in edges])


def random_chordal(n: int, density: float, seed: int) -> Graph:
    """Connected chordal graph grown by simplicial-vertex insertion.

    Each arriving vertex picks a current maximal clique ``Q`` uniformly and
    attaches to ``ceil(density * |Q|)`` (at least one) of its vertices.
    Labels are shuffled at the end so vertex ids carry no insertion order.
    """
    _require(n >= 1, "random_chordal needs n >= 1")
    _require(0.0 <= density <= 1.0, f"density must lie in [0, 1], got {density}")
    rng = SplitMix64(seed)
    cliques: list[list[int]] = [[0]]
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        q = cliques[rng.below(len(cliques))]
        size = min(len(q), max(1, math.ceil(density * len(q))))
        nbrs = rng.sample(q, size)
        edges.extend((u, v) for u in nbrs)
        if size == len(q):
            q.append(v)
        else:
            cliques.append(nbrs + [v])
    return _relabel(n, edges, rng)


def random_tree_parents(n: int, rng: SplitMix64) -> list[int]:
    """Parent array of a random rooted tree on ``0..n-1`` with root 0.

    Vertex ``i`` hangs below ``i - 1`` with probability 1/3 (giving chains and
    true-twin runs), otherwise below a uniformly chosen earlier vertex.
    """
    parent = [-1] * n
    for i in range(1, n):
        parent[i] = i - 1 if rng.below(3) == 0 else rng.below(i)
    return parent


def tree_closure_edges(parent: Sequence[int]) -> list[tuple[int, int]]:
    """Edges joining every vertex to each of its proper ancestors."""
    edges = []
    for v in range(len(parent)):
        u = parent[v]
        while u >= 0:
            edges.append((u, v))
            u = parent[u]
    return edges


def random_quasi_threshold(n: int, seed: int) -> Graph:
    """Connected quasi-threshold graph from a random rooted tree.

    The tree is the rho-expression: each vertex is a universal vertex added
    over the disjoint union of its children's subtrees, leaves are isolated
    vertices, and the root supplies the final universal-vertex step.
    """
    _require(n >= 1, "random_quasi_threshold needs n >= 1")
    rng = SplitMix64(seed)
    parent = random_tree_parents(n, rng)
    return _relabel(n, tree_closure_edges(parent), rng)


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    _require(n >= 1, "random_connected needs n >= 1")
    rng = SplitMix64(seed)
    edges = [(rng.below(v), v) for v in range(1, n)]
    edges += [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return _relabel(n, edges, rng)


def planted_cycle(n: int, k: int, seed: int) -> Graph:
    """Connected graph on ``n`` vertices containing an induced ``C_k`` (``k >= 4``).

    The cycle hangs off a random connected host through a single edge, so it
    stays induced whatever the host looks like.
    """
    _require(k >= 4 and n >= k, f"planted_cycle needs 4 <= k <= n, got k={k}, n={n}")
    rng = SplitMix64(seed)
    host_n = n - k
    edges = [(i, (i + 1) % k) for i in range(k)]
    if host_n:
        host = random_connected(host_n, rng.random() * 0.5, rng.next_u64())
        edges += [(u + k, v + k) for u, v in host.edges()]
        edges.append((rng.below(k), k + rng.below(host_n)))
    return _relabel(n, edges, rng)


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: tuple[Any, ...] = ()
    seed: int | None = None

    def build(self) -> Graph:
        return generate(self.family, self.params, self.seed)


# family name -> positional parameter types (random families also take a seed)
FAMILIES: dict[str, tuple[type, ...]] = {
    "windmill": (int, int),
    "split-complete": (int, int),
    "core-satellite": (int, int, int),
    "threshold": (str,),
    "kt-split": (int, int, int),
    "random-chordal": (int, float),
    "random-qt": (int,),
    "complete": (int,),
    "path": (int,),
    "cycle": (int,),
}


def parse_params(family: str, raw: Sequence[str]) -> tuple[Any, ...]:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    types = FAMILIES[family]
    if len(raw) != len(types):
        raise ValueError(f"{family} takes {len(types)} parameter(s), got {len(raw)}")
    try:
        return tuple(tp(x) for tp, x in zip(types, raw))
    except ValueError as exc:
        raise ValueError(f"bad parameter for {family}: {exc}") from exc


def generate(family: str, params: Sequence[Any], seed: int | None = None) -> Graph:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    seed = 0 if seed is None else seed
    builders = {
        "windmill": lambda: windmill(*params),
        "split-complete": lambda: split_complete(*params),
        "core-satellite": lambda: core_satellite(*params),
        "threshold": lambda: threshold_from_sequence(*params),
        "kt-split": lambda: kt_split_graph(*params),
        "random-chordal": lambda: random_chordal(*params, seed),
        "random-qt": lambda: random_quasi_threshold(*params, seed),
        "complete": lambda: complete_graph(*params),
        "path": lambda: path_graph(*params),
        "cycle": lambda: cycle_graph(*params),
    }
    return builders[family]()
