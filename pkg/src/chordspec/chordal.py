"""Chordality recognition and the clique/separator structure of chordal graphs.

Everything is driven by one maximum cardinality search (MCS).  The reverse of
the visit order is a perfect elimination ordering exactly when the graph is
chordal, and the same pass yields the maximal cliques and a clique tree
(Blair & Peyton, "An introduction to chordal graphs and clique trees").
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Any

from .graph import Graph, is_connected


class PreconditionError(ValueError):
    """Input violates an operation's stated precondition."""


class ClassificationError(ValueError):
    """Input does not belong to the graph class an operation requires."""


def _mcs(g: Graph) -> tuple[list[int], list[int]]:
    """Visit order plus, per vertex, its weight (visited neighbours) when visited."""
    weight = [0] * g.n
    visited = [False] * g.n
    heap = [(0, v) for v in range(g.n)]
    heapq.heapify(heap)
    order: list[int] = []
    card = [0] * g.n
    while heap:
        negw, v = heapq.heappop(heap)
        if visited[v] or -negw != weight[v]:
            continue
        visited[v] = True
        card[v] = weight[v]
        order.append(v)
        for w in g.adjacency[v]:
            if not visited[w]:
                weight[w] += 1
                heapq.heappush(heap, (-weight[w], w))
    return order, card


def mcs_order(g: Graph) -> list[int]:
    """MCS visit order; ties go to the lowest vertex id.

    If ``g`` is chordal the reversed list is a perfect elimination ordering.
    """
    if not is_connected(g):
        raise PreconditionError("maximum cardinality search needs a connected graph")
    return _mcs(g)[0]


def _earlier_neighbours(g: Graph, order: list[int]) -> tuple[list[int], list[list[int]]]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    earlier = [[w for w in g.adjacency[v] if pos[w] < pos[v]] for v in range(g.n)]
    return pos, earlier


def is_perfect_elimination_order(g: Graph, peo: list[int]) -> bool:
    """Later neighbours of every vertex form a clique (checked in O(n + m)).

    For each ``v`` let ``p`` be its earliest-eliminated later neighbour; the
    ordering is perfect iff the rest of ``v``'s later neighbours are later
    neighbours of ``p`` as well.
    """
    visit = list(reversed(peo))
    pos, earlier = _earlier_neighbours(g, visit)
    earlier_sets = [set(e) for e in earlier]
    for v in range(g.n):
        if len(earlier[v]) < 2:
            continue
        parent = max(earlier[v], key=pos.__getitem__)
        want = earlier_sets[parent]
        for u in earlier[v]:
            if u != parent and u not in want:
                return False
    return True


def is_chordal(g: Graph) -> bool:
    order = mcs_order(g)
    return is_perfect_elimination_order(g, order[::-1])


@dataclass(frozen=True)
class CliqueTreeEdge:
    parent: int
    child: int
    separator: frozenset[int]


@dataclass(frozen=True)
class ChordalDecomposition:
    n: int
    peo: tuple[int, ...]
    cliques: tuple[tuple[int, ...], ...]
    tree_edges: tuple[CliqueTreeEdge, ...]
    separators: tuple[frozenset[int], ...]
    multiplicity: dict[frozenset[int], int] = field(hash=False)
    simp: tuple[tuple[int, ...], ...]
    vertex_cliques: tuple[tuple[int, ...], ...]

    @property
    def num_cliques(self) -> int:
        return len(self.cliques)

    def mvs_multiset(self) -> list[frozenset[int]]:
        return [e.separator for e in self.tree_edges]

    def simplicial(self) -> list[int]:
        return sorted(v for s in self.simp for v in s)

    def to_json(self) -> dict[str, Any]:
        return {
            "cliques": [list(q) for q in self.cliques],
            "separators": [
                {"vertices": sorted(s), "multiplicity": self.multiplicity[s]}
                for s in self.separators
            ],
            "simplicial": self.simplicial(),
        }


def decompose(g: Graph) -> ChordalDecomposition:
    """Maximal cliques, clique tree and minimal vertex separators.

    A new clique starts whenever the MCS weight fails to increase; it hangs
    off the clique holding the most recently visited earlier neighbour, and
    the tree edge's separator is that earlier-neighbour set.  Separator
    multiplicities count tree edges with equal vertex sets.
    """
    if not is_connected(g):
        raise PreconditionError("decompose needs a connected graph; split components first")
    order, card = _mcs(g)
    if not is_perfect_elimination_order(g, order[::-1]):
        raise ClassificationError("graph is not chordal")

    pos, earlier = _earlier_neighbours(g, order)
    clique_of = [-1] * g.n
    cliques: list[list[int]] = []
    tree_edges: list[CliqueTreeEdge] = []
    prev = -1
    for v in order:
        if card[v] <= prev or not cliques:
            cliques.append(list(earlier[v]) + [v])
            if earlier[v]:
                last = max(earlier[v], key=pos.__getitem__)
                tree_edges.append(
                    CliqueTreeEdge(clique_of[last], len(cliques) - 1, frozenset(earlier[v]))
                )
        else:
            cliques[-1].append(v)
        clique_of[v] = len(cliques) - 1
        prev = card[v]

    multiplicity: dict[frozenset[int], int] = {}
    for e in tree_edges:
        multiplicity[e.separator] = multiplicity.get(e.separator, 0) + 1

    membership: list[list[int]] = [[] for _ in range(g.n)]
    for i, q in enumerate(cliques):
        for v in q:
            membership[v].append(i)
    simp = tuple(
        tuple(sorted(v for v in q if len(membership[v]) == 1)) for q in cliques
    )
    return ChordalDecomposition(
        n=g.n,
        peo=tuple(reversed(order)),
        cliques=tuple(tuple(sorted(q)) for q in cliques),
        tree_edges=tuple(tree_edges),
        separators=tuple(multiplicity),
        multiplicity=multiplicity,
        simp=simp,
        vertex_cliques=tuple(tuple(c) for c in membership),
    )


def simplicial_vertices(g: Graph, d: ChordalDecomposition) -> set[int]:
    # A vertex of a chordal graph is simplicial iff it lies in one maximal clique.
    return {v for v in range(g.n) if len(d.vertex_cliques[v]) == 1}


def vertex_connectivity_chordal(g: Graph, d: ChordalDecomposition) -> int:
    if not d.separators:
        return g.n - 1
    return min(len(s) for s in d.separators)
