"""Shared brute-force oracles and hypothesis strategies.

Everything here works straight from the definitions, by enumeration, so it
stays independent of the linear-time code under test. Only use it on small
graphs.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest
from hypothesis import strategies as st

from chordspec import load_fixture
from chordspec.generators import random_chordal, random_quasi_threshold
from chordspec.graph import Graph, connected_components, from_edge_list, induced_subgraph


# acceptance verdict lines, echoed in the terminal summary
VERDICTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(VERDICTS):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def six_cliques():
    return load_fixture("six_cliques")


@pytest.fixture(scope="session")
def kt233():
    return load_fixture("kt_split_2_3_3")


# expected oracle spectrum of the six-clique fixture, rounded to 5 places
SIX_CLIQUES_SPECTRUM = [
    10.29857, 9.35720, 8.71138, 7.84776, 7.41877, 6.00000, 5.00000, 4.00000,
    4.00000, 4.00000, 3.06443, 1.79600, 1.10090, 0.86586, 0.53913, 0.00000,
]


# ---- strategies -----------------------------------------------------------

@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    g = draw(graphs(min_n, max_n))
    comps = connected_components(g)
    # chain the components together so the result is connected
    extra = [(comps[i][0], comps[i + 1][0]) for i in range(len(comps) - 1)]
    return from_edge_list(g.n, g.edges() + extra)


seeds = st.integers(0, 2**64 - 1)


@st.composite
def chordal_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    density = draw(st.floats(0.0, 1.0))
    return random_chordal(n, density, draw(seeds))


@st.composite
def qt_graphs(draw, max_n=40):
    return random_quasi_threshold(draw(st.integers(1, max_n)), draw(seeds))


# ---- brute-force oracles --------------------------------------------------

def is_clique(g: Graph, vs) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_independent(g: Graph, vs) -> bool:
    return not any(g.has_edge(u, v) for u, v in combinations(vs, 2))


def brute_maximal_cliques(g: Graph) -> set[frozenset[int]]:
    cliques = set()
    for r in range(1, g.n + 1):
        for vs in combinations(range(g.n), r):
            if is_clique(g, vs):
                cliques.add(frozenset(vs))
    return {q for q in cliques if not any(q < p for p in cliques)}


def brute_is_chordal(g: Graph) -> bool:
    """Repeatedly delete a vertex whose neighbourhood is a clique."""
    alive = set(range(g.n))
    while alive:
        for v in sorted(alive):
            if is_clique(g, g.neighbor_sets[v] & alive):
                alive.remove(v)
                break
        else:
            return False
    return True


def _components_without(g: Graph, removed: set[int]) -> list[set[int]]:
    keep = [v for v in range(g.n) if v not in removed]
    sub = induced_subgraph(g, keep)
    return [{keep[i] for i in c} for c in connected_components(sub)]


def brute_minimal_separators(g: Graph) -> set[frozenset[int]]:
    """S is a minimal separator iff G - S has two full components."""
    out = set()
    for r in range(0, g.n - 1):
        for s in combinations(range(g.n), r):
            S = set(s)
            full = [
                c for c in _components_without(g, S)
                if all(any(u in g.neighbor_sets[v] for u in c) for v in S)
            ]
            if len(full) >= 2:
                out.add(frozenset(S))
    return out


def brute_vertex_connectivity(g: Graph) -> int:
    if all(g.degrees[v] == g.n - 1 for v in range(g.n)):
        return g.n - 1
    for r in range(0, g.n - 1):
        for s in combinations(range(g.n), r):
            if len(_components_without(g, set(s))) >= 2:
                return r
    raise AssertionError("unreachable")


def induced_shapes(g: Graph) -> set[str]:
    """Which of P4, C4, 2K2 occur as induced subgraphs."""
    found = set()
    for vs in combinations(range(g.n), 4):
        degs = sorted(sum(g.has_edge(u, w) for w in vs if w != u) for u in vs)
        m = sum(degs) // 2
        if m == 3 and degs == [1, 1, 2, 2]:
            found.add("P4")
        elif m == 4 and degs == [2, 2, 2, 2]:
            found.add("C4")
        elif m == 2 and degs == [1, 1, 1, 1]:
            found.add("2K2")
    return found


def brute_is_split(g: Graph) -> bool:
    for r in range(g.n + 1):
        for k in combinations(range(g.n), r):
            rest = [v for v in range(g.n) if v not in k]
            if is_clique(g, k) and is_independent(g, rest):
                return True
    return False


def numpy_spectrum(g: Graph) -> np.ndarray:
    from chordspec.graph import laplacian

    return np.sort(np.linalg.eigvalsh(laplacian(g).astype(float)))[::-1]
