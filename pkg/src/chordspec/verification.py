"""Randomised property suites pitting structural predictions against the oracle.

Each ``check_*`` function takes one graph and returns ``{property: passed}``.
:func:`run_suite` drives them over seeded instances of a family.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator

from .chordal import decompose, vertex_connectivity_chordal
from .generators import (
    core_satellite,
    kt_split_graph,
    random_chordal,
    random_quasi_threshold,
    threshold_from_sequence,
    windmill,
)
from .graph import Graph, from_edge_list, is_connected, write_edge_list
from .oracle import (
    FIEDLER_TOL,
    INTEGER_TOL,
    Spectrum,
    algebraic_connectivity,
    graph_spectrum,
    integer_eigenvalues,
)
from .prng import SplitMix64
from .structural import (
    as_multiset,
    check_kappa_equals_a,
    classify,
    is_submultiset,
    kt_split_partial_spectrum,
    lemma_violations,
    qt_spectrum_bapat,
    qt_spectrum_structural,
    recognize_kt_split,
    recognize_quasi_threshold,
    theorem8_predictions,
    verify_theorem8,
)


def matches_integer_spectrum(s: Spectrum, predicted: dict[int, int], tol: float = INTEGER_TOL) -> bool:
    """Oracle eigenvalues equal the predicted integer multiset, one for one."""
    expected = sorted((v for v, c in predicted.items() for _ in range(c)), reverse=True)
    if len(expected) != s.n:
        return False
    return all(abs(a - b) <= tol for a, b in zip(s.values, expected))


def clique_tree_subtree_property(d) -> bool:
    """Cliques containing any fixed vertex induce a connected part of the clique tree."""
    adj: dict[int, list[int]] = {i: [] for i in range(d.num_cliques)}
    for e in d.tree_edges:
        adj[e.parent].append(e.child)
        adj[e.child].append(e.parent)
    for v in range(d.n):
        holding = set(d.vertex_cliques[v])
        start = next(iter(holding))
        seen = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j in holding and j not in seen:
                    seen.add(j)
                    stack.append(j)
        if seen != holding:
            return False
    return True


def check_chordal(g: Graph, s: Spectrum | None = None) -> dict[str, bool]:
    d = decompose(g)
    s = s or graph_spectrum(g)
    out = {
        "separator_count": sum(d.multiplicity.values()) == d.num_cliques - 1,
        "clique_tree_subtree": clique_tree_subtree_property(d),
    }
    preds = theorem8_predictions(g, d)
    out["theorem8_exact"] = verify_theorem8(g, preds)
    out["theorem8_contained"] = is_submultiset(as_multiset(preds), integer_eigenvalues(s))
    if d.separators:
        kappa = vertex_connectivity_chordal(g, d)
        a = algebraic_connectivity(s)
        structural, _ = check_kappa_equals_a(g, d)
        out["kappa_equals_a_agrees"] = structural == (abs(a - kappa) < FIEDLER_TOL)
        out["fiedler_bound"] = a <= kappa + FIEDLER_TOL
    return out


def check_quasi_threshold(g: Graph, s: Spectrum | None = None) -> dict[str, bool]:
    t = recognize_quasi_threshold(g)
    if t is None:
        return {"qt_recognized": False}
    d = decompose(g)
    s = s or graph_spectrum(g)
    bapat = as_multiset(qt_spectrum_bapat(g, t))
    structural = as_multiset(qt_spectrum_structural(g, d))
    return {
        "qt_recognized": True,
        "tree_closure": from_edge_list(g.n, t.closure_edges()) == g,
        "bapat_equals_structural": bapat == structural,
        "structural_equals_oracle": matches_integer_spectrum(s, structural),
        "lemmas": not lemma_violations(g, d, t),
    }


def check_kt_split(g: Graph, k: int, t: int, r: int, s: Spectrum | None = None) -> dict[str, bool]:
    d = decompose(g)
    st = recognize_kt_split(g, d)
    out = {"kt_recognized": st is not None and (st.k, st.t, st.r) == (k, t, r)}
    if st is None:
        return out
    s = s or graph_spectrum(g)
    pred = as_multiset(kt_split_partial_spectrum(st))
    out["kt_contained"] = is_submultiset(pred, integer_eigenvalues(s))
    out["kt_count"] = sum(pred.values()) == g.n - 2 * r + 2
    if r == 1:
        out["kt_full_spectrum"] = matches_integer_spectrum(s, pred)
    # removing the separator clique leaves r copies of K_{k,t}
    sep = {v for S in st.separators for v in S}
    h = from_edge_list(g.n, [(u, v) for u, v in g.edges() if not (u in sep and v in sep)])
    out["splitness"] = h.m == r * k * t and all(
        set(h.adjacency[a]) == set(S) for S, A in zip(st.separators, st.twin_classes) for a in A
    )
    return out


def check_threshold(g: Graph) -> dict[str, bool]:
    d = decompose(g)
    seps = sorted(d.separators, key=len)
    out = {"threshold_mvs_chain": all(a < b for a, b in zip(seps, seps[1:]))}
    if seps:
        out["threshold_min_mvs_universal"] = all(g.degrees[v] == g.n - 1 for v in seps[0])
        out["threshold_kappa_equals_a"] = check_kappa_equals_a(g, d)[0]
    return out


def check_hierarchy(g: Graph) -> dict[str, bool]:
    return {"hierarchy": not classify(g).violations()}


@dataclass
class SuiteResult:
    family: str
    counts: dict[str, list[int]] = field(default_factory=dict)  # property -> [passed, failed]
    failures: list[tuple[str, int, str]] = field(default_factory=list)  # (property, index, file)

    def record(self, props: dict[str, bool], index: int, g: Graph, out_dir: Path | None, label: str):
        for name, ok in props.items():
            c = self.counts.setdefault(name, [0, 0])
            c[0 if ok else 1] += 1
            if not ok:
                path = ""
                if out_dir is not None:
                    out_dir.mkdir(parents=True, exist_ok=True)
                    p = out_dir / f"verify-fail-{self.family}-{index}-{name}.txt"
                    write_edge_list(g, p, comments=[f"family {self.family}", label, f"property {name}"])
                    path = str(p)
                self.failures.append((name, index, path))

    @property
    def ok(self) -> bool:
        return not self.failures


def _instances(family: str, count: int, max_n: int, rng: SplitMix64) -> Iterator[tuple[Graph, str, tuple]]:
    for i in range(count):
        seed = rng.next_u64()
        if family == "qt":
            n = 1 + rng.below(max_n)
            yield random_quasi_threshold(n, seed), f"random-qt n={n} seed={seed}", ()
        elif family == "chordal":
            while True:
                n = 2 + rng.below(max(1, max_n - 1))
                density = 0.4 + 0.6 * rng.random()  # below 0.5 the knob only yields trees
                g = random_chordal(n, density, seed)
                if g.m < n * (n - 1) // 2:
                    break
                seed = rng.next_u64()
            yield g, f"random-chordal n={n} density={density!r} seed={seed}", ()
        elif family == "kt-split":
            while True:
                k, t, r = 1 + rng.below(5), 1 + rng.below(5), 1 + rng.below(5)
                if (k + t) * r <= max(max_n, 2) and not (r == 1 and t == 1):
                    break
            yield kt_split_graph(k, t, r), f"kt-split {k} {t} {r}", (k, t, r)
        elif family == "threshold":
            length = 2 + rng.below(max(1, min(max_n, 40) - 1))
            bits = "".join(str(rng.below(2)) for _ in range(length - 1)) + "1"
            yield threshold_from_sequence(bits), f"threshold {bits}", ()
        elif family == "windmill":
            k, l = 2 + rng.below(5), 2 + rng.below(5)
            yield windmill(k, l), f"windmill {k} {l}", ()
        elif family == "core-satellite":
            c, s, eta = 1 + rng.below(4), 1 + rng.below(4), 2 + rng.below(3)
            yield core_satellite(c, s, eta), f"core-satellite {c} {s} {eta}", ()
        else:
            raise ValueError(f"unknown verify family {family!r}")


VERIFY_FAMILIES = ("qt", "chordal", "kt-split", "threshold", "windmill", "core-satellite")


def run_suite(
    family: str,
    count: int,
    max_n: int,
    seed: int,
    out_dir: Path | None = None,
    progress: Callable[[int], None] | None = None,
) -> SuiteResult:
    result = SuiteResult(family)
    rng = SplitMix64(seed)
    for i, (g, label, params) in enumerate(_instances(family, count, max_n, rng)):
        assert is_connected(g)
        s = graph_spectrum(g)
        props = dict(check_hierarchy(g))
        if family == "kt-split":
            props.update(check_kt_split(g, *params, s=s))
        else:
            props.update(check_chordal(g, s))
        if family in ("qt", "threshold", "windmill", "core-satellite"):
            props.update(check_quasi_threshold(g, s))
        if family == "threshold":
            props.update(check_threshold(g))
        result.record(props, i, g, out_dir, label)
        if progress:
            progress(i)
    return result
