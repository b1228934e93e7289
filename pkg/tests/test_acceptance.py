"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

The lines are repeated in the pytest terminal summary.
"""
from __future__ import annotations

import itertools
import time

import numpy as np

from chordspec import load_fixture
from chordspec.bench import best_time_ms, structural_pipeline
from chordspec.chordal import decompose, vertex_connectivity_chordal
from chordspec.generators import (
    core_satellite,
    kt_split_graph,
    random_chordal,
    random_quasi_threshold,
    split_complete,
    threshold_from_sequence,
    windmill,
)
from chordspec.graph import complete_graph, disjoint_union, join, laplacian
from chordspec.oracle import algebraic_connectivity, eigenvalues, graph_spectrum, integer_eigenvalues
from chordspec.prng import SplitMix64
from chordspec.report import analyze_graph
from chordspec.structural import (
    KTSplitStructure,
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
    threshold_sequence,
    verify_theorem8,
)
from chordspec.verification import check_threshold, clique_tree_subtree_property, matches_integer_spectrum

from conftest import SIX_CLIQUES_SPECTRUM, VERDICTS


def verdict(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'} ({detail})"
    VERDICTS.append(line)
    print("\n" + line)
    assert ok, detail


def _chordal_instances(count: int, max_n: int, seed: int, non_complete: bool = True, cones: bool = False):
    """Seeded random chordal graphs.

    With ``cones`` every other graph is a small clique joined to two disjoint
    random chordal pieces, so that a universal separator exists.
    """
    rng = SplitMix64(seed)
    out = []
    while len(out) < count:
        if cones and len(out) % 2 == 1:
            c = 1 + rng.below(3)
            n1 = 1 + rng.below((max_n - c) // 2)
            n2 = 1 + rng.below((max_n - c) // 2)
            pieces = disjoint_union(
                random_chordal(n1, rng.random(), rng.next_u64()), random_chordal(n2, rng.random(), rng.next_u64())
            )
            g = join(complete_graph(c), pieces)
        else:
            n = 2 + rng.below(max_n - 1)
            g = random_chordal(n, rng.random(), rng.next_u64())
        if non_complete and g.m == g.n * (g.n - 1) // 2:
            continue
        out.append(g)
    return out


def test_1_six_clique_regression():
    g = load_fixture("six_cliques")
    t0 = time.perf_counter()
    report = analyze_graph(g)
    d = decompose(g)
    preds = as_multiset(theorem8_predictions(g, d))
    s = graph_spectrum(g)
    elapsed = time.perf_counter() - t0
    worst = max(abs(a - b) for a, b in zip(s.values, SIX_CLIQUES_SPECTRUM))
    groups = integer_eigenvalues(s)
    ok = (
        worst <= 5e-6
        and preds == {4: 3, 5: 1, 6: 1}
        and is_submultiset(preds, groups)
        and report["status"] == "ok"
        and elapsed < 1.0
    )
    verdict(1, "16-vertex regression", ok, f"max |dev| {worst:.2e}, predictions {preds}, {elapsed * 1000:.0f} ms")


def test_2_kt_split_regression():
    g = load_fixture("kt_split_2_3_3")
    t0 = time.perf_counter()
    st = recognize_kt_split(g, decompose(g))
    pred = as_multiset(kt_split_partial_spectrum(st))
    groups = integer_eigenvalues(graph_spectrum(g), 1e-6)
    elapsed = time.perf_counter() - t0
    ok = (
        (st.k, st.t, st.r) == (2, 3, 3)
        and pred == {0: 1, 2: 6, 9: 3, 5: 1}
        and sum(pred.values()) == g.n - 2 * st.r + 2 == 11
        and is_submultiset(pred, groups)
        and elapsed < 1.0
    )
    verdict(2, "(2,3,3)-split regression", ok, f"structure {(st.k, st.t, st.r)}, predicted {pred}, {elapsed * 1000:.0f} ms")


def test_3_quasi_threshold_equivalence():
    rng = SplitMix64(3)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(200):
        g = random_quasi_threshold(1 + rng.below(200), rng.next_u64())
        t = recognize_quasi_threshold(g)
        bapat = as_multiset(qt_spectrum_bapat(g, t))
        structural = as_multiset(qt_spectrum_structural(g, decompose(g)))
        if bapat != structural or not matches_integer_spectrum(graph_spectrum(g), structural, 1e-6):
            bad += 1
    elapsed = time.perf_counter() - t0
    verdict(3, "quasi-threshold equivalence", bad == 0 and elapsed < 60, f"{bad}/200 mismatches, {elapsed:.1f} s")


def test_4_kappa_equals_a_soundness():
    disagree = 0
    instances = _chordal_instances(200, 60, seed=4, cones=True)
    for g in instances:
        d = decompose(g)
        ok, _ = check_kappa_equals_a(g, d)
        a = algebraic_connectivity(graph_spectrum(g))
        if ok != (abs(a - vertex_connectivity_chordal(g, d)) < 1e-7):
            disagree += 1
    holds = sum(check_kappa_equals_a(g, decompose(g))[0] for g in instances)
    verdict(4, "kappa = a soundness", disagree == 0, f"{disagree}/200 disagreements, {holds} graphs with kappa = a")


def test_5_split_complete_spectrum():
    bad = []
    for k, t in itertools.product(range(1, 7), repeat=2):
        g = split_complete(k, t)
        # t = 1 gives K_{k+1}; build the structure directly there
        st = KTSplitStructure(k, t, 1, (tuple(range(k)),), (tuple(range(k, k + t)),))
        pred = as_multiset(kt_split_partial_spectrum(st))
        expected = {0: 1}
        for v, c in ((k, t - 1), (k + t, k)):
            if c:
                expected[v] = expected.get(v, 0) + c
        if pred != dict(sorted(expected.items())) or not matches_integer_spectrum(graph_spectrum(g), pred, 1e-6):
            bad.append((k, t))
    verdict(5, "split-complete full spectrum", not bad, f"36 cases, failures {bad}")


def test_6_clique_eigenvectors_exact():
    graphs = [load_fixture(name) for name in ("kappa_a_1", "kappa_a_2", "kappa_a_3", "windmill_4_3",
                                              "split_complete_2_5", "core_satellite_2_3_2",
                                              "kt_split_2_3_3", "six_cliques")]
    graphs += _chordal_instances(100, 100, seed=6, non_complete=False)
    vectors = 0
    bad = 0
    for g in graphs:
        preds = theorem8_predictions(g, decompose(g))
        L = laplacian(g)
        good = verify_theorem8(g, preds)
        for p in preds:
            Y = np.zeros((g.n, p.multiplicity), dtype=np.int64)
            for j, (a, b) in enumerate(p.vectors):
                Y[a, j], Y[b, j] = 1, -1
            vectors += p.multiplicity
            good &= bool((L @ Y == p.value * Y).all()) and np.linalg.matrix_rank(Y) == p.multiplicity
        bad += not good
    verdict(6, "exact clique eigenvectors", bad == 0, f"{len(graphs)} graphs, {vectors} vectors, {bad} failures")


def test_7_structural_invariants():
    failures = []
    checked = 0

    def common(g, label):
        nonlocal checked
        checked += 1
        d = decompose(g)
        if sum(d.multiplicity.values()) != d.num_cliques - 1:
            failures.append((label, "separator multiplicity sum"))
        if not clique_tree_subtree_property(d):
            failures.append((label, "clique-tree subtree"))
        if classify(g, d).violations():
            failures.append((label, "hierarchy"))
        t = recognize_quasi_threshold(g)
        if t is not None and lemma_violations(g, d, t):
            failures.append((label, "lemmas"))
        return d

    for k, l in itertools.product(range(2, 7), repeat=2):
        g = windmill(k, l)
        common(g, f"windmill {k} {l}")
        if not classify(g)["windmill"]:
            failures.append((f"windmill {k} {l}", "round trip"))
    for c, s, eta in itertools.product(range(1, 5), range(1, 5), range(2, 5)):
        g = core_satellite(c, s, eta)
        common(g, f"core-satellite {c} {s} {eta}")
        if classify(g).details.get("core_satellite_params") != [c, s, eta]:
            failures.append((f"core-satellite {c} {s} {eta}", "round trip"))
    for k, t, r in itertools.product(range(1, 6), repeat=3):
        g = kt_split_graph(k, t, r)
        common(g, f"kt-split {k} {t} {r}")
        if (t, r) == (1, 1):
            continue  # K_{k+1}, outside the class
        st = recognize_kt_split(g, decompose(g))
        if st is None or (st.k, st.t, st.r) != (k, t, r):
            failures.append((f"kt-split {k} {t} {r}", "round trip"))
    for length in range(1, 13):
        for bits in itertools.product("01", repeat=max(length - 2, 0)):
            seq = "0" if length == 1 else "0" + "".join(bits) + "1"
            g = threshold_from_sequence(seq)
            common(g, f"threshold {seq}")
            if threshold_sequence(g) != seq:
                failures.append((f"threshold {seq}", "round trip"))
            if not all(check_threshold(g).values()):
                failures.append((f"threshold {seq}", "separator chain"))
    verdict(7, "structural invariant suite", not failures, f"{checked} graphs, failures {failures[:5]}")


def test_8_scaling():
    structural = {}
    for n in (10_000, 20_000):
        g = random_quasi_threshold(n, 8)
        structural[n] = best_time_ms(lambda: structural_pipeline(g), 5)
    eigenvalues(np.array([[1.0, -1.0], [-1.0, 1.0]]))  # warm the compiled kernels
    oracle = {}
    for n in (256, 512):
        L = laplacian(random_quasi_threshold(n, 8))
        oracle[n] = best_time_ms(lambda: eigenvalues(L), 1)
    s_ratio = structural[20_000] / structural[10_000]
    o_ratio = oracle[512] / oracle[256]
    verdict(
        8,
        "scaling",
        s_ratio <= 3.0 and o_ratio >= 6.0,
        f"structural x{s_ratio:.2f} from 1e4 to 2e4 ({structural[10_000]:.0f} -> {structural[20_000]:.0f} ms), "
        f"oracle x{o_ratio:.1f} from 256 to 512 ({oracle[256]:.0f} -> {oracle[512]:.0f} ms)",
    )
