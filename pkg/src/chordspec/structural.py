"""Class recognizers and structure-only Laplacian eigenvalue predictors.

Nothing in this module calls an eigensolver.  Every predictor returns a list
of :class:`PredictedEigenvalue` records; :func:`as_multiset` folds them into a
``{value: multiplicity}`` map for comparison with the numerical oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

from .chordal import (
    ChordalDecomposition,
    ClassificationError,
    PreconditionError,
    decompose,
    is_chordal,
    simplicial_vertices,
)
from .graph import Graph, connected_components, induced_subgraph, is_connected, laplacian_apply

PROVENANCE = (
    "nonSimplicialDegree",
    "cliqueSimplicials",
    "separatorMultiplicity",
    "treeInternalDegree",
    "treeDepth",
    "ktSplit",
    "theorem8",
    "zero",
)


@dataclass(frozen=True)
class PredictedEigenvalue:
    value: int
    multiplicity: int
    provenance: str
    witness: Any = None
    # (plus, minus) vertex pairs, one per eigenvector, for clique-size predictions
    vectors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("a prediction needs multiplicity >= 1")
        if self.provenance not in PROVENANCE:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "value": self.value,
            "multiplicity": self.multiplicity,
            "provenance": self.provenance,
        }
        if self.witness is not None:
            w = self.witness
            out["witness"] = sorted(w) if isinstance(w, (set, frozenset, tuple, list)) else w
        if self.vectors:
            out["vectors"] = [{"plus": p, "minus": q} for p, q in self.vectors]
        return out


def as_multiset(preds: Iterable[PredictedEigenvalue]) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in preds:
        out[p.value] = out.get(p.value, 0) + p.multiplicity
    return dict(sorted(out.items()))


def is_submultiset(small: dict[int, int], big: dict[int, int]) -> bool:
    return all(big.get(k, 0) >= c for k, c in small.items())


# -- kappa(G) = a(G) --------------------------------------------------------

def check_kappa_equals_a(g: Graph, d: ChordalDecomposition) -> tuple[bool, frozenset[int] | None]:
    """Structural test for equal vertex and algebraic connectivity.

    Intersects the distinct minimal vertex separators; the answer is yes iff
    that intersection is itself a separator made of universal vertices.
    """
    if not d.separators:
        raise PreconditionError("kappa = a test excludes complete graphs")
    inter = set(d.separators[0])
    for s in d.separators[1:]:
        inter &= s
    inter = frozenset(inter)
    if inter in d.multiplicity and all(len(g.adjacency[v]) == g.n - 1 for v in inter):
        return True, inter
    return False, None


# -- quasi-threshold graphs -------------------------------------------------

@dataclass(frozen=True)
class TreeRepresentation:
    root: int
    parent: tuple[int, ...]  # -1 at the root
    depth: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]

    @property
    def child_count(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.children)

    def leaves(self) -> list[int]:
        return [v for v, c in enumerate(self.children) if not c]

    def root_to_leaf_paths(self) -> list[list[int]]:
        paths = []
        for leaf in self.leaves():
            path = [leaf]
            while self.parent[path[-1]] >= 0:
                path.append(self.parent[path[-1]])
            paths.append(path[::-1])
        return paths

    def closure_edges(self) -> list[tuple[int, int]]:
        edges = []
        for v in range(len(self.parent)):
            u = self.parent[v]
            while u >= 0:
                edges.append((min(u, v), max(u, v)))
                u = self.parent[u]
        return sorted(edges)

    def to_json(self) -> dict[str, Any]:
        return {"root": self.root, "parent": list(self.parent), "depth": list(self.depth)}


def nested_neighborhoods(g: Graph) -> bool:
    """Every edge ``uv`` has ``N[u]`` inside ``N[v]`` or the reverse."""
    nb = g.neighbor_sets
    for u, v in g.edges():
        a, b = (u, v) if len(nb[u]) <= len(nb[v]) else (v, u)
        # N[a] within N[b]: b is in N[a] already, so check N(a) - {b} within N(b) + {b}
        if any(w != b and w not in nb[b] for w in nb[a]):
            return False
    return True


def recognize_quasi_threshold(g: Graph) -> TreeRepresentation | None:
    """Yan-Chen-Chang tree representation, or ``None`` if ``g`` is not quasi-threshold.

    Step 1 orients each edge towards the endpoint of lower degree (equal
    degrees: towards the larger id).  Step 2 gives each vertex the in-neighbour
    of least degree as parent (ties: largest id), i.e. its deepest ancestor.
    The candidate tree is accepted only if its ancestor relation reproduces
    ``g`` exactly, checked in O(n + m) with DFS intervals and degree counts.
    """
    if not is_connected(g):
        raise PreconditionError("recognize_quasi_threshold needs a connected graph")
    n = g.n
    deg = g.degrees
    parent = [-1] * n
    for w in range(n):
        best = -1
        dw = deg[w]
        for v in g.adjacency[w]:
            dv = deg[v]
            if dv > dw or (dv == dw and v < w):
                if best < 0 or dv < deg[best] or (dv == deg[best] and v > best):
                    best = v
        parent[w] = best
    roots = [v for v in range(n) if parent[v] < 0]
    if len(roots) != 1:
        return None
    root = roots[0]
    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        if parent[v] >= 0:
            children[parent[v]].append(v)

    depth = [0] * n
    tin = [0] * n
    tout = [0] * n
    size = [1] * n
    clock = 0
    stack = [(root, 0)]
    seen = 0
    while stack:
        v, i = stack.pop()
        if i == 0:
            tin[v] = clock
            clock += 1
            seen += 1
        if i < len(children[v]):
            stack.append((v, i + 1))
            c = children[v][i]
            depth[c] = depth[v] + 1
            stack.append((c, 0))
        else:
            tout[v] = clock
            if parent[v] >= 0:
                size[parent[v]] += size[v]
    if seen != n:
        return None
    for v in range(n):
        if deg[v] != depth[v] + size[v] - 1:
            return None
        for w in g.adjacency[v]:
            if not (tin[v] <= tin[w] < tout[v] or tin[w] <= tin[v] < tout[w]):
                return None
    return TreeRepresentation(
        root=root,
        parent=tuple(parent),
        depth=tuple(depth),
        children=tuple(tuple(sorted(c)) for c in children),
    )


def qt_spectrum_bapat(g: Graph, t: TreeRepresentation) -> list[PredictedEigenvalue]:
    """Spectrum of a connected quasi-threshold graph read off its rooted tree.

    Each vertex with children contributes ``deg + 1`` once and ``depth + 1``
    with multiplicity ``children - 1``; zero closes the list.
    """
    preds = []
    for u, kids in enumerate(t.children):
        if not kids:
            continue
        preds.append(PredictedEigenvalue(g.degrees[u] + 1, 1, "treeInternalDegree", u))
        if len(kids) > 1:
            preds.append(PredictedEigenvalue(t.depth[u] + 1, len(kids) - 1, "treeDepth", u))
    preds.append(PredictedEigenvalue(0, 1, "zero"))
    return preds


def qt_spectrum_structural(g: Graph, d: ChordalDecomposition) -> list[PredictedEigenvalue]:
    """Spectrum of a connected quasi-threshold graph from cliques and separators.

    Non-simplicial vertices give ``deg + 1``; a clique with ``p`` simplicial
    vertices gives its size ``p - 1`` times; each separator gives its size
    once per occurrence in the separator multiset.
    """
    if recognize_quasi_threshold(g) is None:
        raise ClassificationError("graph is not quasi-threshold")
    preds = [
        PredictedEigenvalue(g.degrees[v] + 1, 1, "nonSimplicialDegree", v)
        for v in range(g.n)
        if len(d.vertex_cliques[v]) > 1
    ]
    for i, (q, simp) in enumerate(zip(d.cliques, d.simp)):
        if len(simp) > 1:
            preds.append(PredictedEigenvalue(len(q), len(simp) - 1, "cliqueSimplicials", i))
    for s in d.separators:
        preds.append(PredictedEigenvalue(len(s), d.multiplicity[s], "separatorMultiplicity", s))
    preds.append(PredictedEigenvalue(0, 1, "zero"))
    return preds


def lemma_violations(
    g: Graph, d: ChordalDecomposition, t: TreeRepresentation | None = None
) -> list[str]:
    """Structural facts every connected quasi-threshold graph must satisfy.

    Returns human-readable violations; an empty list means all checks pass.
    """
    if t is None:
        t = recognize_quasi_threshold(g)
        if t is None:
            raise ClassificationError("graph is not quasi-threshold")
    problems = []
    simplicial = simplicial_vertices(g, d)
    for i, simp in enumerate(d.simp):
        if not simp:
            problems.append(f"clique {i} has no simplicial vertex")
    for i, q in enumerate(d.cliques):
        qs = set(q)
        inside = sorted((s for s in d.separators if s <= qs), key=len)
        for a, b in zip(inside, inside[1:]):
            if not a < b:
                problems.append(f"separators {sorted(a)} and {sorted(b)} in clique {i} are not nested")
    cliques = {frozenset(q) for q in d.cliques}
    for path in t.root_to_leaf_paths():
        if frozenset(path) not in cliques:
            problems.append(f"tree path {path} is not a maximal clique")
        flags = [v in simplicial for v in path]
        first = flags.index(True) if True in flags else len(flags)
        if not all(flags[first:]):
            problems.append(f"simplicial vertices on path {path} are not a suffix")
    for leaf in t.leaves():
        if leaf not in simplicial:
            problems.append(f"tree leaf {leaf} is not simplicial")
    return problems


def lemma_checks(g: Graph, d: ChordalDecomposition, t: TreeRepresentation | None = None) -> bool:
    return not lemma_violations(g, d, t)


# -- (k,t)-split graphs -----------------------------------------------------

def is_split(g: Graph) -> bool:
    """Hammer-Simeone degree-sequence test."""
    ds = sorted(g.degrees, reverse=True)
    m = max((i for i in range(1, g.n + 1) if ds[i - 1] >= i - 1), default=0)
    return sum(ds[:m]) == m * (m - 1) + sum(ds[m:])


@dataclass(frozen=True)
class KTSplitStructure:
    k: int
    t: int
    r: int
    separators: tuple[tuple[int, ...], ...]
    twin_classes: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return (self.k + self.t) * self.r

    def to_json(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "t": self.t,
            "r": self.r,
            "separators": [list(s) for s in self.separators],
            "twin_classes": [list(a) for a in self.twin_classes],
        }


def recognize_kt_split(g: Graph, d: ChordalDecomposition) -> KTSplitStructure | None:
    """Recover ``(k, t, r)`` and the separator/twin-class layout, if present."""
    if not is_split(g):
        raise ClassificationError("graph is not a split graph")
    seps = sorted((tuple(sorted(s)) for s in d.separators), key=lambda s: s[0]) if d.separators else []
    if not seps:
        return None
    k = len(seps[0])
    if any(len(s) != k for s in seps):
        return None
    covered = {v for s in seps for v in s}
    if len(covered) != k * len(seps):
        return None
    simplicial = simplicial_vertices(g, d)
    by_nbhd: dict[frozenset[int], list[int]] = {}
    for v in sorted(simplicial):
        by_nbhd.setdefault(g.neighbor_sets[v], []).append(v)
    classes = [tuple(by_nbhd.get(frozenset(s), ())) for s in seps]
    t = len(classes[0])
    if t == 0 or any(len(a) != t for a in classes):
        return None
    if sum(len(a) for a in classes) != len(simplicial):
        return None
    r = len(seps)
    if g.n != (k + t) * r:
        return None
    # both sides of the degree partition are regular
    if any(g.degrees[v] != k for v in simplicial):
        return None
    if any(g.degrees[v] != r * k + t - 1 for v in covered):
        return None
    return KTSplitStructure(k, t, r, tuple(seps), tuple(classes))


def kt_split_partial_spectrum(s: KTSplitStructure) -> list[PredictedEigenvalue]:
    """Integer eigenvalues guaranteed for a (k,t)-split graph (all of them when r = 1)."""
    k, t, r = s.k, s.t, s.r
    families = [
        (0, 1, "zero"),
        (k, r * (t - 1), "ktSplit"),
        (r * k + t, r * (k - 1), "ktSplit"),
        (k + t, 1, "ktSplit"),
    ]
    return [PredictedEigenvalue(v, mult, tag) for v, mult, tag in families if mult > 0]


# -- clique sizes from simplicial vertices ---------------------------------

def theorem8_predictions(g: Graph, d: ChordalDecomposition) -> list[PredictedEigenvalue]:
    """Clique size ``|Q|`` with multiplicity ``p - 1`` for cliques with ``p >= 2`` simplicials.

    Eigenvectors are ``e_u - e_w`` where ``u`` is the clique's lowest-id
    simplicial vertex and ``w`` ranges over the others.
    """
    preds = []
    for i, (q, simp) in enumerate(zip(d.cliques, d.simp)):
        if len(simp) >= 2:
            anchor = simp[0]
            vecs = tuple((anchor, w) for w in simp[1:])
            preds.append(PredictedEigenvalue(len(q), len(simp) - 1, "theorem8", i, vecs))
    return preds


def eigenvector_residual(g: Graph, plus: int, minus: int, value: int) -> list[int]:
    """Exact integer ``L y - value * y`` for ``y = e_plus - e_minus``."""
    y = [0] * g.n
    y[plus] = 1
    y[minus] = -1
    Ly = laplacian_apply(g, y)
    return [a - value * b for a, b in zip(Ly, y)]


def verify_theorem8(g: Graph, preds: list[PredictedEigenvalue]) -> bool:
    """All emitted vectors are exact eigenvectors and independent within a clique."""
    for p in preds:
        if len(p.vectors) != p.multiplicity:
            return False
        plus = {a for a, _ in p.vectors}
        minus = [b for _, b in p.vectors]
        if len(plus) != 1 or len(set(minus)) != len(minus) or plus & set(minus):
            return False
        for a, b in p.vectors:
            if any(eigenvector_residual(g, a, b, p.value)):
                return False
    return True


# -- classification ---------------------------------------------------------

CLASSES = (
    "chordal",
    "split",
    "a_eq_kappa",
    "quasi_threshold",
    "threshold",
    "kt_split",
    "generalized_core_satellite",
    "core_satellite",
    "split_complete",
    "windmill",
)

# (subclass, superclass) pairs of the chordal hierarchy
HIERARCHY = (
    ("split", "chordal"),
    ("a_eq_kappa", "chordal"),
    ("quasi_threshold", "a_eq_kappa"),
    ("quasi_threshold", "chordal"),
    ("threshold", "split"),
    ("threshold", "quasi_threshold"),
    ("kt_split", "split"),
    ("split_complete", "kt_split"),
    ("split_complete", "threshold"),
    ("generalized_core_satellite", "quasi_threshold"),
    ("split_complete", "generalized_core_satellite"),
    ("windmill", "generalized_core_satellite"),
    ("core_satellite", "generalized_core_satellite"),
    ("windmill", "core_satellite"),
    ("split_complete", "core_satellite"),
)


def threshold_sequence(g: Graph) -> str | None:
    """0/1 construction sequence if ``g`` is threshold, found by peeling.

    Repeatedly removes an isolated or a universal vertex of what remains;
    buckets by current degree keep the whole pass O(n + m).
    """
    n = g.n
    deg = list(g.degrees)
    alive = [True] * n
    buckets: dict[int, set[int]] = {}
    for v in range(n):
        buckets.setdefault(deg[v], set()).add(v)
    bits = []
    for rem in range(n, 0, -1):
        if buckets.get(0):
            v, bit = min(buckets[0]), "0"
        elif buckets.get(rem - 1):
            v, bit = min(buckets[rem - 1]), "1"
        else:
            return None
        buckets[deg[v]].discard(v)
        alive[v] = False
        for w in g.adjacency[v]:
            if alive[w]:
                buckets[deg[w]].discard(w)
                deg[w] -= 1
                buckets.setdefault(deg[w], set()).add(w)
        bits.append("0" if rem == 1 else bit)
    return "".join(reversed(bits))


def is_threshold(g: Graph) -> bool:
    return threshold_sequence(g) is not None


def _universal(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degrees[v] == g.n - 1]


def core_satellite_params(g: Graph) -> tuple[int, int, int] | None:
    """``(c, s, eta)`` if ``g`` is ``K_c`` joined to ``eta >= 2`` disjoint copies of ``K_s``."""
    core = _universal(g)
    if not core or len(core) == g.n:
        return None
    core_set = set(core)
    rest = [v for v in range(g.n) if v not in core_set]
    h = induced_subgraph(g, rest)
    comps = connected_components(h)
    sizes = {len(c) for c in comps}
    if len(sizes) != 1 or len(comps) < 2:
        return None
    s = sizes.pop()
    if h.m != len(comps) * s * (s - 1) // 2:
        return None
    return len(core), s, len(comps)


def is_split_complete(g: Graph) -> bool:
    core = _universal(g)
    if not core or len(core) == g.n:
        return False
    core_set = set(core)
    return all(w in core_set for v in range(g.n) if v not in core_set for w in g.adjacency[v])


@dataclass
class Classification:
    classes: dict[str, bool]
    complete: bool
    details: dict[str, Any] = field(default_factory=dict)

    def __getitem__(self, name: str) -> bool:
        return self.classes[name]

    def violations(self) -> list[tuple[str, str]]:
        bad = []
        for sub, sup in HIERARCHY:
            # complete graphs sit outside the kappa = a theorem
            if self.complete and sup == "a_eq_kappa":
                continue
            if self.classes[sub] and not self.classes[sup]:
                bad.append((sub, sup))
        return bad

    def to_json(self) -> dict[str, Any]:
        return {"complete": self.complete, **{c: self.classes[c] for c in CLASSES}, **self.details}


def classify(g: Graph, d: ChordalDecomposition | None = None) -> Classification:
    """Membership in every class of the chordal hierarchy, each tested independently."""
    if not is_connected(g):
        raise PreconditionError("classify needs a connected graph")
    classes = dict.fromkeys(CLASSES, False)
    if d is None:
        if not is_chordal(g):
            return Classification(classes, complete=False)
        d = decompose(g)
    classes["chordal"] = True
    complete = not d.separators
    details: dict[str, Any] = {}
    classes["split"] = is_split(g)
    if not complete:
        ok, witness = check_kappa_equals_a(g, d)
        classes["a_eq_kappa"] = ok
        if ok:
            details["kappa_witness"] = sorted(witness)
    classes["quasi_threshold"] = recognize_quasi_threshold(g) is not None
    seq = threshold_sequence(g)
    classes["threshold"] = seq is not None
    if seq is not None:
        details["threshold_sequence"] = seq
    if classes["split"]:
        kt = recognize_kt_split(g, d)
        if kt is not None:
            classes["kt_split"] = True
            details["kt"] = [kt.k, kt.t, kt.r]
    classes["generalized_core_satellite"] = len(d.separators) == 1
    cs = core_satellite_params(g)
    if cs is not None:
        classes["core_satellite"] = True
        classes["windmill"] = cs[0] == 1
        details["core_satellite_params"] = list(cs)
    classes["split_complete"] = is_split_complete(g)
    return Classification(classes, complete, details)
