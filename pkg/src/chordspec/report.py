"""Analysis reports and their canonical JSON text.

Canonical form: object keys sorted, two-space indent, every float written
with exactly nine decimals.  Parsing a report and dumping it again is
byte-identical.  Vertex ids in reports are the 1-based labels of the
edge-list file.
"""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from typing import Any, Iterator

from .chordal import decompose, is_perfect_elimination_order, mcs_order, vertex_connectivity_chordal
from .graph import Graph, connected_components, induced_subgraph
from .oracle import (
    FIEDLER_TOL,
    INTEGER_TOL,
    JacobiError,
    algebraic_connectivity,
    graph_spectrum,
    integer_eigenvalues,
)
from .structural import (
    PredictedEigenvalue,
    as_multiset,
    check_kappa_equals_a,
    classify,
    is_submultiset,
    kt_split_partial_spectrum,
    qt_spectrum_bapat,
    qt_spectrum_structural,
    recognize_kt_split,
    recognize_quasi_threshold,
    theorem8_predictions,
    verify_theorem8,
)
from .verification import matches_integer_spectrum

SCHEMA = 1
ORACLE_LIMIT = 2000


def _dump(obj: Any, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        text = f"{obj:.9f}"
        return "0.000000000" if text == "-0.000000000" else text
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_dump(obj[k], indent + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in obj):
            return "[" + ", ".join(_dump(x, 0) for x in obj) + "]"
        return "[\n" + ",\n".join(inner + _dump(x, indent + 1) for x in obj) + "\n" + pad + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def canonical_dumps(obj: Any) -> str:
    return _dump(obj, 0) + "\n"


@contextmanager
def _timer(timings: dict[str, float], stage: str) -> Iterator[None]:
    t0 = time.perf_counter()
    yield
    timings[stage] = timings.get(stage, 0.0) + (time.perf_counter() - t0) * 1000.0


def _multiset_json(ms: dict[int, int]) -> list[dict[str, int]]:
    return [{"value": v, "multiplicity": c} for v, c in ms.items()]


def _prediction_json(preds: list[PredictedEigenvalue], label, clique_witness: bool = False) -> list[dict]:
    out = []
    for p in preds:
        d = p.to_json()
        if "witness" in d:
            if clique_witness:
                d["clique"] = d.pop("witness")
            elif isinstance(d["witness"], list):
                d["witness"] = [label(v) for v in d["witness"]]
            else:
                d["witness"] = label(d["witness"])
        if "vectors" in d:
            d["vectors"] = [{"plus": label(v["plus"]), "minus": label(v["minus"])} for v in d["vectors"]]
        out.append(d)
    return out


def analyze_component(
    g: Graph,
    original: list[int],
    *,
    run_oracle: bool = True,
    tol: float = INTEGER_TOL,
    force_oracle: bool = False,
) -> dict[str, Any]:
    """Report for one connected graph; ``original[i]`` is vertex ``i``'s 0-based input id."""

    def label(v: int) -> int:
        return original[v] + 1

    timings: dict[str, float] = {}
    notes: list[str] = []
    rep: dict[str, Any] = {"vertices": [label(v) for v in range(g.n)], "n": g.n, "m": g.m}

    with _timer(timings, "chordality"):
        order = mcs_order(g)
        chordal = is_perfect_elimination_order(g, order[::-1])
    rep["chordal"] = chordal
    if not chordal:
        with _timer(timings, "classify"):
            rep["classification"] = classify(g).to_json()
        rep.update(decomposition=None, predictions={}, spectrum=None, verification=None)
        notes.append("not chordal: classification only")
        rep["notes"] = notes
        rep["timings_ms"] = timings
        return rep

    with _timer(timings, "decompose"):
        d = decompose(g)
    dec = d.to_json()
    rep["decomposition"] = {
        "cliques": [[label(v) for v in q] for q in dec["cliques"]],
        "separators": [
            {"vertices": [label(v) for v in s["vertices"]], "multiplicity": s["multiplicity"]}
            for s in dec["separators"]
        ],
        "simplicial": [label(v) for v in dec["simplicial"]],
        "kappa": vertex_connectivity_chordal(g, d),
    }

    with _timer(timings, "classify"):
        cls = classify(g, d)
    cjson = cls.to_json()
    if "kappa_witness" in cjson:
        cjson["kappa_witness"] = [label(v) for v in cjson["kappa_witness"]]
    rep["classification"] = cjson

    predictions: dict[str, Any] = {}
    multisets: dict[str, dict[int, int]] = {}
    with _timer(timings, "predict"):
        t8 = theorem8_predictions(g, d)
        predictions["theorem8"] = _prediction_json(t8, label, clique_witness=True)
        multisets["theorem8"] = as_multiset(t8)
        if d.separators:
            ok, witness = check_kappa_equals_a(g, d)
            predictions["kappa_equals_a"] = {
                "holds": ok,
                "witness": [label(v) for v in sorted(witness)] if witness else None,
            }
        tree = recognize_quasi_threshold(g)
        if tree is not None:
            bapat = qt_spectrum_bapat(g, tree)
            structural = qt_spectrum_structural(g, d)
            predictions["qt_bapat"] = _prediction_json(bapat, label)
            predictions["qt_structural"] = _prediction_json(structural, label)
            multisets["qt_bapat"] = as_multiset(bapat)
            multisets["qt_structural"] = as_multiset(structural)
        if cls["split"]:
            kt = recognize_kt_split(g, d)
            if kt is not None:
                ktp = kt_split_partial_spectrum(kt)
                predictions["kt_split"] = {
                    "structure": {
                        "k": kt.k,
                        "t": kt.t,
                        "r": kt.r,
                        "separators": [[label(v) for v in s] for s in kt.separators],
                        "twin_classes": [[label(v) for v in a] for a in kt.twin_classes],
                    },
                    "eigenvalues": _prediction_json(ktp, label),
                }
                multisets["kt_split"] = as_multiset(ktp)
    for name, ms in multisets.items():
        if name == "kt_split":
            predictions["kt_split"]["multiset"] = _multiset_json(ms)
        else:
            predictions[f"{name}_multiset"] = _multiset_json(ms)
    rep["predictions"] = predictions

    spectrum = None
    if run_oracle and (g.n <= ORACLE_LIMIT or force_oracle):
        with _timer(timings, "oracle"):
            try:
                spectrum = graph_spectrum(g)
            except JacobiError as exc:
                notes.append(f"oracle failed: {exc}")
    elif run_oracle:
        notes.append(f"oracle skipped: n = {g.n} > {ORACLE_LIMIT} (use --force-oracle)")
    rep["spectrum"] = spectrum.to_json(tol) if spectrum is not None else None

    if spectrum is None:
        rep["verification"] = None
    else:
        with _timer(timings, "verify"):
            rep["verification"] = _verify(g, d, spectrum, multisets, predictions, t8, tol)

    rep["notes"] = notes
    rep["timings_ms"] = timings
    return rep


def _verify(g, d, spectrum, multisets, predictions, t8, tol) -> dict[str, Any]:
    groups = integer_eigenvalues(spectrum, tol)
    v: dict[str, Any] = {}
    v["theorem8"] = {
        "contained": is_submultiset(multisets["theorem8"], groups),
        "eigenvectors_exact": verify_theorem8(g, t8),
        "observed": _multiset_json({k: groups.get(k, 0) for k in multisets["theorem8"]}),
    }
    if "kappa_equals_a" in predictions:
        kappa = vertex_connectivity_chordal(g, d)
        a = algebraic_connectivity(spectrum)
        numeric = abs(a - kappa) < FIEDLER_TOL
        v["kappa_equals_a"] = {
            "structural": predictions["kappa_equals_a"]["holds"],
            "numerical": numeric,
            "agree": predictions["kappa_equals_a"]["holds"] == numeric,
            "algebraic_connectivity": a,
            "kappa": kappa,
        }
        v["fiedler_bound"] = {"holds": a <= kappa + FIEDLER_TOL}
    for name in ("qt_bapat", "qt_structural"):
        if name in multisets:
            v[name] = {"equals_oracle": matches_integer_spectrum(spectrum, multisets[name], tol)}
    if "qt_bapat" in multisets:
        v["qt_bapat"]["equals_structural"] = multisets["qt_bapat"] == multisets["qt_structural"]
    if "kt_split" in multisets:
        kt = predictions["kt_split"]["structure"]
        entry = {"contained": is_submultiset(multisets["kt_split"], groups)}
        if kt["r"] == 1:
            entry["full_spectrum"] = matches_integer_spectrum(spectrum, multisets["kt_split"], tol)
        v["kt_split"] = entry
    return v


def verdicts_ok(verification: dict[str, Any] | None) -> bool:
    if not verification:
        return True
    for entry in verification.values():
        for key, val in entry.items():
            if key in ("contained", "eigenvectors_exact", "agree", "holds", "equals_oracle",
                       "equals_structural", "full_spectrum") and val is False:
                return False
    return True


def analyze_graph(
    g: Graph,
    *,
    path: str | None = None,
    run_oracle: bool = True,
    tol: float = INTEGER_TOL,
    force_oracle: bool = False,
) -> dict[str, Any]:
    comps = connected_components(g)
    components = []
    for comp in comps:
        sub = induced_subgraph(g, comp)
        components.append(
            analyze_component(sub, comp, run_oracle=run_oracle, tol=tol, force_oracle=force_oracle)
        )
    report = {
        "schema": SCHEMA,
        "input": {"path": path, "n": g.n, "m": g.m, "connected": len(comps) <= 1, "components": len(comps)},
        "oracle": {"enabled": run_oracle, "tolerance": repr(tol)},
        "components": components,
    }
    report["status"] = "ok" if all(verdicts_ok(c["verification"]) for c in components) else "mismatch"
    return report


def summary_text(report: dict[str, Any]) -> str:
    inp = report["input"]
    lines = [f"graph: n={inp['n']} m={inp['m']} components={inp['components']}"]
    for i, c in enumerate(report["components"]):
        cls = c["classification"]
        members = [k for k, v in cls.items() if v is True and k != "complete"]
        lines.append(f"component {i + 1}: n={c['n']} m={c['m']} chordal={c['chordal']}")
        if cls.get("complete"):
            members.append("complete")
        lines.append("  classes: " + (", ".join(members) if members else "none"))
        dec = c.get("decomposition")
        if dec:
            lines.append(f"  maximal cliques: {len(dec['cliques'])}, kappa: {dec['kappa']}")
            seps = ", ".join(f"{s['vertices']}x{s['multiplicity']}" for s in dec["separators"])
            lines.append(f"  separators: {seps or 'none'}")
        for name, preds in c.get("predictions", {}).items():
            if name.endswith("_multiset"):
                ms = " ".join(f"{p['value']}^{p['multiplicity']}" for p in preds)
                lines.append(f"  {name[:-9]}: {ms or '-'}")
        if "kt_split" in c.get("predictions", {}):
            kt = c["predictions"]["kt_split"]
            st = kt["structure"]
            ms = " ".join(f"{p['value']}^{p['multiplicity']}" for p in kt["multiset"])
            lines.append(f"  kt_split (k={st['k']}, t={st['t']}, r={st['r']}): {ms}")
        ver = c.get("verification")
        if ver is not None:
            lines.append("  verification: " + ("all confirmed" if verdicts_ok(ver) else "MISMATCH"))
        for note in c.get("notes", []):
            lines.append(f"  note: {note}")
    lines.append(f"status: {report['status']}")
    return "\n".join(lines)
