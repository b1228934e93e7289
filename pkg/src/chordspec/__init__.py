"""Structural Laplacian spectra of chordal graphs, checked against a Jacobi oracle."""
from importlib import resources

from .chordal import (
    ChordalDecomposition,
    ClassificationError,
    PreconditionError,
    decompose,
    is_chordal,
    is_perfect_elimination_order,
    mcs_order,
    simplicial_vertices,
    vertex_connectivity_chordal,
)
from .graph import Graph, GraphFormatError, from_edge_list, laplacian, parse_edge_list, read_edge_list
from .oracle import JacobiError, Spectrum, algebraic_connectivity, graph_spectrum, integer_eigenvalues
from .structural import (
    PredictedEigenvalue,
    check_kappa_equals_a,
    classify,
    kt_split_partial_spectrum,
    qt_spectrum_bapat,
    qt_spectrum_structural,
    recognize_kt_split,
    recognize_quasi_threshold,
    theorem8_predictions,
)

__all__ = [
    "ChordalDecomposition", "ClassificationError", "PreconditionError", "decompose", "is_chordal",
    "is_perfect_elimination_order", "mcs_order", "simplicial_vertices", "vertex_connectivity_chordal",
    "Graph", "GraphFormatError", "from_edge_list", "laplacian", "parse_edge_list", "read_edge_list",
    "JacobiError", "Spectrum", "algebraic_connectivity", "graph_spectrum", "integer_eigenvalues",
    "PredictedEigenvalue", "check_kappa_equals_a", "classify", "kt_split_partial_spectrum",
    "qt_spectrum_bapat", "qt_spectrum_structural", "recognize_kt_split", "recognize_quasi_threshold",
    "theorem8_predictions", "FIXTURES", "fixture_path", "load_fixture",
]

__version__ = "0.1.0"

FIXTURES = (
    "kappa_a_1",
    "kappa_a_2",
    "kappa_a_3",
    "windmill_4_3",
    "split_complete_2_5",
    "core_satellite_2_3_2",
    "kt_split_2_3_3",
    "six_cliques",
)


def fixture_path(name: str):
    if name not in FIXTURES:
        raise KeyError(f"no fixture {name!r}")
    return resources.files(__package__) / "fixtures" / f"{name}.txt"


def load_fixture(name: str) -> Graph:
    return parse_edge_list(fixture_path(name).read_text(encoding="ascii"))
