"""Exact permanental polynomials of 4k-intercyclic bipartite graphs."""

from .cycles import Classification, Cycle, Verdict, classify, enumerate_cycles, four_k_cycles
from .errors import (
    CycleBudgetExceeded,
    GraphError,
    NotBipartiteError,
    NotIntercyclicError,
    OracleCapExceeded,
    ParseError,
    PermPolyError,
)
from .graph import Bipartition, Graph, build_graph, delete_vertices, disjoint_union, is_bipartite
from .permanental import PolyReport, classify_G_p, f_poly, per_cospectral_check, perm_poly
from .polynomial import IntPolynomial, format_poly, parse_poly
from .spectra import char_poly, modified_char_poly

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "Classification",
    "Cycle",
    "CycleBudgetExceeded",
    "Graph",
    "GraphError",
    "IntPolynomial",
    "NotBipartiteError",
    "NotIntercyclicError",
    "OracleCapExceeded",
    "ParseError",
    "PermPolyError",
    "PolyReport",
    "Verdict",
    "build_graph",
    "char_poly",
    "classify",
    "classify_G_p",
    "delete_vertices",
    "disjoint_union",
    "enumerate_cycles",
    "f_poly",
    "format_poly",
    "four_k_cycles",
    "is_bipartite",
    "modified_char_poly",
    "parse_poly",
    "per_cospectral_check",
    "perm_poly",
]
