"""Leavitt path algebras of graphs with finitely many vertices.

Graphs may have sinks and infinite emitters (via omega-bundles).  The package
computes exact normal forms over the rationals, line points, hereditary
saturated closures, desingularizations, minimal left ideals generated by
vertices and the matricial decomposition of the socle.
"""
from .algebra import (CK2Report, Element, GraphMismatch, Monomial, NotRegularError,
                      ck2_decomposition, classify_corner, corner_basis, homogeneous_components,
                      involution, is_normal, monomial_type, multiply)
from .closure import hereditary_saturated_closure, is_hereditary_saturated, is_simple
from .desing import (DesingGraph, TailDescriptor, TailVertex, desingularize,
                     line_points_desing, truncate, verify_desing_lemma)
from .graph import (OMEGA, EdgeRef, Graph, GraphError, Path, classify_vertices, condition_L,
                    count_paths_into, cycles_without_exits, enumerate_paths, is_line_point,
                    line_points, path_algebra_semiprime, tree)
from .reduction import (BoundExceeded, ReductionWitness, ZeroElement, graded_ideal_vertex_check,
                        reduce, semiprime_spotcheck)
from .socle import (InvariantViolation, SocleComponent, SocleReport, minimal_vertex_ideal,
                    socle_report)
from .syntax import ParseError, format_graph, load_graph, parse_element, parse_graph

__version__ = "0.1.0"

__all__ = [
    "CK2Report", "Element", "GraphMismatch", "Monomial", "NotRegularError", "ck2_decomposition",
    "classify_corner", "corner_basis", "homogeneous_components", "involution", "is_normal",
    "monomial_type", "multiply", "hereditary_saturated_closure", "is_hereditary_saturated",
    "is_simple", "DesingGraph", "TailDescriptor", "TailVertex", "desingularize",
    "line_points_desing", "truncate", "verify_desing_lemma", "OMEGA", "EdgeRef", "Graph",
    "GraphError", "Path", "classify_vertices", "condition_L", "count_paths_into",
    "cycles_without_exits", "enumerate_paths", "is_line_point", "line_points",
    "path_algebra_semiprime", "tree", "BoundExceeded", "ReductionWitness", "ZeroElement",
    "graded_ideal_vertex_check", "reduce", "semiprime_spotcheck", "InvariantViolation",
    "SocleComponent", "SocleReport", "minimal_vertex_ideal", "socle_report", "ParseError",
    "format_graph", "load_graph", "parse_element", "parse_graph",
]
