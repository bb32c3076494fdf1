"""Shortest non-separating s-t paths on connected chordal graphs.

A path is non-separating when removing all of its edges leaves the graph
connected. On connected chordal graphs with positive integer edge lengths
the shortest such path is computable in near-linear time; on general graphs
even existence is NP-hard, shown executably by the bundled 3-SAT reduction.
"""

from .decision import decide, prune_to_bridge_free_region
from .errors import (CnfError, DisconnectedError, DummyTraversalError,
                     GraphBuildError, GraphFormatError,
                     InternalInconsistencyError, NotChordalError, NspathError,
                     OracleCapError)
from .generator import GenConfig, gen_chordal, gen_cnf, gen_ktree
from .graph import (Graph, Path, block_cut_tree, bridges, build_graph,
                    dijkstra, format_graph_text, is_chordal, is_connected,
                    parse_graph_text, shortest_path)
from .reduction import (CNF, ReducedInstance, assignment_to_path, brute_sat,
                        evaluate, format_dimacs, parse_dimacs,
                        path_to_assignment, reduce_cnf)
from .solver import SolveReport, XMember, solve, solve_with_report

__version__ = "0.1.0"

__all__ = [
    "CNF", "CnfError", "DisconnectedError", "DummyTraversalError", "GenConfig",
    "Graph", "GraphBuildError", "GraphFormatError", "InternalInconsistencyError",
    "NotChordalError", "NspathError", "OracleCapError", "Path", "ReducedInstance",
    "SolveReport", "XMember", "assignment_to_path", "block_cut_tree", "bridges",
    "brute_sat", "build_graph", "decide", "dijkstra", "evaluate",
    "format_dimacs", "format_graph_text", "gen_chordal", "gen_cnf", "gen_ktree",
    "is_chordal", "is_connected", "parse_dimacs", "parse_graph_text",
    "path_to_assignment", "prune_to_bridge_free_region", "reduce_cnf",
    "shortest_path", "solve", "solve_with_report",
]
