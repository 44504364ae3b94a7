"""Hypergraph edge coloring: structure, colorers, exact oracle, bounds.

The package centers on one comparison: the chromatic index q(H) of a
hypergraph against the maximum degree of its two-section multigraph plus
one.  It provides the structures (hypergraphs, two-sections, line
graphs), constructive colorers with classical guarantees, an exact
branch-and-bound oracle with honest budgets, degree-bound checkers, a
verdict engine, instance generators, and a file format plus CLI.
"""

from .analysis import (
    HOLDS,
    UNRESOLVED,
    VIOLATED,
    BoundSet,
    InequalityCheck,
    InequalityReport,
    Verdict,
    antirank_condition,
    classify_uniform,
    edge_degree_bound,
    greedy_bound,
    inequality_suite,
    max_degree_condition,
    rank_degree_bound,
    rank_product_condition,
    two_section_bound,
    uniform_regular_condition,
    verify_conjecture,
)
from .coloring import (
    EdgeColoring,
    VertexColoring,
    brooks_color,
    brooks_edge_color,
    greedy_color,
    is_proper,
    is_proper_vertex_coloring,
    vizing_edge_color,
    vizing_edge_color_hypergraph,
)
from .core import Hypergraph, HypergraphStats, UnsupportedInputError
from .hgr import HgrParseError, digest, dump, load, parse_hgr, serialize_hgr
from .instances import (
    FamilySpec,
    GenerationError,
    Rng,
    affine_plane,
    complete_graph,
    cycle,
    derive_seed,
    fano,
    generate,
    parse_family,
    projective_plane,
    random_hypergraph,
    random_linear,
    steiner_triple,
    survey_instance,
)
from .oracle import (
    Budget,
    CriticalCore,
    CriticalityReport,
    EdgeCriticality,
    OracleResult,
    chromatic_index,
    chromatic_number,
    criticality_report,
    extract_critical,
    greedy_clique,
    is_critical,
)
from .report import TOOL_VERSION
from .transforms import (
    Multigraph,
    SimpleGraph,
    line_graph,
    max_degree_two_section,
    two_section,
)

__version__ = TOOL_VERSION

__all__ = [
    "HOLDS",
    "UNRESOLVED",
    "VIOLATED",
    "BoundSet",
    "Budget",
    "CriticalCore",
    "CriticalityReport",
    "EdgeColoring",
    "EdgeCriticality",
    "FamilySpec",
    "GenerationError",
    "HgrParseError",
    "Hypergraph",
    "HypergraphStats",
    "InequalityCheck",
    "InequalityReport",
    "Multigraph",
    "OracleResult",
    "Rng",
    "SimpleGraph",
    "TOOL_VERSION",
    "UnsupportedInputError",
    "Verdict",
    "VertexColoring",
    "affine_plane",
    "antirank_condition",
    "brooks_color",
    "brooks_edge_color",
    "chromatic_index",
    "chromatic_number",
    "classify_uniform",
    "complete_graph",
    "criticality_report",
    "cycle",
    "derive_seed",
    "digest",
    "dump",
    "edge_degree_bound",
    "extract_critical",
    "fano",
    "generate",
    "greedy_bound",
    "greedy_clique",
    "greedy_color",
    "inequality_suite",
    "is_critical",
    "is_proper",
    "is_proper_vertex_coloring",
    "line_graph",
    "load",
    "max_degree_condition",
    "max_degree_two_section",
    "parse_family",
    "parse_hgr",
    "projective_plane",
    "random_hypergraph",
    "random_linear",
    "rank_degree_bound",
    "rank_product_condition",
    "serialize_hgr",
    "steiner_triple",
    "survey_instance",
    "two_section",
    "two_section_bound",
    "uniform_regular_condition",
    "verify_conjecture",
    "vizing_edge_color",
    "vizing_edge_color_hypergraph",
]
