"""Euler paths and degree growth of iterated line graphs."""

from .dyadic import DyadicRational
from .edgelist import ParseError, parse_edge_list, write_edge_list
from .euler import (
    CriticalEdgeSet,
    DisconnectedGraph,
    EdgelessGraph,
    EulerIndexSet,
    TrailingPath,
    critical_edges,
    has_euler_path,
    lgepi,
    lgepi_oracle,
    trailing_paths,
)
from .families import (
    BadParameter,
    FAMILY_NAMES,
    FamilySpec,
    FamilyTag,
    generate,
    h4_member,
    recognize,
)
from .graph import (
    BadVertexId,
    DegreeProfile,
    DuplicateEdge,
    Graph,
    GraphError,
    SelfLoop,
    ShapeClass,
    degree_profile,
    is_connected,
    is_prolific,
    make_graph,
    shape_class,
    validate_graph,
)
from .growth import (
    ClassLabel,
    DeltaCycleWitness,
    DeltaProbe,
    DeltaSequence,
    DgcResult,
    NotProlific,
    ShortcutPrediction,
    classify,
    delta_sequence,
    dgc,
    find_delta_cycle,
    long_delta_path_shortcut,
    probe_delta,
    structural_lower_bounds,
    triangle_min_degree_bound,
)
from .harness import (
    EnumerationReport,
    NTooLarge,
    Violation,
    count_connected,
    enumerate_connected,
    verify_dgc_landscape,
    verify_eg0_uniqueness,
    verify_lgepi_oracle_equiv,
)
from .iso import are_isomorphic
from .lineop import (
    BudgetExceeded,
    IterationBudget,
    LineGraphResult,
    has_induced_claw,
    iterate_line_graph,
    line_edge_count,
    line_graph,
    next_degree_multiset,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
