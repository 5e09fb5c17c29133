"""Center structure of k-chordal graphs.

Core objects: bitmask-backed immutable graphs, metric summaries, constrained
minimum separators, t-stretched diametrical sets, center-of-chordal
certificates, and host-graph constructions, all validated against brute-force
oracles at desk scale.
"""

from .graph import (
    DistanceTable,
    Graph,
    GraphError,
    InducedSubgraph,
    PreconditionError,
    TheoremCounterexample,
    bfs_from,
    components_after_removal,
    induced_subgraph,
    is_biconnected,
    is_connected,
    neighborhood_at,
    neighborhood_within,
    set_distance,
)
from .chordality import (
    ChordalityReport,
    chordality_index,
    is_chordal,
    is_clique,
    maximal_cliques,
    mcs_order,
    simplicial_vertices,
)
from .metrics import (
    MetricSummary,
    diametrical_pairs,
    dominates,
    eccentricities,
    is_diametrical,
    is_self_centered,
    metric_summary,
)
from .separators import (
    ConstrainedSeparator,
    is_separator,
    min_separator_within,
    minimal_separators_chordal,
)
from .stretched import (
    BasicSdsReport,
    StretchCheck,
    StretchedSet,
    build_t_stretched,
    check_t_stretched,
    extend_to_maximal,
    verify_basic_sds,
)
from .characterize import (
    BoundsReport,
    CenterCertificate,
    CenterHull,
    DisjointDominatingCliques,
    SelfCenteredRadiusTwo,
    SeparatorFamily,
    center_hull,
    center_structure_class,
    check_bounds,
    check_center_intersection,
    check_diam3_structure,
    disjoint_dominating_cliques,
    dominating_vertex_for_separator,
    is_center_of_chordal,
    self_centered_certificate,
    verify_separator_family,
)
from .construct import HostGraph, build_host, host_kchordal, host_pendant, host_two_cliques
from .io import FIXTURES, parse_graph, parse_graph6, to_graph6

__version__ = "0.1.0"
