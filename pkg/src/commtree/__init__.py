"""Community trees of undirected networks via clique percolation.

The library builds the tree of clique communities across every clique
order, reads off persistence diagrams, compares networks with the exact
bottleneck distance, and computes star numbers: vertex-cover style
quantities that upper-bound how far a community tree can move when the
network changes.
"""

from .bottleneck import (
    Matching,
    bottleneck_distance,
    diagram_distance,
    linf,
    tree_distance,
)
from .cliques import (
    DEFAULT_CLIQUE_CAP,
    Clique,
    degeneracy_order,
    k_cliques,
    max_clique_order,
    maximal_cliques,
)
from .errors import (
    CommtreeError,
    InconsistentTreeError,
    ParseError,
    ResourceLimitError,
    SelfLoopError,
    UnknownEndpointError,
    UnknownVertexError,
)
from .graph import (
    Graph,
    GraphDelta,
    build_graph,
    dump_edge_list,
    graph_delta,
    graph_to_json,
    load_edge_list,
    load_gml,
    load_graph,
    remove_vertex,
)
from .percolation import (
    Community,
    CommunitySlice,
    all_communities,
    k_communities,
    k_communities_oracle,
)
from .random_graphs import gnm_graph, gnp_graph, perturb_near_vertices
from .stability import (
    DEFAULT_NODE_BUDGET,
    CoverBound,
    CoverCertificate,
    StabilityReport,
    StarNumbers,
    asn,
    matching_lower_bound,
    min_vertex_cover,
    rsn,
    tsn,
    verify_stability,
)
from .tree import (
    CommunityTree,
    Component,
    PersistenceDiagram,
    TreeNode,
    build_tree,
    community_tree,
    components,
    diagram_of,
    export_tree,
    persistence_diagram,
)

__version__ = "0.1.0"
