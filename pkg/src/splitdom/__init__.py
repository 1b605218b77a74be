"""splitdom: exact structural graph algorithms for small hereditary classes.

Forbidden-pattern detection, split-graph domination search, structural
decomposition (clique cutsets, bisimplicial vertices, Petersen blowups),
and certified clique-bounded coloring, all cross-checked against
brute-force oracles.
"""

from .coloring import (
    ColoringCertificate,
    TraceStep,
    chromatic_number_exact,
    clique_number,
    color_diamond_free_certified,
    color_gem_free_certified,
    color_petersen_blowup,
    verify_coloring,
)
from .decomposition import (
    BisimplicialCase,
    C5Partition,
    C6Partition,
    CliqueCutsetCase,
    LowDegreeCase,
    PetersenBlowupCase,
    PetersenGraphCase,
    StructureCase,
    c5_neighborhood_partition,
    c6_neighborhood_partition,
    find_bisimplicial_vertex,
    find_clique_cutset,
    max_blowup_c6,
    structure_case_diamond,
    structure_case_gem,
)
from .domination import (
    DominationCertificate,
    dominating_check,
    find_dominating_split,
    proof_guided_reduce,
)
from .errors import (
    BudgetExceededError,
    GraphInputError,
    PreconditionError,
    SplitdomError,
    TheoremViolationError,
)
from .graphs import (
    ConnectivityResult,
    Graph,
    build_graph,
    connectivity,
    from_graph6,
    induced_subgraph,
    parse_edge_list,
    set_queries,
    to_graph6,
)
from .harness import (
    CampaignReport,
    FailureExhibit,
    canonical_key,
    enumerate_small_graphs,
    random_graph,
    run_campaign,
)
from .patterns import (
    Embedding,
    FamilyResult,
    catalog_lookup,
    family_membership,
    find_induced_embedding,
    pattern_names,
)
from .recognition import (
    BlowupPartition,
    SplitPartition,
    build_blowup,
    complete_split_partition,
    petersen_blowup_partition,
    split_partition,
)

__version__ = "0.1.0"
