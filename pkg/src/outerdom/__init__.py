"""Exact secure domination on small graphs, with outerplanar extremal checks."""

from .canonical import are_isomorphic, canonical_form, canonical_labeling
from .enumeration import (
    SweepReport,
    enumerate_bruteforce_counts,
    enumerate_connected,
    enumerate_outerplanar,
    lower_bound,
    verify_lemma1,
    verify_lower_bound,
    verify_thm2_equivalence,
    verify_thm2_random,
)
from .extremal import (
    ExtremalWitness,
    PartitionProfile,
    build_extremal,
    detect_extremal_structural,
    partition_profile,
    spanning_subgraph_oracle,
    verify_witness,
)
from .formats import (
    FormatError,
    format_edgelist,
    from_graph6,
    parse_edgelist,
    read_graph,
    to_graph6,
)
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    build_graph,
    connected_components,
    induced_subgraph,
    is_complete_on,
    permute,
)
from .outerplanarity import (
    ForbiddenWitness,
    check_bipartite_outerplanar_bound,
    find_forbidden_subdivision,
    is_outerplanar,
    verify_forbidden_witness,
)
from .secure import (
    NotDominatingError,
    SecureCertificate,
    defends_by_epn,
    defends_by_private_cover,
    defends_by_swap,
    epn,
    is_dominating,
    is_secure_dominating,
    verify_certificate,
)
from .solver import SolveResult, gamma, gamma_s, gamma_s_bruteforce

__version__ = "0.1.0"

__all__ = [
    "are_isomorphic",
    "build_extremal",
    "build_graph",
    "canonical_form",
    "canonical_labeling",
    "check_bipartite_outerplanar_bound",
    "connected_components",
    "defends_by_epn",
    "defends_by_private_cover",
    "defends_by_swap",
    "detect_extremal_structural",
    "enumerate_bruteforce_counts",
    "enumerate_connected",
    "enumerate_outerplanar",
    "epn",
    "ExtremalWitness",
    "find_forbidden_subdivision",
    "ForbiddenWitness",
    "format_edgelist",
    "FormatError",
    "from_graph6",
    "gamma",
    "gamma_s",
    "gamma_s_bruteforce",
    "Graph",
    "GraphError",
    "induced_subgraph",
    "is_complete_on",
    "is_dominating",
    "is_outerplanar",
    "is_secure_dominating",
    "lower_bound",
    "NotDominatingError",
    "parse_edgelist",
    "partition_profile",
    "PartitionProfile",
    "permute",
    "read_graph",
    "SecureCertificate",
    "SolveResult",
    "spanning_subgraph_oracle",
    "SweepReport",
    "to_graph6",
    "verify_certificate",
    "verify_forbidden_witness",
    "verify_lemma1",
    "verify_lower_bound",
    "verify_thm2_equivalence",
    "verify_thm2_random",
    "verify_witness",
    "VertexSet",
]
