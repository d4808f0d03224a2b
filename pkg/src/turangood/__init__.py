"""Exact linear-forest copy counts in complete multipartite graphs,
with exhaustive verification that the balanced (Turan) partition is
extremal at small n."""

from .forest import (
    LinearForest,
    aut_order,
    delete_even_end_pair,
    delete_isolated,
    delete_odd_endpoint,
)
from .multipartite import (
    PartSizes,
    count_copies,
    count_copies_turan,
    count_injective_homs,
    turan_parts,
)
from .oracle import (
    EXHAUSTIVE_CAP_DEFAULT,
    EXHAUSTIVE_CAP_LIMIT,
    MAX_GRAPH_VERTICES,
    ExtremalResult,
    SmallGraph,
    count_copies_explicit,
    count_injective_homs_explicit,
    explicit_multipartite,
    extremal_search,
    is_clique_free,
)
from .verify import (
    VerificationReport,
    balance_trajectory,
    balancing_move,
    partitions_at_most,
    verify_balancing_monotone,
    verify_conjecture,
    verify_even_extension_identity,
    verify_isolated_identity,
    verify_multipartite_max,
    verify_odd_extension_identity,
)

__version__ = "0.1.0"

__all__ = [
    "LinearForest",
    "PartSizes",
    "SmallGraph",
    "ExtremalResult",
    "VerificationReport",
    "aut_order",
    "delete_odd_endpoint",
    "delete_even_end_pair",
    "delete_isolated",
    "turan_parts",
    "count_injective_homs",
    "count_copies",
    "count_copies_turan",
    "explicit_multipartite",
    "count_injective_homs_explicit",
    "count_copies_explicit",
    "is_clique_free",
    "extremal_search",
    "partitions_at_most",
    "balancing_move",
    "balance_trajectory",
    "verify_multipartite_max",
    "verify_balancing_monotone",
    "verify_odd_extension_identity",
    "verify_even_extension_identity",
    "verify_isolated_identity",
    "verify_conjecture",
    "MAX_GRAPH_VERTICES",
    "EXHAUSTIVE_CAP_DEFAULT",
    "EXHAUSTIVE_CAP_LIMIT",
    "__version__",
]
