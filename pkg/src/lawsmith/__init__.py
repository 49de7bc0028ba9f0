"""Design and verification of useful and responsibility-gap-free laws in
one-shot concurrent games, via vertex cover in rank-k hypergraphs."""

from lawsmith.errors import *  # noqa: F401,F403
from lawsmith.game import (
    Game,
    Law,
    Profile,
    ResponsibilityVerdict,
    ValidationReport,
    Verdict,
    attribute_responsibility,
    is_gap_free_direct,
    is_safable,
    is_safe_action,
    is_useful_direct,
    law_imposed,
    principal_agents,
    support_set,
    validate_game,
    validate_law,
)
from lawsmith.hypergraph import (
    Hypergraph,
    approx_min_vertex_cover,
    induced_subgraph,
    is_minimal_vertex_cover,
    is_vertex_cover,
)
from lawsmith.law_design import (
    ReductionResult,
    Witness,
    approx_min_gap_free_reduction,
    approx_min_useful_reduction,
    is_gap_free_law,
    is_minimal_gap_free_law,
    is_minimal_useful_law,
    is_useful_law,
)
from lawsmith.oracle import (
    SearchBudget,
    exact_min_gap_free_reduction,
    exact_min_useful_reduction,
    exact_min_vertex_cover,
)
from lawsmith.reductions import (
    FreshNames,
    game_to_graph,
    graph_to_game,
    safe_action_graph,
    useful_to_gapfree_game,
)

__version__ = "0.1.0"
