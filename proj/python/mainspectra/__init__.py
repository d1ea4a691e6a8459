"""Graphs with exactly two main eigenvalues: exact signatures, witnesses, census."""

from ._mainspectra import (  # noqa: F401
    Graph,
    MainspectraError,
    audit_bounds,
    canonical_key,
    claim_ids,
    coarsest_equitable,
    count_main_eigenvalues,
    degree_bounds,
    double_star,
    enumerate,
    family_a,
    family_b15,
    has_two_cell_equitable,
    infeasibility_reason,
    is_feasible,
    t_tree,
    two_main_signature,
    verify_claim,
    witness,
)
