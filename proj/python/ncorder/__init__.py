"""Normal ordering of boson expressions, noncrossing contractions and their combinatorics."""

from ._ncorder import (
    ParseError,
    ShapeError,
    binomial,
    canonical_form,
    catalan,
    contraction_stats,
    enumerate_contractions,
    equation_residual_is_zero,
    generalized_catalan,
    kary,
    narayana,
    nc_closed_form,
    nc_edge_counts,
    nc_normal_order,
    normal_form_json,
    normal_order,
    normal_order_at,
    parse_expression,
    phi_lattice,
    phi_lattice_inverse,
    phi_tree,
    phi_tree_inverse,
    psi,
    psi_inverse,
    render_contraction,
    solve_A,
    solve_B,
    stirling2,
    theta,
    theta_inverse,
    verify,
)

__all__ = [
    "ParseError",
    "ShapeError",
    "binomial",
    "canonical_form",
    "catalan",
    "contraction_stats",
    "enumerate_contractions",
    "equation_residual_is_zero",
    "generalized_catalan",
    "kary",
    "narayana",
    "nc_closed_form",
    "nc_edge_counts",
    "nc_normal_order",
    "normal_form_json",
    "normal_order",
    "normal_order_at",
    "parse_expression",
    "phi_lattice",
    "phi_lattice_inverse",
    "phi_tree",
    "phi_tree_inverse",
    "psi",
    "psi_inverse",
    "render_contraction",
    "solve_A",
    "solve_B",
    "stirling2",
    "theta",
    "theta_inverse",
    "verify",
]
