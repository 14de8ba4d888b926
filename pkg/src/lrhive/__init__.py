"""Littlewood-Richardson coefficients, tableaux, hives and their involutions."""

from .hive import (
    Hive,
    edge_labels,
    extract_gt,
    gradients,
    hive_from_tableau,
    is_lr_hive,
    is_rational_hive,
    kappa,
    kappa_inv,
    tableau_from_hive,
)
from .hive_commuter import (
    RemovalPath,
    TruncatedHive,
    chi,
    chi_bar,
    omega,
    omega_bar,
    phi,
    phi_bar,
    psi,
    sigma,
    sigma_bar,
    theta_full,
)
from .lrcalc import coefficient, enumerate_hives, enumerate_lr, symmetry_check
from .shapes import GTPattern, SkewShape, contains, gt_weight, skew_cells
from .tab_commuter import (
    DeletionResult,
    delete_corner,
    full_row_deletion,
    internal_insert,
    rho,
    rho_inverse,
)
from .tableaux import (
    SkewTableau,
    adjoin_cell,
    gt_to_ssyt,
    is_lattice,
    is_semistandard,
    ssyt_to_gt,
    validate_lr,
)
from .usystem import USystem, canonical_dressing, dressing_feasible, shift_dressing, sigma_u

__all__ = [
    "Hive",
    "GTPattern",
    "SkewShape",
    "SkewTableau",
    "USystem",
    "DeletionResult",
    "RemovalPath",
    "TruncatedHive",
    "adjoin_cell",
    "canonical_dressing",
    "chi",
    "chi_bar",
    "coefficient",
    "contains",
    "delete_corner",
    "dressing_feasible",
    "edge_labels",
    "enumerate_hives",
    "enumerate_lr",
    "extract_gt",
    "full_row_deletion",
    "gradients",
    "gt_to_ssyt",
    "gt_weight",
    "hive_from_tableau",
    "internal_insert",
    "is_lattice",
    "is_lr_hive",
    "is_rational_hive",
    "is_semistandard",
    "kappa",
    "kappa_inv",
    "omega",
    "omega_bar",
    "phi",
    "phi_bar",
    "psi",
    "rho",
    "rho_inverse",
    "shift_dressing",
    "sigma",
    "sigma_bar",
    "sigma_u",
    "skew_cells",
    "ssyt_to_gt",
    "symmetry_check",
    "tableau_from_hive",
    "theta_full",
    "validate_lr",
]
