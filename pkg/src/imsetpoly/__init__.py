"""Exact-arithmetic toolkit for vector encodings of directed graphical
structures: eta vectors, standard imsets, and characteristic imsets, with
the linear-constraint families, transformation matrices, and verification
experiments connecting them."""

from .setfam import (
    Antichain,
    GroundSet,
    SetClass,
    enumerate_antichains,
    minimal_sets,
    power_class,
    superset_closure,
    union_closure_class,
)
from .digraph import (
    DirectedGraph,
    enumerate_dags,
    enumerate_digraphs,
    is_acyclic,
    super_terminal_count,
)
from .encode import (
    CharacteristicImset,
    EtaVector,
    Portrait,
    StandardImset,
    basic_vector,
    char_from_eta,
    characteristic_of,
    eta_of,
    imset_from_json_dict,
    imset_to_json_dict,
    markov_equivalent,
    portrait_of,
    quasi_characteristic_of,
    semi_elementary_imset,
    standard_imset_of,
    u_from_characteristic,
    u_from_eta,
)
from .constraint import (
    C_FAMILIES,
    ETA_FAMILIES,
    U_FAMILIES,
    ConeViolationError,
    ConstraintSystem,
    DualVector,
    KappaCoefficients,
    LinearConstraint,
    SupermodularFunction,
    assemble_system,
    char_specific_constraint,
    check_dual_cone,
    cluster_constraint_c,
    cluster_constraint_u,
    cluster_supermodular,
    conic_decompose,
    eta_system,
    indicator_supermodular,
    is_supermodular,
    kappa_coefficients,
    load_ray_file,
    nonspecific_constraints,
    pairing,
    save_ray_file,
    specific_constraint,
    supermodular_rays,
    u_equality_system,
    y_of_class,
)
from .exactlin import (
    IntMatrix,
    MinorVerdict,
    RatVector,
    TotalUnimodularityVerdict,
    build_b_u,
    build_matrix_A,
    build_matrix_B,
    build_matrix_B_bar,
    build_matrix_C,
    build_matrix_D,
    build_matrix_E,
    build_matrix_F,
    det_bareiss,
    feasible_nonneg_solution,
    hermite_normal_form,
    hnf_rank,
    is_totally_unimodular_small,
    is_unimodular_full_row_rank,
)
from .verify import (
    EnumerationBox,
    VerificationReport,
    census_characteristic_set,
    census_equivalence_classes,
    example5_image_check,
    example8_fractional_check,
    lattice_scan,
    relaxation_comparison,
    run_example,
    soundness_check,
)

__version__ = "0.1.0"

__all__ = [
    "Antichain",
    "C_FAMILIES",
    "CharacteristicImset",
    "ConeViolationError",
    "ConstraintSystem",
    "DirectedGraph",
    "DualVector",
    "ETA_FAMILIES",
    "EnumerationBox",
    "EtaVector",
    "GroundSet",
    "IntMatrix",
    "KappaCoefficients",
    "LinearConstraint",
    "MinorVerdict",
    "Portrait",
    "RatVector",
    "SetClass",
    "StandardImset",
    "SupermodularFunction",
    "TotalUnimodularityVerdict",
    "U_FAMILIES",
    "VerificationReport",
    "assemble_system",
    "basic_vector",
    "build_b_u",
    "build_matrix_A",
    "build_matrix_B",
    "build_matrix_B_bar",
    "build_matrix_C",
    "build_matrix_D",
    "build_matrix_E",
    "build_matrix_F",
    "census_characteristic_set",
    "census_equivalence_classes",
    "char_from_eta",
    "char_specific_constraint",
    "characteristic_of",
    "check_dual_cone",
    "cluster_constraint_c",
    "cluster_constraint_u",
    "cluster_supermodular",
    "conic_decompose",
    "det_bareiss",
    "enumerate_antichains",
    "enumerate_dags",
    "enumerate_digraphs",
    "eta_of",
    "eta_system",
    "example5_image_check",
    "example8_fractional_check",
    "feasible_nonneg_solution",
    "hermite_normal_form",
    "hnf_rank",
    "imset_from_json_dict",
    "imset_to_json_dict",
    "indicator_supermodular",
    "is_acyclic",
    "is_supermodular",
    "is_totally_unimodular_small",
    "is_unimodular_full_row_rank",
    "kappa_coefficients",
    "lattice_scan",
    "load_ray_file",
    "markov_equivalent",
    "minimal_sets",
    "nonspecific_constraints",
    "pairing",
    "portrait_of",
    "power_class",
    "quasi_characteristic_of",
    "relaxation_comparison",
    "run_example",
    "save_ray_file",
    "semi_elementary_imset",
    "soundness_check",
    "specific_constraint",
    "standard_imset_of",
    "super_terminal_count",
    "superset_closure",
    "supermodular_rays",
    "u_equality_system",
    "u_from_characteristic",
    "u_from_eta",
    "union_closure_class",
    "y_of_class",
]
