"""Python bindings for the braidverify C++ core."""

from ._core import (
    AbelianGroup,
    BraidWord,
    CosetTable,
    GarsideForm,
    HomClass,
    HomClassification,
    Perm,
    Presentation,
    abelianization,
    braid_presentation,
    builtin_presentation,
    class_order,
    coxeter_symmetric_presentation,
    enumerate_homs,
    equals,
    exponent_sum,
    free_product_three_involutions,
    gt_commutation_check,
    half_twist_word,
    is_trivial,
    linking_numbers,
    list_suites,
    mcg_sphere_presentation,
    normal_form,
    permutation_of,
    phi_compose_law,
    phi_nu_ab_exponent,
    phi_nu_verify,
    pure_braid_generator,
    reidemeister_schreier,
    run_suite,
    splitting_search,
    todd_coxeter,
    transgression_cokernel,
    zeta,
)

__all__ = [
    "AbelianGroup",
    "BraidWord",
    "CosetTable",
    "GarsideForm",
    "HomClass",
    "HomClassification",
    "Perm",
    "Presentation",
    "abelianization",
    "braid_presentation",
    "builtin_presentation",
    "class_order",
    "coxeter_symmetric_presentation",
    "enumerate_homs",
    "equals",
    "exponent_sum",
    "free_product_three_involutions",
    "gt_commutation_check",
    "half_twist_word",
    "is_trivial",
    "linking_numbers",
    "list_suites",
    "mcg_sphere_presentation",
    "normal_form",
    "permutation_of",
    "phi_compose_law",
    "phi_nu_ab_exponent",
    "phi_nu_verify",
    "pure_braid_generator",
    "reidemeister_schreier",
    "run_suite",
    "splitting_search",
    "todd_coxeter",
    "transgression_cokernel",
    "zeta",
]
