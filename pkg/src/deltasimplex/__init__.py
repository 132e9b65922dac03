"""Exact delta-vector (h*-vector) computation, validation and classification
for full-dimensional lattice simplices."""

from .box import BoxGroup, BoxPoint, box_add, box_inverse, delta_from_box, enumerate_box
from .classify import (
    CaseId,
    Witness,
    admissible,
    classify_case,
    counterexample_family,
    enumerate_admissible,
    exhaustive_search,
    iter_hnf_matrices,
    iter_hnf_simplices,
    witness,
)
from .constraints import (
    CheckReport,
    ExponentList,
    check_hibi,
    check_hibi_exponents,
    check_nonprime,
    check_pairing,
    check_stanley,
    check_stanley_exponents,
    check_superadditive,
    delta_from_exponents,
    exponents,
    is_prime,
    least_prime_divisor,
    reduced_pairs,
    run_all_checks,
)
from .ehrhart import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    EhrhartTable,
    ReciprocityReport,
    cell_estimate,
    count_lattice_points,
    ehrhart_delta,
    ehrhart_table,
    leading_coefficient,
    reciprocity_check,
)
from .hnf import HNFSpec, build_simplex, closed_form_delta, nonprime_family
from .lattice import (
    DegenerateSimplexError,
    Simplex,
    SNFResult,
    exact_det,
    smith_normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "BoxGroup",
    "BoxPoint",
    "BudgetExceededError",
    "CaseId",
    "CheckReport",
    "DEFAULT_BUDGET",
    "DegenerateSimplexError",
    "EhrhartTable",
    "ExponentList",
    "HNFSpec",
    "ReciprocityReport",
    "SNFResult",
    "Simplex",
    "Witness",
    "admissible",
    "box_add",
    "box_inverse",
    "build_simplex",
    "cell_estimate",
    "check_hibi",
    "check_hibi_exponents",
    "check_nonprime",
    "check_pairing",
    "check_stanley",
    "check_stanley_exponents",
    "check_superadditive",
    "classify_case",
    "closed_form_delta",
    "count_lattice_points",
    "counterexample_family",
    "delta_from_box",
    "delta_from_exponents",
    "ehrhart_delta",
    "ehrhart_table",
    "enumerate_admissible",
    "enumerate_box",
    "exact_det",
    "exhaustive_search",
    "exponents",
    "is_prime",
    "iter_hnf_matrices",
    "iter_hnf_simplices",
    "leading_coefficient",
    "least_prime_divisor",
    "nonprime_family",
    "reciprocity_check",
    "reduced_pairs",
    "run_all_checks",
    "smith_normal_form",
    "witness",
]
