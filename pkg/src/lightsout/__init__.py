"""Toggle games on graphs over the integers mod ell.

Solve neighborhood- and adjacency-variant lights-out games on graphs or
arbitrary square matrices, compute toggling sets, search exhaustively for
the largest always-winnable graphs of a given order, and re-derive the
published closed forms with named verification suites.
"""

from .game import (
    apply_toggles,
    cycle_lambda_winnable,
    cycle_shift_canonical,
    exists_shift_winnable,
    is_AW,
    lambda_labeling,
    shift_labeling,
    winnable,
)
from .graphs import (
    Graph,
    adjacency_matrix,
    complement,
    complete_graph,
    corona_pendant,
    cycle_graph,
    disjoint_union,
    find_M_twins,
    graph6_decode,
    graph6_encode,
    is_pendant_graph,
    matching_graph,
    named_graph,
    neighborhood_matrix,
    path_graph,
    star_graph,
)
from .modular import (
    NormalForm,
    ZModMatrix,
    check_modulus,
    det_int,
    det_mod,
    is_invertible,
    normal_form,
    nullspace,
    solve,
    unit_lift,
)
from .rules import (
    PathViolation,
    PendantConditions,
    ReductionOutcome,
    RuleDisagreement,
    add_universal_vertex,
    dominating_reduction,
    dominating_vertices,
    extdom_filter,
    extswitch_valid,
    notswin_witness,
    p4_replacement_equiv,
    path_restriction_violations,
    pendant_graph_naw,
    pendantremove_conditions,
    pendantremove_dompen,
    subsetjoinaw_check,
)
from .search import (
    ConjectureCheck,
    ConjecturedMax,
    ExtremalReport,
    conjectured_max,
    dedup_isomorphism,
    max_size_search,
    minimal_coprime_k,
    pendant_lower_bound_witness,
    triangle_family_graph,
    verify_conjecture,
)
from .toggling import (
    ToggleCoset,
    TransferCheck,
    compose_components,
    minimal_nonempty_r,
    noU_transfer,
    toggling_numbers,
)
from .verify import SuiteResult, run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "ConjectureCheck",
    "ConjecturedMax",
    "ExtremalReport",
    "Graph",
    "NormalForm",
    "PathViolation",
    "PendantConditions",
    "ReductionOutcome",
    "RuleDisagreement",
    "SuiteResult",
    "ToggleCoset",
    "TransferCheck",
    "ZModMatrix",
    "add_universal_vertex",
    "adjacency_matrix",
    "apply_toggles",
    "check_modulus",
    "complement",
    "complete_graph",
    "compose_components",
    "conjectured_max",
    "corona_pendant",
    "cycle_graph",
    "cycle_lambda_winnable",
    "cycle_shift_canonical",
    "dedup_isomorphism",
    "det_int",
    "det_mod",
    "disjoint_union",
    "dominating_reduction",
    "dominating_vertices",
    "exists_shift_winnable",
    "extdom_filter",
    "extswitch_valid",
    "find_M_twins",
    "graph6_decode",
    "graph6_encode",
    "is_AW",
    "is_invertible",
    "is_pendant_graph",
    "lambda_labeling",
    "matching_graph",
    "max_size_search",
    "minimal_coprime_k",
    "minimal_nonempty_r",
    "named_graph",
    "neighborhood_matrix",
    "noU_transfer",
    "normal_form",
    "notswin_witness",
    "nullspace",
    "p4_replacement_equiv",
    "path_graph",
    "path_restriction_violations",
    "pendant_graph_naw",
    "pendant_lower_bound_witness",
    "pendantremove_conditions",
    "pendantremove_dompen",
    "run_suite",
    "shift_labeling",
    "solve",
    "star_graph",
    "subsetjoinaw_check",
    "suite_names",
    "toggling_numbers",
    "triangle_family_graph",
    "unit_lift",
    "verify_conjecture",
    "winnable",
]
