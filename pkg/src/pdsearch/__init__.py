"""Search for partial difference sets in finite groups and certify the hits
as strongly regular Cayley graphs."""

from .groups import (
    GroupTable,
    GroupTableError,
    TableFormatError,
    TableStructureError,
    ValidationReport,
    cyclic_group,
    dihedral_group,
    direct_product,
    elementary_abelian,
    parse_table,
    serialize_table,
    validate_table,
)
from .params import FeasibleParams, Params, check_feasible, enumerate_feasible
from .search import (
    CONVERGED_ALPHA,
    CONVERGED_ZERO,
    PROPOSE_RANDOM,
    PROPOSE_SWEEP,
    STOP_ALL,
    STOP_FIRST,
    Proposal,
    SearchConfig,
    SearchSummary,
    TrialResult,
    default_alpha,
    hill_climb,
    propose_swap,
    random_subset,
    run_search,
    run_trial,
    schedule_preset,
)
from .state import SearchState, apply_swap, init_state, swap_delta, target
from .verify import (
    Certificate,
    CheckReport,
    build_cayley_graph,
    certificate_json,
    complement_pds,
    make_certificate,
    verify_pds,
    verify_srg,
)

__version__ = "0.1.0"

__all__ = [
    "GroupTable", "GroupTableError", "TableFormatError", "TableStructureError",
    "ValidationReport", "cyclic_group", "dihedral_group", "direct_product",
    "elementary_abelian", "parse_table", "serialize_table", "validate_table",
    "FeasibleParams", "Params", "check_feasible", "enumerate_feasible",
    "SearchState", "apply_swap", "init_state", "swap_delta", "target",
    "CONVERGED_ALPHA", "CONVERGED_ZERO", "PROPOSE_RANDOM", "PROPOSE_SWEEP",
    "STOP_ALL", "STOP_FIRST", "Proposal", "SearchConfig", "SearchSummary",
    "TrialResult", "default_alpha", "hill_climb", "propose_swap",
    "random_subset", "run_search", "run_trial", "schedule_preset",
    "Certificate", "CheckReport", "build_cayley_graph", "certificate_json",
    "complement_pds", "make_certificate", "verify_pds", "verify_srg",
    "__version__",
]
