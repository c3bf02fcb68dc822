# Public API
from .blocks import block_idempotents, block_ledger, nilradical, radical_chain
from .class_algebra import center_of_group_algebra, kuelshammer_perp_group, quotient_zbar
from .decider import decide_scalar, decide_scalar_presented
from .exceptions import (
    DegenerateForm,
    DichotomyViolation,
    InvariantViolation,
    KuelshammerError,
    LedgerMismatch,
    MethodInapplicable,
    ResourceLimit,
    TableParseError,
    ValidationFailure,
)
from .group import Group, direct_product, pgl2
from .quiver_d2a import d2a_table
from .symalg import AlgebraTable
from .utilities import setup_warning_filter

# Set up rich warning formatting when the package is imported
setup_warning_filter()

__all__ = [
    "AlgebraTable",
    "Group",
    "block_idempotents",
    "block_ledger",
    "center_of_group_algebra",
    "d2a_table",
    "decide_scalar",
    "decide_scalar_presented",
    "direct_product",
    "kuelshammer_perp_group",
    "nilradical",
    "pgl2",
    "quotient_zbar",
    "radical_chain",
    "DegenerateForm",
    "DichotomyViolation",
    "InvariantViolation",
    "KuelshammerError",
    "LedgerMismatch",
    "MethodInapplicable",
    "ResourceLimit",
    "TableParseError",
    "ValidationFailure",
]
