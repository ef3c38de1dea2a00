"""Degree store, case bounds, table regeneration and per-degree
certification.
"""

from ._cases import (
    EXCEPTIONAL_ODD_PARTS,
    block_log_bound,
    exceptional_bound,
    imprimitive_case_bound,
    mersenne_case_bound,
    profile_bound,
)
from ._certificate import (
    BAND_LIMIT,
    SMALL_BLOCK_LIMIT,
    CaseEvaluation,
    CaseStatus,
    Certificate,
    Verdict,
    certify,
    large_block_closed_form,
)
from ._regenerate import (
    ExceptionalEnvelopeRow,
    exceptional_case_bounds,
    exceptional_envelope,
    exceptional_row,
    populate_store,
    regenerate_exceptional_table,
    regenerate_smooth_table,
    smooth_case_bounds,
)
from ._store import DegreeClass, DegreeRecord, DegreeStore, dt_upper, generic_target

__all__ = (
    "BAND_LIMIT",
    "EXCEPTIONAL_ODD_PARTS",
    "SMALL_BLOCK_LIMIT",
    "CaseEvaluation",
    "CaseStatus",
    "Certificate",
    "DegreeClass",
    "DegreeRecord",
    "DegreeStore",
    "ExceptionalEnvelopeRow",
    "Verdict",
    "block_log_bound",
    "certify",
    "dt_upper",
    "exceptional_bound",
    "exceptional_case_bounds",
    "exceptional_envelope",
    "exceptional_row",
    "generic_target",
    "imprimitive_case_bound",
    "large_block_closed_form",
    "mersenne_case_bound",
    "populate_store",
    "profile_bound",
    "regenerate_exceptional_table",
    "regenerate_smooth_table",
    "smooth_case_bounds",
)
