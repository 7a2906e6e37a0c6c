from .table1 import (
    FamilyRecord,
    table1_data,
    table1_from_json,
    table1_to_json,
    class20,
)
from .engine import (
    CurveRequired,
    ClassificationError,
    Match,
    ClassificationResult,
    family_membership,
    classify_j,
    classify_curve,
    quartic_twist_parameter,
)
from .mcfilter import FilterResult, mc_s3_filter, RULED_OUT, PLAUSIBLE
from .localcheck import LocalCheckEntry, LocalCheckReport, local_injection_check

__all__ = [
    "FamilyRecord", "table1_data", "table1_from_json", "table1_to_json",
    "class20",
    "CurveRequired", "ClassificationError", "Match", "ClassificationResult",
    "family_membership", "classify_j", "classify_curve", "quartic_twist_parameter",
    "FilterResult", "mc_s3_filter", "RULED_OUT", "PLAUSIBLE",
    "LocalCheckEntry", "LocalCheckReport", "local_injection_check",
]
