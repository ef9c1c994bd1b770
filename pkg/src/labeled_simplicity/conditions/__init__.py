from .cofinal import coverage_set, is_strongly_cofinal
from .cycles import LoopRecord, classify_loops, find_cycles_without_exit
from .disagreeable import is_disagreeable
from .domain import check_domain_condition
from .hereditary import (
    HSFamily,
    has_proper_hereditary_saturated,
    hereditary_closure,
    hereditary_saturated_closure,
)
from .simplicity import SimplicityReport, simplicity_verdict

__all__ = [
    "LoopRecord",
    "HSFamily",
    "SimplicityReport",
    "is_disagreeable",
    "is_strongly_cofinal",
    "coverage_set",
    "find_cycles_without_exit",
    "classify_loops",
    "hereditary_closure",
    "hereditary_saturated_closure",
    "has_proper_hereditary_saturated",
    "check_domain_condition",
    "simplicity_verdict",
]
