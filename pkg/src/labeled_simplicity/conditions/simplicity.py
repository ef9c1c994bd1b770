from __future__ import annotations

import logging
from dataclasses import dataclass

from ..errors import OutsideTheoremScopeError
from ..graph import ValidationReport, validate
from ..lattice import AtomTable, stable_partition
from ..limits import AnalysisLimits
from ..models import LabeledGraph
from ..verdict import CycleNoExit, Verdict
from .cofinal import is_strongly_cofinal
from .cycles import find_cycles_without_exit
from .disagreeable import is_disagreeable
from .domain import check_domain_condition
from .hereditary import has_proper_hereditary_saturated

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplicityReport:
    atoms: AtomTable
    validation: ValidationReport
    disagreeable: Verdict
    strongly_cofinal: Verdict
    cycles_without_exit: tuple[CycleNoExit, ...]
    proper_hereditary_saturated: Verdict
    domain_condition: Verdict
    simple: bool
    condition_c: bool
    consistent: bool


def simplicity_verdict(
    g: LabeledGraph,
    limits: AnalysisLimits | None = None,
    atoms: AtomTable | None = None,
) -> SimplicityReport:
    atoms = atoms or stable_partition(g, limits)
    validation = validate(g, atoms)
    if not validation.in_scope:
        raise OutsideTheoremScopeError(validation)

    disagreeable = is_disagreeable(g, atoms, limits)
    strongly_cofinal = is_strongly_cofinal(g, atoms, limits)
    cycles = tuple(find_cycles_without_exit(g, atoms, limits))
    proper = has_proper_hereditary_saturated(g, atoms, limits)
    domain = check_domain_condition(g, atoms, limits)

    simple = strongly_cofinal.holds and disagreeable.holds
    condition_c = not cycles and not proper.holds
    consistent = (not domain.holds) or simple == condition_c

    if not consistent:
        logger.error(
            "Soundness failure simple=%s condition_c=%s disagreeable=%s strongly_cofinal=%s cycles=%s proper_hs=%s",
            simple,
            condition_c,
            disagreeable.holds,
            strongly_cofinal.holds,
            len(cycles),
            proper.holds,
        )
    else:
        logger.info(
            "Analyzed graph vertices=%s atoms=%s simple=%s condition_c=%s",
            len(g.vertices),
            len(atoms),
            simple,
            condition_c,
        )

    return SimplicityReport(
        atoms=atoms,
        validation=validation,
        disagreeable=disagreeable,
        strongly_cofinal=strongly_cofinal,
        cycles_without_exit=cycles,
        proper_hereditary_saturated=proper,
        domain_condition=domain,
        simple=simple,
        condition_c=condition_c,
        consistent=consistent,
    )
