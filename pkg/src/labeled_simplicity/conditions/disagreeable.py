from __future__ import annotations

import logging

from ..automaton import purely_periodic_forced_word
from ..lattice import AtomTable
from ..limits import AnalysisLimits
from ..models import LabeledGraph, format_word
from ..verdict import DisagreeWitness, Verdict

logger = logging.getLogger(__name__)


def is_disagreeable(
    g: LabeledGraph,
    atoms: AtomTable,
    limits: AnalysisLimits | None = None,
) -> Verdict:
    """Disagreeable iff no atom's forced trajectory closes into a lasso.

    The language of a lattice element is the union of its atoms' languages, each nonempty,
    so a forced element forces every atom inside it; checking atoms is enough.
    """
    for atom in atoms.atoms:
        periodic = purely_periodic_forced_word(g, atom, limits)
        if periodic is None:
            continue
        witness_set, word = periodic
        logger.debug(
            "Forced periodic word atom=%s set=%s word=%s",
            g.names(atom),
            g.names(witness_set),
            format_word(word, g.alphabet),
        )
        return Verdict(
            False,
            DisagreeWitness(witness_set, word),
            reason=f"labeled paths from {g.names(witness_set)} are forced to repeat {format_word(word, g.alphabet)}",
        )
    return Verdict(True)
