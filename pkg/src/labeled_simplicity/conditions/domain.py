from __future__ import annotations

import logging
from collections import deque

from ..errors import CapExceededError
from ..lattice import AtomTable, ensure_lattice_cap
from ..limits import DEFAULT_LIMITS, AnalysisLimits
from ..models import LabeledGraph, VertexSet, Word, format_word
from ..verdict import DomainFail, Verdict

logger = logging.getLogger(__name__)

# (r(A_1, alpha), ..., r(A_k, alpha), r(alpha)) as vertex masks
RangeProfile = tuple[int, ...]


def _profile(g: LabeledGraph, atoms: AtomTable, word: Word) -> RangeProfile:
    per_atom = tuple(g.range_of(atom, word).mask for atom in atoms.atoms)
    return per_atom + (g.range_of(g.full_set, word).mask,)


def _step(g: LabeledGraph, profile: RangeProfile, label: str) -> RangeProfile:
    return tuple(g.image(VertexSet(mask), label).mask for mask in profile)


def check_domain_condition(
    g: LabeledGraph,
    atoms: AtomTable,
    limits: AnalysisLimits | None = None,
) -> Verdict:
    """Every realized word alpha has some D in the lattice with r(D, alpha) = r(alpha).

    Words with equal range profiles over the atoms behave alike, so the quantifier runs over
    the finitely many profiles reachable in the product automaton.
    """
    limits = limits or DEFAULT_LIMITS
    ensure_lattice_cap(atoms, limits)

    words: dict[RangeProfile, Word] = {}
    queue: deque[RangeProfile] = deque()
    for label in g.alphabet:
        profile = _profile(g, atoms, (label,))
        if profile[-1] and profile not in words:
            words[profile] = (label,)
            queue.append(profile)

    while queue:
        profile = queue.popleft()
        word = words[profile]
        *per_atom, realized = profile
        # ranges grow with the base set, so the largest candidate D is the union of all atoms
        best = 0
        for mask in per_atom:
            if mask & ~realized == 0:
                best |= mask
        if best != realized:
            logger.debug("Domain condition fails word=%s", format_word(word, g.alphabet))
            return Verdict(
                False,
                DomainFail(word),
                reason=f"no lattice element realizes r({format_word(word, g.alphabet)})",
            )
        for label in g.alphabet:
            following = _step(g, profile, label)
            if not following[-1] or following in words:
                continue
            if len(words) >= limits.product_state_cap:
                raise CapExceededError("product_state_cap", limits.product_state_cap)
            words[following] = word + (label,)
            queue.append(following)

    logger.debug("Domain condition holds profiles=%s", len(words))
    return Verdict(True)
