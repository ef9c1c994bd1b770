from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AnalysisLimits:
    atom_cap: int = 20
    automaton_state_cap: int = 2**18
    product_state_cap: int = 2**18
    bruteforce_atom_cap: int = 12
    loop_max_len_cap: int = 4


DEFAULT_LIMITS = AnalysisLimits()
