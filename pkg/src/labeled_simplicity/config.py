from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

from .limits import AnalysisLimits

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


@dataclass(frozen=True)
class Config:
    atom_cap: int
    automaton_state_cap: int
    product_state_cap: int
    bruteforce_atom_cap: int
    loop_max_len_cap: int
    log_level: str
    fuzz_out_dir: str
    fuzz_edge_density: float

    def limits(self) -> AnalysisLimits:
        return AnalysisLimits(
            atom_cap=self.atom_cap,
            automaton_state_cap=self.automaton_state_cap,
            product_state_cap=self.product_state_cap,
            bruteforce_atom_cap=self.bruteforce_atom_cap,
            loop_max_len_cap=self.loop_max_len_cap,
        )

    def logging_level(self) -> int:
        return getattr(logging, self.log_level)


def _positive_int_from_env(name: str, default: str) -> int:
    raw = os.getenv(name, default).strip()
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{name} must be >= 1")
    return value


def load_config() -> Config:
    load_dotenv()

    log_level = os.getenv("LOG_LEVEL", "INFO").strip().upper()
    if log_level not in _LOG_LEVELS:
        raise ValueError(f"LOG_LEVEL must be one of {sorted(_LOG_LEVELS)}")

    fuzz_edge_density = float(os.getenv("FUZZ_EDGE_DENSITY", "0.3"))
    if not 0.0 <= fuzz_edge_density <= 1.0:
        raise ValueError("FUZZ_EDGE_DENSITY must be between 0 and 1")

    atom_cap = _positive_int_from_env("ATOM_CAP", "20")
    bruteforce_atom_cap = _positive_int_from_env("BRUTEFORCE_ATOM_CAP", "12")
    if bruteforce_atom_cap > atom_cap:
        raise ValueError("BRUTEFORCE_ATOM_CAP must not exceed ATOM_CAP")

    return Config(
        atom_cap=atom_cap,
        automaton_state_cap=_positive_int_from_env("AUTOMATON_STATE_CAP", str(2**18)),
        product_state_cap=_positive_int_from_env("PRODUCT_STATE_CAP", str(2**18)),
        bruteforce_atom_cap=bruteforce_atom_cap,
        loop_max_len_cap=_positive_int_from_env("LOOP_MAX_LEN_CAP", "4"),
        log_level=log_level,
        fuzz_out_dir=os.getenv("FUZZ_OUT_DIR", "fuzz_out").strip() or "fuzz_out",
        fuzz_edge_density=fuzz_edge_density,
    )
