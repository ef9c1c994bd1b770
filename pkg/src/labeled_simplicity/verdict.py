from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .models import VertexSet, Word


@dataclass(frozen=True)
class ResolvingCounterexample:
    first: VertexSet
    second: VertexSet
    word: Word


@dataclass(frozen=True)
class DisagreeWitness:
    """A set whose labeled paths are forced to repeat ``word`` forever."""

    vertex_set: VertexSet
    word: Word


@dataclass(frozen=True)
class CofinalWitness:
    """An atom plus an infinite word ``stem . cycle^omega`` whose prefix ranges escape the atom's coverage."""

    atom: VertexSet
    stem: Word
    cycle: Word


@dataclass(frozen=True)
class CycleNoExit:
    word: Word
    vertex_set: VertexSet


@dataclass(frozen=True)
class ProperHS:
    top: VertexSet
    atoms: tuple[VertexSet, ...]


@dataclass(frozen=True)
class DomainFail:
    word: Word


Witness = Union[
    ResolvingCounterexample,
    DisagreeWitness,
    CofinalWitness,
    CycleNoExit,
    ProperHS,
    DomainFail,
]


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Witness | None = None
    reason: str = "ok"
