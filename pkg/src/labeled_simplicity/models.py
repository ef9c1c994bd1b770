from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

Word = tuple[str, ...]


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices as a bitmask over the graph's declaration order."""

    mask: int = 0

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & ~other.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and index >= 0 and bool(self.mask >> index & 1)

    def issubset(self, other: VertexSet) -> bool:
        return self.mask & ~other.mask == 0

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> VertexSet:
        mask = 0
        for index in indices:
            mask |= 1 << index
        return cls(mask)


@dataclass(frozen=True)
class Edge:
    source: str
    label: str
    target: str


@dataclass(frozen=True)
class LabeledGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    alphabet: tuple[str, ...]

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.vertices)}

    @cached_property
    def _images(self) -> dict[str, tuple[int, ...]]:
        # per label: target mask for each source vertex
        images = {label: [0] * len(self.vertices) for label in self.alphabet}
        for edge in self.edges:
            images[edge.label][self.index[edge.source]] |= 1 << self.index[edge.target]
        return {label: tuple(masks) for label, masks in images.items()}

    @cached_property
    def _out_letter_masks(self) -> tuple[int, ...]:
        letter_bit = {label: 1 << i for i, label in enumerate(self.alphabet)}
        masks = [0] * len(self.vertices)
        for edge in self.edges:
            masks[self.index[edge.source]] |= letter_bit[edge.label]
        return tuple(masks)

    @property
    def full_set(self) -> VertexSet:
        return VertexSet((1 << len(self.vertices)) - 1)

    def _require_letter(self, label: str) -> None:
        if label not in self._images:
            raise ValueError(f"symbol {label!r} is not in the alphabet")

    def image(self, vs: VertexSet, label: str) -> VertexSet:
        self._require_letter(label)
        targets = self._images[label]
        mask = 0
        for i in vs:
            mask |= targets[i]
        return VertexSet(mask)

    def range_of(self, vs: VertexSet, word: Sequence[str]) -> VertexSet:
        current = vs
        for label in word:
            current = self.image(current, label)
        return current

    def out_labels(self, vs: VertexSet) -> tuple[str, ...]:
        mask = 0
        for i in vs:
            mask |= self._out_letter_masks[i]
        return tuple(label for i, label in enumerate(self.alphabet) if mask >> i & 1)

    def vertex_set(self, names: Iterable[str]) -> VertexSet:
        mask = 0
        for name in names:
            if name not in self.index:
                raise ValueError(f"unknown vertex {name!r}")
            mask |= 1 << self.index[name]
        return VertexSet(mask)

    def names(self, vs: VertexSet) -> list[str]:
        return [self.vertices[i] for i in vs]

    def out_degrees(self) -> dict[str, int]:
        degrees = dict.fromkeys(self.vertices, 0)
        for edge in self.edges:
            degrees[edge.source] += 1
        return degrees

    def in_degrees(self) -> dict[str, int]:
        degrees = dict.fromkeys(self.vertices, 0)
        for edge in self.edges:
            degrees[edge.target] += 1
        return degrees

    @property
    def is_trivially_labeled(self) -> bool:
        return len(self.alphabet) == len(self.edges)


def word_separator(alphabet: Sequence[str]) -> str:
    return "" if all(len(label) == 1 for label in alphabet) else "."


def format_word(word: Sequence[str], alphabet: Sequence[str]) -> str:
    return word_separator(alphabet).join(word)


def parse_word(text: str, alphabet: Sequence[str]) -> Word:
    if not text:
        return ()
    if word_separator(alphabet) == "":
        return tuple(text)
    return tuple(text.split("."))
