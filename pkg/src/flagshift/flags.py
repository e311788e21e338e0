"""Flag f- and h-vectors of colored complexes.

The flag f-vector of a complex over n colors assigns to every color set
S the number f_S of faces whose color set is exactly S.  The flag
h-vector is its alternating-sum transform,

    h_S = sum over T subset of S of (-1)^(|S|-|T|) f_T,

inverted by f_S = sum over T subset of S of h_T.  The coarse f-vector
aggregates by cardinality: f_{i-1} = sum over |S| = i of f_S.

Vectors are stored densely over all 2^n color sets, encoded as bitmasks
(bit i-1 stands for color i), with n capped so the tables stay at desk
scale.  Counts are validated to stay within signed 64-bit range.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .complexes import ColoredComplex

MAX_COLORS = 16
_INT64_MAX = 2**63 - 1


def mask_of_colors(colors: Iterable[int], num_colors: int) -> int:
    mask = 0
    for c in colors:
        c = int(c)
        if c < 1 or c > num_colors:
            raise ValueError(f"color {c} out of range 1..{num_colors}")
        bit = 1 << (c - 1)
        if mask & bit:
            raise ValueError(f"color {c} listed twice")
        mask |= bit
    return mask


def colors_of_mask(mask: int) -> tuple[int, ...]:
    colors = []
    c = 1
    while mask:
        if mask & 1:
            colors.append(c)
        mask >>= 1
        c += 1
    return tuple(colors)


@lru_cache(maxsize=None)
def subset_masks(num_colors: int) -> tuple[int, ...]:
    """All color-set bitmasks in canonical order: size, then lexicographic."""
    masks = range(1 << num_colors)
    return tuple(sorted(masks, key=lambda m: (m.bit_count(), colors_of_mask(m))))


class FlagVector:
    """A flag f- or h-vector over num_colors colors.

    kind "f" requires nonnegative counts with f_emptyset in {0, 1}; kind
    "h" allows arbitrary (signed) counts.  Construct from a mapping of
    color iterables to counts, from a dense sequence of length
    2^num_colors indexed by color bitmask, or from nothing (all zeros).
    """

    __slots__ = ("_n", "_kind", "_counts")

    def __init__(self, num_colors: int, entries=None, kind: str = "f"):
        num_colors = int(num_colors)
        if num_colors < 0 or num_colors > MAX_COLORS:
            raise ValueError(f"num_colors must be in 0..{MAX_COLORS}")
        if kind not in ("f", "h"):
            raise ValueError(f"kind must be 'f' or 'h', got {kind!r}")
        size = 1 << num_colors
        if entries is None:
            counts = [0] * size
        elif isinstance(entries, Mapping):
            counts = [0] * size
            for colors, count in entries.items():
                counts[mask_of_colors(colors, num_colors)] = int(count)
        else:
            counts = [int(x) for x in entries]
            if len(counts) != size:
                raise ValueError(
                    f"dense entries must have length {size}, got {len(counts)}"
                )
        for count in counts:
            if abs(count) > _INT64_MAX:
                raise OverflowError("flag counts are limited to 64-bit range")
        if kind == "f":
            _check_f_semantics(counts)
        object.__setattr__(self, "_n", num_colors)
        object.__setattr__(self, "_kind", kind)
        object.__setattr__(self, "_counts", tuple(counts))

    @classmethod
    def _of_dense(cls, num_colors: int, counts: list[int], kind: str) -> "FlagVector":
        """Internal: skip the f-semantics check (transform outputs)."""
        for count in counts:
            if abs(count) > _INT64_MAX:
                raise OverflowError("flag counts are limited to 64-bit range")
        obj = object.__new__(cls)
        object.__setattr__(obj, "_n", num_colors)
        object.__setattr__(obj, "_kind", kind)
        object.__setattr__(obj, "_counts", tuple(counts))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("FlagVector is immutable")

    @property
    def num_colors(self) -> int:
        return self._n

    @property
    def kind(self) -> str:
        return self._kind

    def count(self, colors: Iterable[int]) -> int:
        return self._counts[mask_of_colors(colors, self._n)]

    def __getitem__(self, colors: Iterable[int]) -> int:
        return self.count(colors)

    def count_at_mask(self, mask: int) -> int:
        return self._counts[mask]

    def dense(self) -> tuple[int, ...]:
        return self._counts

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """(color set, count) for every color set, in canonical order."""
        for mask in subset_masks(self._n):
            yield colors_of_mask(mask), self._counts[mask]

    def nonzero_items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for colors, count in self.items():
            if count:
                yield colors, count

    def total(self) -> int:
        return sum(self._counts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FlagVector)
            and self._n == other._n
            and self._kind == other._kind
            and self._counts == other._counts
        )

    def __hash__(self) -> int:
        return hash((self._n, self._kind, self._counts))

    def __repr__(self) -> str:
        shown = {"".join(map(str, cs)) or "0": v for cs, v in self.nonzero_items()}
        return f"FlagVector(n={self._n}, kind={self._kind!r}, {shown})"


def _check_f_semantics(counts: list[int]) -> None:
    for count in counts:
        if count < 0:
            raise ValueError("flag f-vectors must be nonnegative")
    if counts[0] not in (0, 1):
        raise ValueError("f_emptyset must be 0 or 1")


def flag_f(c: ColoredComplex) -> FlagVector:
    """Flag f-vector of a complex: faces counted by exact color set."""
    if c.num_colors > MAX_COLORS:
        raise ValueError(f"flag vectors support at most {MAX_COLORS} colors")
    counts = [0] * (1 << c.num_colors)
    for face in c.faces:
        mask = 0
        for color in face.colors:
            mask |= 1 << (color - 1)
        counts[mask] += 1
    return FlagVector(c.num_colors, counts, "f")


def h_from_f(f: FlagVector) -> FlagVector:
    """Flag h-vector: h_S = sum_{T subset S} (-1)^(|S|-|T|) f_T."""
    if f.kind != "f":
        raise ValueError("h_from_f expects an f-vector")
    counts = list(f.dense())
    n = f.num_colors
    for i in range(n):
        bit = 1 << i
        for mask in range(1 << n):
            if mask & bit:
                counts[mask] -= counts[mask ^ bit]
    return FlagVector._of_dense(n, counts, "h")


def f_from_h(h: FlagVector) -> FlagVector:
    """Inverse transform: f_S = sum_{T subset S} h_T."""
    if h.kind != "h":
        raise ValueError("f_from_h expects an h-vector")
    counts = list(h.dense())
    n = h.num_colors
    for i in range(n):
        bit = 1 << i
        for mask in range(1 << n):
            if mask & bit:
                counts[mask] += counts[mask ^ bit]
    return FlagVector._of_dense(n, counts, "f")


@dataclass(frozen=True)
class CoarseFVector:
    """Face counts by cardinality: entries[i] is the number of i-vertex faces."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("coarse f-vector needs at least the empty-face entry")
        if any(e < 0 for e in self.entries):
            raise ValueError("coarse f-vector entries must be nonnegative")
        if self.entries[0] not in (0, 1):
            raise ValueError("the empty-face count must be 0 or 1")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def coarse_f(f: FlagVector) -> CoarseFVector:
    """Aggregate a flag f-vector by color-set size."""
    if f.kind != "f":
        raise ValueError("coarse_f expects an f-vector")
    sums = [0] * (f.num_colors + 1)
    for mask in range(1 << f.num_colors):
        sums[mask.bit_count()] += f.count_at_mask(mask)
    return CoarseFVector(tuple(sums))


def two_color_realizable(f: FlagVector) -> bool:
    """Whether a two-color flag f-vector is realized by some complex.

    Exactly the vectors with f_emptyset = 1 and f_1 * f_2 >= f_12 are
    realized (the empty complex, with f_emptyset = 0, is excluded).
    """
    if f.kind != "f":
        raise ValueError("two_color_realizable expects an f-vector")
    if f.num_colors != 2:
        raise ValueError("two_color_realizable expects exactly 2 colors")
    d = f.dense()
    if any(x < 0 for x in d):
        raise ValueError("flag counts must be nonnegative")
    return d[0b00] == 1 and d[0b01] * d[0b10] >= d[0b11]
