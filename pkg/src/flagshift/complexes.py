"""Colored simplicial complexes stored as explicit face sets.

A vertex is a (color, index) pair, both starting at 1.  A face holds at
most one vertex per color (a "rainbow" set), and a complex is a finite
family of faces over colors 1..num_colors that is closed under taking
subsets.  Within each color the vertex indices present as singletons are
kept contiguous from 1, so the labeling of a complex is canonical: two
complexes describe the same object exactly when they compare equal.

Every value here is immutable; operations return new objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple


class Vertex(NamedTuple):
    """The index-th vertex of a color."""

    color: int
    index: int

    def label(self) -> str:
        return f"v_{self.index}^{self.color}"


class Face:
    """A set of vertices with pairwise distinct colors, sorted by color.

    Faces are immutable and hashable.  The canonical order on faces is
    by (cardinality, color tuple, index tuple); `sort_key` exposes it.
    """

    __slots__ = ("_vertices",)

    def __init__(self, vertices: Iterable[tuple[int, int]] = ()):
        pairs = sorted((int(c), int(i)) for c, i in vertices)
        for c, i in pairs:
            if c < 1 or i < 1:
                raise ValueError(f"vertex components must be >= 1, got ({c}, {i})")
        for (c1, _), (c2, _) in zip(pairs, pairs[1:]):
            if c1 == c2:
                raise ValueError(f"face holds two vertices of color {c1}")
        object.__setattr__(self, "_vertices", tuple(Vertex(c, i) for c, i in pairs))

    def __setattr__(self, name, value):
        raise AttributeError("Face is immutable")

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(v.color for v in self._vertices)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(v.index for v in self._vertices)

    @property
    def sort_key(self) -> tuple:
        return (len(self._vertices), self.colors, self.indices)

    def index_of(self, color: int) -> int:
        """Index of this face's vertex of the given color; KeyError if absent."""
        for v in self._vertices:
            if v.color == color:
                return v.index
        raise KeyError(color)

    def get(self, color: int) -> int | None:
        for v in self._vertices:
            if v.color == color:
                return v.index
        return None

    def with_vertex(self, vertex: tuple[int, int]) -> "Face":
        """This face plus one vertex of a color it does not use yet."""
        return Face((*self._vertices, vertex))

    def with_index(self, color: int, index: int) -> "Face":
        """This face with the vertex of `color` moved to `index`."""
        return Face(
            (c, index if c == color else i) for c, i in self._vertices
        )

    def without_color(self, color: int) -> "Face":
        return Face(v for v in self._vertices if v.color != color)

    def restrict_colors(self, colors: Iterable[int]) -> "Face":
        keep = set(colors)
        return Face(v for v in self._vertices if v.color in keep)

    def relabel_colors(self, mapping: dict[int, int]) -> "Face":
        return Face((mapping[c], i) for c, i in self._vertices)

    def subfaces(self) -> Iterator["Face"]:
        """All subsets of this face, itself and the empty face included."""
        for size in range(len(self._vertices) + 1):
            for combo in combinations(self._vertices, size):
                yield Face(combo)

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self._vertices)

    def __contains__(self, vertex) -> bool:
        return Vertex(*vertex) in self._vertices

    def __eq__(self, other) -> bool:
        return isinstance(other, Face) and self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        return f"Face({[(v.color, v.index) for v in self._vertices]})"

    def __str__(self) -> str:
        return "{" + ",".join(v.label() for v in self._vertices) + "}"


EMPTY_FACE = Face()


@dataclass(frozen=True)
class Violation:
    """One reason a face family is not a valid colored complex."""

    kind: str  # "color-range" | "empty-face" | "closure" | "saturation"
    message: str
    face: Face | None = None
    missing: Face | None = None
    color: int | None = None


class InvalidComplexError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(violation.message)
        self.violation = violation


def validate_faces(num_colors: int, faces: Iterable[Face]) -> Violation | None:
    """First violation of the complex invariants, or None if valid.

    Checks, in order: colors within 1..num_colors, presence of the empty
    face (for a non-empty family), closure under dropping one vertex
    (which implies full subset closure), and index contiguity of the
    singleton faces within each color.
    """
    face_set = frozenset(faces)
    if not face_set:
        return None
    for face in sorted(face_set, key=lambda f: f.sort_key):
        for c in face.colors:
            if c > num_colors:
                return Violation(
                    "color-range",
                    f"face {face} uses color {c} but the complex has {num_colors} colors",
                    face=face,
                    color=c,
                )
    if EMPTY_FACE not in face_set:
        return Violation("empty-face", "non-empty complex must contain the empty face")
    for face in sorted(face_set, key=lambda f: f.sort_key):
        for c in face.colors:
            sub = face.without_color(c)
            if sub not in face_set:
                return Violation(
                    "closure",
                    f"face {face} is present but its subset {sub} is missing",
                    face=face,
                    missing=sub,
                )
    by_color: dict[int, set[int]] = {}
    for face in face_set:
        if len(face) == 1:
            v = face.vertices[0]
            by_color.setdefault(v.color, set()).add(v.index)
    for color in sorted(by_color):
        have = by_color[color]
        if have != set(range(1, len(have) + 1)):
            gap = min(set(range(1, max(have) + 1)) - have)
            return Violation(
                "saturation",
                f"color {color} skips vertex index {gap}: indices must be contiguous from 1",
                color=color,
            )
    return None


class ColoredComplex:
    """An immutable colored simplicial complex.

    The constructor validates the invariants and raises
    InvalidComplexError on the first violation.  The empty complex (zero
    faces) is representable; operations that need the empty face reject
    it explicitly.
    """

    __slots__ = ("_num_colors", "_faces")

    def __init__(self, num_colors: int, faces: Iterable[Face] = ()):
        num_colors = int(num_colors)
        if num_colors < 0:
            raise ValueError("num_colors must be >= 0")
        face_set = frozenset(faces)
        violation = validate_faces(num_colors, face_set)
        if violation is not None:
            raise InvalidComplexError(violation)
        object.__setattr__(self, "_num_colors", num_colors)
        object.__setattr__(self, "_faces", face_set)

    @classmethod
    def _raw(cls, num_colors: int, faces: frozenset[Face]) -> "ColoredComplex":
        """Internal fast path: the caller guarantees the invariants."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "_num_colors", num_colors)
        object.__setattr__(obj, "_faces", faces)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ColoredComplex is immutable")

    @property
    def num_colors(self) -> int:
        return self._num_colors

    @property
    def faces(self) -> frozenset[Face]:
        return self._faces

    def sorted_faces(self) -> list[Face]:
        """Faces in canonical order: cardinality, then colors, then indices."""
        return sorted(self._faces, key=lambda f: f.sort_key)

    def vertex_counts(self) -> tuple[int, ...]:
        """Number of vertices of each color 1..num_colors."""
        counts = [0] * self._num_colors
        for face in self._faces:
            if len(face) == 1:
                counts[face.vertices[0].color - 1] += 1
        return tuple(counts)

    def validate(self) -> Violation | None:
        return validate_faces(self._num_colors, self._faces)

    def __len__(self) -> int:
        return len(self._faces)

    def __contains__(self, face: Face) -> bool:
        return face in self._faces

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColoredComplex)
            and self._num_colors == other._num_colors
            and self._faces == other._faces
        )

    def __hash__(self) -> int:
        return hash((self._num_colors, self._faces))

    def __repr__(self) -> str:
        return f"ColoredComplex(num_colors={self._num_colors}, faces=<{len(self._faces)}>)"


def trivial_complex(num_colors: int) -> ColoredComplex:
    """The complex whose only face is the empty face."""
    return ColoredComplex(num_colors, (EMPTY_FACE,))


def empty_complex(num_colors: int) -> ColoredComplex:
    """The complex with no faces at all."""
    return ColoredComplex(num_colors, ())


def from_generators(
    num_colors: int, generators: Iterable[Face]
) -> ColoredComplex:
    """Downward closure of the given faces as a complex over num_colors colors.

    Raises InvalidComplexError if a generator uses a color out of range or
    the closure leaves an index gap within some color (saturation).
    """
    closed: set[Face] = set()
    for gen in generators:
        if gen in closed:
            continue
        closed.update(gen.subfaces())
    return ColoredComplex(num_colors, closed)


def select_colors(c: ColoredComplex, colors: Iterable[int]) -> ColoredComplex:
    """Subcomplex of faces using only the given colors, renumbered.

    The selected colors are renumbered 1..len(colors) by the unique
    order-preserving bijection, so the result is a complex over
    len(colors) colors.
    """
    selected = sorted(set(int(s) for s in colors))
    if selected and (selected[0] < 1 or selected[-1] > c.num_colors):
        raise ValueError(f"selected colors must lie in 1..{c.num_colors}")
    keep = set(selected)
    mapping = {old: new for new, old in enumerate(selected, start=1)}
    faces = frozenset(
        face.relabel_colors(mapping)
        for face in c.faces
        if keep.issuperset(face.colors)
    )
    return ColoredComplex._raw(len(selected), faces)


def cone(c: ColoredComplex, apex: tuple[int, int]) -> ColoredComplex:
    """Join every face of c with a fresh apex vertex.

    The apex must be the first vertex of a color not used by any face of
    c, so the result stays saturated.  The result has twice as many
    faces as c.
    """
    apex = Vertex(*apex)
    if apex.index != 1:
        raise ValueError(f"apex must be the first vertex of its color, got index {apex.index}")
    if apex.color < 1:
        raise ValueError("apex color must be >= 1")
    for face in c.faces:
        if apex.color in face.colors:
            raise ValueError(f"apex color {apex.color} already used by face {face}")
    lifted = frozenset(face.with_vertex(apex) for face in c.faces)
    return ColoredComplex._raw(
        max(c.num_colors, apex.color), c.faces | lifted
    )


def union(a: ColoredComplex, b: ColoredComplex) -> ColoredComplex:
    """Union of two complexes; vertices are identified by their labels."""
    num_colors = max(a.num_colors, b.num_colors)
    faces = a.faces | b.faces
    violation = validate_faces(num_colors, faces)
    if violation is not None:
        raise InvalidComplexError(violation)
    return ColoredComplex._raw(num_colors, faces)
