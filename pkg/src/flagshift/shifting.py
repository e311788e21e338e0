"""Index dominance and color-shifted structure.

A face F dominates G (written G <= F here) when every vertex of G has a
vertex of the same color in F with index at least as large.  A complex
is color-shifted when its face set is a down-set for this order.  The
shift-maximal faces of a color-shifted complex are the maximal elements;
they generate the complex through their principal down-sets.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator

from .complexes import ColoredComplex, Face, Vertex


def dominance_le(lower: Face, upper: Face) -> bool:
    """Whether `lower` precedes `upper` in the dominance order."""
    for color, index in lower.vertices:
        u = upper.get(color)
        if u is None or index > u:
            return False
    return True


def shift_max_key(face: Face) -> tuple:
    """Canonical order for shift-maximal faces: colors, then indices."""
    return (face.colors, face.indices)


def down_set_faces(face: Face) -> Iterator[Face]:
    """Every face dominated by `face` (the face itself included)."""
    options = [
        [None] + [Vertex(color, i) for i in range(1, index + 1)]
        for color, index in face.vertices
    ]
    for choice in product(*options):
        yield Face(v for v in choice if v is not None)


def _immediate_predecessors(face: Face) -> Iterator[Face]:
    for color, index in face.vertices:
        yield face.without_color(color)
        if index > 1:
            yield face.with_index(color, index - 1)


def find_shift_violation(c: ColoredComplex) -> tuple[Face, Face] | None:
    """Witness that c is not color-shifted, or None.

    Returns (missing, containing): the containing face is the first face
    in canonical order with any absent dominated face, and the missing
    face is the canonically smallest absent member of its down-set.
    """
    faces = c.faces
    for face in c.sorted_faces():
        if any(pred not in faces for pred in _immediate_predecessors(face)):
            missing = min(
                (g for g in down_set_faces(face) if g not in faces),
                key=lambda f: f.sort_key,
            )
            return missing, face
    return None


def is_color_shifted(c: ColoredComplex) -> bool:
    return find_shift_violation(c) is None


def shift_maximal_faces(c: ColoredComplex) -> list[Face]:
    """Dominance-maximal faces of a color-shifted complex, canonically ordered.

    A face is maximal exactly when no immediate successor (one index
    bumped, or one fresh color added at index 1) is present; for a
    down-set this is equivalent to having no dominating face at all.
    The empty face is maximal exactly when the complex is {empty face}.
    """
    violation = find_shift_violation(c)
    if violation is not None:
        missing, containing = violation
        raise ValueError(
            f"complex is not color-shifted: {containing} present but {missing} missing"
        )
    faces = c.faces
    maximal = []
    for face in faces:
        used = set(face.colors)
        succs: list[Face] = [
            face.with_index(color, index + 1) for color, index in face.vertices
        ]
        succs.extend(
            face.with_vertex(Vertex(color, 1))
            for color in range(1, c.num_colors + 1)
            if color not in used
        )
        if not any(s in faces for s in succs):
            maximal.append(face)
    maximal.sort(key=shift_max_key)
    return maximal


def principal_downset(c: ColoredComplex, face: Face) -> ColoredComplex:
    """Subcomplex of everything dominated by one face of c.

    For a color-shifted c the result is contained in c and its unique
    shift-maximal face is `face`.
    """
    if face not in c.faces:
        raise ValueError(f"face {face} is not in the complex")
    return ColoredComplex._raw(c.num_colors, frozenset(down_set_faces(face)))


def shift_closure(num_colors: int, generators: Iterable[Face]) -> ColoredComplex:
    """Smallest color-shifted complex containing the given faces.

    With no generators this is the empty complex (zero faces).
    """
    num_colors = int(num_colors)
    if num_colors < 0:
        raise ValueError("num_colors must be >= 0")
    closed: set[Face] = set()
    for gen in generators:
        for color in gen.colors:
            if color > num_colors:
                raise ValueError(
                    f"generator {gen} uses color {color} but num_colors is {num_colors}"
                )
        if gen not in closed:
            closed.update(down_set_faces(gen))
    return ColoredComplex._raw(num_colors, frozenset(closed))
