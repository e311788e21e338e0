"""Cone extension of a color-shifted complex.

Given a non-empty color-shifted complex over n colors with shift-maximal
faces F_1 .. F_k (canonical order), the extension adds one fresh color
per maximal face and cones the principal down-set of F_p with the first
vertex of color n+p.  The result, over m = n+k colors:

  * restricted to the original n colors it is the input complex, and
  * it is the unique color-shifted m-colored complex with its flag
    f-vector (checked exhaustively by the enumeration oracle).

The bookkeeping that drives the uniqueness argument is recorded in a
report: each apex color n+p carries exactly one vertex, and for each
color r used by F_p the number of {r, n+p}-colored edges equals the
index of F_p's vertex of color r.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import ColoredComplex, Face, Vertex, cone, select_colors, union
from .flags import FlagVector, colors_of_mask, flag_f, subset_masks
from .shifting import find_shift_violation, is_color_shifted, principal_downset, shift_maximal_faces


@dataclass(frozen=True)
class ConstructionReport:
    """Everything the extension predicts about its own output."""

    base_colors: int                               # n
    apex_count: int                                # k
    total_colors: int                              # m = n + k
    shift_maximal: tuple[Face, ...]                # F_1 .. F_k, canonical order
    apexes: tuple[Vertex, ...]                     # first vertex of each fresh color
    predicted_singletons: tuple[int, ...]          # apex colors; each claims count 1
    predicted_edges: tuple[tuple[int, int, int], ...]  # (color r, apex color, count)
    predicted_flag: FlagVector                     # full flag f-vector of the output


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failed_check: str | None = None
    detail: str | None = None


def cone_extension(delta: ColoredComplex) -> tuple[ColoredComplex, ConstructionReport]:
    """Extend a non-empty color-shifted complex as described above.

    Returns the extended complex together with its construction report.
    Raises ValueError if delta is empty or not color-shifted, and if the
    extension would need more colors than flag vectors support.
    """
    if len(delta) == 0:
        raise ValueError("cannot extend the empty complex")
    violation = find_shift_violation(delta)
    if violation is not None:
        missing, containing = violation
        raise ValueError(
            f"input is not color-shifted: {containing} present but {missing} missing"
        )
    n = delta.num_colors
    maximal = shift_maximal_faces(delta)
    k = len(maximal)
    extended = delta
    apexes = []
    predicted_edges = []
    for p, face in enumerate(maximal, start=1):
        apex = Vertex(n + p, 1)
        apexes.append(apex)
        extended = union(extended, cone(principal_downset(delta, face), apex))
        predicted_edges.extend(
            (color, n + p, index) for color, index in face.vertices
        )
    report = ConstructionReport(
        base_colors=n,
        apex_count=k,
        total_colors=n + k,
        shift_maximal=tuple(maximal),
        apexes=tuple(apexes),
        predicted_singletons=tuple(range(n + 1, n + k + 1)),
        predicted_edges=tuple(predicted_edges),
        predicted_flag=flag_f(extended),
    )
    return extended, report


def _flag_name(colors) -> str:
    return "f_{" + ",".join(map(str, colors)) + "}"


def verify_cone_extension(
    delta: ColoredComplex, extended: ColoredComplex, report: ConstructionReport
) -> VerificationResult:
    """Re-check every claim of a construction report against `extended`.

    Checks run in a fixed order and the first failure is named:
    (a) selecting the base colors recovers delta, (b) the flag f-vector
    matches every prediction, (c) the extension is color-shifted,
    (d) no face uses more than one fresh color.
    """
    n = report.base_colors
    if extended.num_colors != report.total_colors:
        return VerificationResult(
            False,
            "total-colors",
            f"expected {report.total_colors} colors, found {extended.num_colors}",
        )
    if select_colors(extended, range(1, n + 1)) != delta:
        return VerificationResult(
            False, "selection", f"selecting colors 1..{n} does not recover the input"
        )
    fv = flag_f(extended)
    for apex_color in report.predicted_singletons:
        got = fv.count((apex_color,))
        if got != 1:
            return VerificationResult(
                False,
                f"flag:{_flag_name((apex_color,))}",
                f"expected 1 vertex of color {apex_color}, found {got}",
            )
    for color, apex_color, expected in report.predicted_edges:
        got = fv.count((color, apex_color))
        if got != expected:
            return VerificationResult(
                False,
                f"flag:{_flag_name((color, apex_color))}",
                f"expected {expected} edges on colors {{{color},{apex_color}}}, found {got}",
            )
    if fv != report.predicted_flag:
        for mask in subset_masks(report.predicted_flag.num_colors):
            if fv.count_at_mask(mask) != report.predicted_flag.count_at_mask(mask):
                colors = colors_of_mask(mask)
                return VerificationResult(
                    False,
                    f"flag:{_flag_name(colors)}",
                    f"expected {report.predicted_flag.count_at_mask(mask)} faces "
                    f"on colors {set(colors) or '{}'}, found {fv.count_at_mask(mask)}",
                )
    if not is_color_shifted(extended):
        return VerificationResult(False, "color-shifted", "the extension is not color-shifted")
    for face in extended.faces:
        fresh = [c for c in face.colors if c > n]
        if len(fresh) > 1:
            return VerificationResult(
                False, "apex-faces", f"face {face} uses {len(fresh)} fresh colors"
            )
    return VerificationResult(True)
