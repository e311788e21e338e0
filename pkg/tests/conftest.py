"""Shared fixtures: the worked examples and a mixed corpus of complexes."""

from __future__ import annotations

import sys

import pytest

from flagshift import (
    ColoredComplex,
    cone,
    from_generators,
    shift_closure,
    trivial_complex,
)

from helpers import edge2, face


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print the acceptance verdict lines collected during the run."""
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "VERDICTS", None) if module else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def sample_a() -> ColoredComplex:
    """Closure of edges (1,1),(2,1): one shift-maximal face."""
    return from_generators(2, [edge2(1, 1), edge2(2, 1)])


@pytest.fixture(scope="session")
def sample_b() -> ColoredComplex:
    """Closure of edges (1,1),(2,1),(1,2): two shift-maximal faces."""
    return from_generators(2, [edge2(1, 1), edge2(2, 1), edge2(1, 2)])


def _full_simplex3() -> ColoredComplex:
    return from_generators(3, [face((1, 1), (2, 1), (3, 1))])


def _three_color_shifted() -> ColoredComplex:
    return shift_closure(3, [face((1, 2), (2, 1), (3, 1)), face((2, 2))])


def _nonshifted_edge22() -> ColoredComplex:
    """Only the top edge (2,2) over a 2x2 vertex grid: valid, not shifted."""
    return ColoredComplex(
        2,
        [
            face(),
            face((1, 1)),
            face((1, 2)),
            face((2, 1)),
            face((2, 2)),
            face((1, 2), (2, 2)),
        ],
    )


def _nonshifted_gap() -> ColoredComplex:
    """Edge (2,1) present but edge (1,1) missing."""
    return ColoredComplex(
        2,
        [face(), face((1, 1)), face((1, 2)), face((2, 1)), face((1, 2), (2, 1))],
    )


@pytest.fixture(scope="session")
def shifted_corpus(sample_a, sample_b) -> list[ColoredComplex]:
    """Color-shifted complexes of assorted shapes and color counts."""
    return [
        trivial_complex(0),
        trivial_complex(1),
        trivial_complex(3),
        shift_closure(1, [face((1, 3))]),
        sample_a,
        sample_b,
        shift_closure(2, [edge2(2, 2)]),
        shift_closure(2, [edge2(3, 1), edge2(1, 3)]),
        _full_simplex3(),
        _three_color_shifted(),
        shift_closure(4, [face((1, 1), (2, 1), (3, 1), (4, 1)), face((1, 3))]),
    ]


@pytest.fixture(scope="session")
def corpus(shifted_corpus) -> list[ColoredComplex]:
    """Valid complexes, shifted or not; all non-empty."""
    return [
        *shifted_corpus,
        _nonshifted_edge22(),
        _nonshifted_gap(),
        cone(_nonshifted_gap(), (3, 1)),
        from_generators(2, [edge2(2, 1), edge2(1, 2)]),
        from_generators(
            3, [face((1, 1), (2, 2)), face((2, 1), (3, 2)), face((3, 1))]
        ),
    ]
