"""Document round trips, rejection messages, canonical bytes."""

from __future__ import annotations

import json

import pytest

from flagshift import (
    CoarseFVector,
    ColoredComplex,
    DocumentError,
    FlagVector,
    InvalidComplexError,
    coarse_f,
    cone_extension,
    emit_coarse,
    emit_complex,
    emit_flag_vector,
    emit_report,
    flag_f,
    h_from_f,
    parse_complex,
    parse_flag_vector,
)


# ===================================================================
# complex documents
# ===================================================================

def test_parse_complex_with_faces(sample_a):
    text = """
    {"num_colors": 2,
     "faces": [[], [[1, 1]], [[1, 2]], [[2, 1]],
               [[1, 1], [2, 1]], [[1, 2], [2, 1]]]}
    """
    assert parse_complex(text) == sample_a


def test_parse_complex_with_generators(sample_a):
    text = '{"num_colors": 2, "generators": [[[1, 1], [2, 1]], [[2, 1], [1, 2]]]}'
    assert parse_complex(text) == sample_a


def test_parse_complex_vertex_order_is_free():
    a = parse_complex('{"num_colors": 2, "generators": [[[2, 1], [1, 1]]]}')
    b = parse_complex('{"num_colors": 2, "generators": [[[1, 1], [2, 1]]]}')
    assert a == b


def test_emit_parse_round_trip(corpus):
    for c in corpus:
        assert parse_complex(emit_complex(c)) == c


def test_emit_complex_is_byte_stable(sample_b):
    rebuilt = ColoredComplex(sample_b.num_colors, set(sample_b.faces))
    assert emit_complex(sample_b) == emit_complex(rebuilt)
    assert emit_complex(sample_b).endswith("\n")


def test_emit_complex_distinct_bytes(corpus):
    seen = {}
    for c in corpus:
        text = emit_complex(c)
        assert text not in seen or seen[text] == c
        seen[text] = c


def test_emit_complex_face_order_is_canonical(sample_a):
    doc = json.loads(emit_complex(sample_a))
    assert doc["faces"] == [
        [],
        [[1, 1]],
        [[1, 2]],
        [[2, 1]],
        [[1, 1], [2, 1]],
        [[1, 2], [2, 1]],
    ]


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("{", "syntax error"),
        ("[]", "must be a JSON object"),
        ("{}", 'needs "num_colors"'),
        ('{"num_colors": true, "faces": []}', "must be an integer"),
        ('{"num_colors": -1, "faces": []}', ">= 0"),
        ('{"num_colors": 1}', 'exactly one of "faces" or "generators"'),
        (
            '{"num_colors": 1, "faces": [], "generators": []}',
            'exactly one of "faces" or "generators"',
        ),
        ('{"num_colors": 1, "faces": 3}', "must be a list"),
        ('{"num_colors": 1, "faces": [3]}', "face #0"),
        ('{"num_colors": 1, "faces": [[[1, 1, 1]]]}', "malformed vertex"),
        ('{"num_colors": 1, "faces": [[[1, true]]]}', "malformed vertex"),
        ('{"num_colors": 1, "generators": [[[1, 1], [1, 2]]]}', "face #0"),
    ],
)
def test_parse_complex_rejections(text, fragment):
    with pytest.raises(DocumentError, match=fragment):
        parse_complex(text)


def test_parse_complex_invalid_complex_raised():
    # well-formed document, mathematically invalid complex
    with pytest.raises(InvalidComplexError):
        parse_complex('{"num_colors": 1, "faces": [[[1, 1]]]}')
    with pytest.raises(InvalidComplexError):
        parse_complex('{"num_colors": 0, "generators": [[[1, 1]]]}')


def test_parse_complex_duplicate_faces_collapse():
    c = parse_complex('{"num_colors": 1, "faces": [[], [[1, 1]], [[1, 1]]]}')
    assert len(c) == 2


# ===================================================================
# flag vector documents
# ===================================================================

def test_parse_flag_vector_basic():
    fv = parse_flag_vector(
        '{"num_colors": 2, "kind": "f", "entries": ['
        '{"colors": [], "count": 1},'
        '{"colors": [1], "count": 2},'
        '{"colors": [2], "count": 1},'
        '{"colors": [1, 2], "count": 2}]}'
    )
    assert fv == FlagVector(2, (1, 2, 1, 2), kind="f")


def test_parse_flag_vector_kind_defaults_to_f():
    fv = parse_flag_vector('{"num_colors": 1, "entries": [{"colors": [], "count": 1}]}')
    assert fv.kind == "f"


def test_parse_flag_vector_unsorted_colors_accepted():
    fv = parse_flag_vector(
        '{"num_colors": 2, "entries": [{"colors": [], "count": 1},'
        ' {"colors": [2, 1], "count": 3}]}'
    )
    assert fv.count((1, 2)) == 3


def test_parse_flag_vector_h_kind_negative_ok():
    fv = parse_flag_vector(
        '{"num_colors": 1, "kind": "h", "entries": [{"colors": [1], "count": -2}]}'
    )
    assert fv.kind == "h" and fv.count((1,)) == -2


def test_flag_vector_round_trip(corpus):
    for c in corpus:
        fv = flag_f(c)
        assert parse_flag_vector(emit_flag_vector(fv)) == fv
        hv = h_from_f(fv)
        assert parse_flag_vector(emit_flag_vector(hv)) == hv


def test_emit_flag_vector_omits_zeros_keeps_empty():
    fv = FlagVector(2, {(): 1, (2,): 4}, kind="f")
    doc = json.loads(emit_flag_vector(fv))
    assert doc["entries"] == [
        {"colors": [], "count": 1},
        {"colors": [2], "count": 4},
    ]


def test_emit_flag_vector_zero_empty_entry_still_written():
    hv = h_from_f(FlagVector(1, (1, 1), kind="f"))
    # h = (1, 0): the zero singleton entry disappears, the empty one stays
    doc = json.loads(emit_flag_vector(hv))
    assert {"colors": [], "count": 1} in doc["entries"]


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("{}", 'needs "num_colors"'),
        ('{"num_colors": 1}', 'needs "entries"'),
        ('{"num_colors": 1, "entries": 5}', "must be a list"),
        ('{"num_colors": 1, "kind": "g", "entries": []}', '"f" or "h"'),
        ('{"num_colors": 1, "entries": [5]}', "entry #0"),
        ('{"num_colors": 1, "entries": [{"colors": [1]}]}', "entry #0"),
        (
            '{"num_colors": 1, "entries": [{"colors": [1, 1], "count": 1}]}',
            "repeats a color",
        ),
        (
            '{"num_colors": 1, "entries": [{"colors": [1], "count": 1},'
            ' {"colors": [1], "count": 2}]}',
            "duplicate entry",
        ),
        (
            '{"num_colors": 1, "entries": [{"colors": [2], "count": 1}]}',
            "out of range",
        ),
        (
            '{"num_colors": 1, "kind": "f", "entries": [{"colors": [], "count": 7}]}',
            "0 or 1",
        ),
        (
            '{"num_colors": 1, "entries": [{"colors": [], "count": 1},'
            ' {"colors": [1], "count": 9223372036854775808}]}',
            "magnitude|64",
        ),
    ],
)
def test_parse_flag_vector_rejections(text, fragment):
    with pytest.raises(DocumentError, match=fragment):
        parse_flag_vector(text)


# ===================================================================
# coarse and report documents
# ===================================================================

def test_emit_coarse(sample_a):
    text = emit_coarse(coarse_f(flag_f(sample_a)))
    assert json.loads(text) == {"entries": [1, 3, 2]}


def test_emit_report_shape(sample_a):
    _, report = cone_extension(sample_a)
    doc = json.loads(emit_report(report))
    assert doc["base_colors"] == 2
    assert doc["apex_count"] == 1
    assert doc["total_colors"] == 3
    assert doc["shift_maximal"] == [[[1, 2], [2, 1]]]
    assert doc["apexes"] == [[3, 1]]
    assert doc["predicted_singletons"] == [{"colors": [3], "count": 1}]
    assert doc["predicted_edges"] == [
        {"colors": [1, 3], "count": 2},
        {"colors": [2, 3], "count": 1},
    ]
    assert doc["predicted_flag"]["num_colors"] == 3


def test_emit_report_round_trips_flag(sample_b):
    _, report = cone_extension(sample_b)
    doc = json.loads(emit_report(report))
    flag_text = json.dumps(doc["predicted_flag"])
    assert parse_flag_vector(flag_text) == report.predicted_flag


def test_coarse_entries_validation():
    with pytest.raises(ValueError):
        CoarseFVector(())
