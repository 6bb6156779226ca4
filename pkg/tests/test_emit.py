"""Emission layer: deterministic rendering and round-trip parsing."""

import json

import pytest
from hypothesis import given, strategies as st

from qaplan.emit import (
    Column,
    Table,
    format_cell,
    read_csv,
    read_json,
    render,
    render_csv,
    render_json,
    render_text,
)


def sample_table():
    return Table(
        name="demo",
        columns=[Column("k", "Key"), Column("v", "Value", ".2f"), Column("n", "N", "d")],
        rows=[{"k": "a", "v": 1.234, "n": 7}, {"k": "b", "v": 50.0, "n": 1200}],
        notes=["first note", "second note"],
    )


def test_format_cell():
    assert format_cell("text", ".2f") == "text"
    assert format_cell(1.234, ".2f") == "1.23"
    assert format_cell(7, "d") == "7"


def test_csv_layout():
    out = render_csv(sample_table())
    lines = out.split("\r\n")
    assert lines[0] == "# first note"
    assert lines[1] == "# second note"
    assert lines[2] == "k,v,n"
    assert lines[3] == "a,1.23,7"
    assert lines[4] == "b,50.00,1200"


def test_json_layout():
    out = render_json(sample_table())
    assert out.endswith("\n")
    doc = json.loads(out)
    assert doc["table"] == "demo"
    assert [c["key"] for c in doc["columns"]] == ["k", "v", "n"]
    assert doc["rows"][0] == {"k": "a", "v": 1.23, "n": 7}
    assert doc["notes"] == ["first note", "second note"]


def test_text_layout():
    out = render_text(sample_table())
    lines = out.splitlines()
    assert lines[0] == "demo"
    assert lines[1].split() == ["Key", "Value", "N"]
    assert set(lines[2]) == {"-", " "}
    assert lines[-1] == "note: second note"


def test_unknown_format_rejected():
    with pytest.raises(ValueError):
        render(sample_table(), "yaml")


def test_rendering_is_deterministic():
    t = sample_table()
    for fmt in ("csv", "json", "table"):
        assert render(t, fmt) == render(t, fmt)


def test_csv_round_trip():
    back = read_csv(render_csv(sample_table()))
    assert back.notes == ["first note", "second note"]
    assert [c.key for c in back.columns] == ["k", "v", "n"]
    assert back.rows == [
        {"k": "a", "v": 1.23, "n": 7},
        {"k": "b", "v": 50.0, "n": 1200},
    ]


def test_json_round_trip():
    back = read_json(render_json(sample_table()))
    assert back.name == "demo"
    assert back.rows[1] == {"k": "b", "v": 50.0, "n": 1200}
    assert back.notes == ["first note", "second note"]


cells = st.floats(
    allow_nan=False, allow_infinity=False, min_value=-1e15, max_value=1e15
)


@given(st.lists(st.tuples(cells, cells), min_size=1, max_size=8))
def test_csv_and_json_carry_identical_numbers(pairs):
    t = Table(
        name="p",
        columns=[Column("x", "X", ".6g"), Column("y", "Y", ".6g")],
        rows=[{"x": x, "y": y} for x, y in pairs],
    )
    from_csv = read_csv(render_csv(t)).rows
    from_json = read_json(render_json(t)).rows
    assert len(from_csv) == len(from_json) == len(pairs)
    for a, b in zip(from_csv, from_json):
        assert a["x"] == b["x"] and a["y"] == b["y"]
