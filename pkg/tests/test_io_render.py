import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wtab.entry import entries, entry
from wtab.frames import pyramid, symmetric_pyramid
from wtab.io import InputError, dumps, from_json, load_json, load_stable, load_table, parse_json_text, to_json
from wtab.render import render, render_rows
from wtab.rs import rs_tableau
from wtab.stables import make_stable
from wtab.tables import make_table

SP10 = make_stable([[-7, -2], [-4, -1, 3]], "-")


def round_trip(value):
    return from_json(json.loads(dumps(value)))


class TestJson:
    def test_entries(self):
        assert to_json(entry(3)) == 3
        assert to_json(entry("1/2")) == {"num": 1, "den": 2}
        assert to_json(entry("1/2+i")) == {"re": {"num": 1, "den": 2}, "im": 1}
        assert from_json("-3/2") == entry("-3/2")

    def test_floats_are_refused(self):
        with pytest.raises(InputError):
            from_json(0.5)
        with pytest.raises(InputError):
            from_json(True)
        with pytest.raises(InputError):
            from_json({"num": 1, "den": 0})

    def test_round_trips(self):
        table = make_table([[5], [-1, 3], ["1/2", 1, 1, 4]], [1, 0, -2])
        for value in (pyramid([4, 2, 1]), symmetric_pyramid([3, 3, 2, 2]), table, SP10, rs_tableau([3, 1, 2])):
            assert round_trip(value) == value

    def test_canonical_text_is_stable(self):
        text = dumps(make_table([[1, 2]]))
        assert text == dumps(round_trip(make_table([[1, 2]])))
        assert " " not in text

    def test_tableau_shape(self):
        assert to_json(rs_tableau([1, 0, 0]))["shape"] == [2, 1]

    @settings(max_examples=50)
    @given(st.lists(st.lists(st.fractions(max_denominator=3), min_size=1, max_size=3), min_size=1, max_size=3))
    def test_table_round_trip_property(self, rows):
        t = make_table(rows)
        assert round_trip(t) == t


class TestErrors:
    def test_syntax_error_location(self):
        with pytest.raises(InputError) as info:
            parse_json_text('{"kind": "frame",\n  "rows": [}')
        assert info.value.line == 2 and info.value.column is not None
        assert "line 2" in str(info.value)

    def test_bad_shapes(self):
        for bad in (
            {"kind": "frame", "rows": [{"offset": 0}]},
            {"kind": "frame", "rows": [{"offset": 0, "len": 1}, {"offset": 5, "len": 1}]},
            {"kind": "table", "rows": [1, 2]},
            {"kind": "stable", "half_rows": [[1]]},
            {"kind": "nonsense"},
        ):
            with pytest.raises(InputError):
                from_json(bad)

    def test_load_table_and_stable(self, tmp_path):
        path = tmp_path / "t.json"
        path.write_text("[[3, 3, 5, 5], [4], [1, 2]]")
        assert load_table(str(path)).m == 3
        assert load_json("[1]") == [1]
        assert load_stable("[[-7,-2],[-4,-1,3]]", "-") == SP10
        with pytest.raises(InputError):
            load_stable("[[1]]")
        with pytest.raises(InputError):
            load_stable(dumps(SP10), "+")
        with pytest.raises(InputError):
            load_table(dumps(SP10))


class TestRender:
    def test_single_box(self):
        assert render_rows([(0, 1)], [["7"]]) == "+---+\n|  7|\n+---+"

    def test_half_shift_is_half_a_box(self):
        lines = render(pyramid([2, 1], centered=True)).splitlines()
        assert lines == ["  +---+", "  |   |", "+-+-+-+-+", "|   |   |", "+---+---+"]

    def test_table_entries_are_shown(self):
        out = render(make_table([[3, 3, 5, 5], [4], [1, 2]]))
        for x in ("3", "4", "5", "1", "2"):
            assert x in out

    def test_origin_marker(self):
        out = render(SP10)
        assert out.count("*") == 1
        assert "-7" in out and "7" in out
        assert render(symmetric_pyramid([2, 2])).count("*") == 1

    def test_wide_entries(self):
        out = render(make_table([["-1/2"]]))
        assert "-1/2" in out

    def test_unknown_value(self):
        with pytest.raises(TypeError):
            render(3)


def test_entries_helper():
    assert entries([1, "1/2"]) == (entry(1), entry("1/2"))
