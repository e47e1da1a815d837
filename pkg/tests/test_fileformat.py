"""Parsing, serialization and the float-import path."""

import pytest

from polytangent import (
    GenSpec,
    Orientation,
    PolygonFileError,
    Regime,
    generate_pair,
    import_float,
    parse,
    serialize,
)

CANONICAL = (
    "polytangent v1\n"
    "poly left 4 ccw\n"
    "0 0\n"
    "1 0\n"
    "1 1\n"
    "0 1\n"
    "poly right 4 ccw\n"
    "3 0\n"
    "4 0\n"
    "4 1\n"
    "3 1\n"
)


class TestParse:
    def test_two_squares(self):
        views = parse(CANONICAL)
        assert len(views) == 2
        assert views[0].name == "left" and views[1].name == "right"
        assert all(v.orientation is Orientation.CCW for v in views)
        assert views[1].corner(0) == (3, 0)

    def test_accepts_bytes(self):
        assert len(parse(CANONICAL.encode())) == 2

    def test_bad_header(self):
        with pytest.raises(PolygonFileError, match="line 1"):
            parse("polytangent v2\n")

    def test_orientation_mismatch(self):
        bad = CANONICAL.replace("poly left 4 ccw", "poly left 4 cw")
        with pytest.raises(PolygonFileError, match="declared cw"):
            parse(bad)

    def test_coordinate_overflow(self):
        bad = CANONICAL.replace("3 0", f"{2**62} 0")
        with pytest.raises(PolygonFileError, match="line 8"):
            parse(bad)

    def test_malformed_corner_line(self):
        bad = CANONICAL.replace("1 1", "1 1 1")
        with pytest.raises(PolygonFileError, match="line 5"):
            parse(bad)

    def test_non_integer_coordinate(self):
        bad = CANONICAL.replace("1 1", "1.5 1")
        with pytest.raises(PolygonFileError, match="decimal integer"):
            parse(bad)

    def test_duplicate_consecutive_corner(self):
        bad = CANONICAL.replace("1 0\n1 1", "1 0\n1 0")
        with pytest.raises(PolygonFileError, match="duplicate consecutive"):
            parse(bad)

    def test_truncated_file(self):
        with pytest.raises(PolygonFileError, match="end of file"):
            parse(CANONICAL[: CANONICAL.rfind("3 1")])

    def test_too_few_corners_declared(self):
        with pytest.raises(PolygonFileError, match="at least 3"):
            parse("polytangent v1\npoly a 2 ccw\n0 0\n1 0\n")

    def test_empty_file(self):
        with pytest.raises(PolygonFileError):
            parse("")


class TestRoundTrip:
    def test_canonical_identity(self):
        data = serialize(parse(CANONICAL))
        assert data.decode() == CANONICAL

    @pytest.mark.parametrize("seed", range(12))
    def test_generated_instances(self, seed):
        regime = list(Regime)[seed % 4]
        n0, n1 = 6 + seed, 8 + (seed * 3) % 11
        views = generate_pair(GenSpec(seed, n0, n1, regime))
        data = serialize(views)
        back = parse(data)
        for v, w in zip(views, back):
            assert v.corners == w.corners
            assert v.orientation is w.orientation
            assert v.name == w.name
        assert serialize(back) == data

    def test_canonical_form(self):
        data = serialize(parse(CANONICAL))
        text = data.decode()
        assert text.endswith("\n") and not text.endswith("\n\n")
        assert "  " not in text and "\t" not in text and "\r" not in text


class TestImportFloat:
    FLOATS = (
        "polytangent v1\n"
        "poly a 3 ccw\n"
        "0.0 0.0\n"
        "1.0 0.25\n"
        "0.333 0.667\n"
    )

    def test_grid_floats_match_integer_parse(self):
        views, report = import_float(CANONICAL, 1)
        assert [v.corners for v in views] == [v.corners for v in parse(CANONICAL)]

    def test_scaling_and_rounding(self):
        views, _report = import_float(self.FLOATS, 1000)
        assert views[0].corners == ((0, 0), (1000, 250), (333, 667))

    def test_snap_self_crossing_is_error(self):
        # Simple at scale 10, self-crossing at scale 1.
        data = (
            "polytangent v1\n"
            "poly q 4 ccw\n"
            "0.2 0.5\n"
            "2.7 2.6\n"
            "0.4 1.5\n"
            "0.5 3.5\n"
        )
        views, _ = import_float(data, 10)
        assert len(views) == 1
        with pytest.raises(PolygonFileError, match="not simple after snapping"):
            import_float(data, 1)

    def test_snap_collinearity_reported_not_raised(self):
        data = (
            "polytangent v1\n"
            "poly a 3 ccw\n"
            "0.0 0.0\n"
            "5.0 0.1\n"
            "2.0 3.0\n"
            "poly b 3 ccw\n"
            "10.0 0.1\n"
            "14.0 6.0\n"
            "9.0 5.0\n"
        )
        views, report = import_float(data, 1)
        # At scale 1 the corners (0,0), (5,0), (10,0) become collinear.
        assert not report.ok
        assert len(report.collinear_groups) >= 1

    def test_invalid_scale(self):
        with pytest.raises(ValueError):
            import_float(self.FLOATS, 0)
