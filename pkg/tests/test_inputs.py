import pytest

from collinear.geometry import COORD_BOUND, CoordinateRangeError
from collinear.inputs import (
    DuplicateLineError,
    GeneratorSpecError,
    ParseError,
    format_points,
    generate,
    parse_points,
)
from collinear.oracle import brute_force


def test_parse_basic():
    ps = parse_points("0 0\n1 1\n2 2\n")
    assert ps.as_tuples() == [(0, 0), (1, 1), (2, 2)]


def test_parse_comments_blank_and_whitespace():
    ps = parse_points("# header\n\n5 -3\n  7\t 8  \n")
    assert ps.as_tuples() == [(5, -3), (7, 8)]


def test_parse_duplicate_names_lines():
    with pytest.raises(DuplicateLineError) as err:
        parse_points("0 0\n0 0\n")
    assert (err.value.first_line, err.value.second_line) == (1, 2)
    assert "lines 1 and 2" in str(err.value)


@pytest.mark.parametrize("text, line", [
    ("0 0\n1\n", 2), ("0 0\n1 2 3\n", 2), ("1.5 2\n", 1), ("a b\n", 1),
])
def test_parse_malformed(text, line):
    with pytest.raises(ParseError) as err:
        parse_points(text)
    assert err.value.line == line


def test_parse_range():
    parse_points(f"{COORD_BOUND} {-COORD_BOUND}\n")
    with pytest.raises(CoordinateRangeError, match="line 2"):
        parse_points(f"0 0\n{COORD_BOUND + 1} 0\n")


def test_format_roundtrip():
    ps = generate("random:30,box=9", seed=4)
    assert parse_points(format_points(ps)) == ps


def test_grid():
    assert len(generate("grid:3x3")) == 9
    assert len(generate("grid:3×4")) == 12


def test_random_deterministic():
    a = generate("random:10,box=20", seed=42)
    assert a == generate("random:10,box=20", seed=42)
    assert a != generate("random:10,box=20", seed=43)
    assert len(a) == 10 and all(abs(c) <= 20 for p in a for c in p)
    assert generate("random:10,20", seed=42) == a


def test_planted_lines_found():
    ps = generate("planted:lines=2,per_line=5,noise=0", seed=1)
    assert len(ps) == 10
    sets = brute_force(ps).sets
    assert sum(len(s) >= 5 for s in sets) >= 2
    assert generate("planted:lines=2,per_line=5,noise=0", seed=1) == ps


def test_planted_with_noise_and_box():
    ps = generate("planted:lines=3,per_line=6,noise=10,box=15", seed=2)
    assert len(ps) == 28
    assert all(abs(c) <= 15 for p in ps for c in p)


@pytest.mark.parametrize("spec", [
    "random:100,box=2", "grid:0x3", "planted:lines=1,per_line=50,noise=0,box=3",
    "hexagons:4", "random:abc", "planted:per_line=3",
])
def test_infeasible_or_bad_specs(spec):
    with pytest.raises(GeneratorSpecError):
        generate(spec, seed=0)
