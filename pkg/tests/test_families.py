import pytest

from ecctrees.errors import InvalidFamilyParameters, ParseError
from ecctrees.families import FamilySpec, build, double_star, parse_family, path, star
from ecctrees.graph import diameter, from_edge_list


def test_star_and_path():
    s = star(5)
    assert s.degree(0) == 4 and all(s.degree(v) == 1 for v in range(1, 5))
    assert path(7) == from_edge_list([(i, i + 1) for i in range(6)], 7)


def test_degenerate_caterpillar_is_path():
    assert build(FamilySpec("odd", 4, 3, 0, 0)) == path(4)
    assert double_star(4, 0, 0) == path(4)


def test_t8_5_11():
    g = build(FamilySpec("odd", 8, 5, 1, 1))
    assert g.n == 8 and diameter(g) == 5
    degrees = sorted(g.degree(v) for v in range(8))
    assert degrees.count(3) == 2
    assert g.degree(2) == 3 and g.degree(3) == 3


def test_double_star():
    g = double_star(6, 0, 2)
    assert diameter(g) == 3
    assert sorted(g.degree(v) for v in range(6)) == [1, 1, 1, 1, 2, 4]


@pytest.mark.parametrize("spec", [
    FamilySpec("odd", 5, 3, 1, 0),
    FamilySpec("odd", 8, 4, 1, 2),
    FamilySpec("odd", 9, 5, 1, 1),
    FamilySpec("even", 9, 6, 1, 1, 0),
    FamilySpec("even", 9, 5, 1, 1, 1),
    FamilySpec("star", 1),
    FamilySpec("tree", 5),
])
def test_invalid_parameters(spec):
    with pytest.raises(InvalidFamilyParameters):
        build(spec)


def test_even_caterpillar_attachment():
    g = build(FamilySpec("even", 11, 6, 1, 2, 1))
    assert diameter(g) == 6
    assert (g.degree(2), g.degree(3), g.degree(4)) == (3, 4, 3)


@pytest.mark.parametrize("text", ["star:n=5", "path:n=7", "odd:n=8,d=5,a=1,b=1",
                                  "even:n=9,d=6,a=1,b=0,c=1"])
def test_parse_roundtrip(text):
    assert str(parse_family(text)) == text


@pytest.mark.parametrize("text,exc", [
    ("odd:n=8,d=5,a=1", ParseError),
    ("odd:n=8,d=5,a=1,b=x", ParseError),
    ("odd:n=8,d=5,a=1,b=1,c=0", ParseError),
    ("blob:n=3", ParseError),
    ("odd:n=8,d=5,a=2,b=0", InvalidFamilyParameters),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_family(text)
