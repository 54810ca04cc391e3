from fractions import Fraction

import pytest

from ecctrees.errors import InvalidPartition, NonIntegerQuotient, NotEquitable, ParseError, UnsupportedFamily
from ecctrees.families import FamilySpec, build
from ecctrees.graph import IntSymMatrix, eccentricity_matrix, from_edge_list
from ecctrees.partitions import (
    VertexPartition,
    canonical_partition,
    char_poly_exact,
    format_partition,
    is_equitable,
    parse_partition,
    quotient,
    spectrum_contained,
)
from ecctrees.polynomial import IntPolynomial

T8 = FamilySpec("odd", 8, 5, 1, 1)


def em(spec):
    return eccentricity_matrix(build(spec))


def test_pi1_quotient_matrix():
    m = em(T8)
    q = quotient(m, canonical_partition(T8))
    rows = q.as_ints()
    assert rows[0] == [0, 0, 0, 3, 8, 5]
    assert rows == [[0, 0, 0, 3, 8, 5], [0, 0, 0, 0, 0, 4], [0, 0, 0, 0, 0, 3],
                    [3, 0, 0, 0, 0, 0], [4, 0, 0, 0, 0, 0], [5, 8, 3, 0, 0, 0]]
    assert is_equitable(m, canonical_partition(T8))
    assert char_poly_exact(q).factored_str() == "x^2(x^4 - 107x^2 + 1681)"
    assert spectrum_contained(q, m, canonical_partition(T8))


def test_singleton_and_single_cell():
    m = em(T8)
    single = VertexPartition.singletons(8)
    q = quotient(m, single)
    assert q.as_ints() == m.to_lists()
    assert is_equitable(m, single)
    assert char_poly_exact(q).degree == 8
    assert spectrum_contained(q, m, single)
    whole = VertexPartition.of([range(8)])
    assert quotient(m, whole).entries[0][0] == Fraction(sum(map(sum, m.to_lists())), 8)


def test_non_equitable_moved_pendant():
    # pendant moved from v2 to v1 breaks the cell structure of T(8,5;1,1)
    g = from_edge_list([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 6), (3, 7)], 8)
    m = eccentricity_matrix(g)
    pi = canonical_partition(T8)
    assert not is_equitable(m, pi)
    with pytest.raises(NotEquitable):
        spectrum_contained(quotient(m, pi), m, pi)


def test_exact_char_poly_small():
    assert char_poly_exact(IntSymMatrix.from_lists([[0]])) == IntPolynomial.x()
    assert char_poly_exact([[0, 2], [2, 0]]) == IntPolynomial.from_descending(1, 0, -4)


def test_pi4_char_poly():
    spec = FamilySpec("odd", 10, 7, 1, 1)
    q = quotient(em(spec), canonical_partition(spec))
    assert char_poly_exact(q).factored_str() == "x^4(x^4 - 253x^2 + 10404)"


def test_pi2_pi3_with_empty_middle_cell():
    spec = FamilySpec("even", 9, 6, 1, 0, 1)
    pi = canonical_partition(spec)
    assert len(pi.cells) == 7
    assert char_poly_exact(quotient(em(spec), pi)).factored_str() == "x^3(x^4 - 186x^2 - 108x + 5544)"
    spec = FamilySpec("even", 8, 6, 0, 0, 1)
    assert char_poly_exact(quotient(em(spec), canonical_partition(spec))).factored_str() == \
        "x^3(x^4 - 161x^2 - 108x + 3669)"


def test_pi3_cell_holds_v5():
    spec = FamilySpec("even", 12, 6, 1, 2, 2)
    pi = canonical_partition(spec)
    assert (4,) in pi.cells
    assert any(5 in c and len(c) == 3 for c in pi.cells)


def test_canonical_partition_unsupported():
    with pytest.raises(UnsupportedFamily):
        canonical_partition(FamilySpec("odd", 10, 9, 0, 0))
    with pytest.raises(UnsupportedFamily):
        canonical_partition(FamilySpec("even", 11, 6, 0, 1, 3))


@pytest.mark.parametrize("cells,msg", [
    ([[0, 1], [1, 2, 3, 4, 5, 6, 7]], "more than one"),
    ([[0, 1, 2]], "not covered"),
    ([[0, 9], [1, 2, 3, 4, 5, 6, 7]], "outside"),
    ([[], list(range(8))], "empty"),
])
def test_invalid_partitions(cells, msg):
    with pytest.raises(InvalidPartition, match=msg):
        quotient(em(T8), VertexPartition.of(cells))


def test_non_integral_quotient():
    m = em(T8)
    q = quotient(m, VertexPartition.of([[0], [1, 5], [2, 3, 4, 6, 7]]))
    assert not q.is_integral
    with pytest.raises(NonIntegerQuotient):
        char_poly_exact(q)
    p = char_poly_exact(q, strict=False)
    assert p.degree == 3


def test_partition_file_roundtrip():
    pi = canonical_partition(T8)
    assert parse_partition(format_partition(pi)) == pi
    assert parse_partition("# cells\n0\n1 6 # a pendant\n").cells == ((0,), (1, 6))
    with pytest.raises(ParseError, match="line 2"):
        parse_partition("0\n1 x\n")
    with pytest.raises(ParseError):
        parse_partition("\n# nothing\n")
