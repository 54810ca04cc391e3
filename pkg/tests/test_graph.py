import pytest

from ecctrees.errors import (
    DisconnectedGraph,
    DuplicateEdge,
    DuplicateIndex,
    IndexOutOfRange,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
)
from ecctrees.families import FamilySpec, build, star
from ecctrees.graph import (
    IntSymMatrix,
    diameter,
    double_sweep_diameter,
    ecc_profile,
    eccentricity_matrix,
    format_edge_list,
    from_edge_list,
    nonzero_pattern_connected,
    parse_edge_list,
    principal_submatrix,
)

P4 = [(0, 1), (1, 2), (2, 3)]


def test_k2_and_p4_build():
    k2 = from_edge_list([(0, 1)], 2)
    assert k2.n == 2 and k2.is_tree
    p4 = from_edge_list(P4, 4)
    assert p4.sorted_edges() == P4
    assert [p4.degree(v) for v in range(4)] == [1, 2, 2, 1]


@pytest.mark.parametrize("pairs,n,exc", [
    ([(0, 1), (2, 3)], 4, DisconnectedGraph),
    ([(0, 0)], 1, SelfLoop),
    ([(0, 1), (1, 0)], 2, DuplicateEdge),
    ([(0, 5)], 3, VertexOutOfRange),
])
def test_invalid_edge_lists(pairs, n, exc):
    with pytest.raises(exc):
        from_edge_list(pairs, n)


def test_eccentricities():
    prof = ecc_profile(from_edge_list(P4, 4))
    assert list(prof.ecc) == [3, 2, 2, 3] and prof.diameter == 3
    prof = ecc_profile(star(5))
    assert list(prof.ecc) == [1, 2, 2, 2, 2] and prof.diameter == 2
    assert diameter(build(FamilySpec("odd", 8, 5, 1, 1))) == 5


def test_double_sweep_matches_bfs_diameter(rng):
    from ecctrees.enumeration import free_trees
    for t in free_trees(9):
        assert double_sweep_diameter(t.tree) == diameter(t.tree)


def test_eccentricity_matrix_examples():
    assert eccentricity_matrix(from_edge_list([(0, 1)], 2)).to_lists() == [[0, 1], [1, 0]]
    assert eccentricity_matrix(from_edge_list(P4, 4)).to_lists() == [
        [0, 0, 2, 3], [0, 0, 0, 2], [2, 0, 0, 0], [3, 2, 0, 0]]
    m = eccentricity_matrix(star(5)).to_lists()
    assert m[0] == [0, 1, 1, 1, 1]
    assert m[1] == [1, 0, 2, 2, 2]


def test_matrix_properties_random_trees(rng):
    from ecctrees.enumeration import prufer_decode
    for _ in range(200):
        n = rng.randint(2, 25)
        g = prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)
        m = eccentricity_matrix(g)
        prof = ecc_profile(g)
        assert m.max_entry() == prof.diameter
        assert nonzero_pattern_connected(m)
        for u in range(n):
            assert m[u, u] == 0
            # each row has an entry equal to the row vertex's eccentricity or a smaller one
            assert any(m[u, v] for v in range(n))


def test_int_sym_matrix_validation():
    with pytest.raises(ValueError):
        IntSymMatrix.from_lists([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        IntSymMatrix.from_lists([[1, 0], [0, 0]])


def test_principal_submatrix():
    m = IntSymMatrix.from_lists([[0, 0, 3, 4], [0, 0, 0, 3], [3, 0, 0, 0], [4, 3, 0, 0]])
    assert principal_submatrix(m, range(4)) == m
    assert principal_submatrix(m, [0]).to_lists() == [[0]]
    assert principal_submatrix(m, [3, 0]).to_lists() == [[0, 4], [4, 0]]
    with pytest.raises(DuplicateIndex):
        principal_submatrix(m, [0, 0])
    with pytest.raises(IndexOutOfRange):
        principal_submatrix(m, [4])


def test_endpoint_submatrix_of_a_real_tree():
    g = build(FamilySpec("even", 9, 4, 1, 2, 1))
    m = eccentricity_matrix(g)
    assert principal_submatrix(m, [0, 1, 3, 4]).to_lists() == [
        [0, 0, 3, 4], [0, 0, 0, 3], [3, 0, 0, 0], [4, 3, 0, 0]]


def test_parse_edge_list_roundtrip():
    g = build(FamilySpec("even", 11, 6, 1, 2, 1))
    assert parse_edge_list(format_edge_list(g)) == g
    text = "# path\n0 1\n\n1 2\n2 3\n"
    assert parse_edge_list(text) == from_edge_list(P4, 4)


def test_header_allows_isolated_check():
    with pytest.raises(DisconnectedGraph):
        parse_edge_list("n 5\n0 1\n1 2\n2 3\n")
    assert parse_edge_list("n 1\n").n == 1


@pytest.mark.parametrize("text,line", [
    ("0 1\n1 x\n", "line 2"),
    ("0 1 2\n", "line 1"),
    ("0 1\nn 3\n", "line 2"),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError, match=line):
        parse_edge_list(text)


def test_empty_edge_list():
    with pytest.raises(ParseError):
        parse_edge_list("# nothing\n")
