import math

import pytest

from ecctrees import closed_forms as cf
from ecctrees.enumeration import (
    TreeFilter,
    canonical_code,
    evaluate_all,
    extremal_search,
    free_trees,
    prufer_decode,
    prufer_sequences,
    prufer_tree_codes,
    rank_trees,
    tree_centers,
)
from ecctrees.errors import OrderCapExceeded, ParseError
from ecctrees.families import double_star, path, star
from ecctrees.graph import from_edge_list

# n = 0..12 in the usual indexing; the same list read as n = 1..13 is off by one
SPEC_LIST = [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235, 12: 551, 13: 1301}


def test_counts():
    for n, want in COUNTS.items():
        assert sum(1 for _ in free_trees(n)) == want
    assert [1] + [COUNTS[n] for n in range(1, 13)] == SPEC_LIST


def test_n4_trees():
    codes = {t.code for t in free_trees(4)}
    assert codes == {canonical_code(path(4)), canonical_code(star(4))}


def test_codes_distinct_and_trees_valid():
    for n in range(1, 12):
        trees = list(free_trees(n))
        assert len({t.code for t in trees}) == len(trees)
        for t in trees:
            assert t.tree.n == n and t.tree.is_tree
            assert canonical_code(t.tree) == t.code


def test_prufer_oracle():
    for n in range(1, 10):
        assert prufer_tree_codes(n) == {t.code for t in free_trees(n)}
    for n in range(2, 8):
        assert prufer_tree_codes(n, degree_sorted=False) == prufer_tree_codes(n)
    assert sum(1 for _ in prufer_sequences(5, degree_sorted=False)) == 125


def test_canonical_code_is_label_invariant(rng):
    for _ in range(100):
        n = rng.randint(2, 20)
        g = prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)
        perm = list(range(n))
        rng.shuffle(perm)
        h = from_edge_list([(perm[u], perm[v]) for u, v in g.sorted_edges()], n)
        assert canonical_code(g) == canonical_code(h)


def test_centers():
    assert tree_centers(path(5)) == [2]
    assert tree_centers(path(4)) == [1, 2]


def test_cap():
    with pytest.raises(OrderCapExceeded):
        list(free_trees(19))
    with pytest.raises(OrderCapExceeded):
        evaluate_all(17)


def test_filter_parse():
    assert TreeFilter.parse("all").kind == "all"
    assert TreeFilter.parse("exclude-star").kind == "exclude_star"
    f = TreeFilter.parse("diameter:3-5")
    assert (f.dmin, f.dmax) == (3, 5)
    assert str(f) == "diameter:3-5"
    with pytest.raises(ParseError):
        TreeFilter.parse("leaves")
    with pytest.raises(ParseError):
        TreeFilter.parse("diameter:a-b")


def test_xi2_min_n8():
    rep = extremal_search(8, "xi2", "exclude_star")
    assert rep.unique and rep.winners[0][0].code == canonical_code(double_star(8, 0, 4))
    assert rep.value == pytest.approx(cf.xi2_diam3(8, 0), abs=1e-12)


def test_energy_min():
    rep = extremal_search(8, "energy")
    assert rep.unique and rep.winners[0][0].code == canonical_code(double_star(8, 0, 4))
    assert rep.value == pytest.approx(cf.energy_T_n3(8), abs=1e-12)
    rep = extremal_search(4, "energy")
    assert rep.winners[0][0].code == canonical_code(star(4))


def test_rank_order_and_diameter_filter():
    ranked = rank_trees(4, "energy")
    assert [e.code for e in ranked] == [canonical_code(star(4)), canonical_code(path(4))]
    assert ranked[0].energy == pytest.approx(2 * (2 + math.sqrt(7)))
    assert ranked[1].energy == pytest.approx(10)
    ranked = rank_trees(9, "xi1", "diameter:5-5")
    assert ranked and all(e.diameter == 5 for e in ranked)


def test_parallel_matches_serial():
    serial = evaluate_all(12, jobs=1)
    parallel = evaluate_all(12, jobs=2)
    assert serial == parallel
