import pytest

from ecctrees import verify as V
from ecctrees.errors import InvalidFamilyParameters
from ecctrees.families import path, star
from ecctrees.graph import from_edge_list


def test_expected_inertia_cases():
    assert V.expected_inertia(from_edge_list([(0, 1)], 2)) == (1, 1, 0)
    assert V.expected_inertia(star(6)) == (1, 5, 0)
    assert V.expected_inertia(path(4)) == (2, 2, 0)
    assert V.expected_inertia(path(5)) == (2, 2, 1)
    # diameter 4 with three full-depth branches at the centre
    g = from_edge_list([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)], 7)
    assert V.center_branch_count(g) == 3
    assert V.expected_inertia(g) == (3, 3, 1)


def test_inertia_n8():
    r = V.verify_inertia(8)
    assert r.passed and "23 trees" in r.detail


def test_xi2_and_energy_min_small():
    assert V.verify_xi2_min(7).passed
    for n in (2, 3, 4, 5, 6):
        assert V.verify_energy_min(n).passed


def test_orderings():
    chain = V.ordering_chain(10, 3)
    assert [p for p, _ in chain] == [(0, 6), (1, 5), (2, 4), (3, 3)]
    assert V.verify_orderings(10, 3)
    assert V.verify_orderings(14, 5)
    assert V.verify_orderings(15, 6)
    chain = V.ordering_chain(15, 6)
    assert chain[-1][0] == (0, 8, 0) and chain[-2][0] == (0, 7, 1)
    with pytest.raises(InvalidFamilyParameters):
        V.ordering_chain(10, 4)
    with pytest.raises(InvalidFamilyParameters):
        V.ordering_chain(6, 5)


def test_prior_results_n10():
    results = V.verify_prior_results(10)
    assert results and all(r.passed for r in results)


def test_printed_quotients_match():
    results = V.quotient_checks(12)
    assert all(r.passed for r in results)
    assert all("0 entrywise mismatches" in r.detail for r in results)


def test_formula_verdicts():
    verdicts = {t.name: t for t in V.formula_verdicts()}
    assert len(verdicts) == 3
    assert all(t.decided and len(t.instances) >= 5 for t in verdicts.values())
    got = sorted(t.verdict for t in verdicts.values())
    assert got == sorted(["-(16(a+b)+75)", "37893", "5832n+{5913|4617}"])


def test_radius_grid():
    assert all(r.passed for r in V.radius_grid(200))


def test_counts_helper():
    assert all(r.passed for r in V.enumeration_counts(9, 7))
