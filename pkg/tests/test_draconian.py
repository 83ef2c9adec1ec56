import random

import pytest
from oracle import brute_draconian, random_graph

from pqvol.draconian import (
    count_draconian,
    enumerate_draconian,
    is_draconian,
    is_draconian_flow,
    is_draconian_subset,
    neighborhood_union_size,
)
from pqvol.graphs import (
    Graph,
    complete_graph,
    connected_components,
    delete_cycle,
    delete_path,
    doubling,
    relabel,
)

# central binomials C(2(n-1), n-1); frozen from the brute-force oracle
COMPLETE_COUNTS = {1: 1, 2: 2, 3: 6, 4: 20, 5: 70, 6: 252, 7: 924}


def test_neighborhood_union_size():
    d = doubling(delete_path(4, 2))
    assert neighborhood_union_size(d, [2, 4]) == 3
    assert neighborhood_union_size(d, [2, 3]) == 4
    assert neighborhood_union_size(d, [3]) == 2
    assert neighborhood_union_size(d, [1, 2, 3, 4]) == 4
    with pytest.raises(ValueError):
        neighborhood_union_size(d, [])
    with pytest.raises(ValueError):
        neighborhood_union_size(d, [5])


def test_membership_hand_cases():
    d = doubling(delete_path(4, 2))
    # weight 3 on vertex 3 exceeds its 2-element neighborhood
    assert not is_draconian_subset(d, (0, 0, 3, 0))
    assert is_draconian_subset(d, (1, 1, 0, 1))
    # the pair {2, 4} only reaches 3 right vertices
    assert not is_draconian_subset(d, (0, 2, 0, 1))
    for c in [(0, 0, 3, 0), (1, 1, 0, 1), (0, 2, 0, 1)]:
        assert is_draconian_flow(d, c) == is_draconian_subset(d, c)


def test_membership_input_validation():
    d = doubling(complete_graph(3))
    for check in (is_draconian_subset, is_draconian_flow):
        with pytest.raises(ValueError):
            check(d, (1, 1))
        with pytest.raises(ValueError):
            check(d, (1, -1, 2))
    with pytest.raises(ValueError):
        is_draconian(d, (1, 1, 0), engine="magic")


def test_support_restriction_equals_full_powerset():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randrange(2, 7)
        g = Graph.from_edges(n, random_graph(rng, n))
        d = doubling(g)
        c = [0] * n
        for _ in range(n - 1):
            c[rng.randrange(n)] += 1
        full = is_draconian_subset(d, c, all_subsets=True)
        assert is_draconian_subset(d, c) == full
        assert is_draconian_flow(d, c) == full


@pytest.mark.parametrize("n", sorted(COMPLETE_COUNTS))
def test_complete_graph_counts(n):
    got = enumerate_draconian(doubling(complete_graph(n)))
    assert len(got) == COMPLETE_COUNTS[n]


def test_enumeration_matches_brute_force():
    cases = [
        complete_graph(4),
        delete_path(4, 2),
        delete_path(5, 3),
        delete_cycle(5, 4),
        Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)]),
        Graph.from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)]),
        Graph(3, frozenset()),
        Graph.from_edges(4, [(1, 2), (3, 4)]),
    ]
    for g in cases:
        want = brute_draconian(g.n, g.sorted_edges())
        got = enumerate_draconian(doubling(g))
        assert set(got) == want, g.descriptor()
        assert got == sorted(got)
        assert len(set(got)) == len(got)


def test_enumeration_matches_brute_force_random():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randrange(1, 6)
        g = Graph.from_edges(n, random_graph(rng, n))
        want = brute_draconian(g.n, g.sorted_edges())
        assert set(enumerate_draconian(doubling(g))) == want, g.descriptor()


def test_flow_engine_enumerates_identically():
    for g in [complete_graph(5), delete_cycle(5, 3), Graph.from_edges(4, [(1, 2), (2, 3)])]:
        d = doubling(g)
        assert enumerate_draconian(d, engine="flow") == enumerate_draconian(d, engine="subset")
    with pytest.raises(ValueError):
        enumerate_draconian(doubling(complete_graph(3)), engine="magic")


def test_frozen_family_counts():
    # deletion families, frozen from the brute-force oracle
    assert len(enumerate_draconian(doubling(delete_path(4, 2)))) == 12
    assert len(enumerate_draconian(doubling(delete_path(5, 2)))) == 60
    assert len(enumerate_draconian(doubling(delete_cycle(5, 3)))) == 52
    assert len(enumerate_draconian(doubling(delete_cycle(5, 4)))) == 36
    assert len(enumerate_draconian(doubling(delete_cycle(5, 5)))) == 40


def test_draconian_sequences_are_weak_compositions():
    for g in [complete_graph(5), delete_cycle(6, 4)]:
        for c in enumerate_draconian(doubling(g)):
            assert len(c) == g.n
            assert sum(c) == g.n - 1
            assert all(x >= 0 for x in c)


def test_count_connected():
    rep = count_draconian(complete_graph(6))
    assert rep.count == 252
    assert rep.method == "subset-enumeration"
    assert rep.notes == []
    assert rep.graph.startswith("n=6;")
    assert count_draconian(complete_graph(4), engine="flow").method == "flow-enumeration"


def test_count_disconnected_product_rule():
    g = Graph.from_edges(4, [(1, 2), (3, 4)])
    rep = count_draconian(g)
    assert rep.count == 4
    assert any("disconnected" in note for note in rep.notes)
    # the raw draconian set of the union is empty: supports can absorb
    # at most 1 unit each but the total weight is 3
    assert enumerate_draconian(doubling(g)) == []


def test_count_isolated_vertices_factor_one():
    g = Graph.from_edges(4, [(2, 3)])
    rep = count_draconian(g)
    assert rep.count == 2
    assert any("isolated" in note for note in rep.notes)
    assert count_draconian(Graph(2, frozenset())).count == 1


def test_count_invariant_under_relabeling():
    rng = random.Random(9)
    for g in [delete_path(5, 2), delete_cycle(5, 4), Graph.from_edges(5, [(1, 2), (2, 3), (4, 5)])]:
        want = count_draconian(g).count
        for _ in range(10):
            perm = list(range(1, g.n + 1))
            rng.shuffle(perm)
            assert count_draconian(relabel(g, perm)).count == want


def test_report_dict_uses_decimal_strings():
    d = count_draconian(complete_graph(3)).to_dict()
    assert d["count"] == "6"
    assert isinstance(d["elapsed_ms"], float)
    assert d["method"] == "subset-enumeration"


def test_engine_equivalence_random_sample():
    # a fast slice of the full acceptance sweep
    rng = random.Random(2)
    from pqvol.combinat import weak_compositions

    for _ in range(30):
        n = rng.randrange(1, 7)
        g = Graph.from_edges(n, random_graph(rng, n))
        d = doubling(g)
        for c in weak_compositions(n - 1, n):
            assert is_draconian_subset(d, c) == is_draconian_flow(d, c), (g.descriptor(), c)
