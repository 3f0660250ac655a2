from itertools import combinations

import pytest

from conftest import fixture
from subcomp import graph as gr
from subcomp import recognizers as rec
from subcomp.generators import nonisomorphic_graphs
from subcomp.graph import complement_mask, to_mask
from subcomp.oracle import (
    all_nontrivial_splits,
    brute_force_msc,
    brute_force_weighted_disconnect,
    feasible_sets,
    is_prime,
    maximum_bipartite_matching,
    subsets_by_size,
)
from subcomp.solution import (
    BIPARTITE,
    DISCONNECTED,
    KINDS,
    TWO_CONNECTED,
    ClassTag,
    PreconditionError,
    ResourceLimitError,
    Status,
    member,
)


def test_enumeration_order():
    assert list(subsets_by_size(3)) == [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]


def test_examples():
    assert brute_force_msc(gr.complete(3), BIPARTITE).vertices == (0, 1)
    assert brute_force_msc(gr.cycle(4), BIPARTITE).vertices == ()
    assert brute_force_msc(gr.complete(1), DISCONNECTED).status is Status.NONE


def test_weighted_examples():
    assert brute_force_weighted_disconnect(gr.path(3)).weight == 2
    assert brute_force_weighted_disconnect(gr.path(3), [1, 10, 1]).weight == 11
    sol = brute_force_weighted_disconnect(fixture("2k2"))
    assert sol.vertices == () and sol.weight == 0


def test_weighted_ties_go_to_the_lexicographically_smaller_set():
    # N[0] and N[2] both weigh 2 on a unit-weight P3.
    assert brute_force_weighted_disconnect(gr.path(3)).vertices == (0, 1)
    assert brute_force_weighted_disconnect(gr.path(3), [2, 1, 1]).vertices == (1, 2)


def test_caps_raise():
    with pytest.raises(ResourceLimitError):
        brute_force_msc(gr.cycle(20), BIPARTITE)
    with pytest.raises(ResourceLimitError):
        brute_force_weighted_disconnect(gr.cycle(14))
    with pytest.raises(ResourceLimitError):
        all_nontrivial_splits(gr.cycle(15))
    assert brute_force_msc(gr.cycle(5), BIPARTITE, cap=5).size == 2


def test_empty_set_exactly_for_members():
    tags = [ClassTag(k, 2 if k == "degeneracy" else None) for k in KINDS]
    for n in range(6):
        for g in nonisomorphic_graphs(n):
            for tag in tags:
                sol = brute_force_msc(g, tag)
                assert (sol.found and sol.size == 0) == member(g, tag)


def test_feasible_sets_are_feasible_and_ordered():
    g = gr.path(4)
    sets = list(feasible_sets(g, TWO_CONNECTED))
    assert sets[0] == (0, 3)
    assert all(rec.is_two_connected(complement_mask(g, to_mask(s))) for s in sets)
    assert sets == sorted(sets, key=lambda s: (len(s), s))


def test_split_enumeration_examples():
    assert all_nontrivial_splits(gr.path(4))
    assert not all_nontrivial_splits(gr.cycle(5)) and is_prime(gr.cycle(5))
    assert all_nontrivial_splits(gr.complete(4))
    for split in all_nontrivial_splits(gr.complete(5)):
        assert 0 in split.A and split.is_valid(gr.complete(5))
    # K5: every bipartition with both sides of size >= 2, vertex 0 fixed on side A.
    assert len(all_nontrivial_splits(gr.complete(5))) == sum(
        1 for r in range(1, 4) for _ in combinations(range(1, 5), r) if 2 <= r + 1 <= 3)


@pytest.mark.parametrize("g, size", [(gr.cycle(6), 3), (gr.complete_bipartite(3, 3), 3), (gr.star(3), 1)])
def test_matching_examples(g, size):
    found, pairs = maximum_bipartite_matching(g)
    assert found == size == len(pairs)
    assert all(g.has_edge(a, b) for a, b in pairs)
    assert len({v for p in pairs for v in p}) == 2 * size


def test_matching_rejects_non_bipartite():
    with pytest.raises(PreconditionError):
        maximum_bipartite_matching(gr.complete(3))
