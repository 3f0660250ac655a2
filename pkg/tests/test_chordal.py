from itertools import combinations

import pytest

from conftest import fixture
from subcomp import graph as gr
from subcomp import recognizers as rec
from subcomp.chordal import chordal_solution_check, msc_biregular_to_chordal
from subcomp.generators import GeneratorSpec, generate, nonisomorphic_graphs
from subcomp.graph import complement_mask, to_mask
from subcomp.oracle import brute_force_msc
from subcomp.solution import CHORDAL, PreconditionError, is_solution


def test_check_examples():
    c6 = gr.cycle(6)
    assert rec.is_vertex_cover(c6, range(6)) and rec.has_induced_2K2(c6, range(6))
    assert chordal_solution_check(c6, range(6)) is False
    assert rec.is_chordal(complement_mask(c6, c6.full_mask)) is None

    # G[S] = P3 = K1,2 is complete bipartite across the sides, which is outside
    # the characterization; the complemented graph is chordal all the same.
    c4 = gr.cycle(4)
    with pytest.raises(PreconditionError):
        chordal_solution_check(c4, [0, 1, 2])
    assert rec.is_chordal(complement_mask(c4, to_mask([0, 1, 2]))) is not None

    assert chordal_solution_check(c6, [0, 2, 4]) is True
    assert rec.is_chordal(complement_mask(c6, to_mask([0, 2, 4]))) is not None


def test_check_preconditions():
    with pytest.raises(PreconditionError):
        chordal_solution_check(gr.path(4), [0, 1])
    with pytest.raises(PreconditionError):
        chordal_solution_check(gr.cycle(4), [0, 1])
    with pytest.raises(PreconditionError):
        chordal_solution_check(gr.complete_bipartite(3, 3), range(6))


@pytest.mark.parametrize("name, size", [("c4", 2), ("c6", 2), ("c10", 2), ("k3_3", 3), ("q3", 4)])
def test_examples(name, size):
    g = fixture(name)
    sol = msc_biregular_to_chordal(g)
    assert sol.size == size
    assert brute_force_msc(g, CHORDAL).size == size
    assert is_solution(g, sol.vertices, CHORDAL)


def test_c10_adjacent_pair_beats_one_side():
    # One side has five vertices; one edge is enough because C10 minus an edge is P10.
    g = gr.cycle(10)
    assert msc_biregular_to_chordal(g).vertices == (0, 1)
    assert len(rec.bipartition(g).A) == 5


@pytest.mark.parametrize("g", [gr.path(4), gr.disjoint_union(gr.cycle(4), gr.cycle(4)), gr.edgeless(4),
                               gr.disjoint_union(gr.complete(2), gr.complete(2))])
def test_preconditions(g):
    with pytest.raises(PreconditionError):
        msc_biregular_to_chordal(g)


@pytest.mark.parametrize("n, seed", [(10, 7), (12, 1), (14, 2)])
def test_generated_cubic_bipartite_side_is_optimal(n, seed):
    g = generate(GeneratorSpec("biregular", n, k=3, seed=seed))
    if not rec.is_two_connected(g):
        pytest.skip("generated graph is not 2-connected")
    sol = msc_biregular_to_chordal(g)
    assert sol.size == n // 2 == brute_force_msc(g, CHORDAL).size


def _two_connected_bipartite(max_n):
    for n in range(4, max_n + 1):
        for g in nonisomorphic_graphs(n):
            if rec.is_bipartite(g) and rec.is_two_connected(g):
                yield g


def test_equivalence_on_small_graphs():
    for g in _two_connected_bipartite(7):
        bp = rec.bipartition(g)
        for mask in range(1 << g.n):
            s = [v for v in range(g.n) if mask >> v & 1]
            both = any(v in bp.A for v in s) and any(v in bp.B for v in s)
            if both and rec.is_complete_bipartite_inside(g, s, bp):
                continue
            assert chordal_solution_check(g, s) == (rec.is_chordal(complement_mask(g, mask)) is not None)


def test_proper_subsets_of_a_side_never_work():
    for g in _two_connected_bipartite(7):
        side = sorted(rec.bipartition(g).A)
        for size in range(len(side)):
            for s in combinations(side, size):
                assert rec.is_chordal(complement_mask(g, to_mask(s))) is None
