"""Minimum complementation of 2-connected bipartite regular graphs to chordal graphs."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from . import recognizers as rec
from .graph import Graph, check_vertex_set, complement_mask
from .solution import CHORDAL, PreconditionError, Solution, verified

BRUTE_FORCE_BELOW = 9


def chordal_solution_check(g: Graph, s: Iterable[int]) -> bool:
    """Decide whether ``G ⊕ S`` is chordal without building it.

    Valid for a 2-connected bipartite ``G`` when ``G[S]`` is not complete
    bipartite across the bipartition: then ``G ⊕ S`` is chordal exactly when
    ``S`` is a vertex cover and ``G[S]`` has no induced ``2K2``.
    """
    s = sorted(s)
    check_vertex_set(g, s)
    bp = rec.bipartition(g)
    if bp is None or not rec.is_two_connected(g):
        raise PreconditionError("graph must be bipartite and 2-connected")
    # A set inside one side is allowed: G[S] is edgeless there, so the test
    # reduces to S being a cover, which forces S to be that whole side.
    meets_both = any(v in bp.A for v in s) and any(v in bp.B for v in s)
    if meets_both and rec.is_complete_bipartite_inside(g, s, bp):
        raise PreconditionError("G[S] is complete bipartite across the bipartition")
    return rec.is_vertex_cover(g, s) and rec.has_induced_2K2(g, s) is None


def _brute_force(g: Graph) -> Solution:
    for size in range(g.n + 1):
        for s in combinations(range(g.n), size):
            mask = 0
            for v in s:
                mask |= 1 << v
            if rec.is_chordal(complement_mask(g, mask)) is not None:
                return verified(g, s, CHORDAL)
    raise AssertionError("complementing one side is always chordal")


def msc_biregular_to_chordal(g: Graph) -> Solution:
    """Minimum ``S`` making a 2-connected ``k``-regular bipartite graph chordal.

    Below nine vertices the answer comes from exhaustive search.  For ``k = 2``
    the graph is an even cycle and complementing one edge leaves a path, so two
    vertices suffice (no smaller set changes the graph).  For ``k >= 3`` one side
    of the bipartition is returned.
    """
    k = rec.biregular_degree(g)
    if k is None:
        raise PreconditionError("input graph is not biregular")
    if k < 2:
        raise PreconditionError(f"biregular degree must be at least 2, got {k}")
    if not rec.is_two_connected(g):
        raise PreconditionError("input graph is not 2-connected")
    if rec.is_chordal(g) is not None:
        return verified(g, (), CHORDAL)
    if g.n < BRUTE_FORCE_BELOW:
        return _brute_force(g)
    if k == 2:
        return verified(g, (0, min(g.neighbors(0))), CHORDAL)
    return verified(g, rec.bipartition(g).A, CHORDAL)
