"""Minimum complementation of forests to graphs of degeneracy exactly ``k``."""

from __future__ import annotations

from itertools import combinations

from . import recognizers as rec
from .graph import Graph, complement_mask
from .solution import (
    PreconditionError,
    ResourceLimitError,
    Solution,
    degeneracy_class,
    no_solution,
    verified,
)

MAX_BRUTE_FORCE_K = 12


def _brute_force(g: Graph, k: int) -> Solution:
    target = degeneracy_class(k)
    for size in range(g.n + 1):
        for s in combinations(range(g.n), size):
            mask = 0
            for v in s:
                mask |= 1 << v
            if rec.degeneracy(complement_mask(g, mask))[0] == k:
                return verified(g, s, target)
    return no_solution(target)


def msc_forest_to_degeneracy(g: Graph, k: int, max_brute_force_k: int = MAX_BRUTE_FORCE_K) -> Solution:
    """Minimum ``S`` such that ``G ⊕ S`` has degeneracy exactly ``k``.

    For ``k >= 2`` every solution has at least ``k`` vertices.  Once the forest
    has ``2k + 2`` vertices, ``k`` siblings (independent vertices with a common
    neighbor) are optimal when they exist and ``k + 1`` independent vertices
    otherwise; smaller forests are searched exhaustively.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if not rec.is_forest(g):
        raise PreconditionError("input graph is not a forest")
    target = degeneracy_class(k)
    n = g.n

    if k == 0:
        if g.m == 0:
            return verified(g, (), target)
        # Only K2 plus isolated vertices can lose its single edge.
        if g.m == 1:
            return verified(g, g.edges()[0], target)
        return no_solution(target)

    if k == 1:
        if g.m > 0:
            return verified(g, (), target)
        if n < 2:
            return no_solution(target)
        return verified(g, (0, 1), target)

    if n < k:
        return no_solution(target)
    if n <= 2 * k + 1:
        if k > max_brute_force_k:
            raise ResourceLimitError(
                f"exhaustive branch for k={k} exceeds the cap k <= {max_brute_force_k}"
            )
        return _brute_force(g, k)

    siblings = rec.find_sibling_set(g, k)
    if siblings is not None:
        return verified(g, siblings, target)
    bp = rec.bipartition(g)
    larger = bp.A if len(bp.A) >= len(bp.B) else bp.B
    return verified(g, sorted(larger)[: k + 1], target)
