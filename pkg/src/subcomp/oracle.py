"""Brute-force ground truth for every solver.

These routines enumerate subsets (or bipartitions) directly and depend only on
the graph core and the recognizers, never on the solvers they check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from . import recognizers as rec
from .connectivity import QuadSplit, split_from_sides
from .graph import Graph, bits, complement_mask, to_mask
from .solution import (
    DISCONNECTED,
    ClassTag,
    PreconditionError,
    ResourceLimitError,
    Solution,
    member,
    no_solution,
    verified,
)

DEFAULT_CAP = 16
DEFAULT_WEIGHTED_CAP = 13
DEFAULT_SPLIT_CAP = 14


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise ResourceLimitError(f"brute force over 2^{g.n} subsets exceeds the cap n <= {cap}")


def subsets_by_size(n: int) -> Iterator[tuple[int, ...]]:
    """All subsets of ``range(n)``: by size, then lexicographically."""
    for size in range(n + 1):
        yield from combinations(range(n), size)


def feasible_sets(g: Graph, target: ClassTag, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """Every ``S`` with ``G ⊕ S`` in ``target``, in enumeration order."""
    _check_cap(g, cap)
    for s in subsets_by_size(g.n):
        if member(complement_mask(g, to_mask(s)), target):
            yield s


def brute_force_msc(g: Graph, target: ClassTag, cap: int = DEFAULT_CAP) -> Solution:
    """The first feasible set in size-then-lexicographic order, or no solution."""
    for s in feasible_sets(g, target, cap):
        return verified(g, s, target)
    return no_solution(target)


def _disconnected_after(rows: Sequence[int], full: int, s: int) -> bool:
    """Whether ``G ⊕ S`` is disconnected, computed directly on adjacency rows."""
    reach = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            row = rows[v]
            if s >> v & 1:
                row ^= s & ~(1 << v)
            nxt |= row
        nxt &= ~reach
        reach |= nxt
        frontier = nxt
    return reach != full


def brute_force_weighted_disconnect(g: Graph, weights: Sequence[Fraction] | None = None,
                                    cap: int = DEFAULT_WEIGHTED_CAP) -> Solution:
    """Minimum-weight disconnecting set; ties go to the smaller, then lexicographically smaller set.

    Weights are compared exactly as integers over their common denominator.
    """
    _check_cap(g, cap)
    n = g.n
    fracs = [Fraction(1)] * n if weights is None else [Fraction(w) for w in weights]
    if len(fracs) != n:
        raise ValueError(f"expected {n} weights, got {len(fracs)}")
    if any(w <= 0 for w in fracs):
        raise ValueError("weight must be positive")
    if n <= 1:
        return no_solution(DISCONNECTED)
    d = math.lcm(*(w.denominator for w in fracs))
    ints = [int(w * d) for w in fracs]
    rows, full = g.rows, g.full_mask
    # Subsets come in (size, lexicographic) order, so keeping only strictly
    # lighter sets leaves the tie-break to the enumeration order.
    cheapest = sorted(ints)
    best = None
    for s in subsets_by_size(n):
        if best is not None and sum(cheapest[:len(s)]) > best[0]:
            break
        w = sum(ints[v] for v in s)
        if best is not None and w >= best[0]:
            continue
        if _disconnected_after(rows, full, to_mask(s)):
            best = (w, s)
    return verified(g, best[1], DISCONNECTED, weight=Fraction(best[0], d))


def all_nontrivial_splits(g: Graph, cap: int = DEFAULT_SPLIT_CAP) -> list[QuadSplit]:
    """Every split with both sides of size at least two.

    Each unordered bipartition is reported once, with vertex 0 on side ``A``.
    """
    _check_cap(g, cap)
    n = g.n
    out = []
    if n < 4:
        return out
    for rest in range(1 << (n - 1)):
        side_a = rest << 1 | 1
        size = bin(side_a).count("1")
        if size < 2 or n - size < 2:
            continue
        split = split_from_sides(g, side_a)
        if split is not None:
            out.append(split)
    return out


def is_prime(g: Graph, cap: int = DEFAULT_SPLIT_CAP) -> bool:
    return not all_nontrivial_splits(g, cap)


def maximum_bipartite_matching(g: Graph, bp: rec.Bipartition | None = None) -> tuple[int, list[tuple[int, int]]]:
    """Maximum matching of a bipartite graph by augmenting paths.

    Returns the size and the matched pairs ``(a, b)`` with ``a`` on side ``A``.
    """
    if bp is None:
        bp = rec.bipartition(g)
    if bp is None or not bp.is_valid(g):
        raise PreconditionError("graph is not bipartite")
    match_of_b: dict[int, int] = {}

    def augment(a: int, seen: set[int]) -> bool:
        for b in g.neighbors(a):
            if b in seen:
                continue
            seen.add(b)
            if b not in match_of_b or augment(match_of_b[b], seen):
                match_of_b[b] = a
                return True
        return False

    for a in sorted(bp.A):
        augment(a, set())
    pairs = sorted((a, b) for b, a in match_of_b.items())
    return len(pairs), pairs
