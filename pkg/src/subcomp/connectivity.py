"""Minimum complementation to 2-connected graphs and to disconnected graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import recognizers as rec
from .graph import Graph, bits, complement_mask, popcount, to_mask
from .io import scale_weights
from .solution import (
    DISCONNECTED,
    TWO_CONNECTED,
    PreconditionError,
    Solution,
    Status,
    no_solution,
    set_key,
    verified,
)

# Exact fallback search limits for disconnected inputs to the 2-connected target.
FALLBACK_MAX_N = 20
FALLBACK_MAX_SIZE = 6


def leaf_vertices(g: Graph) -> list[int]:
    """Smallest non-cut vertex of every leaf block of the block-cut forest."""
    tree = rec.block_cut_tree(g)
    return sorted(min(tree.blocks[i] - tree.cut_vertices) for i in tree.leaves)


def msc_to_2connected(g: Graph, max_n: int = FALLBACK_MAX_N, max_size: int = FALLBACK_MAX_SIZE) -> Solution:
    """Minimum ``S`` making ``G ⊕ S`` 2-connected.

    For connected inputs, one non-cut vertex per leaf block is optimal.  For
    disconnected inputs that construction is only a lower bound on the size (a
    component that is a single block needs a vertex of its own but can need
    more), so it is verified and, when it fails, sets of increasing size are
    searched exhaustively within the configured limits.  Past those limits a
    greedy set is returned as feasible, or as optimal when it is exactly one
    larger than the largest size searched.
    """
    n = g.n
    if n <= 2:
        return no_solution(TWO_CONNECTED)
    if rec.is_two_connected(g):
        return verified(g, (), TWO_CONNECTED)
    chosen = leaf_vertices(g)
    if rec.is_two_connected(complement_mask(g, to_mask(chosen))):
        return verified(g, chosen, TWO_CONNECTED)
    if rec.is_connected(g):
        raise AssertionError("leaf-block construction failed on a connected graph")

    lower = len(chosen)
    searched = lower - 1
    if n <= max_n:
        for size in range(lower, min(max_size, n) + 1):
            for s in combinations(range(n), size):
                if rec.is_two_connected(complement_mask(g, to_mask(s))):
                    return verified(g, s, TWO_CONNECTED)
            searched = size
    if searched == n:
        return no_solution(TWO_CONNECTED)
    found = _augment(g, chosen)
    if found.found and found.size == searched + 1:
        # Every smaller size was ruled out above.
        return verified(g, found.vertices, TWO_CONNECTED)
    return found


def _augment(g: Graph, chosen: list[int]) -> Solution:
    """Greedy feasible set beyond the exact-search limits.

    Adds, one at a time, the vertex that most reduces the number of cut
    vertices and components; the whole vertex set is always a last resort when
    the complement itself is 2-connected.
    """
    current = set(chosen)

    def badness(s):
        h = complement_mask(g, to_mask(s))
        comps = len(rec.components(h))
        return (comps - 1) * g.n + len(rec.cut_vertices(h))

    while True:
        h = complement_mask(g, to_mask(current))
        if rec.is_two_connected(h):
            return verified(g, sorted(current), TWO_CONNECTED, Status.FEASIBLE)
        rest = [v for v in range(g.n) if v not in current]
        if not rest:
            return no_solution(TWO_CONNECTED)
        best = min(rest, key=lambda v: (badness(current | {v}), v))
        current.add(best)


@dataclass(frozen=True)
class QuadSplit:
    """A split ``(A2, A1, B1, B2)``: all cross edges are exactly ``A1 x B1``."""

    A2: frozenset[int]
    A1: frozenset[int]
    B1: frozenset[int]
    B2: frozenset[int]

    @property
    def A(self) -> frozenset[int]:
        return self.A1 | self.A2

    @property
    def B(self) -> frozenset[int]:
        return self.B1 | self.B2

    @property
    def nontrivial(self) -> bool:
        return len(self.A) >= 2 and len(self.B) >= 2

    def is_valid(self, g: Graph) -> bool:
        parts = [to_mask(p) for p in (self.A2, self.A1, self.B1, self.B2)]
        union = 0
        for p in parts:
            if union & p:
                return False
            union |= p
        if union != g.full_mask:
            return False
        a2, a1, b1, b2 = parts
        a, b = a1 | a2, b1 | b2
        for v in bits(a):
            cross = g.rows[v] & b
            if cross != (b1 if a1 >> v & 1 else 0):
                return False
        return True

    def swapped(self) -> QuadSplit:
        return QuadSplit(self.B2, self.B1, self.A1, self.A2)


def split_from_sides(g: Graph, side_a: int) -> QuadSplit | None:
    """The split with side ``A`` given as a mask, if the cut is a split."""
    side_b = g.full_mask & ~side_a
    a1 = to_mask(v for v in bits(side_a) if g.rows[v] & side_b)
    b1 = to_mask(v for v in bits(side_b) if g.rows[v] & side_a)
    for v in bits(a1):
        if g.rows[v] & side_b != b1:
            return None
    return QuadSplit(
        frozenset(bits(side_a & ~a1)), frozenset(bits(a1)),
        frozenset(bits(b1)), frozenset(bits(side_b & ~b1)),
    )


def _closure(start: int, forced: list[int]) -> int:
    reach = frontier = start
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= forced[x]
        nxt &= ~reach
        reach |= nxt
        frontier = nxt
    return reach


def find_nontrivial_split(g: Graph) -> QuadSplit | None:
    """A nontrivial split of ``g``, or ``None`` exactly when ``g`` is prime.

    Disconnected graphs on four or more vertices split along components.  A
    nontrivial split of a connected graph has a cross edge ``ab`` with
    ``a ∈ A1`` and ``b ∈ B1``.  With that edge fixed, ``u ∈ A`` and ``v ∈ B``
    may coexist only if ``uv ∈ E ⟺ (ub ∈ E and va ∈ E)``, so putting ``u`` in
    ``A`` forces every violating ``v`` into ``A`` as well.  The smallest side
    closed under these rules that contains ``a`` and one more vertex ``x`` is a
    split exactly when it avoids ``b`` and leaves two vertices outside.
    """
    n = g.n
    if n < 4:
        return None
    comps = rec.components(g)
    if len(comps) >= 2:
        return _split_disconnected(g, comps)
    rows = g.rows
    full = g.full_mask
    for a, b in g.edges():
        row_a = rows[a]
        forced = [
            (rows[u] ^ (row_a if rows[u] >> b & 1 else 0)) & ~(1 << u) for u in range(n)
        ]
        base = _closure(1 << a, forced)
        if base >> b & 1:
            continue
        for x in range(n):
            if x == a or x == b:
                continue
            side_a = _closure(base | 1 << x, forced)
            if side_a >> b & 1 or popcount(full & ~side_a) < 2:
                continue
            split = split_from_sides(g, side_a)
            if split is None or not split.nontrivial:
                raise AssertionError("closed side does not induce a nontrivial split")
            return split
    return None


def _split_disconnected(g: Graph, comps: list[frozenset[int]]) -> QuadSplit:
    # Needs n >= 4.  Whole components go to side A until it holds 2..n-2
    # vertices; that only fails for one isolated vertex next to a component of
    # n-1 vertices, where any vertex of the big one can join the isolated one.
    n = g.n
    side = 0
    for comp in comps:
        side |= to_mask(comp)
        if 2 <= popcount(side) <= n - 2:
            return split_from_sides(g, side)
    big = max(comps, key=len)
    lone = next(iter(min(comps, key=len)))
    return split_from_sides(g, 1 << lone | 1 << min(big))


@dataclass(frozen=True)
class QuotientGraph:
    """One side of a split plus a marker vertex standing for the other side's frontier.

    ``expansion[v]`` lists the original vertices that quotient vertex ``v``
    stands for; ``weights[v]`` is their total weight.
    """

    graph: Graph
    marker: int
    expansion: tuple[frozenset[int], ...]
    weights: tuple[int, ...] | tuple[Fraction, ...]


def quotient(g: Graph, split: QuadSplit, side: str, weights: Sequence[int] | Sequence[Fraction],
             expansion: Sequence[frozenset[int]] | None = None) -> QuotientGraph:
    """Quotient on side ``"A"`` (marker adjacent to ``A1``, standing for ``B1``) or ``"B"``.

    ``expansion`` maps the vertices of ``g`` to original ids when ``g`` is
    itself a quotient, so nested quotients still report original vertices.
    """
    if side == "B":
        split = split.swapped()
    elif side != "A":
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    if expansion is None:
        expansion = [frozenset([v]) for v in range(g.n)]
    keep = sorted(split.A)
    index = {v: i for i, v in enumerate(keep)}
    marker = len(keep)
    rows = [0] * (marker + 1)
    for v in keep:
        rows[index[v]] = to_mask(index[u] for u in bits(g.rows[v]) if u in index)
    for v in split.A1:
        rows[index[v]] |= 1 << marker
        rows[marker] |= 1 << index[v]
    qgraph = Graph(marker + 1, rows)
    qexp = tuple(expansion[v] for v in keep) + (frozenset().union(*(expansion[v] for v in split.B1)),)
    qweights = tuple(weights[v] for v in keep) + (sum(weights[v] for v in split.B1),)
    return QuotientGraph(qgraph, marker, qexp, qweights)


def prime_disconnect(g: Graph, weights: Sequence[Fraction] | None = None) -> Solution:
    """Lightest closed neighborhood; complementing ``N[u]`` isolates ``u``."""
    if g.n <= 1:
        raise PreconditionError("a graph with at most one vertex cannot be disconnected")
    scaled, d = _checked_weights(g, weights)
    expansion = tuple(frozenset([v]) for v in range(g.n))
    w, s = _lightest_neighborhood(g, scaled, expansion)
    return verified(g, s, DISCONNECTED, weight=Fraction(w, d))


def _lightest_neighborhood(g: Graph, weights: Sequence[int], expansion: Sequence[frozenset[int]]):
    best = None
    for u in range(g.n):
        closed = g.rows[u] | 1 << u
        w = sum(weights[v] for v in bits(closed))
        if best is not None and w > best[0]:
            continue
        orig = set_key(frozenset().union(*(expansion[v] for v in bits(closed))))
        if best is None or (w, orig) < best:
            best = (w, orig)
    return best[0], best[1][1]


def _disconnect(g: Graph, weights: tuple[int, ...], expansion: tuple[frozenset[int], ...]):
    """Return ``(weight, original-id set)`` of a lightest disconnecting set."""
    if not rec.is_connected(g):
        return 0, ()
    split = find_nontrivial_split(g)
    if split is None:
        return _lightest_neighborhood(g, weights, expansion)
    results = []
    for side in ("A", "B"):
        q = quotient(g, split, side, weights, expansion)
        results.append(_disconnect(q.graph, q.weights, q.expansion))
    w, s = min(results, key=lambda r: (r[0], set_key(r[1])))
    return w, tuple(sorted(s))


def _checked_weights(g: Graph, weights) -> tuple[tuple[int, ...], int]:
    if weights is None:
        return (1,) * g.n, 1
    if len(weights) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(weights)}")
    if any(Fraction(w) <= 0 for w in weights):
        raise ValueError("weight must be positive")
    return scale_weights(weights)


def msc_to_disconnected(g: Graph, weights: Sequence[Fraction] | None = None) -> Solution:
    """Minimum-weight ``S`` making ``G ⊕ S`` disconnected.

    Prime graphs are solved by their lightest closed neighborhood.  Otherwise
    the graph is cut along a nontrivial split and both quotients are solved
    recursively; each quotient's marker carries the weight of the frontier it
    replaces, and lifting replaces a chosen marker by that frontier.  Equal
    weights fall back to the usual size-then-lexicographic order.  Weights
    are scaled to integers over their common denominator, so every comparison
    is exact.
    """
    scaled, d = _checked_weights(g, weights)
    if g.n <= 1:
        return no_solution(DISCONNECTED)
    expansion = tuple(frozenset([v]) for v in range(g.n))
    w, s = _disconnect(g, scaled, expansion)
    return verified(g, s, DISCONNECTED, weight=Fraction(w, d))
