"""Membership tests for the graph classes the solvers need.

Each recognizer returns a certificate (or ``None`` when the graph is not in the
class) so that callers can re-validate what they were given.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, bits, check_vertex_set, complement, popcount, to_mask


@dataclass(frozen=True)
class Bipartition:
    A: frozenset[int]
    B: frozenset[int]

    def is_valid(self, g: Graph) -> bool:
        a, b = to_mask(self.A), to_mask(self.B)
        if a & b or a | b != g.full_mask:
            return False
        return all(not g.rows[v] & a for v in self.A) and all(not g.rows[v] & b for v in self.B)


@dataclass(frozen=True)
class SplitPartition:
    K: frozenset[int]
    I: frozenset[int]

    def is_valid(self, g: Graph) -> bool:
        return _valid_split(g, self)


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks, cut vertices and block/cut-vertex incidences of a graph.

    ``tree_edges`` pairs a block index with a cut vertex id.  ``leaves`` lists
    the block nodes of tree-degree at most one, so a component consisting of a
    single block contributes that block as one leaf.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    tree_edges: tuple[tuple[int, int], ...]
    leaves: tuple[int, ...]


def _two_color(g: Graph) -> list[int] | None:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.rows[v]):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def bipartition(g: Graph) -> Bipartition | None:
    """Two-coloring with the smallest vertex of every component on side ``A``."""
    color = _two_color(g)
    if color is None:
        return None
    return Bipartition(
        frozenset(v for v in range(g.n) if color[v] == 0),
        frozenset(v for v in range(g.n) if color[v] == 1),
    )


def is_bipartite(g: Graph) -> bool:
    return _two_color(g) is not None


def cobipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two cliques covering ``g``, read off a bipartition of the complement."""
    bp = bipartition(complement(g))
    return None if bp is None else (bp.A, bp.B)


def is_cobipartite(g: Graph) -> bool:
    return _two_color(complement(g)) is not None


def split_partition(g: Graph) -> SplitPartition | None:
    """Clique/independent-set partition from the sorted degree sequence.

    Vertices are ranked by degree (descending, ties by id); the clique is the
    longest prefix whose degrees satisfy ``d_i >= i - 1``.  A clique vertex with
    no neighbor on the independent side is then moved across, so ``K1,3``
    yields ``K = {center}``.  The partition is re-validated before it is
    returned.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = 0
    for i, d in enumerate(deg):
        if d >= i:
            m = i + 1
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    k_mask, i_mask = to_mask(order[:m]), to_mask(order[m:])
    if i_mask:
        # Keep I maximal: a clique vertex without neighbors in I joins it.
        # At most one can, since the clique vertices are pairwise adjacent.
        loose = [v for v in order[:m] if not g.rows[v] & i_mask]
        if loose:
            k_mask &= ~(1 << loose[-1])
            i_mask |= 1 << loose[-1]
    cert = SplitPartition(frozenset(bits(k_mask)), frozenset(bits(i_mask)))
    if not _valid_split(g, cert):
        return None
    return cert


def _valid_split(g: Graph, cert: SplitPartition) -> bool:
    k, i = to_mask(cert.K), to_mask(cert.I)
    if k & i or k | i != g.full_mask:
        return False
    for v in cert.K:
        if (g.rows[v] | 1 << v) & k != k:
            return False
    return all(not g.rows[v] & i for v in cert.I)


def is_split(g: Graph) -> bool:
    return split_partition(g) is not None


def is_chordal(g: Graph) -> list[int] | None:
    """Return a perfect elimination order, or ``None`` if ``g`` has a hole.

    Uses maximum cardinality search; the reverse visit order is a perfect
    elimination order exactly when the graph is chordal, which is checked.
    """
    n = g.n
    weight = [0] * n
    visited = 0
    visit: list[int] = []
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not visited >> v & 1 and weight[v] > best_w:
                best, best_w = v, weight[v]
        visited |= 1 << best
        visit.append(best)
        for u in bits(g.rows[best] & ~visited):
            weight[u] += 1
    peo = visit[::-1]
    position = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in bits(g.rows[v]) if position[u] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        rest = to_mask(later) & ~(1 << parent)
        if rest & ~g.rows[parent]:
            return None
    return peo


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Degeneracy and the min-degree peeling order (ties by smallest id)."""
    alive = g.full_mask
    deg = [g.degree(v) for v in range(g.n)]
    order = []
    k = 0
    for _ in range(g.n):
        v = min(bits(alive), key=lambda u: (deg[u], u))
        k = max(k, deg[v])
        order.append(v)
        alive &= ~(1 << v)
        for u in bits(g.rows[v] & alive):
            deg[u] -= 1
    return k, order


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest vertex id."""
    seen = 0
    out = []
    for root in range(g.n):
        if seen >> root & 1:
            continue
        comp = _component_mask(g, root, g.full_mask)
        seen |= comp
        out.append(frozenset(bits(comp)))
    return out


def _component_mask(g: Graph, root: int, within: int) -> int:
    comp = frontier = 1 << root
    rows = g.rows
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        nxt &= within & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def is_connected(g: Graph) -> bool:
    """True for exactly one component; the empty graph has none."""
    if g.n == 0:
        return False
    return _component_mask(g, 0, g.full_mask) == g.full_mask


def connected_within(g: Graph, mask: int) -> bool:
    """Whether the subgraph induced by the nonempty ``mask`` is connected."""
    if not mask:
        return False
    root = (mask & -mask).bit_length() - 1
    return _component_mask(g, root, mask) == mask


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Blocks and cut vertices by an iterative Hopcroft-Tarjan search."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    raw_blocks: list[frozenset[int]] = []
    cuts = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if not g.rows[root]:
            disc[root] = timer
            timer += 1
            raw_blocks.append(frozenset([root]))
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.neighbors(root)))]
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] < 0:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                block = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, v):
                        break
                raw_blocks.append(frozenset(block))
        if root_children > 1:
            cuts.add(root)
    blocks = tuple(sorted(raw_blocks, key=sorted))
    tree_edges = tuple(
        (i, c) for i, block in enumerate(blocks) for c in sorted(block & cuts)
    )
    tree_degree = [0] * len(blocks)
    for i, _ in tree_edges:
        tree_degree[i] += 1
    leaves = tuple(i for i, d in enumerate(tree_degree) if d <= 1)
    return BlockCutTree(blocks, frozenset(cuts), tree_edges, leaves)


def cut_vertices(g: Graph) -> frozenset[int]:
    return block_cut_tree(g).cut_vertices


def is_two_connected(g: Graph) -> bool:
    """At least three vertices, connected, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    full = g.full_mask
    # Removing any single vertex must leave the rest connected.
    for v in range(g.n):
        if not connected_within(g, full & ~(1 << v)):
            return False
    return True


def has_induced_2K2(g: Graph, within: Iterable[int] | None = None) -> tuple[int, int, int, int] | None:
    """Find ``(a, b, a2, b2)`` with edges ``ab`` and ``a2b2`` inducing ``2K2``."""
    mask = g.full_mask if within is None else check_vertex_set(g, within)
    rows = g.rows
    edges = [(u, v) for u in bits(mask) for v in bits(rows[u] & mask) if u < v]
    for i, (a, b) in enumerate(edges):
        blocked = rows[a] | rows[b] | 1 << a | 1 << b
        for a2, b2 in edges[i + 1:]:
            if not (blocked >> a2 & 1 or blocked >> b2 & 1):
                return a, b, a2, b2
    return None


def is_complete_bipartite_inside(g: Graph, s: Iterable[int], bp: Bipartition) -> bool:
    """Whether every vertex of ``S∩A`` is adjacent to every vertex of ``S∩B``.

    A set meeting only one side counts as complete bipartite.
    """
    s_mask = check_vertex_set(g, s)
    side_a = s_mask & to_mask(bp.A)
    side_b = s_mask & to_mask(bp.B)
    return all(g.rows[v] & side_b == side_b for v in bits(side_a))


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    s_mask = check_vertex_set(g, s)
    outside = g.full_mask & ~s_mask
    return all(not g.rows[v] & outside for v in bits(outside))


def biregular_degree(g: Graph) -> int | None:
    """Common degree of a bipartite regular graph, else ``None``."""
    if g.n == 0 or not is_bipartite(g):
        return None
    degrees = {g.degree(v) for v in range(g.n)}
    return degrees.pop() if len(degrees) == 1 else None


def find_sibling_set(g: Graph, k: int) -> frozenset[int] | None:
    """``k`` pairwise non-adjacent vertices with a common neighbor.

    Neighborhoods are scanned in vertex order and filled greedily by smallest
    id; in a forest every neighborhood is independent, so the scan is exact.
    """
    for v in range(g.n):
        if popcount(g.rows[v]) < k:
            continue
        chosen = 0
        count = 0
        for u in bits(g.rows[v]):
            if count == k:
                break
            if not g.rows[u] & chosen:
                chosen |= 1 << u
                count += 1
        if count == k:
            return frozenset(bits(chosen))
    return None
