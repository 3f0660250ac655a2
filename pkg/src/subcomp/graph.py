"""Immutable simple undirected graphs and the subgraph-complementation operator.

Vertices are the dense ids ``0..n-1``.  Each vertex keeps its neighborhood as an
integer bitmask (bit ``v`` set when ``v`` is a neighbor), which makes edge
queries and set algebra cheap in the exhaustive loops of the test oracles.
"""

from __future__ import annotations

from typing import Iterable, Iterator

VertexSet = frozenset


class GraphError(ValueError):
    """Raised when a graph or vertex set violates the simple-graph contract."""


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are values: they compare and hash by their edge sets, and every
    operation returns a new graph.
    """

    __slots__ = ("_n", "_rows", "_adj", "_m")

    def __init__(self, n: int, rows: Iterable[int] = ()):
        rows = tuple(rows) if rows else (0,) * n
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor id out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop ({v}, {v})")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"adjacency of ({v}, {u}) is not symmetric")
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_adj", None)
        object.__setattr__(self, "_m", None)

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # Skips validation; only for rows derived from an already valid graph.
        g = cls.__new__(cls)
        object.__setattr__(g, "_n", n)
        object.__setattr__(g, "_rows", rows)
        object.__setattr__(g, "_adj", None)
        object.__setattr__(g, "_m", None)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        """Neighborhood bitmask of every vertex."""
        return self._rows

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        if self._adj is None:
            object.__setattr__(
                self, "_adj", tuple(frozenset(bits(r)) for r in self._rows)
            )
        return self._adj

    @property
    def m(self) -> int:
        if self._m is None:
            object.__setattr__(self, "_m", sum(map(popcount, self._rows)) // 2)
        return self._m

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self._rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self._n) for v in bits(self._rows[u] >> u + 1 << u + 1)]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self):
        return hash((self._n, self._rows))

    def __repr__(self):
        return f"Graph(n={self._n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex id out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, tuple(rows))


def from_rows(rows: Iterable[int]) -> Graph:
    rows = tuple(rows)
    return Graph(len(rows), rows)


def check_vertex_set(g: Graph, vertices: Iterable[int]) -> int:
    """Return the bitmask of ``vertices`` after checking every id against ``g``."""
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise GraphError(f"vertex {v!r} is not in a graph with n={g.n}")
        mask |= 1 << v
    return mask


def complement_mask(g: Graph, s: int) -> Graph:
    """``G ⊕ S`` for ``S`` given as a bitmask (no validation)."""
    rows = g.rows
    out = list(rows)
    for v in bits(s):
        out[v] = rows[v] ^ (s & ~(1 << v))
    return Graph._trusted(g.n, tuple(out))


def subgraph_complement(g: Graph, s: Iterable[int]) -> Graph:
    """Toggle every adjacency between two vertices of ``s``.

    Pairs with at least one endpoint outside ``s`` are untouched, so sets of
    size at most one leave the graph unchanged.
    """
    return complement_mask(g, check_vertex_set(g, s))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._trusted(
        g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows))
    )


def induced_mask(g: Graph, mask: int) -> tuple[Graph, dict[int, int]]:
    keep = list(bits(mask))
    index = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for u in bits(g.rows[old] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph._trusted(len(keep), tuple(rows)), index


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``vertices``, relabeled ``0..k-1`` in increasing id order.

    Returns the graph and the old-to-new id map.
    """
    return induced_mask(g, check_vertex_set(g, vertices))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Return the graph where vertex ``v`` is renamed ``perm[v]``."""
    rows = [0] * g.n
    for v, row in enumerate(g.rows):
        rows[perm[v]] = to_mask(perm[u] for u in bits(row))
    return Graph._trusted(g.n, tuple(rows))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.rows)
        offset += g.n
    return Graph._trusted(offset, tuple(rows))


# Named families used throughout the tests and the generator.

def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def edgeless(n: int) -> Graph:
    return Graph._trusted(n, (0,) * n)


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with center 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def hypercube(d: int) -> Graph:
    n = 1 << d
    return from_edge_list(n, [(u, u ^ (1 << i)) for u in range(n) for i in range(d) if u < u ^ (1 << i)])
