"""Seeded instance generators and exhaustive graph enumeration.

Randomness comes from :class:`random.Random` (CPython's Mersenne Twister,
MT19937) seeded with the spec's integer seed, so an identical spec always
yields an identical graph on the same Python version.  Tests pin behavior
through checked-in fixture files rather than through generator output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from . import recognizers as rec
from .graph import Graph, complement, from_edge_list, relabel
from . import graph as gr

FAMILIES = (
    "gnp", "forest", "bipartite", "split", "cobipartite", "biregular",
    "path", "cycle", "star", "complete", "edgeless",
)


class GeneratorError(ValueError):
    """The requested family/parameters cannot be realized."""


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: int
    p: float = 0.5
    k: int | None = None
    seed: int = 0


def generate(spec: GeneratorSpec, max_retries: int = 1000) -> Graph:
    family, n = spec.family, spec.n
    if family not in FAMILIES:
        raise GeneratorError(f"unknown family {family!r}")
    if n < 0:
        raise GeneratorError("n must be non-negative")
    if not 0.0 <= spec.p <= 1.0:
        raise GeneratorError("p must lie in [0, 1]")
    rng = random.Random(spec.seed)

    if family == "path":
        g = gr.path(n)
    elif family == "cycle":
        g = gr.cycle(n)
    elif family == "star":
        if n < 1:
            raise GeneratorError("a star needs at least one vertex")
        g = gr.star(n - 1)
    elif family == "complete":
        g = gr.complete(n)
    elif family == "edgeless":
        g = gr.edgeless(n)
    elif family == "gnp":
        g = from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < spec.p])
    elif family == "forest":
        edges = [(rng.randrange(v), v) for v in range(1, n) if rng.random() < spec.p]
        g = _shuffled(from_edge_list(n, edges), rng)
    elif family in ("bipartite", "cobipartite"):
        side = [rng.random() < 0.5 for _ in range(n)]
        edges = [(u, v) for u, v in combinations(range(n), 2) if side[u] != side[v] and rng.random() < spec.p]
        g = from_edge_list(n, edges)
        if family == "cobipartite":
            g = complement(g)
    elif family == "split":
        clique = [v for v in range(n) if rng.random() < 0.5]
        in_clique = set(clique)
        edges = list(combinations(clique, 2))
        edges += [(u, v) for v in range(n) if v not in in_clique for u in clique if rng.random() < spec.p]
        g = from_edge_list(n, edges)
    else:
        g = _biregular(n, spec.k, rng, max_retries)

    if not _in_family(g, spec):
        raise GeneratorError(f"generated graph failed the {family} check")
    return g


def _shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(g, perm)


def _biregular(n: int, k: int | None, rng: random.Random, max_retries: int) -> Graph:
    """Union of ``k`` random perfect matchings between ``{0..h-1}`` and ``{h..n-1}``."""
    if k is None or k < 0:
        raise GeneratorError("biregular family needs k >= 0")
    if n % 2 or n == 0:
        raise GeneratorError("biregular family needs a positive even n")
    half = n // 2
    if k > half:
        raise GeneratorError(f"k={k} exceeds n/2={half}")
    for _ in range(max_retries):
        edges: set[tuple[int, int]] = set()
        ok = True
        for _ in range(k):
            perm = list(range(half))
            # Rejection of parallel edges, one matching at a time.
            for _ in range(max_retries):
                rng.shuffle(perm)
                new = {(a, half + perm[a]) for a in range(half)}
                if not new & edges:
                    edges |= new
                    break
            else:
                ok = False
                break
        if ok:
            return from_edge_list(n, sorted(edges))
    raise GeneratorError(f"could not realize a {k}-regular bipartite graph on {n} vertices")


def _in_family(g: Graph, spec: GeneratorSpec) -> bool:
    family = spec.family
    if family == "forest":
        return rec.is_forest(g)
    if family == "bipartite":
        return rec.is_bipartite(g)
    if family == "cobipartite":
        return rec.is_cobipartite(g)
    if family == "split":
        return rec.is_split(g)
    if family == "biregular":
        return g.n == 0 or rec.biregular_degree(g) == spec.k
    return True


def enumerate_all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n <= 8`` vertices (``2^(n(n-1)/2)`` of them)."""
    if n > 8:
        raise GeneratorError("labeled enumeration is limited to n <= 8")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph._trusted(n, tuple(rows))


def _certificate(g: Graph) -> bytes:
    import pynauty

    adjacency = {v: list(g.adj[v]) for v in range(g.n)}
    return pynauty.certificate(pynauty.Graph(g.n, adjacency_dict=adjacency))


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """One representative of every isomorphism class of graphs on ``n`` vertices.

    Built by adding a vertex with every possible neighborhood to each class on
    ``n - 1`` vertices and deduplicating by canonical certificate.  Practical up
    to ``n = 9``.
    """
    if n <= 1:
        return (Graph(n),)
    seen: dict[bytes, Graph] = {}
    new = n - 1
    for base in nonisomorphic_graphs(n - 1):
        for nbrs in range(1 << new):
            rows = list(base.rows) + [nbrs]
            for v in range(new):
                if nbrs >> v & 1:
                    rows[v] |= 1 << new
            g = Graph._trusted(n, tuple(rows))
            cert = _certificate(g)
            if cert not in seen:
                seen[cert] = g
    return tuple(seen.values())
