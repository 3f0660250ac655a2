"""Minimum complementation between bipartite, co-bipartite and split graphs.

Every solver here builds a polynomial pool of candidate sets, keeps the ones
whose complementation verifies in the target class, and returns the smallest
(ties broken by the lexicographically smallest sorted vertex sequence).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from . import recognizers as rec
from .graph import Graph, bits, complement, complement_mask, induced_mask, to_mask
from .solution import (
    BIPARTITE,
    COBIPARTITE,
    SPLIT,
    ClassTag,
    PreconditionError,
    Solution,
    member,
    set_key,
    verified,
)


def _best(g: Graph, candidates: Iterable[int], target: ClassTag) -> Solution:
    """Smallest verified candidate mask; the empty set is always tried first."""
    best = None
    seen = set()
    for mask in candidates:
        if mask in seen:
            continue
        seen.add(mask)
        key = set_key(bits(mask))
        if best is not None and key >= best[0]:
            continue
        if member(complement_mask(g, mask), target):
            best = (key, mask)
    if best is None:
        raise AssertionError(f"no candidate reached {target}")
    return verified(g, bits(best[1]), target)


def _near_full_subsets(side: frozenset[int]) -> list[int]:
    """The side itself and every subset missing exactly one of its vertices."""
    full = to_mask(side)
    return [full] + [full & ~(1 << v) for v in sorted(side)]


def msc_bip_to_cobip(g: Graph) -> Solution:
    """Minimum ``S`` turning a bipartite graph co-bipartite.

    A feasible set that touches a side leaves at most one vertex of that side
    outside, so only near-complete subsets of each side need to be tried.
    """
    bp = rec.bipartition(g)
    if bp is None:
        raise PreconditionError("input graph is not bipartite")
    a_sets = _near_full_subsets(bp.A)
    b_sets = _near_full_subsets(bp.B)
    pool = [0, *a_sets, *b_sets, *(x | y for x in a_sets for y in b_sets)]
    return _best(g, pool, COBIPARTITE)


def msc_via_complement(g: Graph, inner_solver: Callable[[Graph], Solution],
                       target: ClassTag) -> Solution:
    """Solve for ``g`` by running ``inner_solver`` on its complement.

    Complementation commutes with ``⊕``, so an optimal set for the complement
    and the complementary target is optimal for ``g`` and ``target``.
    """
    inner = inner_solver(complement(g))
    return verified(g, inner.vertices, target, inner.status)


def msc_cobip_to_bip(g: Graph) -> Solution:
    if not rec.is_cobipartite(g):
        raise PreconditionError("input graph is not co-bipartite")
    return msc_via_complement(g, msc_bip_to_cobip, BIPARTITE)


def msc_split_to_bip(g: Graph) -> Solution:
    """Minimum ``S`` turning a split graph bipartite.

    A feasible set leaves at most one clique vertex outside whenever it meets
    the clique, and takes at most two vertices of the independent side.
    """
    sp = rec.split_partition(g)
    if sp is None:
        raise PreconditionError("input graph is not split")
    k_sets = _near_full_subsets(sp.K)
    i_sets = [0] + [1 << v for v in sorted(sp.I)] + [
        1 << u | 1 << v for u, v in combinations(sorted(sp.I), 2)
    ]
    pool = [0, *k_sets, *i_sets, *(x | y for x in k_sets for y in i_sets)]
    return _best(g, pool, BIPARTITE)


def msc_split_to_cobip(g: Graph) -> Solution:
    # Split graphs are closed under complement.
    if not rec.is_split(g):
        raise PreconditionError("input graph is not split")
    return msc_via_complement(g, msc_split_to_bip, COBIPARTITE)


@dataclass(frozen=True)
class SpecialContext:
    """Vertices of ``B`` with pendant neighbors in ``A``.

    ``pendants[z]`` holds the degree-one neighbors of ``z``; ``all_pendants``
    is their union.
    """

    Z: frozenset[int]
    pendants: dict[int, frozenset[int]]
    all_pendants: frozenset[int]


def special_context(g: Graph, side_a: frozenset[int], side_b: frozenset[int]) -> SpecialContext:
    pendants = {}
    for z in sorted(side_b):
        leaves = frozenset(u for u in g.neighbors(z) if u in side_a and g.degree(u) == 1)
        if leaves:
            pendants[z] = leaves
    union = frozenset().union(*pendants.values()) if pendants else frozenset()
    return SpecialContext(frozenset(pendants), pendants, union)


def _special_candidates(g: Graph, side_a: frozenset[int], side_b: frozenset[int]) -> list[int]:
    ctx = special_context(g, side_a, side_b)
    if not ctx.Z:
        return []
    a = to_mask(side_a)
    o = to_mask(ctx.all_pendants)
    cores = {a & ~o, a}
    for z in ctx.Z:
        cores.add(a & ~to_mask(ctx.pendants[z]))
    # Includes every set the pendant analysis names (single v of B plus A minus
    # some pendant class) for every v, which also covers the cases where more
    # than two vertices of B carry pendants.
    return [1 << v | core for v in sorted(side_b) for core in sorted(cores)]


def special_phase(g: Graph, side_a: frozenset[int], side_b: frozenset[int]) -> list[Solution]:
    """Verified candidates meeting one side in exactly one vertex.

    Both orientations of the bipartition are tried; an orientation whose side
    ``B`` has no vertex with a pendant neighbor contributes nothing.
    """
    out = {}
    for x, y in ((side_a, side_b), (side_b, side_a)):
        for mask in _special_candidates(g, x, y):
            if mask not in out and member(complement_mask(g, mask), SPLIT):
                out[mask] = verified(g, bits(mask), SPLIT)
    return sorted(out.values(), key=lambda s: set_key(s.vertices))


@dataclass(frozen=True)
class PhaseTwoCandidate:
    Q: frozenset[int]
    X: frozenset[int]
    choices: tuple[frozenset[int], ...]

    @property
    def vertices(self) -> frozenset[int]:
        return self.Q | self.X


def one_sided_candidates(g: Graph, side_a: frozenset[int], side_b: frozenset[int]) -> list[int]:
    """Candidates contained in one side, both orientations.

    A minimal solution ``S`` inside ``A`` with ``|S| >= 3`` becomes a clique that
    at most one untouched vertex ``z`` of ``B`` can join, and every vertex of
    ``A`` outside ``S`` may only be adjacent to ``z``.  So ``S = A - O_z`` for
    some ``z`` carrying pendant neighbors ``O_z``.
    """
    out = []
    for x, y in ((side_a, side_b), (side_b, side_a)):
        ctx = special_context(g, x, y)
        a = to_mask(x)
        out.extend(a & ~to_mask(ctx.pendants[z]) for z in sorted(ctx.Z))
    return out


def phase_two_candidates(g: Graph) -> list[PhaseTwoCandidate]:
    """One candidate per clique ``Q`` of size at most two that is not discarded.

    In every component of ``G - Q`` the side meeting ``N(Q)`` is taken, or the
    smaller side when ``N(Q)`` misses the component.
    """
    qs = [0] + [1 << v for v in range(g.n)] + [1 << u | 1 << v for u, v in g.edges()]
    out = []
    for q in qs:
        nq = 0
        for v in bits(q):
            nq |= g.rows[v]
        nq &= ~q
        rest = g.full_mask & ~q
        h, index = induced_mask(g, rest)
        back = {new: old for old, new in index.items()}
        bp = rec.bipartition(h)
        if bp is None:
            continue
        choices = []
        ok = True
        for comp in rec.components(h):
            side_a = to_mask(back[v] for v in comp if v in bp.A)
            side_b = to_mask(back[v] for v in comp if v in bp.B)
            hit_a, hit_b = bool(side_a & nq), bool(side_b & nq)
            if hit_a and hit_b:
                ok = False
                break
            if hit_a:
                w = side_a
            elif hit_b:
                w = side_b
            else:
                w = side_a if bin(side_a).count("1") <= bin(side_b).count("1") else side_b
            choices.append(frozenset(bits(w)))
        if not ok:
            continue
        x = frozenset().union(*choices) if choices else frozenset()
        out.append(PhaseTwoCandidate(frozenset(bits(q)), x, tuple(choices)))
    return out


def phase_two(g: Graph) -> Solution | None:
    best = None
    for cand in phase_two_candidates(g):
        mask = to_mask(cand.vertices)
        key = set_key(cand.vertices)
        if best is not None and key >= best[0]:
            continue
        if member(complement_mask(g, mask), SPLIT):
            best = (key, mask)
    return None if best is None else verified(g, bits(best[1]), SPLIT)


def msc_bip_to_split(g: Graph) -> Solution:
    """Minimum ``S`` turning a bipartite graph into a split graph.

    Pipeline: already split; strip isolated vertices; all sets of size at most
    two; the special phase; one-sided sets; phase two.  The best verified candidate wins.
    """
    if not rec.is_bipartite(g):
        raise PreconditionError("input graph is not bipartite")
    if rec.is_split(g):
        return verified(g, (), SPLIT)
    core = to_mask(v for v in range(g.n) if g.rows[v])
    h, index = induced_mask(g, core)
    back = [0] * h.n
    for old, new in index.items():
        back[new] = old

    pool = [1 << u | 1 << v for u, v in combinations(range(h.n), 2)]
    bp = rec.bipartition(h)
    for sol in special_phase(h, bp.A, bp.B):
        pool.append(to_mask(sol.vertices))
    pool.extend(one_sided_candidates(h, bp.A, bp.B))
    for cand in phase_two_candidates(h):
        pool.append(to_mask(cand.vertices))
    inner = _best(h, pool, SPLIT)
    return verified(g, [back[v] for v in inner.vertices], SPLIT)


def msc_cobip_to_split(g: Graph) -> Solution:
    if not rec.is_cobipartite(g):
        raise PreconditionError("input graph is not co-bipartite")
    return msc_via_complement(g, msc_bip_to_split, SPLIT)
