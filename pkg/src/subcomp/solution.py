"""Target classes, solution records and certificate-checked verification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

from . import recognizers as rec
from .graph import Graph, check_vertex_set, complement_mask


class PreconditionError(ValueError):
    """The input graph is outside the class a solver is proved correct for."""


class ResourceLimitError(RuntimeError):
    """An exponential routine was asked to run beyond its configured cap."""


class VerificationError(RuntimeError):
    """A produced set failed re-verification.  Always a bug."""


KINDS = (
    "bipartite",
    "co-bipartite",
    "split",
    "chordal",
    "degeneracy",
    "2-connected",
    "disconnected",
    "edgeless",
)

_ALIASES = {"cobipartite": "co-bipartite", "two-connected": "2-connected", "biconnected": "2-connected"}


@dataclass(frozen=True)
class ClassTag:
    """A target class; ``k`` is required for (and only for) ``degeneracy``."""

    kind: str
    k: int | None = None

    def __post_init__(self):
        kind = _ALIASES.get(self.kind, self.kind)
        if kind not in KINDS:
            raise ValueError(f"unknown graph class {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        if kind == "degeneracy":
            if self.k is None or self.k < 0:
                raise ValueError("degeneracy class needs k >= 0")
        elif self.k is not None:
            raise ValueError(f"class {kind!r} takes no k")

    def __str__(self):
        return self.kind if self.k is None else f"{self.kind}({self.k})"


BIPARTITE = ClassTag("bipartite")
COBIPARTITE = ClassTag("co-bipartite")
SPLIT = ClassTag("split")
CHORDAL = ClassTag("chordal")
TWO_CONNECTED = ClassTag("2-connected")
DISCONNECTED = ClassTag("disconnected")
EDGELESS = ClassTag("edgeless")


def degeneracy_class(k: int) -> ClassTag:
    return ClassTag("degeneracy", k)


def certificate(g: Graph, tag: ClassTag) -> Any:
    """Return a membership certificate of ``g`` in ``tag``, or ``None``."""
    kind = tag.kind
    if kind == "bipartite":
        return rec.bipartition(g)
    if kind == "co-bipartite":
        return rec.cobipartition(g)
    if kind == "split":
        return rec.split_partition(g)
    if kind == "chordal":
        return rec.is_chordal(g)
    if kind == "degeneracy":
        k, order = rec.degeneracy(g)
        return (k, order) if k == tag.k else None
    if kind == "2-connected":
        return rec.block_cut_tree(g) if rec.is_two_connected(g) else None
    if kind == "disconnected":
        comps = rec.components(g)
        return comps if len(comps) >= 2 else None
    if kind == "edgeless":
        return () if g.m == 0 else None
    raise AssertionError(kind)


def member(g: Graph, tag: ClassTag) -> bool:
    """Fast membership test (no certificate construction where avoidable)."""
    kind = tag.kind
    if kind == "bipartite":
        return rec.is_bipartite(g)
    if kind == "co-bipartite":
        return rec.is_cobipartite(g)
    if kind == "2-connected":
        return rec.is_two_connected(g)
    if kind == "disconnected":
        return g.n >= 2 and not rec.is_connected(g)
    if kind == "edgeless":
        return g.m == 0
    if kind == "degeneracy":
        return rec.degeneracy(g)[0] == tag.k
    return certificate(g, tag) is not None


class Status(str, enum.Enum):
    OPTIMAL = "optimal"
    FEASIBLE = "feasible"
    NONE = "none"


@dataclass(frozen=True)
class Solution:
    """A complementation set together with how it was justified.

    ``certificate`` certifies that ``G ⊕ vertices`` lies in the target class;
    it is ``None`` exactly when ``status`` is ``NONE``.
    """

    vertices: tuple[int, ...]
    status: Status
    target: ClassTag
    weight: Fraction | None = None
    certificate: Any = None

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def found(self) -> bool:
        return self.status is not Status.NONE


def set_key(vertices: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Ordering key: smaller sets first, then lexicographically smaller."""
    t = tuple(sorted(vertices))
    return len(t), t


def verified(g: Graph, s: Iterable[int], target: ClassTag, status: Status = Status.OPTIMAL,
             weight: Fraction | None = None) -> Solution:
    """Build a solution after checking that ``G ⊕ S`` really lies in ``target``."""
    vertices = tuple(sorted(s))
    cert = certificate(complement_mask(g, check_vertex_set(g, vertices)), target)
    if cert is None:
        raise VerificationError(f"G ⊕ {list(vertices)} is not {target}")
    return Solution(vertices, status, target, weight, cert)


def no_solution(target: ClassTag) -> Solution:
    return Solution((), Status.NONE, target)


def is_solution(g: Graph, s: Iterable[int], target: ClassTag) -> bool:
    return member(complement_mask(g, check_vertex_set(g, s)), target)
