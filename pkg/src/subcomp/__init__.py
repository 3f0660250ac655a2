"""Exact minimum subgraph complementation.

``G ⊕ S`` toggles every adjacency between two vertices of ``S``.  Given a graph
and a target class, the solvers in this package find a smallest ``S`` (or a
lightest one, for the disconnection target) that moves the graph into the
class, and every answer is re-verified before it is returned.
"""

from .chordal import chordal_solution_check, msc_biregular_to_chordal
from .connectivity import (
    QuadSplit,
    QuotientGraph,
    find_nontrivial_split,
    msc_to_2connected,
    msc_to_disconnected,
    prime_disconnect,
    quotient,
)
from .degeneracy import msc_forest_to_degeneracy
from .graph import (
    Graph,
    GraphError,
    complement,
    from_edge_list,
    induced_subgraph,
    subgraph_complement,
)
from .kl import (
    msc_bip_to_cobip,
    msc_bip_to_split,
    msc_cobip_to_bip,
    msc_cobip_to_split,
    msc_split_to_bip,
    msc_split_to_cobip,
    msc_via_complement,
    phase_two,
    special_phase,
)
from .solution import ClassTag, PreconditionError, ResourceLimitError, Solution, Status, VerificationError

__all__ = [
    "ClassTag",
    "Graph",
    "GraphError",
    "PreconditionError",
    "QuadSplit",
    "QuotientGraph",
    "ResourceLimitError",
    "Solution",
    "Status",
    "VerificationError",
    "chordal_solution_check",
    "complement",
    "find_nontrivial_split",
    "from_edge_list",
    "induced_subgraph",
    "msc_biregular_to_chordal",
    "msc_bip_to_cobip",
    "msc_bip_to_split",
    "msc_cobip_to_bip",
    "msc_cobip_to_split",
    "msc_forest_to_degeneracy",
    "msc_split_to_bip",
    "msc_split_to_cobip",
    "msc_to_2connected",
    "msc_to_disconnected",
    "msc_via_complement",
    "phase_two",
    "prime_disconnect",
    "quotient",
    "special_phase",
    "subgraph_complement",
]
