"""Omniconjugation: graphs whose Kekulé cell fills the whole parity class,
plus the constructive families A_n, Delta_n, and the basic model B.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cells import Assignment, parity_space
from .errors import KekulecError
from .graph import Graph, signature
from .kekule import has_kekule_state_for
from .transform import add_internal_edge

_PORT_CAP = 20


@dataclass(frozen=True)
class OmniVerdict:
    """Decision result; carries the first missing assignment when negative."""

    omniconjugated: bool
    witness: Assignment | None


def is_omniconjugated(g: Graph) -> OmniVerdict:
    """True iff every parity-correct port assignment has a Kekulé state.

    Tests membership assignment by assignment with constrained backtracking
    instead of enumerating all states; the witness is the first missing
    assignment in (cardinality, label) order.
    """
    if len(g.ports) < 2:
        raise KekulecError("omniconjugation requires at least two ports")
    if len(g.ports) > _PORT_CAP:
        raise KekulecError(f"omniconjugation check capped at {_PORT_CAP} ports")
    for a in parity_space(g.ports, signature(g)).members():
        if not has_kekule_state_for(g, a):
            return OmniVerdict(False, a)
    return OmniVerdict(True, None)


def realized_assignment_count(g: Graph) -> int:
    """Number of port assignments with at least one Kekulé state."""
    if len(g.ports) > _PORT_CAP:
        raise KekulecError(f"assignment count capped at {_PORT_CAP} ports")
    return sum(1 for a in parity_space(g.ports, signature(g)).members()
               if has_kekule_state_for(g, a))


def make_A(n: int) -> Graph:
    """The linear graph on n consecutive nodes; omniconjugated for n >= 2."""
    if n < 2:
        raise KekulecError("A_n requires n >= 2")
    return Graph((f"a{i}", f"a{i + 1}") for i in range(1, n))


def make_delta(n: int) -> Graph:
    """Complete core on n nodes with one pendant port each: 2n nodes,
    n(n-1)/2 + n edges; omniconjugated for n >= 2."""
    if n < 2:
        raise KekulecError("Delta_n requires n >= 2")
    edges = [(f"u{i}", f"u{j}") for i, j in combinations(range(1, n + 1), 2)]
    edges += [(f"p{i}", f"u{i}") for i in range(1, n + 1)]
    return Graph(edges)


def make_B() -> Graph:
    """The basic model B: A_6 plus two extra internal edges."""
    return add_internal_edge(add_internal_edge(make_A(6), "a2", "a4"), "a3", "a5")


def pendant_core_is_complete(g: Graph) -> bool:
    """For a pendant-form graph, whether the internal core is complete.

    Pendant form: every internal node carries exactly one pendant port and
    every port hangs off an internal node.  Omniconjugated pendant-form
    graphs always have a complete core.
    """
    internal = set(g.internal)
    if not internal:
        raise KekulecError("graph is not in pendant form")
    for p in g.ports:
        (nb, _), = g.neighbors(p)
        if nb not in internal:
            raise KekulecError("graph is not in pendant form")
    for v in g.internal:
        pendants = sum(1 for nb, _ in g.neighbors(v) if g.degree[nb] == 1)
        if pendants != 1:
            raise KekulecError("graph is not in pendant form")
    return all((u, v) in g for u, v in combinations(sorted(internal), 2))
