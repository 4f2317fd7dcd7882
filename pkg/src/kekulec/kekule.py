"""Kekulé states: predicate, enumeration, cells, alternating curves and paths.

A Kekulé state is an edge subset giving every internal node exactly one
incident chosen edge.  Enumeration backtracks over internal nodes in
ascending (degree, label) order so small branching factors fail fast; edges
between two ports are unconstrained and multiply solutions freely.
"""

from __future__ import annotations

from typing import Iterator

from .cells import Assignment, Cell, channel
from .errors import KekulecError
from .graph import EdgeSubset, Graph, curve_components, cycle_rank, is_curve

_RANK_CAP = 24


def _check_scale(g: Graph, allow_large: bool) -> None:
    r = cycle_rank(g)
    if r > _RANK_CAP and not allow_large:
        raise KekulecError(
            f"state count bound 2^{r} exceeds 2^{_RANK_CAP}; "
            "pass allow_large=True to override")


def _require_same_graph(g: Graph, w: EdgeSubset) -> None:
    if w.graph != g:
        raise KekulecError("edge subset belongs to a different graph")


def is_kekule_state(g: Graph, w: EdgeSubset) -> bool:
    """True iff every internal node has exactly one incident edge in ``w``."""
    _require_same_graph(g, w)
    return all((w.mask & g.incidence_mask(v)).bit_count() == 1 for v in g.internal)


def is_perfect_matching(g: Graph, w: EdgeSubset) -> bool:
    """True iff every node, ports included, has exactly one incident edge in ``w``."""
    _require_same_graph(g, w)
    return all((w.mask & g.incidence_mask(v)).bit_count() == 1 for v in g.nodes)


def port_assignment(g: Graph, w: EdgeSubset) -> Assignment:
    """The assignment (W|P): ports touched by an edge of ``w``."""
    _require_same_graph(g, w)
    mask = 0
    for i, p in enumerate(g.ports):
        if w.mask & g.incidence_mask(p):
            mask |= 1 << i
    return Assignment(g.ports, mask)


def _iter_cover_masks(g: Graph, forced_in: int = 0, forced_out: int = 0) -> Iterator[int]:
    """Masks covering every internal node exactly once.

    ``forced_in`` edges are pre-selected, ``forced_out`` excluded.  Edges
    between two ports are never selected here; callers own those bits.
    """
    covered: dict[str, bool] = {}
    for v in g.internal:
        cnt = (forced_in & g.incidence_mask(v)).bit_count()
        if cnt > 1:
            return
        covered[v] = cnt == 1
    order = sorted(g.internal, key=lambda n: (g.degree[n], n))
    candidates = {
        v: tuple((bit, other, other in covered) for other, bit in g.neighbors(v))
        for v in order}

    def rec(i: int, mask: int) -> Iterator[int]:
        if i == len(order):
            yield mask
            return
        v = order[i]
        if covered[v]:
            yield from rec(i + 1, mask)
            return
        for bit, other, other_internal in candidates[v]:
            if forced_out >> bit & 1:
                continue
            if other_internal and covered[other]:
                continue
            covered[v] = True
            if other_internal:
                covered[other] = True
            yield from rec(i + 1, mask | (1 << bit))
            covered[v] = False
            if other_internal:
                covered[other] = False

    yield from rec(0, forced_in)


def _port_port_bits(g: Graph) -> list[int]:
    port_set = set(g.ports)
    return [i for i, (u, v) in enumerate(g.edges)
            if u in port_set and v in port_set]


def enumerate_kekule_states(g: Graph, allow_large: bool = False) -> list[EdgeSubset]:
    """All Kekulé states, ordered by edge bit vector."""
    _check_scale(g, allow_large)
    free = _port_port_bits(g)
    if len(free) > _RANK_CAP and not allow_large:
        raise KekulecError(
            f"2^{len(free)} free port-port edges exceed 2^{_RANK_CAP}; "
            "pass allow_large=True to override")
    masks = []
    for base in _iter_cover_masks(g):
        for sel in range(1 << len(free)):
            extra = 0
            for j, bit in enumerate(free):
                if sel >> j & 1:
                    extra |= 1 << bit
            masks.append(base | extra)
    masks.sort()
    return [EdgeSubset(g, m) for m in masks]


def _forced_port_edges(g: Graph, a: Assignment) -> tuple[int, int] | None:
    """(forced_in, forced_out) for the port edges under assignment ``a``.

    None when a port-port edge gets contradictory demands, i.e. no state
    can realize the assignment.
    """
    port_set = set(g.ports)
    want = set(a.labels())
    forced_in = forced_out = 0
    for i, (u, v) in enumerate(g.edges):
        u_port, v_port = u in port_set, v in port_set
        if u_port and v_port:
            if (u in want) != (v in want):
                return None
            forced = u in want
        elif u_port or v_port:
            forced = (u if u_port else v) in want
        else:
            continue
        if forced:
            forced_in |= 1 << i
        else:
            forced_out |= 1 << i
    return forced_in, forced_out


def _require_graph_assignment(g: Graph, a: Assignment) -> None:
    if a.ports != g.ports:
        raise KekulecError("assignment port set does not match the graph's ports")


def kekule_states_for(g: Graph, a: Assignment, allow_large: bool = False) -> list[EdgeSubset]:
    """Kekulé states whose port assignment equals ``a``.

    Port edges are pre-forced by the assignment before backtracking, so the
    cost stays proportional to the constrained search, not the full state set.
    """
    _require_graph_assignment(g, a)
    _check_scale(g, allow_large)
    forced = _forced_port_edges(g, a)
    if forced is None:
        return []
    masks = sorted(_iter_cover_masks(g, *forced))
    return [EdgeSubset(g, m) for m in masks]


def has_kekule_state_for(g: Graph, a: Assignment) -> bool:
    """Existence version of :func:`kekule_states_for`; stops at the first hit."""
    _require_graph_assignment(g, a)
    forced = _forced_port_edges(g, a)
    if forced is None:
        return False
    return next(_iter_cover_masks(g, *forced), None) is not None


def kekule_cell(g: Graph, allow_large: bool = False) -> Cell:
    """The set of port assignments realized by some Kekulé state."""
    masks = frozenset(port_assignment(g, w).mask
                      for w in enumerate_kekule_states(g, allow_large))
    return Cell(g.ports, masks)


# -- alternating curves -------------------------------------------------------

def is_alternating(g: Graph, c: EdgeSubset, w: EdgeSubset) -> bool:
    """True iff ``c`` is a curve and ``w & c`` is a Kekulé state of ``c``."""
    _require_same_graph(g, c)
    _require_same_graph(g, w)
    if not is_curve(g, c):
        return False
    wc = w.mask & c.mask
    for n in c.nodes():
        if c.degree_in(n) >= 2 and (wc & g.incidence_mask(n)).bit_count() != 1:
            return False
    return True


def state_difference(w: EdgeSubset, w2: EdgeSubset) -> EdgeSubset:
    """The curve W xor W'; alternating with respect to both states."""
    if w.graph != w2.graph:
        raise KekulecError("states belong to different graphs")
    g = w.graph
    if not is_kekule_state(g, w) or not is_kekule_state(g, w2):
        raise KekulecError("state_difference requires two Kekulé states")
    c = w ^ w2
    assert is_alternating(g, c, w)
    return c


def apply_curve(w: EdgeSubset, c: EdgeSubset) -> EdgeSubset:
    """Toggle an alternating curve, producing another Kekulé state."""
    if w.graph != c.graph:
        raise KekulecError("curve belongs to a different graph")
    g = w.graph
    if not is_kekule_state(g, w):
        raise KekulecError("apply_curve requires a Kekulé state")
    if not is_alternating(g, c, w):
        raise KekulecError("curve not alternating for W")
    result = w ^ c
    assert is_kekule_state(g, result)
    return result


def alternating_curves(g: Graph, w: EdgeSubset, with_ports: bool = False,
                       allow_large: bool = False) -> list[EdgeSubset]:
    """All curves alternating with ``w``; port-free only unless ``with_ports``.

    Every alternating curve is W xor W' for a unique Kekulé state W', and the
    port-free ones correspond to the states sharing W's port assignment.
    """
    if not is_kekule_state(g, w):
        raise KekulecError("alternating_curves requires a Kekulé state")
    if with_ports:
        others = enumerate_kekule_states(g, allow_large)
    else:
        others = kekule_states_for(g, port_assignment(g, w), allow_large)
    masks = sorted(w.mask ^ o.mask for o in others)
    return [EdgeSubset(g, m) for m in masks]


def alternating_path(g: Graph, w: EdgeSubset, p: str, q: str) -> EdgeSubset | None:
    """A simple alternating path between two ports, when one exists.

    Exists iff toggling {p, q} in W's port assignment lands in the Kekulé
    cell; the path is the connected component of ``p`` in W xor W' for a
    state W' realizing the toggled assignment.
    """
    for x in (p, q):
        if x not in g.ports:
            raise KekulecError(f"'{x}' is not a port")
    if p == q:
        raise KekulecError("ports must differ")
    if not is_kekule_state(g, w):
        raise KekulecError("alternating_path requires a Kekulé state")
    target = port_assignment(g, w) ^ channel(g.ports, p, q)
    forced = _forced_port_edges(g, target)
    if forced is None:
        return None
    mask = next(_iter_cover_masks(g, *forced), None)
    if mask is None:
        return None
    diff = w ^ EdgeSubset(g, mask)
    for comp in curve_components(g, diff):
        if p in comp.subset.nodes():
            assert comp.kind == "path" and comp.endpoints == tuple(sorted((p, q)))
            return comp.subset
    raise AssertionError("toggled state must differ from W at p")
