"""Cells over a port set: the XOR group of port assignments, Hamming metric,
translation, flexibility, channel openness, and channel decomposition.

A port assignment is a subset of a fixed, lexicographically ordered port set,
stored as a bit vector; a cell is a set of assignments over one port set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CellError


@dataclass(frozen=True)
class Assignment:
    """Subset of a port set, as a bit vector over the sorted port tuple."""

    ports: tuple[str, ...]
    mask: int

    @staticmethod
    def of(ports: tuple[str, ...], labels: Iterable[str] = ()) -> "Assignment":
        index = {p: i for i, p in enumerate(ports)}
        mask = 0
        for x in labels:
            if x not in index:
                raise CellError(f"label '{x}' is not a port of this cell")
            mask |= 1 << index[x]
        return Assignment(ports, mask)

    def labels(self) -> tuple[str, ...]:
        return tuple(p for i, p in enumerate(self.ports) if self.mask >> i & 1)

    def sort_key(self) -> tuple[int, tuple[str, ...]]:
        return (self.mask.bit_count(), self.labels())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, label: str) -> bool:
        return label in self.labels()

    def __xor__(self, other: "Assignment") -> "Assignment":
        if self.ports != other.ports:
            raise CellError("assignments belong to different port sets")
        return Assignment(self.ports, self.mask ^ other.mask)

    def __str__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


def sym_diff(k: Assignment, k2: Assignment) -> Assignment:
    """Symmetric difference; the group operation on assignments."""
    return k ^ k2


def hamming(k: Assignment, k2: Assignment) -> int:
    """Number of ports on which the two assignments differ."""
    return len(k ^ k2)


def channel(ports: tuple[str, ...], p: str, q: str) -> Assignment:
    """The two-port assignment {p, q}."""
    if p == q:
        raise CellError("channel ports must differ")
    return Assignment.of(ports, (p, q))


@dataclass(frozen=True)
class Cell:
    """A set of port assignments over one port set."""

    ports: tuple[str, ...]
    masks: frozenset[int]

    @staticmethod
    def of(ports: tuple[str, ...], members: Iterable[Iterable[str]]) -> "Cell":
        return Cell(ports, frozenset(Assignment.of(ports, m).mask for m in members))

    def members(self) -> tuple[Assignment, ...]:
        out = [Assignment(self.ports, m) for m in self.masks]
        out.sort(key=Assignment.sort_key)
        return tuple(out)

    def assignment(self, labels: Iterable[str] = ()) -> Assignment:
        return Assignment.of(self.ports, labels)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[Assignment]:
        return iter(self.members())

    def __contains__(self, k: Assignment) -> bool:
        return k.ports == self.ports and k.mask in self.masks

    def format_lines(self) -> list[str]:
        """Golden text format: one member per line, sorted port labels in
        braces, members ordered by (cardinality, lexicographic)."""
        return [str(k) for k in self.members()]


def parity_space(ports: tuple[str, ...], parity: int) -> Cell:
    """All subsets of the port set whose cardinality has the given parity."""
    masks = frozenset(m for m in range(1 << len(ports))
                      if m.bit_count() % 2 == parity)
    return Cell(ports, masks)


def diameter(cell: Cell) -> int:
    """Maximum Hamming distance between two members."""
    if not cell.masks:
        raise CellError("empty cell has no diameter")
    ms = sorted(cell.masks)
    return max((a ^ b).bit_count() for i, a in enumerate(ms) for b in ms[i:])


def translate(g: Assignment, cell: Cell) -> Cell:
    """Pointwise XOR of ``g`` into every member."""
    if g.ports != cell.ports:
        raise CellError("assignment and cell have different port sets")
    return Cell(cell.ports, frozenset(g.mask ^ m for m in cell.masks))


def is_open(cell: Cell, k: Assignment, c: Assignment) -> bool:
    """A channel is open at a state iff toggling it stays inside the cell."""
    if k not in cell:
        raise CellError(f"state {k} not in cell")
    if len(c) != 2:
        raise CellError(f"channel must contain exactly two ports, got {c}")
    return (k ^ c) in cell


def flexible_ports(cell: Cell) -> tuple[str, ...]:
    """Ports whose membership varies across the cell."""
    if not cell.masks:
        return ()
    union = 0
    inter = (1 << len(cell.ports)) - 1
    for m in cell.masks:
        union |= m
        inter &= m
    varying = union & ~inter
    return tuple(p for i, p in enumerate(cell.ports) if varying >> i & 1)


def is_flexible(cell: Cell) -> bool:
    return flexible_ports(cell) == cell.ports


def flex(cell: Cell) -> Cell:
    """Restriction of the cell to its flexible ports; bijective on members."""
    if not cell.masks:
        raise CellError("empty cell cannot be restricted")
    keep = flexible_ports(cell)
    positions = [cell.ports.index(p) for p in keep]
    projected = frozenset(
        sum(((m >> pos) & 1) << j for j, pos in enumerate(positions))
        for m in cell.masks)
    assert len(projected) == len(cell.masks), "flex projection must be bijective"
    return Cell(keep, projected)


def _pairings(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    """Perfect pairings of an even-length list, first element paired in order."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for sub in _pairings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + sub


def channel_decomposition(cell: Cell, g: Assignment, g2: Assignment) -> list[Assignment]:
    """Disjoint channels whose partial sums connect ``g`` to ``g2`` inside the cell.

    Searches every perfect pairing of the differing ports; a successful
    decomposition D satisfies ``g2 = g ^ xor(D)`` with every partial sum a
    member.  Failure certifies that the cell is not a Kekulé cell.
    """
    if g not in cell or g2 not in cell:
        raise CellError("both endpoints must be members of the cell")
    diff = g ^ g2
    bits = [i for i in range(len(cell.ports)) if diff.mask >> i & 1]
    if len(bits) % 2:
        raise CellError(
            f"odd Hamming distance between {g} and {g2}: not a Kekulé cell")
    for pairing in _pairings(bits):
        masks = [(1 << a) | (1 << b) for a, b in pairing]
        ok = all((g.mask ^ _subset_xor(masks, sel)) in cell.masks
                 for sel in range(1 << len(masks)))
        if ok:
            out = [Assignment(cell.ports, m) for m in masks]
            out.sort(key=Assignment.sort_key)
            return out
    raise CellError(
        f"no disjoint channel decomposition from {g} to {g2}: not a Kekulé cell")


def _subset_xor(masks: list[int], selector: int) -> int:
    acc = 0
    for i, m in enumerate(masks):
        if selector >> i & 1:
            acc ^= m
    return acc
