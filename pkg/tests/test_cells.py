import pytest
from hypothesis import given, strategies as st

from kekulec import (Assignment, Cell, CellError, channel,
                     channel_decomposition, diameter, flex, flexible_ports,
                     hamming, is_open, parity_space, sym_diff, translate)

PORTS4 = ("a", "b", "c", "d")

masks4 = st.integers(0, 15)


def asg(labels, ports=PORTS4):
    return Assignment.of(ports, labels)


@given(masks4, masks4, masks4)
def test_xor_group_laws(x, y, z):
    kx, ky, kz = (Assignment(PORTS4, m) for m in (x, y, z))
    assert (kx ^ ky) == (ky ^ kx)
    assert ((kx ^ ky) ^ kz) == (kx ^ (ky ^ kz))
    assert (kx ^ Assignment(PORTS4, 0)) == kx
    assert (kx ^ kx) == Assignment(PORTS4, 0)


@given(masks4, masks4, masks4)
def test_hamming_translation_invariant(x, y, g):
    kx, ky, kg = (Assignment(PORTS4, m) for m in (x, y, g))
    assert hamming(kg ^ kx, kg ^ ky) == hamming(kx, ky)


def test_sym_diff_examples():
    assert sym_diff(asg("ab"), asg("bc")) == asg("ac")
    assert hamming(asg(""), asg("abcd")) == 4
    assert hamming(asg("ab"), asg("ac")) == 2
    assert hamming(asg("ab"), asg("ab")) == 0


def test_port_set_mismatch():
    with pytest.raises(CellError):
        sym_diff(asg("a"), Assignment.of(("a", "b"), "a"))


def test_assignment_format():
    assert str(asg("")) == "{}"
    assert str(asg("ba")) == "{a,b}"


def test_diameter():
    assert diameter(Cell.of(PORTS4, ["a"])) == 0
    eth = Cell.of(("p0", "p1", "p2"), [(), ("p0", "p1"), ("p1", "p2")])
    assert diameter(eth) == 2
    assert diameter(parity_space(PORTS4, 0)) == 4
    with pytest.raises(CellError):
        diameter(Cell(PORTS4, frozenset()))


def test_translate():
    k1 = Cell.of(("p0", "p1"), [("p0",), ("p1",)])
    assert translate(Assignment.of(("p0", "p1"), ()), k1) == k1
    g = Assignment.of(("p0", "p1"), ("p0",))
    assert translate(g, k1) == Cell.of(("p0", "p1"), [(), ("p0", "p1")])
    assert translate(g, translate(g, k1)) == k1


def test_translate_preserves_shape():
    cell = Cell.of(PORTS4, [(), "ab", "cd"])
    moved = translate(asg("ac"), cell)
    assert len(moved) == len(cell)
    assert diameter(moved) == diameter(cell)
    assert len(flexible_ports(moved)) == len(flexible_ports(cell))


def test_is_open():
    eth = Cell.of(("p0", "p1", "p2"), [(), ("p0", "p1"), ("p1", "p2")])
    empty = Assignment.of(("p0", "p1", "p2"), "")
    assert is_open(eth, empty, channel(eth.ports, "p0", "p1"))
    assert not is_open(eth, empty, channel(eth.ports, "p0", "p2"))
    with pytest.raises(CellError, match="not in cell"):
        is_open(eth, Assignment.of(eth.ports, ("p0",)), channel(eth.ports, "p0", "p1"))
    with pytest.raises(CellError, match="two ports"):
        is_open(eth, empty, Assignment.of(eth.ports, ("p0",)))


def test_flexible_ports():
    assert flexible_ports(Cell.of(PORTS4, ["ab"])) == ()
    eth = Cell.of(("p0", "p1", "p2"), [(), ("p0", "p1"), ("p1", "p2")])
    assert flexible_ports(eth) == ("p0", "p1", "p2")
    assert flexible_ports(Cell.of(("a", "b", "c"), ["a", "abc"])) == ("b", "c")


def test_flex():
    eth = Cell.of(("p0", "p1", "p2"), [(), ("p0", "p1"), ("p1", "p2")])
    assert flex(eth) == eth
    mixed = Cell.of(("a", "b", "c"), ["a", "abc"])
    assert flex(mixed) == Cell.of(("b", "c"), [(), "bc"])
    single = Cell.of(PORTS4, ["ab"])
    assert flex(single) == Cell.of((), [()])


def test_flex_bijection():
    cell = Cell.of(PORTS4, ["a", "ab", "abc"])
    assert len(flex(cell)) == len(cell)


def test_channel_decomposition_trivial():
    k0 = Cell.of(PORTS4, [(), "ab", "cd", "abcd"])
    assert channel_decomposition(k0, asg(""), asg("")) == []


def test_channel_decomposition_k0():
    k0 = Cell.of(PORTS4, [(), "ab", "cd", "abcd"])
    d = channel_decomposition(k0, asg(""), asg("abcd"))
    assert d == [asg("ab"), asg("cd")]


def test_channel_decomposition_ethene():
    eth = Cell.of(("p0", "p1", "p2"), [(), ("p0", "p1"), ("p1", "p2")])
    d = channel_decomposition(eth, Assignment.of(eth.ports, ""),
                              Assignment.of(eth.ports, ("p1", "p2")))
    assert d == [Assignment.of(eth.ports, ("p1", "p2"))]


def test_channel_decomposition_failure_witnesses_non_kekule():
    bad = Cell.of(PORTS4, [(), "abcd"])
    with pytest.raises(CellError, match="not a Kekulé cell"):
        channel_decomposition(bad, asg(""), asg("abcd"))


def test_channel_decomposition_odd_distance():
    bad = Cell.of(PORTS4, [(), "a"])
    with pytest.raises(CellError, match="odd"):
        channel_decomposition(bad, asg(""), asg("a"))


@pytest.mark.parametrize("ports, parity, size", [
    (("a", "b"), 0, 2),
    (PORTS4, 0, 8),
    (tuple("pqrstu"), 1, 32),
])
def test_parity_space_sizes(ports, parity, size):
    assert len(parity_space(ports, parity)) == size


def test_parity_space_two_ports():
    assert parity_space(("a", "b"), 0) == Cell.of(("a", "b"), [(), "ab"])


def test_cell_format_lines():
    eth = Cell.of(("p0", "p1", "p2"), [("p1", "p2"), (), ("p0", "p1")])
    assert eth.format_lines() == ["{}", "{p0,p1}", "{p1,p2}"]
