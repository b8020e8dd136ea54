import pytest

from dirmat.circular import CircularNetwork
from dirmat.errors import BadParameter
from dirmat.families import (
    FAMILIES,
    double_path,
    double_sunflower,
    hexwheel,
    parse_generator,
    path,
    poset,
    random_network,
    star,
    sunflower,
    triangle,
    wheatstone,
)


def test_parse_plain_names():
    assert parse_generator("triangle").name == "triangle"
    assert parse_generator("double_path").name == "double_path"
    assert parse_generator("wheatstone").name == "wheatstone"


def test_parse_with_arguments():
    assert parse_generator("star:4").name == "star(4)"
    assert parse_generator("path:5").name == "path(5)"
    assert parse_generator("hexwheel:6").name == "hexwheel(6)"
    assert parse_generator(" sunflower : 3 ").name == "sunflower(3)"


def test_parse_random_forms():
    a = parse_generator("random:5,2")
    b = parse_generator("random:5,2,0.5,0")
    assert sorted(a.edges.items()) == sorted(b.edges.items())
    c = parse_generator("random:5,2,0.8")
    assert c.name == "random(5,2,0.8,0)"


def test_parse_poset():
    net = parse_generator("poset:diamond")
    assert set(net.boundary) == {"src", "snk"}


def test_parse_rejects_unknown_family():
    with pytest.raises(BadParameter):
        parse_generator("octagon:3")


def test_parse_rejects_wrong_arity():
    with pytest.raises(BadParameter):
        parse_generator("star")
    with pytest.raises(BadParameter):
        parse_generator("star:3,4")
    with pytest.raises(BadParameter):
        parse_generator("random:5")


def test_parse_rejects_non_integer():
    with pytest.raises(BadParameter):
        parse_generator("star:three")


def test_family_size_floors():
    with pytest.raises(BadParameter):
        star(1)
    with pytest.raises(BadParameter):
        path(2)
    with pytest.raises(BadParameter):
        hexwheel(2)
    with pytest.raises(BadParameter):
        sunflower(2)
    with pytest.raises(BadParameter):
        double_sunflower(5)  # odd m has no symmetric chord


def test_random_network_is_deterministic():
    a = random_network(6, 3, 0.5, seed=11)
    b = random_network(6, 3, 0.5, seed=11)
    assert sorted(a.edges.items()) == sorted(b.edges.items())
    c = random_network(6, 3, 0.5, seed=12)
    assert sorted(a.edges.items()) != sorted(c.edges.items())


def test_random_network_shape():
    net = random_network(7, 3, 0.4, seed=2)
    assert len(net.vertices) == 7
    assert len(net.boundary) == 3
    for _, (u, v) in net.edges.items():
        assert not (net.is_boundary(u) and net.is_boundary(v))


def test_hexwheel_boundary_is_pendant():
    net = hexwheel(4)
    for w in net.boundary:
        assert len(net.adj[w]) == 1
    assert len(net.edges) == 8


def test_circular_families_carry_embeddings():
    for net in [wheatstone(), sunflower(3), double_sunflower(6)]:
        assert isinstance(net, CircularNetwork)
        assert net.boundary_order
    for net in [star(3), path(3), triangle(), double_path(), hexwheel(3)]:
        assert not isinstance(net, CircularNetwork)


def test_double_path_is_four_cycle():
    net = double_path()
    assert len(net.edges) == 4
    assert all(len(net.adj[v]) == 2 for v in net.vertices)


def test_every_family_has_usage_string():
    for name, (_, usage) in FAMILIES.items():
        assert usage.startswith(name)


def test_poset_chain():
    net = poset("chain-3")
    assert len(net.boundary) == 2
    with pytest.raises(BadParameter):
        poset("cube")
