import json
import random

import pytest

from dirmat.errors import BadParameter, BoundaryEdge, BoundaryTooSmall
from dirmat.families import hexwheel, path, star, sunflower, triangle, wheatstone
from dirmat.network import (
    EH,
    Network,
    add_boundary_clique,
    crossings,
    identify_boundary,
)

from bruteforce import brute_crossings


def test_basic_construction():
    net = path(3)
    assert net.vertices == ("v1", "v2", "v3")
    assert set(net.boundary) == {"v1", "v3"}
    assert net.edges["e1"] == ("v1", "v2")


def test_boundary_must_be_proper_and_big_enough():
    with pytest.raises(BoundaryTooSmall):
        Network(["a", "b"], ["a", "b"], [("e", "a", "b")])
    with pytest.raises(BoundaryTooSmall):
        Network(["a", "b", "c"], ["a"], [("e", "a", "b"), ("f", "b", "c")])


def test_no_boundary_boundary_edges():
    with pytest.raises(BoundaryEdge):
        Network(
            ["a", "b", "c"],
            ["a", "b"],
            [("e", "a", "b"), ("f", "b", "c"), ("g", "a", "c")],
        )


def test_reserved_label_rejected():
    with pytest.raises(BadParameter):
        Network(["a", "b", "c"], ["a", "c"], [(EH, "a", "b"), ("f", "b", "c")])


def test_crossings_match_brute_force():
    for net in [path(3), path(5), triangle(), star(4), hexwheel(3), wheatstone()]:
        assert set(crossings(net)) == brute_crossings(net)


def test_crossings_path():
    assert list(crossings(path(3))) == [frozenset({"e1", "e2"})]


def test_identify_boundary_counts():
    net = star(4)
    og, hub = identify_boundary(net)
    # all four boundary nodes collapse onto the hub
    assert len(og.vertices) == len(net.vertices) - 4 + 1
    assert len(og.edges) == len(net.edges)
    assert hub in og.vertices


def test_add_boundary_clique_sizes():
    net = triangle()
    g = add_boundary_clique(net)
    assert len(g.edges) == len(net.edges) + 3
    assert all(lbl.startswith("+") for lbl in set(g.edges) - set(net.edges))


def test_json_round_trip_plain():
    net = triangle()
    blob = json.dumps(net.to_json())
    back = Network.from_json(json.loads(blob))
    assert back.vertices == net.vertices
    assert set(back.boundary) == set(net.boundary)
    assert back.edges == net.edges


def test_json_round_trip_circular():
    net = wheatstone()
    back = Network.from_json(json.loads(json.dumps(net.to_json())))
    assert hasattr(back, "faces")
    assert back.faces == net.faces
    assert back.boundary_order == net.boundary_order


def test_crossings_seeded_random_nets():
    from dirmat.families import random_network

    rng = random.Random(7)
    for _ in range(10):
        seed = rng.randint(0, 10_000)
        try:
            net = random_network(5, 2, 0.5, seed)
        except BadParameter:
            continue
        assert set(crossings(net)) == brute_crossings(net)
