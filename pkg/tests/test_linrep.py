import random
from itertools import combinations

import pytest

from dirmat.dirichlet import dirichlet_matroid
from dirmat.errors import ConsistencyError, FieldTooSmall
from dirmat.families import hexwheel, path, star, sunflower, triangle
from dirmat.fields import make_field
from dirmat.linrep import (
    block_injective_u,
    is_block_injective,
    max_block_boundary,
    min_field_size,
    representability,
    representation_matrix,
)
from dirmat.network import EH, Network


def alternating_six_cycle():
    """Three interior nodes and three boundary nodes around a hexagon.

    Every interior component touches exactly two boundary nodes, yet the
    crossing-pair graph is a triangle. The one known separator of the two
    field-size notions.
    """
    return Network(
        ["b1", "i1", "b2", "i2", "b3", "i3"],
        ["b1", "b2", "b3"],
        [
            ("c1", "b1", "i1"),
            ("c2", "i1", "b2"),
            ("c3", "b2", "i2"),
            ("c4", "i2", "b3"),
            ("c5", "b3", "i3"),
            ("c6", "i3", "b1"),
        ],
        name="hex-alt",
    )


def test_rational_representation_matches_matroid():
    for net in [path(3), star(4), triangle(), sunflower(3)]:
        M = dirichlet_matroid(net)
        u = block_injective_u(net)
        rep = representation_matrix(net, u)
        A = rep.column_matroid()
        for r in range(len(M.ground) + 1):
            for sub in combinations(M.ground, r):
                assert M.rank(sub) == A.rank(sub)


def test_two_different_u_give_same_matroid():
    net = triangle()
    u1 = block_injective_u(net)
    # shift and scale: still injective on every block
    u2 = {b: 3 * val + 7 for b, val in u1.items()}
    assert is_block_injective(net, u2)
    A1 = representation_matrix(net, u1).column_matroid()
    A2 = representation_matrix(net, u2).column_matroid()
    ground = list(A1.ground)
    for r in range(len(ground) + 1):
        for sub in combinations(ground, r):
            assert A1.rank(sub) == A2.rank(sub)


def test_star_representability_table():
    for s in (3, 4, 5):
        net = star(s)
        for q in (2, 3, 4, 5):
            rec = representability(net, q)
            assert rec["representable"] == (q >= s)
            if rec["representable"]:
                assert rec["verified"]


def test_field_too_small_for_single_u():
    with pytest.raises(FieldTooSmall):
        block_injective_u(star(4), make_field(3))


def test_min_field_size_threshold_values():
    assert max_block_boundary(star(5)) == 5
    assert max_block_boundary(path(4)) == 2
    assert max_block_boundary(triangle()) == 3
    assert min_field_size(path(3))["min_field_size"] == 2


def test_six_cycle_separates_the_two_notions():
    net = alternating_six_cycle()
    assert max_block_boundary(net) == 2
    info = min_field_size(net, strict=False)
    assert info["min_field_size"] == 2
    assert info["chromatic_number"] == 3
    assert not info["consistent"]
    with pytest.raises(ConsistencyError):
        min_field_size(net, strict=True)
    # no single assignment works over GF(2) ...
    with pytest.raises(FieldTooSmall):
        block_injective_u(net, make_field(2))
    # ... yet the per-block fallback represents it, and the witness is checked
    rec = representability(net, 2)
    assert rec["representable"]
    assert rec["verified"]


def test_binary_iff_blocks_small():
    for net in [path(3), path(5), star(3), triangle(), hexwheel(3)]:
        s = max_block_boundary(net)
        assert representability(net, 2)["representable"] == (s <= 2)


def test_gf4_is_a_field_not_a_ring():
    F = make_field(4)
    # in GF(4) adding one to itself gives zero, unlike the integers mod 4
    one = F.one
    assert F.add(one, one) == F.zero


def test_negative_witness_reports_uniform_minor():
    rec = representability(star(4), 3)
    assert not rec["representable"]
    assert rec["witness"]
