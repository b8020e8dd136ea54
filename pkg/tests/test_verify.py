import pytest

from dirmat.errors import BadParameter, GroundTooLarge
from dirmat.families import path, star, triangle, wheatstone
from dirmat.verify import (
    circular_corpus,
    connectivity_suite,
    corpus,
    duality_suite,
    oracle_suite,
    polynomial_suite,
    random_corpus,
    run_suite,
    triangulate,
)


def test_triangulate_counts_every_subset():
    for net in [path(3), star(3), triangle(), wheatstone()]:
        rep = triangulate(net)
        assert rep["all_ok"], rep["mismatches"]
        assert rep["subsets"] == 1 << (len(net.edges) + 1)
        assert rep["mismatches"] == []


def test_triangulate_refuses_large_ground():
    with pytest.raises(GroundTooLarge):
        triangulate(path(20))


def test_random_corpus_shape_and_determinism():
    nets = random_corpus()
    again = random_corpus()
    assert len(nets) == 25
    for a, b in zip(nets, again):
        assert a.name == b.name
        assert sorted(a.edges.items()) == sorted(b.edges.items())
        assert len(a.edges) <= 8


def test_corpus_contains_the_named_families():
    names = [net.name for net in corpus()]
    for want in [
        "star(3)", "star(5)", "path(4)", "triangle",
        "hexwheel(6)", "sunflower(5)", "double_path",
    ]:
        assert want in names
    assert len(names) == len(set(names))
    assert sum(1 for n in names if n.startswith("random(")) == 25


def test_circular_corpus_members():
    names = [net.name for net in circular_corpus()]
    assert names[0] == "wheatstone"
    assert "double_sunflower(6)" in names


def test_run_suite_rejects_unknown_name():
    with pytest.raises(BadParameter):
        run_suite("frobnicate")


def test_suites_accept_explicit_networks():
    rep = oracle_suite([path(3), star(3)])
    assert rep["all_ok"]
    assert [row["network"] for row in rep["rows"]] == ["path(3)", "star(3)"]

    rep = polynomial_suite([triangle()], seed=3)
    assert rep["all_ok"]
    assert len(rep["rows"]) == 1

    rep = connectivity_suite([star(3)])
    assert rep["all_ok"]


def test_restricted_duality_skips_pinned_figures():
    rep = duality_suite([wheatstone()])
    assert rep["all_ok"]
    assert "sunflower5_k" not in rep
    assert rep["rows"][0]["dual_iso"] is True


def test_run_suite_all_filters_non_circular():
    rep = run_suite("all", nets=[path(3)])
    assert rep["suite"] == "all"
    names = [r["suite"] for r in rep["reports"]]
    assert "duality" not in names
    assert "oracles" in names
    assert rep["all_ok"]
