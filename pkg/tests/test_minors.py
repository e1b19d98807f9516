import pytest

from layerbound.families import branch_sets, gen_grid, gen_wall
from layerbound.graph import Graph, GraphError, contract
from layerbound.minors import (
    MinorCertificate,
    MinorViolation,
    contract_model,
    labeled_isomorphic,
    model_by_ids,
    verify_minor,
)
from layerbound.pathwidth import exact_pathwidth

from oracles import path_graph

K2 = Graph(2, [(0, 1)])


def test_missing_edge():
    res = verify_minor(K2, path_graph(3), {0: frozenset({0}), 1: frozenset({2})})
    assert res == MinorViolation("missing-edge", (0, 1))


def test_certificate_with_edge_bc():
    res = verify_minor(K2, path_graph(3), {0: frozenset({0, 1}), 1: frozenset({2})})
    assert isinstance(res, MinorCertificate) and res.realizers == {(0, 1): (1, 2)}


def test_structural_violations():
    host = path_graph(4)
    assert verify_minor(K2, host, {0: frozenset({0, 1}), 1: frozenset({1, 2})}).kind == "overlapping-sets"
    assert verify_minor(K2, host, {0: frozenset({0, 2}), 1: frozenset({3})}).kind == "disconnected-set"
    assert verify_minor(K2, host, {0: frozenset(), 1: frozenset({3})}).kind == "empty-set"
    assert verify_minor(K2, host, {0: frozenset({0})}).kind == "bad-keys"


def test_g1_in_w1():
    grid, wall = gen_grid(1), gen_wall(1)
    res = verify_minor(grid.graph, wall.graph, model_by_ids(grid.graph, branch_sets(wall)))
    assert isinstance(res, MinorCertificate) and len(res.realizers) == 26


def test_labeled_isomorphic():
    g1 = gen_grid(1).graph
    assert labeled_isomorphic(g1, g1)
    assert not labeled_isomorphic(g1, g1.without_edge(*g1.edges[0]))
    assert labeled_isomorphic(contract_model(gen_wall(1).graph, branch_sets(gen_wall(1))), g1)
    with pytest.raises(GraphError):
        labeled_isomorphic(g1, path_graph(3))


@pytest.mark.parametrize("k", range(1, 4))
def test_certificate_and_contraction_agree(k):
    grid, wall = gen_grid(k), gen_wall(k)
    sets = branch_sets(wall)
    cert = verify_minor(grid.graph, wall.graph, model_by_ids(grid.graph, sets))
    assert isinstance(cert, MinorCertificate)
    assert labeled_isomorphic(contract_model(wall.graph, sets), grid.graph)


@pytest.mark.parametrize("k", [1, 2])
def test_soundness_under_edge_deletion(k):
    grid, wall = gen_grid(k), gen_wall(k)
    model = model_by_ids(grid.graph, branch_sets(wall))
    cert = verify_minor(grid.graph, wall.graph, model)
    for pattern_edge, host_edge in cert.realizers.items():
        damaged = wall.graph.without_edge(*host_edge)
        res = verify_minor(grid.graph, damaged, model)
        if isinstance(res, MinorCertificate):
            for p, h in res.realizers.items():
                assert damaged.has_edge(*h)
                assert h[0] in model[p[0]] | model[p[1]] and h[1] in model[p[0]] | model[p[1]]
        else:
            # Either the realiser was unique or the deletion split a branch set.
            assert res.kind in ("missing-edge", "disconnected-set")


def test_monotonicity_bridge_k1():
    grid, wall = gen_grid(1), gen_wall(1)
    assert isinstance(verify_minor(grid.graph, wall.graph, model_by_ids(grid.graph, branch_sets(wall))), MinorCertificate)
    assert exact_pathwidth(grid.graph) <= exact_pathwidth(wall.graph)


def test_contract_model_labels():
    q = contract(path_graph(3), [{0, 1}, {2}], labels=[(1, 1), (1, 2)])
    assert labeled_isomorphic(q, Graph(2, [(0, 1)], [(1, 1), (1, 2)]))
