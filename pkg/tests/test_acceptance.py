"""Exit criteria.  A per-criterion PASS/FAIL summary is printed at the end of the run."""

import time

import pytest

from layerbound.drawing import canonical_wall_drawing, crossing_profile, min_local_crossings_bruteforce
from layerbound.families import EdgeKind, branch_sets, gen_grid, gen_wall
from layerbound.minors import MinorCertificate, contract_model, labeled_isomorphic, model_by_ids, verify_minor
from layerbound.nodesearch import (
    grid_sweep_strategy,
    observation_checker,
    strategy_to_decomposition,
    verify_strategy,
    wall_sweep_strategy,
)
from layerbound.pathwidth import UNKNOWN, decide_pathwidth_le, exact_pathwidth, verify_decomposition

from oracles import all_trees, brute_pathwidth, is_caterpillar, min_monotone_search_cost, random_connected_graphs

KS = range(1, 6)

C1 = pytest.mark.criterion("1", "canonical W_k drawing: max k, non-row edges exactly k, row subdrawing max k-1 (k=1..5, <10 s)")
C2 = pytest.mark.criterion("2", "G_k is a minor of W_k via branch sets, contraction label-isomorphic (k=1..5, <5 s)")
C3 = pytest.mark.criterion("3", "pw(G_1)=2 in <1 s, pw(G_2)=3 in <10 min; pw(G_3)<=3 false or UNKNOWN")
C4 = pytest.mark.criterion("4", "grid sweep: cost k+2, monotone, all clean, observation holds (k=1..5)")
C5 = pytest.mark.criterion("5", "wall sweep: monotone, cost k+2, decomposition width k+1 (k=1..5)")
C6 = pytest.mark.criterion("6", "monotone game-tree optimum = pw + 1 (200 random connected graphs + all trees, n<=8)")
C7 = pytest.mark.criterion("7", "2-layer local crossing number 0 iff caterpillar (all trees, n<=8)")
C8 = pytest.mark.criterion("8", "exact pathwidth = brute-force separation (sampled connected graphs, n<=7)")


@pytest.fixture(scope="module")
def wall_profiles():
    start = time.perf_counter()
    out = {}
    for k in KS:
        w = gen_wall(k)
        d = canonical_wall_drawing(w)
        full = crossing_profile(w.graph, d)
        rows = crossing_profile(w.graph, d, w.edges_of_kind(EdgeKind.ROW))
        out[k] = (w, full, rows)
    return out, time.perf_counter() - start


@C1
def test_c1_runtime(wall_profiles):
    _, elapsed = wall_profiles
    assert elapsed < 10.0


@C1
@pytest.mark.parametrize("k", KS)
def test_c1_max_count_is_k(wall_profiles, k):
    _, full, _ = wall_profiles[0][k]
    assert full.max_count == k


@C1
@pytest.mark.parametrize("k", KS)
def test_c1_every_non_row_edge_has_count_k(wall_profiles, k):
    w, full, _ = wall_profiles[0][k]
    labels = w.graph.labels
    off = {tuple(tuple(labels[v]) for v in e): full.per_edge[e] for e in w.edges_of_kind(EdgeKind.NON_ROW) if full.per_edge[e] != k}
    assert not off, f"non-row edges whose crossing count is not {k}: {off}"


@C1
@pytest.mark.parametrize("k", KS)
def test_c1_row_subdrawing_max_is_k_minus_1(wall_profiles, k):
    _, _, rows = wall_profiles[0][k]
    assert rows.max_count == k - 1


@C2
def test_c2_grid_is_minor_of_wall():
    start = time.perf_counter()
    for k in KS:
        grid, wall = gen_grid(k), gen_wall(k)
        sets = branch_sets(wall)
        cert = verify_minor(grid.graph, wall.graph, model_by_ids(grid.graph, sets))
        assert isinstance(cert, MinorCertificate), cert
        assert len(cert.realizers) == grid.graph.m
        assert labeled_isomorphic(contract_model(wall.graph, sets), grid.graph)
    assert time.perf_counter() - start < 5.0


@C3
def test_c3_pw_g1():
    start = time.perf_counter()
    assert exact_pathwidth(gen_grid(1).graph) == 2
    assert time.perf_counter() - start < 1.0


@C3
def test_c3_pw_g2():
    start = time.perf_counter()
    assert exact_pathwidth(gen_grid(2).graph) == 3
    assert time.perf_counter() - start < 600.0


@C3
def test_c3_stretch_g3():
    res = decide_pathwidth_le(gen_grid(3).graph, 3)
    assert res is UNKNOWN or res == (False, None)


@C4
@pytest.mark.parametrize("k", KS)
def test_c4_grid_sweep(k):
    inst = gen_grid(k)
    rep = verify_strategy(inst.graph, grid_sweep_strategy(inst), observation_checker(inst))
    assert rep.cost == k + 2 and rep.monotone


@C5
@pytest.mark.parametrize("k", KS)
def test_c5_wall_sweep(k):
    w = gen_wall(k)
    s = wall_sweep_strategy(w)
    rep = verify_strategy(w.graph, s)
    assert rep.monotone and rep.cost == k + 2
    assert verify_decomposition(w.graph, strategy_to_decomposition(w.graph, s)) == k + 1


@C6
def test_c6_random_connected_graphs():
    graphs = random_connected_graphs(200, 8, seed=2024)
    bad = [(g.n, g.edges) for g in graphs if min_monotone_search_cost(g) != exact_pathwidth(g) + 1]
    assert not bad


@C6
def test_c6_all_trees():
    bad = [(t.n, t.edges, min_monotone_search_cost(t), exact_pathwidth(t) + 1) for t in all_trees(8)]
    bad = [b for b in bad if b[2] != b[3]]
    assert not bad, f"(n, edges, game optimum, pw + 1) mismatches: {bad}"


@C7
def test_c7_caterpillars():
    for t in all_trees(8):
        value, _ = min_local_crossings_bruteforce(t)
        assert (value == 0) == is_caterpillar(t), t.edges


@C8
def test_c8_oracle_equivalence():
    for g in random_connected_graphs(120, 7, seed=99):
        assert exact_pathwidth(g) == brute_pathwidth(g), g.edges
