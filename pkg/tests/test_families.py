import pytest

from layerbound.families import EdgeKind, branch_sets, gen_grid, gen_k0, gen_wall, n_columns, wall_length
from layerbound.graph import Coord, bipartition

KS = range(1, 7)


def reference_grid_edges(k):
    cols = 3 * k + 6
    column = {((x, y), (x + 1, y)) for x in range(1, k + 2) for y in range(1, cols + 1)}
    row = {((x, y), (x, y + 1)) for x in range(1, k + 1) for y in range(1, cols)}
    return column, row


def coord_edges(g):
    return {tuple(sorted((tuple(g.labels[u]), tuple(g.labels[v])))) for u, v in g.edges}


def test_grid_k1_counts():
    inst = gen_grid(1)
    column, row = reference_grid_edges(1)
    assert (inst.graph.n, inst.graph.m) == (27, 26)
    assert (len(column), len(row)) == (18, 8)
    assert coord_edges(inst.graph) == column | row


def test_grid_k1_is_a_tree():
    g = gen_grid(1).graph
    assert g.m == g.n - 1 and len(g.components()) == 1


def test_grid_k2_counts():
    g = gen_grid(2).graph
    assert (g.n, g.m) == (48, 58)


@pytest.mark.parametrize("k", KS)
def test_grid_formulas(k):
    inst = gen_grid(k)
    g = inst.graph
    assert g.n == (k + 2) * (3 * k + 6)
    assert g.m == (k + 1) * (3 * k + 6) + k * (3 * k + 5)
    column, row = reference_grid_edges(k)
    assert coord_edges(g) == column | row
    assert len(inst.edges_of_kind(EdgeKind.COLUMN)) == len(column)
    assert len(inst.edges_of_kind(EdgeKind.ROW)) == len(row)
    assert max(g.degree(v) for v in range(g.n)) <= 4


def test_grid_numbering_is_row_major():
    g = gen_grid(2).graph
    assert list(g.labels) == sorted(g.labels)
    assert g.labels[0] == Coord(1, 1) and g.labels[1] == Coord(1, 2)


def test_wall_k1():
    w = gen_wall(1)
    assert (w.graph.n, w.graph.m) == (54, 53)
    assert w.ell == 36 and len(w.hairs) == 9
    assert len(w.edges_of_kind(EdgeKind.NON_ROW)) == 18


def test_wall_k2_counts():
    g = gen_wall(2).graph
    assert (g.n, g.m) == (216, 226)


@pytest.mark.parametrize("k", KS)
def test_wall_formulas(k):
    w = gen_wall(k)
    ell = 4 * k * (3 * k + 6)
    assert w.ell == ell == wall_length(k)
    assert w.graph.n == k * ell + 2 * (3 * k + 6) == (3 * k + 6) * (4 * k * k + 2)
    assert w.graph.m == k * (ell - 1) + (3 * k + 6) * (k + 1)
    assert max(w.graph.degree(v) for v in range(w.graph.n)) <= 4


@pytest.mark.parametrize("k", KS)
def test_wall_hairs_and_steps(k):
    w = gen_wall(k)
    g = w.graph
    for y, hair in enumerate(w.hairs, 1):
        assert (hair.attach, hair.mid, hair.tip) == (
            (k, 4 * k * y - 3),
            (k + 1, 4 * k * y - 2),
            (k + 2, 4 * k * y - 1),
        )
        assert g.has_edge(g.vertex(hair.attach), g.vertex(hair.mid))
        assert g.has_edge(g.vertex(hair.mid), g.vertex(hair.tip))
        for x in range(1, k):
            a = (x, 4 * k * (y - 1) + 4 * x - 3)
            b = (x + 1, 4 * k * (y - 1) + 4 * x - 2)
            assert 1 <= a[1] and b[1] <= w.ell
            assert g.has_edge(g.vertex(a), g.vertex(b))
    assert 4 * k * 1 - 3 >= 1


@pytest.mark.parametrize("k", KS)
def test_wall_bipartition_is_column_parity(k):
    g = gen_wall(k).graph
    a, b = bipartition(g)
    odd = {v for v in range(g.n) if g.labels[v].col % 2 == 1}
    assert {a, b} == {frozenset(odd), frozenset(set(range(g.n)) - odd)}


def test_k0():
    g = gen_k0()
    assert (g.n, g.edges) == (2, ((0, 1),))


@pytest.mark.parametrize("bad", [0, -1])
def test_k_must_be_positive(bad):
    with pytest.raises(ValueError):
        gen_grid(bad)
    with pytest.raises(ValueError):
        gen_wall(bad)


def test_branch_sets_k1():
    w = gen_wall(1)
    g = w.graph
    sets = branch_sets(w)
    assert sets[(1, 1)] == {g.vertex((1, c)) for c in (1, 2, 3, 4)}
    assert sets[(2, 1)] == {g.vertex((2, 2))}
    assert sets[(3, 1)] == {g.vertex((3, 3))}


@pytest.mark.parametrize("k", range(1, 5))
def test_branch_sets_partition_the_wall(k):
    w = gen_wall(k)
    sets = branch_sets(w)
    assert len(sets) == (k + 2) * n_columns(k)
    union = set()
    for s in sets.values():
        assert not union & s
        union |= s
    assert union == set(range(w.graph.n))


def test_rows_and_columns():
    g1 = gen_grid(1)
    assert len(g1.row(1)) == 9 and len(g1.column(1)) == 3
    with pytest.raises(IndexError):
        g1.row(4)
    with pytest.raises(IndexError):
        g1.column(10)
    w = gen_wall(1)
    assert len(w.row(1)) == 36 and len(w.row(2)) == 9
