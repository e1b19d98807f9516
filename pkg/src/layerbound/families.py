"""The grid family G_k, the wall family W_k and the k = 0 path.

G_k has rows ``1..k+2`` and columns ``1..3k+6``.  Every column is a path
through all rows; only rows ``1..k`` carry horizontal (row) edges.

W_k stretches each of the first k rows into a path of ``ell = 4k(3k+6)``
vertices.  Column block ``y`` occupies columns ``4k(y-1)+1 .. 4ky``; inside it
row ``x`` is joined to row ``x+1`` by a single diagonal edge, and a two-edge
pendant path (a *hair*) hangs off row ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Coord, Edge, Graph


class EdgeKind(str, Enum):
    ROW = "row"
    COLUMN = "column"
    NON_ROW = "non-row"


def n_columns(k: int) -> int:
    return 3 * k + 6


def wall_length(k: int) -> int:
    return 4 * k * n_columns(k)


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")


@dataclass(frozen=True)
class Hair:
    attach: Coord
    mid: Coord
    tip: Coord


class _Family:
    k: int
    graph: Graph

    @property
    def n_rows(self) -> int:
        return self.k + 2

    def row(self, x: int) -> list[int]:
        """Vertices of row ``x`` ordered by column."""
        if not 1 <= x <= self.n_rows:
            raise IndexError(f"row {x} out of range 1..{self.n_rows}")
        out = [v for v, c in enumerate(self.graph.labels) if c.row == x]
        return sorted(out, key=lambda v: self.graph.labels[v].col)

    def column(self, y: int) -> list[int]:
        """Vertices of column ``y`` ordered by row."""
        if not 1 <= y <= self.n_cols:
            raise IndexError(f"column {y} out of range 1..{self.n_cols}")
        out = [v for v, c in enumerate(self.graph.labels) if c.col == y]
        return sorted(out, key=lambda v: self.graph.labels[v].row)

    def edges_of_kind(self, kind: EdgeKind) -> list[Edge]:
        return [e for e in self.graph.edges if self.edge_kind(e) == kind]


@dataclass(frozen=True)
class GridFamilyInstance(_Family):
    k: int
    graph: Graph

    @property
    def n_cols(self) -> int:
        return n_columns(self.k)

    def edge_kind(self, e: Edge) -> EdgeKind:
        a, b = (self.graph.labels[v] for v in e)
        if a.row == b.row:
            return EdgeKind.ROW
        if a.col == b.col:
            return EdgeKind.COLUMN
        raise ValueError(f"{e} is not an edge of G_{self.k}")


@dataclass(frozen=True)
class WallFamilyInstance(_Family):
    k: int
    ell: int
    graph: Graph
    hairs: tuple[Hair, ...]

    @property
    def n_cols(self) -> int:
        return self.ell

    def edge_kind(self, e: Edge) -> EdgeKind:
        a, b = (self.graph.labels[v] for v in e)
        return EdgeKind.ROW if a.row == b.row else EdgeKind.NON_ROW


def _numbered(coords, edges) -> Graph:
    # Row-major ids: sort by (row, col).
    coords = sorted(coords)
    index = {c: i for i, c in enumerate(coords)}
    return Graph(len(coords), [(index[a], index[b]) for a, b in edges], coords)


def gen_grid(k: int) -> GridFamilyInstance:
    _check_k(k)
    cols = n_columns(k)
    coords = [Coord(x, y) for x in range(1, k + 3) for y in range(1, cols + 1)]
    edges = [((x, y), (x + 1, y)) for x in range(1, k + 2) for y in range(1, cols + 1)]
    edges += [((x, y), (x, y + 1)) for x in range(1, k + 1) for y in range(1, cols)]
    return GridFamilyInstance(k, _numbered(coords, edges))


def gen_wall(k: int) -> WallFamilyInstance:
    _check_k(k)
    ell = wall_length(k)
    coords = [Coord(x, y) for x in range(1, k + 1) for y in range(1, ell + 1)]
    edges = [((x, y), (x, y + 1)) for x in range(1, k + 1) for y in range(1, ell)]
    hairs = []
    for y in range(1, n_columns(k) + 1):
        base = 4 * k * (y - 1)
        for x in range(1, k):
            edges.append(((x, base + 4 * x - 3), (x + 1, base + 4 * x - 2)))
        hair = Hair(Coord(k, 4 * k * y - 3), Coord(k + 1, 4 * k * y - 2), Coord(k + 2, 4 * k * y - 1))
        coords += [hair.mid, hair.tip]
        edges += [(hair.attach, hair.mid), (hair.mid, hair.tip)]
        hairs.append(hair)
    return WallFamilyInstance(k, ell, _numbered(coords, edges), tuple(hairs))


def gen_k0() -> Graph:
    """The two-vertex path, the k = 0 witness."""
    return Graph(2, [(0, 1)], [Coord(1, 1), Coord(1, 2)])


def branch_sets(w: WallFamilyInstance) -> dict[Coord, frozenset[int]]:
    """Branch sets of the G_k minor in W_k, keyed by G_k coordinate.

    Row ``x <= k`` at G_k column ``y`` maps to the W_k block
    ``{(x, y') : 4k(y-1) < y' <= 4ky}``; rows ``k+1`` and ``k+2`` map to the
    two hair vertices of block ``y``.
    """
    k, g = w.k, w.graph
    sets: dict[Coord, frozenset[int]] = {}
    for y in range(1, n_columns(k) + 1):
        for x in range(1, k + 1):
            block = range(4 * k * (y - 1) + 1, 4 * k * y + 1)
            sets[Coord(x, y)] = frozenset(g.vertex((x, c)) for c in block)
        hair = w.hairs[y - 1]
        sets[Coord(k + 1, y)] = frozenset({g.vertex(hair.mid)})
        sets[Coord(k + 2, y)] = frozenset({g.vertex(hair.tip)})
    return sets


def rows_and_columns(inst: GridFamilyInstance | WallFamilyInstance):
    """Row/column accessors and the edge classifier of a family instance."""
    return inst.row, inst.column, inst.edge_kind


def wall_sides(w: WallFamilyInstance) -> tuple[frozenset[int], frozenset[int]]:
    """(odd-column vertices, even-column vertices)."""
    labels = w.graph.labels
    odd = frozenset(v for v in range(w.graph.n) if labels[v].col % 2 == 1)
    return odd, frozenset(range(w.graph.n)) - odd

