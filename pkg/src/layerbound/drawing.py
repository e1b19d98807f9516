"""Two-layer drawings: crossings, k-planarity, the canonical wall drawing."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Iterable, Sequence

import numpy as np

from .families import WallFamilyInstance, wall_sides
from .graph import Edge, Graph, bipartition, norm_edge


class DrawingError(ValueError):
    pass


class TooLarge(DrawingError):
    pass


@dataclass(frozen=True)
class TwoLayerDrawing:
    """Vertices of ``order_x`` sit left to right on one line, ``order_y`` on the other.

    Positions are 1-based, so ``pos_x[order_x[0]] == 1``.
    """

    order_x: tuple[int, ...]
    order_y: tuple[int, ...]

    def __init__(self, order_x: Iterable[int], order_y: Iterable[int]):
        order_x, order_y = tuple(order_x), tuple(order_y)
        if len(set(order_x)) != len(order_x) or len(set(order_y)) != len(order_y):
            raise DrawingError("a layer lists a vertex twice")
        if set(order_x) & set(order_y):
            raise DrawingError("a vertex appears on both layers")
        object.__setattr__(self, "order_x", order_x)
        object.__setattr__(self, "order_y", order_y)

    @property
    def part_x(self) -> frozenset[int]:
        return frozenset(self.order_x)

    @property
    def part_y(self) -> frozenset[int]:
        return frozenset(self.order_y)

    @cached_property
    def pos_x(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order_x, 1)}

    @cached_property
    def pos_y(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order_y, 1)}

    def position(self, v: int) -> tuple[int, int]:
        """``(layer, position)`` with layer 0 for X and 1 for Y."""
        if v in self.pos_x:
            return 0, self.pos_x[v]
        return 1, self.pos_y[v]

    def oriented(self, e: Edge) -> tuple[int, int]:
        """Edge endpoints as ``(x, y)`` with ``x`` on the X layer."""
        u, v = e
        px = self.pos_x
        if u in px and v not in px:
            return u, v
        if v in px and u not in px:
            return v, u
        raise DrawingError(f"edge {e} does not join the two layers")

    def check(self, g: Graph) -> None:
        if sorted(self.order_x + self.order_y) != list(range(g.n)):
            raise DrawingError("layers do not partition the vertex set")
        for e in g.edges:
            self.oriented(e)


def crosses(e1: Edge, e2: Edge, d: TwoLayerDrawing, g: Graph | None = None) -> bool:
    """Whether two edges cross: their X ends and Y ends are in opposite orders."""
    if g is not None:
        for e in (e1, e2):
            if not g.has_edge(*e):
                raise DrawingError(f"{e} is not an edge of the graph")
    x1, y1 = d.oriented(e1)
    x2, y2 = d.oriented(e2)
    px, py = d.pos_x, d.pos_y
    return (px[x1] < px[x2] and py[y1] > py[y2]) or (px[x1] > px[x2] and py[y1] < py[y2])


@dataclass(frozen=True)
class CrossingProfile:
    per_edge: dict[Edge, int]
    crossing_pairs: frozenset[tuple[Edge, Edge]]

    @property
    def max_count(self) -> int:
        return max(self.per_edge.values(), default=0)


def _edge_positions(g: Graph, d: TwoLayerDrawing, edges: Sequence[Edge]) -> tuple[np.ndarray, np.ndarray]:
    px, py = d.pos_x, d.pos_y
    ends = [d.oriented(e) for e in edges]
    return (
        np.array([px[x] for x, _ in ends], dtype=np.int64),
        np.array([py[y] for _, y in ends], dtype=np.int64),
    )


def crossing_profile(g: Graph, d: TwoLayerDrawing, edges: Sequence[Edge] | None = None) -> CrossingProfile:
    """Evaluate the crossing predicate on every edge pair.

    ``edges`` restricts the drawing to a subset of the edges (a subdrawing).
    """
    d.check(g)
    edges = list(g.edges if edges is None else (norm_edge(*e) for e in edges))
    m = len(edges)
    if m == 0:
        return CrossingProfile({}, frozenset())
    ex, ey = _edge_positions(g, d, edges)
    counts = np.zeros(m, dtype=np.int64)
    pairs: list[tuple[Edge, Edge]] = []
    block = 1024
    for lo in range(0, m, block):
        hi = min(m, lo + block)
        # Opposite orders on the two layers; shared endpoints give a zero product.
        cross = (ex[lo:hi, None] - ex[None, :]) * (ey[lo:hi, None] - ey[None, :]) < 0
        counts[lo:hi] = cross.sum(axis=1)
        rows, cols = np.nonzero(cross)
        keep = cols > rows + lo
        pairs.extend((edges[i + lo], edges[j]) for i, j in zip(rows[keep].tolist(), cols[keep].tolist()))
    per_edge = dict(zip(edges, counts.tolist()))
    return CrossingProfile(per_edge, frozenset(pairs))


def is_k_planar(g: Graph, d: TwoLayerDrawing, k: int) -> bool:
    if k < 0:
        raise ValueError("k must be non-negative")
    return crossing_profile(g, d).max_count <= k


def canonical_wall_drawing(w: WallFamilyInstance) -> TwoLayerDrawing:
    """Odd columns on one layer, even on the other, each sorted by ``(col, row)``."""
    labels = w.graph.labels
    odd, even = wall_sides(w)

    def key(v):
        return labels[v].col, labels[v].row

    return TwoLayerDrawing(sorted(odd, key=key), sorted(even, key=key))


def column_parity_drawing(g: Graph) -> TwoLayerDrawing | None:
    """Odd label columns versus even ones, sorted by ``(col, row)``.

    ``None`` if ``g`` is unlabelled or some edge joins two columns of equal parity.
    """
    if g.labels is None:
        return None
    labels = g.labels
    if any(labels[u].col % 2 == labels[v].col % 2 for u, v in g.edges):
        return None
    order = sorted(range(g.n), key=lambda v: (labels[v].col, labels[v].row))
    return TwoLayerDrawing([v for v in order if labels[v].col % 2], [v for v in order if not labels[v].col % 2])


def bipartite_drawing(g: Graph) -> TwoLayerDrawing:
    """Drawing with the canonical bipartition, each layer in id order."""
    x, y = bipartition(g)
    return TwoLayerDrawing(sorted(x), sorted(y))


MAX_LAYER = 8


def min_local_crossings_bruteforce(g: Graph) -> tuple[int, TwoLayerDrawing]:
    """Exact 2-layer local crossing number by exhaustive search.

    Every orientation of every component and every pair of layer orders is
    tried, except that reversing both layers is skipped (it preserves all
    crossings).  The witness is the lexicographically smallest optimal
    ``(order_x, order_y)``.  Each layer is limited to ``MAX_LAYER`` vertices.
    """
    x0, _ = bipartition(g)
    comps = g.components()
    best: list = [None, None]
    for flips in product((False, True), repeat=max(len(comps) - 1, 0)):
        flip = dict(zip(range(1, len(comps)), flips))
        xs = set()
        for i, comp in enumerate(comps):
            side = {v for v in comp if v in x0}
            xs |= (set(comp) - side) if flip.get(i) else side
        ys = set(range(g.n)) - xs
        if len(xs) > MAX_LAYER or len(ys) > MAX_LAYER:
            raise TooLarge(f"layers of size {len(xs)} and {len(ys)} exceed {MAX_LAYER}")
        _search_orders(g, sorted(xs), sorted(ys), best)
    value, orders = best
    if value is None:
        return 0, TwoLayerDrawing((), ())
    return value, TwoLayerDrawing(*orders)


def _search_orders(g: Graph, xs: list[int], ys: list[int], best: list) -> None:
    edges_at = {y: [x for x in g.neighbors(y)] for y in ys}
    fix_x = len(xs) >= 2
    fix_y = not fix_x and len(ys) >= 2
    for ox in permutations(xs):
        if fix_x and ox[0] > ox[-1]:
            continue
        px = {v: i for i, v in enumerate(ox)}
        # Edges are identified by (x, y); counts are updated as Y is filled left to right.
        count: dict[tuple[int, int], int] = {}
        placed: list[tuple[int, int]] = []
        oy: list[int] = []

        def dfs(current_max: int) -> None:
            if len(oy) == len(ys):
                if fix_y and oy[0] > oy[-1]:
                    return
                key = (tuple(ox), tuple(oy))
                if best[0] is None or current_max < best[0] or (current_max == best[0] and key < best[1]):
                    best[0], best[1] = current_max, key
                return
            for y in ys:
                if y in oy:
                    continue
                touched = []
                new_max = current_max
                for x in edges_at[y]:
                    e = (x, y)
                    c = 0
                    for f in placed:
                        if px[f[0]] > px[x]:
                            count[f] += 1
                            touched.append(f)
                            new_max = max(new_max, count[f])
                            c += 1
                    count[e] = c
                    new_max = max(new_max, c)
                if best[0] is None or new_max <= best[0]:
                    oy.append(y)
                    new_edges = [(x, y) for x in edges_at[y]]
                    placed.extend(new_edges)
                    dfs(new_max)
                    del placed[len(placed) - len(new_edges):]
                    oy.pop()
                for f in touched:
                    count[f] -= 1
                for x in edges_at[y]:
                    del count[(x, y)]

        dfs(0)
