"""The node searching game.

Edges start contaminated.  A move places or removes one guard.  An edge is
cleaned as soon as both endpoints are guarded; after a guard is removed,
contamination spreads through unguarded vertices until no clean edge shares
an unguarded endpoint with a contaminated one.  Every :class:`GameState`
produced here is closed under that rule.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

from .families import GridFamilyInstance, WallFamilyInstance
from .graph import Edge, Graph, norm_edge
from .pathwidth import DEFAULT_BUDGET, UNKNOWN, Budget, PathDecomposition, exact_pathwidth


class Op(str, Enum):
    PLACE = "place"
    REMOVE = "remove"


@dataclass(frozen=True)
class Move:
    op: Op
    v: int

    def __str__(self) -> str:
        return f"{self.op.value} {self.v}"


def place(v: int) -> Move:
    return Move(Op.PLACE, v)


def remove(v: int) -> Move:
    return Move(Op.REMOVE, v)


@dataclass(frozen=True)
class GameState:
    guards: frozenset[int] = frozenset()
    clean: frozenset[Edge] = frozenset()


@dataclass(frozen=True)
class SearchStrategy:
    moves: tuple[Move, ...]

    def __init__(self, moves: Iterable[Move]):
        object.__setattr__(self, "moves", tuple(moves))

    def __len__(self) -> int:
        return len(self.moves)


class SearchError(ValueError):
    pass


class IllegalMove(SearchError):
    def __init__(self, step: int, move: Move, reason: str):
        super().__init__(f"step {step}: illegal move '{move}' ({reason})")
        self.step = step
        self.move = move


class NotAllClean(SearchError):
    def __init__(self, edge: Edge):
        super().__init__(f"strategy ends with contaminated edge {edge}")
        self.edge = edge


class NotMonotone(SearchError):
    pass


class _Game:
    """Mutable simulator; :func:`apply_move` wraps it for immutable states."""

    def __init__(self, g: Graph, state: GameState | None = None):
        self.g = g
        self.guards: set[int] = set(state.guards) if state else set()
        self.clean: set[Edge] = set(state.clean) if state else set()

    def apply(self, move: Move, step: int = 0) -> list[Edge]:
        """Apply ``move``; returns the edges it recontaminated."""
        g, v = self.g, move.v
        if not 0 <= v < g.n:
            raise IllegalMove(step, move, "no such vertex")
        if move.op is Op.PLACE:
            if v in self.guards:
                raise IllegalMove(step, move, "vertex already guarded")
            self.guards.add(v)
            for u in g.neighbors(v):
                if u in self.guards:
                    self.clean.add(norm_edge(u, v))
            return []
        if v not in self.guards:
            raise IllegalMove(step, move, "vertex not guarded")
        self.guards.discard(v)
        lost: list[Edge] = []
        queue = deque([v])
        while queue:
            u = queue.popleft()
            incident = [norm_edge(u, w) for w in g.neighbors(u)]
            if all(e in self.clean for e in incident):
                continue
            for e in incident:
                if e in self.clean:
                    self.clean.discard(e)
                    lost.append(e)
                    w = e[0] if e[1] == u else e[1]
                    if w not in self.guards:
                        queue.append(w)
        return lost

    def state(self) -> GameState:
        return GameState(frozenset(self.guards), frozenset(self.clean))


def apply_move(g: Graph, s: GameState, m: Move) -> GameState:
    game = _Game(g, s)
    game.apply(m)
    return game.state()


@dataclass(frozen=True)
class StrategyReport:
    cost: int
    monotone: bool
    first_recontamination: int | None = None


def verify_strategy(
    g: Graph,
    s: SearchStrategy,
    observer: Callable[[int, _Game], None] | None = None,
) -> StrategyReport:
    """Simulate ``s`` from the empty, all-contaminated start.

    ``observer(step, game)`` is called after every move with the live
    simulator (read ``game.guards`` and ``game.clean``; do not mutate).
    Raises :class:`IllegalMove` or :class:`NotAllClean`.
    """
    game = _Game(g)
    cost = 0
    first_bad = None
    for step, move in enumerate(s.moves):
        lost = game.apply(move, step)
        if lost and first_bad is None:
            first_bad = step
        cost = max(cost, len(game.guards))
        if observer is not None:
            observer(step, game)
    for e in g.edges:
        if e not in game.clean:
            raise NotAllClean(e)
    return StrategyReport(cost, first_bad is None, first_bad)


def grid_sweep_strategy(inst: GridFamilyInstance) -> SearchStrategy:
    """Column sweep of G_k with ``k + 2`` guards.

    Column 1 is guarded completely.  Then, column by column, the guards on
    rows ``k+1, k+2`` are lifted, rows ``1..k`` step right one at a time
    (guard the new vertex, then lift the old one), and the two lifted guards
    land on rows ``k+1, k+2`` of the new column.
    """
    k, g = inst.k, inst.graph

    def at(x, y):
        return g.vertex((x, y))

    moves = [place(at(x, 1)) for x in range(1, k + 3)]
    for c in range(1, inst.n_cols):
        moves += [remove(at(k + 1, c)), remove(at(k + 2, c))]
        for x in range(1, k + 1):
            moves += [place(at(x, c + 1)), remove(at(x, c))]
        moves += [place(at(k + 1, c + 1)), place(at(k + 2, c + 1))]
    return SearchStrategy(moves)


def wall_sweep_strategy(inst: WallFamilyInstance) -> SearchStrategy:
    """Column sweep of W_k with ``k + 2`` guards.

    One guard walks along each of the ``k`` long rows.  Rows step right from
    row ``k`` up to row 1, so the lower end of every diagonal edge is guarded
    while its upper end is still held.  Each hair is swept with two extra
    guards as soon as its attachment vertex is reached.
    """
    k, g = inst.k, inst.graph
    hair_at = {h.attach.col: h for h in inst.hairs}

    def at(x, y):
        return g.vertex((x, y))

    moves = [place(at(x, 1)) for x in range(1, k + 1)]
    for c in range(1, inst.ell + 1):
        if c > 1:
            for x in range(k, 0, -1):
                moves += [place(at(x, c)), remove(at(x, c - 1))]
        hair = hair_at.get(c)
        if hair is not None:
            mid, tip = g.vertex(hair.mid), g.vertex(hair.tip)
            moves += [place(mid), place(tip), remove(tip), remove(mid)]
    return SearchStrategy(moves)


def strategy_to_decomposition(g: Graph, s: SearchStrategy) -> PathDecomposition:
    """One bag per Place move: the guards in play at that moment.

    A guard only counts while it sits in the stretch of time in which some
    edge at its vertex gets cleaned; in a monotone strategy each vertex has
    at most one such stretch, which keeps every vertex trace contiguous.
    Vertices never needed (isolated ones) get singleton bags at the end.
    """
    report = verify_strategy(g, s)
    if not report.monotone:
        raise NotMonotone(f"recontamination at step {report.first_recontamination}")

    # Per vertex: the [placed, removed) move interval during which one of its edges got clean.
    useful: dict[int, tuple[int, int]] = {}
    placed_at: dict[int, int] = {}
    cleaned_in_interval: set[int] = set()
    game = _Game(g)
    for step, move in enumerate(s.moves):
        if move.op is Op.PLACE:
            partners = [
                u for u in g.neighbors(move.v) if u in game.guards and norm_edge(u, move.v) not in game.clean
            ]
        game.apply(move, step)
        if move.op is Op.PLACE:
            placed_at[move.v] = step
            if partners:
                cleaned_in_interval.add(move.v)
                cleaned_in_interval.update(partners)
        else:
            start = placed_at.pop(move.v)
            if move.v in cleaned_in_interval:
                useful[move.v] = (start, step)
                cleaned_in_interval.discard(move.v)
    end = len(s.moves)
    for v, start in placed_at.items():
        if v in cleaned_in_interval:
            useful[v] = (start, end)

    starts: dict[int, list[int]] = {}
    stops: dict[int, list[int]] = {}
    for v, (a, b) in useful.items():
        starts.setdefault(a, []).append(v)
        stops.setdefault(b, []).append(v)
    bags = []
    live: set[int] = set()
    for step, move in enumerate(s.moves):
        live.difference_update(stops.get(step, ()))
        live.update(starts.get(step, ()))
        if move.op is Op.PLACE and live:
            bags.append(set(live))
    covered = set().union(*bags) if bags else set()
    bags.extend({v} for v in range(g.n) if v not in covered)
    return PathDecomposition(bags)


def exact_search_number(g: Graph, budget: Budget = DEFAULT_BUDGET):
    """Node search number via ``ns = pw + 1``.

    Graphs without edges need no guard at all, so their search number is 0.
    Optimal strategies can be taken monotone, so the correspondence covers
    the monotone game too.
    """
    if g.m == 0:
        return 0
    pw = exact_pathwidth(g, budget)
    return UNKNOWN if pw is UNKNOWN else pw + 1


def _line_edges(inst: GridFamilyInstance, verts: set[int]) -> list[Edge]:
    return [e for e in inst.graph.edges if e[0] in verts and e[1] in verts]


def observation_checker(inst: GridFamilyInstance) -> Callable[[int, _Game], None]:
    """Observer for :func:`verify_strategy` asserting that every row in ``1..k``
    and every column with mixed edge states carries a guard."""
    k = inst.k
    lines = [set(inst.row(x)) for x in range(1, k + 1)] + [set(inst.column(y)) for y in range(1, inst.n_cols + 1)]
    names = [("row", x) for x in range(1, k + 1)] + [("column", y) for y in range(1, inst.n_cols + 1)]
    line_edges = [_line_edges(inst, verts) for verts in lines]

    def check(step: int, game: _Game) -> None:
        for name, verts, edges in zip(names, lines, line_edges):
            states = {e in game.clean for e in edges}
            if states == {True, False} and not verts & game.guards:
                raise AssertionError(f"step {step}: {name[0]} {name[1]} is partly clean but unguarded")

    return check


def column_cleaning_order(inst: GridFamilyInstance, s: SearchStrategy) -> list[int]:
    """Columns in the order in which they first become clean (``c_1, c_2, ...``)."""
    cols = {y: _line_edges(inst, set(inst.column(y))) for y in range(1, inst.n_cols + 1)}
    order: list[int] = []

    def watch(step: int, game: _Game) -> None:
        for y, edges in cols.items():
            if y not in order and all(e in game.clean for e in edges):
                order.append(y)

    verify_strategy(inst.graph, s, watch)
    return order


def strategy_from_json(data: dict) -> SearchStrategy:
    return SearchStrategy(Move(Op(m["op"]), int(m["v"])) for m in data["moves"])


def strategy_to_json(s: SearchStrategy) -> dict:
    return {"moves": [{"op": m.op.value, "v": m.v} for m in s.moves]}

