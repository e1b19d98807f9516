"""Path decompositions, vertex separation layouts and exact pathwidth.

A layout ``v_1, ..., v_n`` has separation
``max_i |{u : pos(u) <= i and u has a neighbour at a position > i}|``, which
equals the width of the decomposition built by :func:`layout_to_decomposition`.
The minimum separation over all layouts is the pathwidth.

The exact solver works with the mirror quantity: for a prefix set ``S`` the
cost is ``|N(S) - S|``.  Reversing a layout swaps the two quantities, so a
prefix order of cost ``<= w`` read backwards is a layout of separation ``<= w``.
Feasibility of completing ``S`` depends on ``S`` only, so failed prefix sets
are memoised.  Two reductions are applied before branching, both of which
never hurt an optimal completion:

* a vertex whose neighbours all lie in ``S | N(S)`` is appended at once;
* a vertex of ``N(S)`` with exactly one neighbour outside ``S | N(S)`` is
  appended at once.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph


class Unknown(enum.Enum):
    """Returned when a search budget runs out before an answer is known."""

    UNKNOWN = "UNKNOWN"

    def __repr__(self) -> str:
        return "UNKNOWN"

    def __bool__(self) -> bool:
        raise TypeError("UNKNOWN has no truth value")


UNKNOWN = Unknown.UNKNOWN


@dataclass(frozen=True)
class Budget:
    """Search limits.  ``nodes`` is the reproducible limit; ``ms`` is wall time."""

    nodes: int | None = 50_000_000
    ms: int | None = 600_000
    memo_cap: int = 20_000_000


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    def __init__(self, bags: Iterable[Iterable[int]]):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in bags))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


@dataclass(frozen=True)
class Violation:
    """First violated decomposition axiom.

    ``axiom`` is one of ``"vertex-uncovered"``, ``"edge-uncovered"``,
    ``"trace-disconnected"`` or ``"unknown-vertex"``.
    """

    axiom: str
    witness: object

    def __str__(self) -> str:
        return f"{self.axiom}: {self.witness}"


def verify_decomposition(g: Graph, pd: PathDecomposition) -> int | Violation:
    """Width of ``pd`` if it is a path decomposition of ``g``, else a :class:`Violation`."""
    for i, bag in enumerate(pd.bags):
        bad = [v for v in bag if not 0 <= v < g.n]
        if bad:
            return Violation("unknown-vertex", (i, min(bad)))
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    count: dict[int, int] = {}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            first.setdefault(v, i)
            last[v] = i
            count[v] = count.get(v, 0) + 1
    for v in range(g.n):
        if v not in first:
            return Violation("vertex-uncovered", v)
    for u, v in g.edges:
        # With contiguous traces an edge is covered iff the intervals meet;
        # check bags directly so the axioms are tested independently.
        if not any(u in bag and v in bag for bag in pd.bags):
            return Violation("edge-uncovered", (u, v))
    for v in range(g.n):
        if last[v] - first[v] + 1 != count[v]:
            return Violation("trace-disconnected", v)
    return pd.width


def separation(g: Graph, order: Sequence[int]) -> int:
    """Vertex separation of a layout (``0`` for the empty graph)."""
    pos = _positions(g, order)
    best = 0
    active = 0
    # last[v]: position of v's rightmost neighbour, or v's own position.
    last = [max([pos[v]] + [pos[w] for w in g.neighbors(v)]) for v in range(g.n)]
    closing = [0] * (g.n + 1)
    for v in range(g.n):
        if last[v] > pos[v]:
            closing[last[v]] += 1
    for i, v in enumerate(order):
        active -= closing[i]
        if last[v] > i:
            active += 1
        best = max(best, active)
    return best


def _positions(g: Graph, order: Sequence[int]) -> list[int]:
    if sorted(order) != list(range(g.n)):
        raise ValueError("layout is not a permutation of the vertices")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return pos


def layout_to_decomposition(g: Graph, order: Sequence[int]) -> PathDecomposition:
    """Bag ``i`` holds ``v_i`` and every earlier vertex with a neighbour at position ``>= i``.

    The width equals :func:`separation` of the layout.
    """
    pos = _positions(g, order)
    bags = []
    for i, v in enumerate(order):
        bag = {v}
        bag.update(u for u in order[:i] if any(pos[w] >= i for w in g.neighbors(u)))
        bags.append(bag)
    return PathDecomposition(bags)


def greedy_layout(g: Graph) -> list[int]:
    """Cheap upper-bound layout: repeatedly take the vertex that grows the boundary least."""
    nbr = _masks(g)
    placed = 0
    out = []
    for _ in range(g.n):
        frontier = _outer(nbr, placed)
        best = None
        for v in range(g.n):
            if placed >> v & 1:
                continue
            s = placed | 1 << v
            key = (_outer(nbr, s).bit_count(), not frontier >> v & 1, v)
            if best is None or key < best:
                best = key
        v = best[2]
        out.append(v)
        placed |= 1 << v
    return out[::-1]


def _masks(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        m = 0
        for w in g.neighbors(v):
            m |= 1 << w
        out.append(m)
    return out


def _outer(nbr: list[int], s: int) -> int:
    out = 0
    rest = s
    while rest:
        low = rest & -rest
        out |= nbr[low.bit_length() - 1]
        rest ^= low
    return out & ~s


class _OutOfBudget(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, w: int, budget: Budget):
        self.g = g
        self.w = w
        self.nbr = _masks(g)
        self.full = (1 << g.n) - 1
        self.failed: set[int] = set()
        self.budget = budget
        self.nodes = 0
        self.deadline = None if budget.ms is None else time.monotonic() + budget.ms / 1000

    def tick(self) -> None:
        self.nodes += 1
        if self.budget.nodes is not None and self.nodes > self.budget.nodes:
            raise _OutOfBudget
        if self.deadline is not None and self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget

    def add(self, s: int, out: int, v: int) -> int:
        """Outer boundary of ``s | {v}`` given ``out = N(s) - s``."""
        return (out | self.nbr[v]) & ~(s | 1 << v)

    def reduce(self, s: int, out: int, order: list[int]) -> tuple[int, int]:
        nbr = self.nbr
        changed = True
        while changed:
            changed = False
            closed = s | out
            rest = self.full & ~s
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                extra = nbr[v] & ~closed
                if extra == 0 or (out & low and extra & (extra - 1) == 0):
                    out = self.add(s, out, v)
                    s |= low
                    order.append(v)
                    closed = s | out
                    changed = True
        return s, out

    def solve(self, s: int, out: int, order: list[int]) -> bool:
        self.tick()
        mark = len(order)
        s, out = self.reduce(s, out, order)
        if s == self.full:
            return True
        if s in self.failed:
            del order[mark:]
            return False
        rest = self.full & ~s
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            nxt = self.add(s, out, v)
            if nxt.bit_count() > self.w:
                continue
            order.append(v)
            if self.solve(s | low, nxt, order):
                return True
            order.pop()
        if len(self.failed) < self.budget.memo_cap:
            self.failed.add(s)
        del order[mark:]
        return False


def _decide_connected(g: Graph, w: int, budget: Budget) -> list[int] | None | Unknown:
    if g.n == 0:
        return []
    search = _Search(g, w, budget)
    order: list[int] = []
    try:
        found = search.solve(0, 0, order)
    except _OutOfBudget:
        return UNKNOWN
    # Prefix orders of outer cost <= w reverse into layouts of separation <= w.
    return order[::-1] if found else None


def decide_pathwidth_le(g: Graph, w: int, budget: Budget = DEFAULT_BUDGET):
    """``(True, layout)`` if ``pw(g) <= w``, ``(False, None)`` if not, ``UNKNOWN`` on budget exhaustion.

    Components are solved separately; the witness concatenates their layouts.
    """
    if w < 0:
        raise ValueError("w must be non-negative")
    layout: list[int] = []
    for comp in g.components():
        sub, old = g.induced(comp)
        res = _decide_connected(sub, w, budget)
        if res is UNKNOWN:
            return UNKNOWN
        if res is None:
            return False, None
        layout.extend(old[v] for v in res)
    return True, layout


def exact_pathwidth(g: Graph, budget: Budget = DEFAULT_BUDGET) -> int | Unknown:
    """Smallest ``w`` with ``pw(g) <= w``, or ``UNKNOWN``."""
    best = 0
    for comp in g.components():
        sub, _ = g.induced(comp)
        upper = separation(sub, greedy_layout(sub))
        w = best
        while w < upper:
            res = _decide_connected(sub, w, budget)
            if res is UNKNOWN:
                return UNKNOWN
            if res is not None:
                break
            w += 1
        best = max(best, w)
    return best


