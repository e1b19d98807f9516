"""Immutable undirected simple graphs with optional (row, col) labels."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

Edge = tuple[int, int]


class Coord(NamedTuple):
    row: int
    col: int


class GraphError(ValueError):
    pass


class NotBipartite(GraphError):
    """Raised by :func:`bipartition`; ``cycle`` is an odd cycle witness."""

    def __init__(self, cycle: list[int]):
        super().__init__(f"graph is not bipartite, odd cycle {cycle}")
        self.cycle = cycle


class PartInvalid(GraphError):
    def __init__(self, reason: str, part: int, witness):
        super().__init__(f"part {part} is invalid ({reason}): {witness}")
        self.reason = reason
        self.part = part
        self.witness = witness


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Edges are stored normalised (``u < v``) and sorted.  ``labels``, when
    given, holds one :class:`Coord` per vertex and must be injective.
    """

    n: int
    edges: tuple[Edge, ...]
    labels: tuple[Coord, ...] | None = None
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]], labels: Iterable | None = None):
        if n < 0:
            raise GraphError("negative vertex count")
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
            seen.add(norm_edge(u, v))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in seen:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))
        index = {}
        if labels is not None:
            labels = tuple(Coord(int(r), int(c)) for r, c in labels)
            if len(labels) != n:
                raise GraphError(f"expected {n} labels, got {len(labels)}")
            for v, lab in enumerate(labels):
                if lab.row < 1 or lab.col < 1:
                    raise GraphError(f"label {lab} of vertex {v} is not positive")
                if lab in index:
                    raise GraphError(f"label {lab} used twice")
                index[lab] = v
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def vertex(self, coord) -> int:
        """Vertex id carrying the label ``coord``."""
        try:
            return self._index[Coord(*coord)]
        except KeyError:
            raise KeyError(f"no vertex labelled {tuple(coord)}") from None

    def label(self, v: int) -> Coord:
        if self.labels is None:
            raise GraphError("graph has no labels")
        return self.labels[v]

    def has_label(self, coord) -> bool:
        return Coord(*coord) in self._index

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        comp = [-1] * self.n
        out = []
        for s in range(self.n):
            if comp[s] >= 0:
                continue
            comp[s] = len(out)
            members = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if comp[w] < 0:
                        comp[w] = len(out)
                        members.append(w)
                        queue.append(w)
            out.append(sorted(members))
        return out

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, renumbered; also returns new-id -> old-id."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        edges = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        labels = None if self.labels is None else [self.labels[v] for v in old]
        return Graph(len(old), edges, labels), old

    def without_edge(self, u: int, v: int) -> "Graph":
        e = norm_edge(u, v)
        return Graph(self.n, [f for f in self.edges if f != e], self.labels)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            if self.labels is not None:
                r, c = self.labels[v]
                lines.append(f'  {v} [label="({r},{c})"];')
            else:
                lines.append(f"  {v};")
        lines.extend(f"  {u} -- {v};" for u, v in self.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"


def is_connected(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``s`` induces a connected subgraph.  The empty set counts as connected."""
    s = set(s)
    if not s:
        return True
    start = next(iter(s))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w in s and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(s)


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Proper 2-colouring; in each component the smallest id goes to the first set.

    Raises :class:`NotBipartite` carrying an odd cycle.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u)):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    raise NotBipartite(_odd_cycle(parent, u, w))
    first = frozenset(v for v in range(g.n) if color[v] == 0)
    return first, frozenset(range(g.n)) - first


def _odd_cycle(parent: list[int], u: int, w: int) -> list[int]:
    # u and w are adjacent with the same colour: join their BFS tree paths.
    def path_to_root(v):
        out = [v]
        while parent[v] >= 0:
            v = parent[v]
            out.append(v)
        return out

    pu, pw = path_to_root(u), path_to_root(w)
    on_pw = set(pw)
    lca = next(v for v in pu if v in on_pw)
    left = pu[: pu.index(lca) + 1]
    right = pw[: pw.index(lca)]
    return left + right[::-1]


def contract(g: Graph, partition: Sequence[Iterable[int]], labels=None) -> Graph:
    """Quotient graph: part ``i`` becomes vertex ``i``.

    Every part must be non-empty and connected, and the parts must cover
    ``V(g)`` without overlap; otherwise :class:`PartInvalid` is raised.
    ``labels`` optionally labels the quotient vertices.
    """
    owner = [-1] * g.n
    parts = [sorted(set(p)) for p in partition]
    for i, part in enumerate(parts):
        if not part:
            raise PartInvalid("empty", i, [])
        for v in part:
            if not 0 <= v < g.n:
                raise PartInvalid("unknown vertex", i, v)
            if owner[v] >= 0:
                raise PartInvalid("overlapping", i, (v, owner[v]))
            owner[v] = i
        if not is_connected(g, part):
            raise PartInvalid("disconnected", i, part)
    missing = [v for v in range(g.n) if owner[v] < 0]
    if missing:
        raise PartInvalid("not covering", -1, missing)
    edges = {norm_edge(owner[u], owner[v]) for u, v in g.edges if owner[u] != owner[v]}
    return Graph(len(parts), edges, labels)
