"""Minor certificates from explicit branch sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping

from .graph import Coord, Edge, Graph, GraphError, contract, is_connected


@dataclass(frozen=True)
class MinorCertificate:
    """One realising host edge for every pattern edge."""

    realizers: dict[Edge, Edge]


@dataclass(frozen=True)
class MinorViolation:
    kind: str  # "overlapping-sets", "empty-set", "disconnected-set", "missing-edge", "bad-keys"
    witness: object

    def __str__(self) -> str:
        return f"{self.kind}: {self.witness}"


def verify_minor(pattern: Graph, host: Graph, model: Mapping[int, frozenset[int]]) -> MinorCertificate | MinorViolation:
    """Check that ``model`` (pattern vertex -> host vertex set) witnesses a minor."""
    if set(model) != set(range(pattern.n)):
        return MinorViolation("bad-keys", sorted(set(model) ^ set(range(pattern.n))))
    owner: dict[int, int] = {}
    for p in range(pattern.n):
        part = model[p]
        if not part:
            return MinorViolation("empty-set", p)
        for v in sorted(part):
            if not 0 <= v < host.n:
                return MinorViolation("bad-keys", (p, v))
            if v in owner:
                return MinorViolation("overlapping-sets", (owner[v], p, v))
            owner[v] = p
        if not is_connected(host, part):
            return MinorViolation("disconnected-set", p)
    realizers: dict[Edge, Edge] = {}
    for u, v in host.edges:
        a, b = owner.get(u), owner.get(v)
        if a is None or b is None or a == b:
            continue
        key = (a, b) if a < b else (b, a)
        if pattern.has_edge(*key):
            realizers.setdefault(key, (u, v))
    for e in pattern.edges:
        if e not in realizers:
            return MinorViolation("missing-edge", e)
    return MinorCertificate(realizers)


def model_by_ids(pattern: Graph, sets: Mapping[Hashable, frozenset[int]]) -> dict[int, frozenset[int]]:
    """Re-key a coordinate-keyed model by pattern vertex id."""
    return {pattern.vertex(c): frozenset(s) for c, s in sets.items()}


def labeled_isomorphic(a: Graph, b: Graph) -> bool:
    """Whether matching equal coordinate labels is an isomorphism ``a -> b``."""
    if a.labels is None or b.labels is None:
        raise GraphError("both graphs need coordinate labels")
    if a.n != b.n or set(a.labels) != set(b.labels):
        return False
    to_b = [b.vertex(c) for c in a.labels]
    mapped = {tuple(sorted((to_b[u], to_b[v]))) for u, v in a.edges}
    return mapped == set(b.edges)


def contract_model(host: Graph, sets: Mapping[Coord, frozenset[int]]) -> Graph:
    """Contract each branch set; the quotient vertex is labelled by its key."""
    keys = sorted(sets)
    return contract(host, [sets[c] for c in keys], labels=keys)
