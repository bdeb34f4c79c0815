"""Residue designs as graphs: segment classification, string counts, routing.

A physical string is modeled as a trail (a walk that never reuses an edge)
in the deduplicated design graph. Degenerate segments ``a k == k`` need no
string and are kept apart from the edges.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .metrics import chord_length
from .numtheory import DesignParams, doubled_subgroup, enumerate_H

__all__ = [
    "PLAIN",
    "DOUBLED",
    "DesignGraph",
    "RoutePlan",
    "build_design",
    "components",
    "string_count",
    "route",
    "verify_subgroup_correspondence",
]

PLAIN = "plain"
DOUBLED = "doubled"

Edge = tuple[int, int]


@dataclass
class DesignGraph:
    """Deduplicated design: ``edges`` maps ``(s, t)`` with ``s < t`` to a tag."""

    n: int
    a: int
    edges: dict[Edge, str]
    degenerate_nails: frozenset[int]
    _adjacency: dict[int, list[int]] | None = field(default=None, repr=False, compare=False)

    @property
    def doubled_edges(self) -> list[Edge]:
        return sorted(e for e, tag in self.edges.items() if tag == DOUBLED)

    @property
    def plain_edges(self) -> list[Edge]:
        return sorted(e for e, tag in self.edges.items() if tag == PLAIN)

    def adjacency(self) -> dict[int, list[int]]:
        """Sorted neighbor lists of every nail with at least one edge."""
        if self._adjacency is None:
            adj: dict[int, list[int]] = defaultdict(list)
            for s, t in self.edges:
                adj[s].append(t)
                adj[t].append(s)
            self._adjacency = {v: sorted(nbrs) for v, nbrs in sorted(adj.items())}
        return self._adjacency

    def degree(self, nail: int) -> int:
        return len(self.adjacency().get(nail, ()))


@dataclass
class RoutePlan:
    strings: list[list[int]]
    total_length: float

    def __len__(self) -> int:
        return len(self.strings)


def build_design(params: DesignParams) -> DesignGraph:
    """Join every nail ``k`` to ``a*k mod n``, collapsing repeated segments."""
    n, a = params.n, params.a % params.n
    edges: dict[Edge, str] = {}
    degenerate = set()
    for k in range(n):
        t = a * k % n
        if t == k:
            degenerate.add(k)
            continue
        key = (k, t) if k < t else (t, k)
        # the segment is seen from both ends exactly when a^2 k == k
        edges[key] = DOUBLED if a * t % n == k else PLAIN
    return DesignGraph(n=params.n, a=params.a, edges=edges, degenerate_nails=frozenset(degenerate))


def components(graph: DesignGraph) -> list[list[int]]:
    """Connected components with at least one edge, each sorted, ordered by smallest nail."""
    adj = graph.adjacency()
    seen: set[int] = set()
    out = []
    for start in adj:
        if start in seen:
            continue
        seen.add(start)
        stack, comp = [start], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def _odd_nails(graph: DesignGraph, comp: list[int]) -> list[int]:
    return [v for v in comp if graph.degree(v) % 2]


def string_count(graph: DesignGraph) -> int:
    """Minimum number of trails that together use every edge exactly once."""
    return sum(max(1, len(_odd_nails(graph, comp)) // 2) for comp in components(graph))


def _component_trails(graph: DesignGraph, comp: list[int]) -> list[list[int]]:
    n, a = graph.n, graph.a % graph.n
    adj = graph.adjacency()
    odd = _odd_nails(graph, comp)
    # Per-nail incidence lists of (neighbor, edge id), real edges sorted by
    # neighbor and virtual edges after them. Virtual edges pair up odd
    # nails (odd[1]-odd[2], odd[3]-odd[4], ...) so only odd[0] and odd[-1]
    # stay odd and a single Euler trail runs between them.
    incident: dict[int, list[tuple[int, int]]] = {}
    real_id: dict[Edge, int] = {}
    for v in comp:
        row = []
        for w in adj[v]:
            key = (v, w) if v < w else (w, v)
            eid = real_id.setdefault(key, len(real_id))
            row.append((w, eid))
        incident[v] = row
    n_real = len(real_id)
    eid = n_real
    for i in range(1, len(odd) - 1, 2):
        u, v = odd[i], odd[i + 1]
        incident[u].append((v, eid))
        incident[v].append((u, eid))
        eid += 1
    used = [False] * eid
    cursor = dict.fromkeys(comp, 0)

    def next_edge(v: int) -> tuple[int, int] | None:
        t = a * v % n
        e = real_id.get((v, t) if v < t else (t, v))
        if e is not None and not used[e]:
            return t, e
        row, i = incident[v], cursor[v]
        while i < len(row) and used[row[i][1]]:
            i += 1
        cursor[v] = i
        return row[i] if i < len(row) else None

    start = odd[0] if odd else comp[0]
    # Hierholzer with an explicit stack of (nail, edge used to arrive)
    stack: list[tuple[int, int]] = [(start, -1)]
    walk: list[tuple[int, int]] = []
    while stack:
        step = next_edge(stack[-1][0])
        if step is None:
            walk.append(stack.pop())
        else:
            used[step[1]] = True
            stack.append(step)
    walk.reverse()
    trails: list[list[int]] = [[walk[0][0]]]
    for nail, via in walk[1:]:
        if via >= n_real:
            trails.append([nail])
        else:
            trails[-1].append(nail)
    return trails


def route(graph: DesignGraph, r: float = 1.0) -> RoutePlan:
    """Explicit nail sequences, one per string, covering every edge once.

    Each component is started at its smallest odd-degree nail (or its
    smallest nail when all degrees are even); from each nail the walk follows
    ``k -> a k`` if that segment is still free, otherwise the smallest free
    neighbor.
    """
    strings = []
    for comp in components(graph):
        strings.extend(_component_trails(graph, comp))
    total = 0.0
    for s in strings:
        for u, v in zip(s, s[1:]):
            total += chord_length(r, graph.n, v - u)
    return RoutePlan(strings=strings, total_length=total)


def verify_subgroup_correspondence(params: DesignParams) -> bool:
    """Check that the doubled-or-degenerate part of a design is H and is itself a design.

    The nails touched by doubled edges together with the degenerate nails must
    be exactly H; dividing their labels by ``n / m`` must turn that sub-design
    into the full design on ``m`` nails with the same factor.
    """
    graph = build_design(params)
    info = doubled_subgroup(params)
    doubled = graph.doubled_edges
    touched = {v for e in doubled for v in e} | set(graph.degenerate_nails)
    if sorted(touched) != enumerate_H(params):
        return False
    step = info.generator
    if any(v % step for v in touched):
        return False
    small = build_design(DesignParams(info.m, params.a, params.r))
    relabeled = {
        (min(s // step, t // step), max(s // step, t // step)): DOUBLED for s, t in doubled
    }
    return (
        relabeled == small.edges
        and {v // step for v in graph.degenerate_nails} == set(small.degenerate_nails)
    )
