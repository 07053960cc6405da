"""Maximum matching and 1-factors on general undirected graphs.

The matcher is the classic augmenting-path algorithm with blossom
contraction, O(V^3).  Koehler graphs of general abelian groups contain
vertices of degree 1 and 2, so the 3-regular shortcut (Petersen's theorem)
does not always apply; general matching covers every case.

Everything is deterministic: vertices are scanned in index order, adjacency
lists are sorted, and there is no randomization, so repeated runs produce
identical matchings.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidInputError


@dataclass(frozen=True)
class SimpleGraph:
    """An undirected graph on vertices 0..n-1 with no loops or parallel edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidInputError("vertex count must be nonnegative")
        seen = set()
        for i, j in self.edges:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise InvalidInputError(f"edge ({i}, {j}) out of range for n={self.n}")
            if i == j:
                raise InvalidInputError(f"self-loop at vertex {i}")
            key = (i, j) if i < j else (j, i)
            if key in seen:
                raise InvalidInputError(f"duplicate edge {key}")
            seen.add(key)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        rows: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            rows[i].append(j)
            rows[j].append(i)
        return tuple(tuple(sorted(row)) for row in rows)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {
            ((i, j) if i < j else (j, i)): e for e, (i, j) in enumerate(self.edges)
        }


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges; mate[v] is v's partner or None."""

    mate: tuple[int | None, ...]
    matched_edges: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.matched_edges)

    @property
    def is_perfect(self) -> bool:
        return all(m is not None for m in self.mate)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (v, m) for v, m in enumerate(self.mate) if m is not None and v < m
        )


class NoPerfectMatching(Exception):
    """Raised when some connected component admits no perfect matching."""

    def __init__(self, component: tuple[int, ...]):
        self.component = component
        super().__init__(
            f"no perfect matching: component {list(component)} cannot be fully matched"
        )


def maximum_matching(graph: SimpleGraph) -> Matching:
    """A maximum-cardinality matching, deterministic given the input ordering."""
    mate = _blossom_matching(graph.n, graph.adjacency)
    return _as_matching(graph, mate)


def components(graph: SimpleGraph) -> tuple[tuple[int, ...], ...]:
    """Connected components as sorted index tuples, ordered by least vertex."""
    seen = [False] * graph.n
    out = []
    for start in range(graph.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = []
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in graph.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return tuple(out)


def one_factor(graph: SimpleGraph) -> Matching:
    """A perfect matching, solved component by component.

    Raises :class:`NoPerfectMatching` carrying the first component (by least
    vertex index) that is odd or leaves a vertex unmatched.
    """
    mate: list[int | None] = [None] * graph.n
    for comp in components(graph):
        if len(comp) % 2 == 1:
            raise NoPerfectMatching(comp)
        local = {v: i for i, v in enumerate(comp)}
        comp_set = set(comp)
        adjacency = tuple(
            tuple(local[w] for w in graph.adjacency[v] if w in comp_set) for v in comp
        )
        sub_mate = _blossom_matching(len(comp), adjacency)
        if any(m is None for m in sub_mate):
            raise NoPerfectMatching(comp)
        for i, m in enumerate(sub_mate):
            mate[comp[i]] = comp[m]
    return _as_matching(graph, mate)


def _as_matching(graph: SimpleGraph, mate: list[int | None]) -> Matching:
    edge_ids = []
    for v, m in enumerate(mate):
        if m is None:
            continue
        if mate[m] != v:
            raise InvalidInputError(f"matching is not symmetric at {v}<->{m}")
        if v < m:
            key = (v, m)
            if key not in graph.edge_index:
                raise InvalidInputError(f"matched pair {key} is not a graph edge")
            edge_ids.append(graph.edge_index[key])
    return Matching(mate=tuple(mate), matched_edges=tuple(sorted(edge_ids)))


def _blossom_matching(n: int, adjacency) -> list[int | None]:
    """Mate array of a maximum matching (augmenting paths + blossom contraction)."""
    match: list[int] = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used_path = [False] * n
        x = a
        while True:
            x = base[x]
            used_path[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if used_path[y]:
                return y
            y = parent[match[y]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting(root: int) -> int:
        nonlocal base, parent
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adjacency[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom to its base vertex
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for v in range(n):
        if match[v] != -1:
            continue
        end = find_augmenting(v)
        while end != -1:
            prev = parent[end]
            nxt = match[prev]
            match[end] = prev
            match[prev] = end
            end = nxt
    return [m if m != -1 else None for m in match]
