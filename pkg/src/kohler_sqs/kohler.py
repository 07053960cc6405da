"""Construction and structural queries for the Koehler graph of an abelian group.

Vertices are the triple orbits in the family T, edges the quadruple orbits in
the family E; the orbit of {0, a, b, a+b} joins the orbits of {0, a, b} and
{0, a, a+b}, which are always two distinct vertices.  Degrees never exceed 3:
the only possible neighbours of [a, b] are [a, a+b], [b, a-b] and [a, b-a].

Construction scans all unordered pairs of nonzero elements, canonicalizes,
and deduplicates, so it costs O(v^2) orbit insertions.  Vertex and edge
indices are assigned by sorting canonical bases lexicographically, which
makes every downstream artifact (matchings, designs, JSON exports)
reproducible run to run.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import InvalidInputError
from .groups import Group
from .orbits import OrbitRep, Subset, canonicalize, in_E, in_T


@dataclass(frozen=True)
class KohlerGraph:
    group: Group
    vertices: tuple[OrbitRep, ...]
    edges: tuple[OrbitRep, ...]
    #: per-edge pair of vertex indices (i, j), i < j
    endpoints: tuple[tuple[int, int], ...]
    #: per-vertex tuple of (edge index, other vertex index)
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)

    @cached_property
    def _lookup(self) -> dict[Subset, int]:
        return {rep.base: i for i, rep in enumerate(self.vertices)}

    def __str__(self) -> str:
        return f"KohlerGraph({self.group}, V={len(self.vertices)}, E={len(self.edges)})"


def build_graph(g: Group, limit: int | None = None) -> KohlerGraph:
    """Build the Koehler graph of ``g`` with deterministic indexing."""
    g.check_capacity(limit)
    nonzero = g.elements()[1:]
    zero = g.zero

    vertex_bases: set[Subset] = set()
    edge_bases: set[Subset] = set()
    for a, b in combinations(nonzero, 2):
        if in_T(g, a, b):
            vertex_bases.add(canonicalize(g, (zero, a, b)).base)
        s = g.add(a, b)
        if s != zero and s != a and s != b and in_E(g, a, b):
            edge_bases.add(canonicalize(g, (zero, a, b, s)).base)

    vertices = tuple(OrbitRep(g, base) for base in sorted(vertex_bases))
    index = {rep.base: i for i, rep in enumerate(vertices)}
    edges = tuple(OrbitRep(g, base) for base in sorted(edge_bases))

    endpoints = []
    seen_pairs: dict[tuple[int, int], Subset] = {}
    for rep in edges:
        i, j = _edge_endpoints(g, rep.base, index)
        if (i, j) in seen_pairs:
            raise InvalidInputError(
                f"multiple edges between vertices {i} and {j}: "
                f"{seen_pairs[(i, j)]!r} and {rep.base!r}"
            )
        seen_pairs[(i, j)] = rep.base
        endpoints.append((i, j))

    adjacency: list[list[tuple[int, int]]] = [[] for _ in vertices]
    for e, (i, j) in enumerate(endpoints):
        adjacency[i].append((e, j))
        adjacency[j].append((e, i))
    return KohlerGraph(
        group=g,
        vertices=vertices,
        edges=edges,
        endpoints=tuple(endpoints),
        adjacency=tuple(tuple(sorted(row, key=lambda t: t[1])) for row in adjacency),
    )


def _edge_endpoints(g: Group, base: Subset, vertex_index: dict[Subset, int]) -> tuple[int, int]:
    """Endpoint vertex indices of an edge orbit.

    The base is some {0, a, b, a+b}; the endpoints are the orbits of
    {0, a, b} and {0, a, a+b}.  The decomposition of an edge base into
    (a, b, a+b) is unique up to swapping a and b, so the result is
    well-defined.
    """
    zero = g.zero
    rest = base[1:]
    for i, p in enumerate(rest):
        for q in rest[i + 1 :]:
            s = g.add(p, q)
            if s in rest:
                u = canonicalize(g, (zero, p, q)).base
                w = canonicalize(g, (zero, p, s)).base
                if u not in vertex_index or w not in vertex_index:
                    raise InvalidInputError(f"edge {base!r} has an endpoint outside T")
                iu, iw = vertex_index[u], vertex_index[w]
                if iu == iw:
                    raise InvalidInputError(f"edge {base!r} joins a vertex to itself")
                return (iu, iw) if iu < iw else (iw, iu)
    raise InvalidInputError(f"edge base {base!r} admits no sum decomposition")


def vertex_index(graph: KohlerGraph, vertex: OrbitRep) -> int:
    try:
        return graph._lookup[vertex.base]
    except KeyError:
        raise InvalidInputError(f"{vertex} is not a vertex of {graph}") from None


def neighbors(graph: KohlerGraph, vertex: OrbitRep) -> set[OrbitRep]:
    """Neighbour set read off the built adjacency."""
    i = vertex_index(graph, vertex)
    return {graph.vertices[j] for _, j in graph.adjacency[i]}


def formula_neighbors(g: Group, vertex: OrbitRep) -> set[OrbitRep]:
    """Neighbours recomputed from scratch: {[a, a+b], [b, a-b], [a, b-a]} in T.

    Used to cross-check the adjacency produced by :func:`build_graph`.
    """
    if len(vertex.base) != 3:
        raise InvalidInputError("vertices are triple orbits")
    _, a, b = vertex.base
    zero = g.zero
    out = set()
    for c, d in ((a, g.add(a, b)), (b, g.sub(a, b)), (a, g.sub(b, a))):
        if d != zero and d != c and in_T(g, c, d):
            out.add(canonicalize(g, (zero, c, d)))
    return out


def degree(graph: KohlerGraph, vertex: OrbitRep) -> int:
    return len(graph.adjacency[vertex_index(graph, vertex)])


def is_isolated(graph: KohlerGraph, vertex: OrbitRep) -> bool:
    return degree(graph, vertex) == 0


def connected_components(graph: KohlerGraph) -> tuple[tuple[int, ...], ...]:
    """Vertex-index components, each sorted, ordered by smallest member."""
    seen = [False] * len(graph.vertices)
    components = []
    for start in range(len(graph.vertices)):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        comp = []
        while queue:
            v = queue.popleft()
            comp.append(v)
            for _, w in graph.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        components.append(tuple(sorted(comp)))
    return tuple(components)


def graph_stats(graph: KohlerGraph) -> dict:
    """Aggregate summary used by the CLI."""
    degrees = Counter(len(row) for row in graph.adjacency)
    comps = connected_components(graph)
    return {
        "group": list(graph.group.factors),
        "vertices": len(graph.vertices),
        "edges": len(graph.edges),
        "degrees": {str(d): n for d, n in sorted(degrees.items())},
        "components": sorted((len(c) for c in comps), reverse=True),
        "isolated": degrees.get(0, 0),
    }


def export_graph(graph: KohlerGraph) -> dict:
    """Adjacency-list JSON payload: vertex bases plus edge bases with endpoints."""
    return {
        "group": list(graph.group.factors),
        "vertices": [{"base": [list(e) for e in rep.base]} for rep in graph.vertices],
        "edges": [
            {"base": [list(e) for e in rep.base], "endpoints": list(ij)}
            for rep, ij in zip(graph.edges, graph.endpoints)
        ],
    }
