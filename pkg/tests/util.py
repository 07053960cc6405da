"""Shared oracles and enumeration helpers for the test suite.

Everything here is deliberately independent of the library's own algorithms:
brute-force matching enumerates augmenting structure by exhaustive search,
group enumeration goes through prime partitions, and the isolated-vertex
characterization re-derives orbit equality from scratch.
"""

from __future__ import annotations

from itertools import combinations, product

from kohler_sqs import kohler, make_group
from kohler_sqs.groups import Group
from kohler_sqs.orbits import canonicalize


def partitions(n: int) -> list[tuple[int, ...]]:
    """All integer partitions of n, parts descending."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining: int, maximum: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, maximum), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def _factorint(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def abelian_groups_of_order(v: int) -> list[Group]:
    """One group per isomorphism class, as elementary-divisor factor lists."""
    per_prime = []
    for p, e in sorted(_factorint(v).items()):
        per_prime.append([[p**part for part in partition] for partition in partitions(e)])
    groups = []
    for combo in product(*per_prime):
        factors = [f for chunk in combo for f in chunk]
        groups.append(make_group(factors))
    return groups


def abelian_groups_up_to(n: int) -> list[Group]:
    out = []
    for v in range(2, n + 1):
        out.extend(abelian_groups_of_order(v))
    return out


def brute_force_matching_size(n: int, edges: list[tuple[int, int]]) -> int:
    """Maximum matching size by exhaustive search over edge subsets."""
    best = 0
    m = len(edges)

    def rec(i: int, used: set[int], count: int) -> None:
        nonlocal best
        best = max(best, count)
        if count + (m - i) <= best:
            return
        for j in range(i, m):
            a, b = edges[j]
            if a not in used and b not in used:
                used.add(a)
                used.add(b)
                rec(j + 1, used, count + 1)
                used.discard(a)
                used.discard(b)

    rec(0, set(), 0)
    return best


def is_bipartite(adjacency) -> bool:
    color = [None] * len(adjacency)
    for start in range(len(adjacency)):
        if color[start] is not None:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for _, w in adjacency[v]:
                if color[w] is None:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def edge_lies_on_cycle(graph: kohler.KohlerGraph, edge_index: int) -> bool:
    """True iff the endpoints stay connected after deleting the edge."""
    u, w = graph.endpoints[edge_index]
    seen = {u}
    stack = [u]
    while stack:
        v = stack.pop()
        for e, x in graph.adjacency[v]:
            if e == edge_index or x in seen:
                continue
            seen.add(x)
            stack.append(x)
    return w in seen


def two_edge_connected(graph: kohler.KohlerGraph, component: tuple[int, ...]) -> bool:
    """No bridge inside the component (checked by edge deletion)."""
    comp = set(component)
    for e, (u, w) in enumerate(graph.endpoints):
        if u in comp and not edge_lies_on_cycle(graph, e):
            return False
    return True


def isolated_by_characterization(g: Group, base) -> bool:
    """Independent test of the isolated-vertex conditions.

    A vertex is isolated iff its orbit is some [c, 3c] with 7c = 0 or
    8c = 0, or some [c, -c + h] with 6c = 0 and 2h = 0.
    """
    zero = g.zero
    for c in g.elements():
        if c == zero:
            continue
        tc = g.scale(3, c)
        if g.scale(7, c) == zero or g.scale(8, c) == zero:
            if tc not in (zero, c) and canonicalize(g, (zero, c, tc)).base == base:
                return True
        if g.scale(6, c) == zero:
            for h in g.omega1:
                d = g.add(g.neg(c), h)
                if d not in (zero, c) and canonicalize(g, (zero, c, d)).base == base:
                    return True
    return False


def subgroup_is_cyclic(g: Group, elements: frozenset) -> bool:
    size = len(elements)
    return any(g.element_order(x) == size for x in elements)


def quadruple_orbit_reps(g: Group):
    """Canonical representatives of every orbit of 4-subsets, via through-0 sets."""
    zero = g.zero
    seen = set()
    nonzero = g.elements()[1:]
    for trio in combinations(nonzero, 3):
        base = canonicalize(g, (zero,) + trio).base
        if base not in seen:
            seen.add(base)
            yield base


def triple_orbit_reps(g: Group):
    zero = g.zero
    seen = set()
    nonzero = g.elements()[1:]
    for duo in combinations(nonzero, 2):
        base = canonicalize(g, (zero,) + duo).base
        if base not in seen:
            seen.add(base)
            yield base
