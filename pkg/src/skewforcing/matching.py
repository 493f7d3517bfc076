"""Matchings: maximum, uniquely restricted, and perfect-matching counts.

A matching is represented as a ``frozenset`` of normalised edges ``(u, v)``
with ``u < v``.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator

from .graphs import Graph, GraphError, members

Matching = frozenset

__all__ = [
    "Matching",
    "validate_matching",
    "maximum_matching",
    "matching_number",
    "iter_matchings",
    "all_maximum_matchings",
    "saturated_mask",
    "unsaturated_set",
    "has_alternating_cycle",
    "is_uniquely_restricted",
    "is_uniquely_restricted_by_count",
    "maximum_ur_matching",
    "count_perfect_matchings",
    "has_unique_perfect_matching",
]


def _norm(e) -> tuple[int, int]:
    u, v = e
    return (u, v) if u < v else (v, u)


def validate_matching(g: Graph, m: Iterable) -> frozenset[tuple[int, int]]:
    edges = frozenset(_norm(e) for e in m)
    seen = 0
    for u, v in edges:
        if (u, v) not in g.edges:
            raise GraphError(f"{(u, v)} is not an edge")
        if seen >> u & 1 or seen >> v & 1:
            raise GraphError(f"edges of the matching share endpoint near {(u, v)}")
        seen |= 1 << u | 1 << v
    return edges


def saturated_mask(m: Iterable[tuple[int, int]]) -> int:
    s = 0
    for u, v in m:
        s |= 1 << u | 1 << v
    return s


def unsaturated_set(g: Graph, m: Iterable) -> frozenset[int]:
    m = validate_matching(g, m)
    return frozenset(members(g.full_mask & ~saturated_mask(m)))


# ---------------------------------------------------------------------------
# Edmonds' blossom algorithm

def maximum_matching(g: Graph) -> frozenset[tuple[int, int]]:
    """A maximum-cardinality matching (Edmonds, O(n^3))."""
    n = g.order
    adj = [members(a) for a in g.adj]
    mate = [-1] * n

    # greedy start
    for u in range(n):
        if mate[u] < 0:
            for w in adj[u]:
                if mate[w] < 0:
                    mate[u], mate[w] = w, u
                    break

    def find_path(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        q = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] < 0:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if mate[to] < 0:
                        # augment along the tree path
                        while to >= 0:
                            pv = parent[to]
                            nxt = mate[pv]
                            mate[to], mate[pv] = pv, to
                            to = nxt
                        return True
                    used[mate[to]] = True
                    q.append(mate[to])
        return False

    for v in range(n):
        if mate[v] < 0:
            find_path(v)
    return frozenset((u, mate[u]) for u in range(n) if u < mate[u])


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))


def iter_matchings(g: Graph, size: int | None = None) -> Iterator[frozenset[tuple[int, int]]]:
    """Every matching of ``g`` exactly once (or only those with ``size`` edges)."""
    adj = g.adj
    chosen: list[tuple[int, int]] = []

    def rec(free: int):
        if size is not None:
            if len(chosen) == size:
                yield frozenset(chosen)
                return
            if len(chosen) + free.bit_count() // 2 < size:
                return
        if not free:
            yield frozenset(chosen)
            return
        # lowest free vertex: matched to a free neighbour, or left unmatched
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        for w in members(adj[v] & rest):
            chosen.append((v, w))
            yield from rec(rest & ~(1 << w))
            chosen.pop()
        yield from rec(rest)

    yield from rec(g.full_mask)


def all_maximum_matchings(g: Graph) -> list[frozenset[tuple[int, int]]]:
    k = matching_number(g)
    return sorted(iter_matchings(g, k), key=sorted)


# ---------------------------------------------------------------------------
# uniquely restricted matchings

def has_alternating_cycle(g: Graph, m: Iterable) -> bool:
    """Does ``g`` contain an even cycle alternating between ``m`` and non-``m`` edges?

    Every vertex of such a cycle is ``m``-saturated.  DFS over simple
    alternating paths that start with a matched edge ``(a, mate[a])``, then
    take non-matched edges out of each vertex reached by a matched edge.
    """
    m = validate_matching(g, m)
    mate = {}
    for u, v in m:
        mate[u], mate[v] = v, u
    sat = saturated_mask(m)

    for a in sorted(mate):
        # only look for cycles whose least vertex is a
        allowed = sat & ~((1 << a) - 1)

        def dfs(x: int, visited: int) -> bool:
            # x was just reached through a matched edge
            for y in members(g.adj[x] & allowed):
                if y == mate[x]:
                    continue
                if y == a:
                    return True
                if visited >> y & 1:
                    continue
                z = mate[y]
                if visited >> z & 1 or z == a:
                    continue
                if dfs(z, visited | 1 << y | 1 << z):
                    return True
            return False

        b = mate[a]
        if b > a and dfs(b, 1 << a | 1 << b):
            return True
    return False


def is_uniquely_restricted(g: Graph, m: Iterable) -> bool:
    return not has_alternating_cycle(g, m)


def is_uniquely_restricted_by_count(g: Graph, m: Iterable) -> bool:
    """Same predicate, checked as: no other matching saturates the same set."""
    m = validate_matching(g, m)
    return _count_pm(g.adj, saturated_mask(m)) == 1


def maximum_ur_matching(g: Graph) -> frozenset[tuple[int, int]]:
    """A largest uniquely restricted matching; sizes searched downwards."""
    for k in range(matching_number(g), -1, -1):
        for m in iter_matchings(g, k):
            if is_uniquely_restricted(g, m):
                return m
    raise AssertionError("the empty matching is uniquely restricted")


# ---------------------------------------------------------------------------
# perfect matchings

@lru_cache(maxsize=1 << 16)
def _count_pm(adj: tuple[int, ...], alive: int) -> int:
    if not alive:
        return 1
    if alive.bit_count() % 2:
        return 0
    # branch on a live vertex of least live degree
    best, best_deg = -1, 1 << 30
    for v in members(alive):
        d = (adj[v] & alive).bit_count()
        if d < best_deg:
            best, best_deg = v, d
            if d <= 1:
                break
    if best_deg == 0:
        return 0
    rest = alive & ~(1 << best)
    return sum(_count_pm(adj, rest & ~(1 << w)) for w in members(adj[best] & rest))


def count_perfect_matchings(g: Graph) -> int:
    return _count_pm(g.adj, g.full_mask)


def has_unique_perfect_matching(g: Graph) -> bool:
    return count_perfect_matchings(g) == 1
