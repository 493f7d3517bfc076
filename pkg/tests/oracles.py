"""Slow, independent reference implementations used only by the tests.

Nothing here imports the bitmask code paths of the package: graphs are read
through ``order`` and ``edges`` only.
"""

import itertools

import networkx as nx


def nbrs(g):
    out = {v: set() for v in range(g.order)}
    for u, v in g.edges:
        out[u].add(v)
        out[v].add(u)
    return out


def naive_closure(g, z):
    nb = nbrs(g)
    black = set(z)
    while True:
        for u in range(g.order):
            white = nb[u] - black
            if len(white) == 1:
                black |= white
                break
        else:
            return black


def brute_zminus(g):
    for k in range(g.order + 1):
        for z in itertools.combinations(range(g.order), k):
            if len(naive_closure(g, z)) == g.order:
                return k


def brute_min_sets(g):
    for k in range(g.order + 1):
        hits = [
            frozenset(z)
            for z in itertools.combinations(range(g.order), k)
            if len(naive_closure(g, z)) == g.order
        ]
        if hits:
            return set(hits)


def is_matching(edges):
    seen = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen |= {u, v}
    return True


def brute_matchings(g):
    """All matchings, by filtering every edge subset."""
    edges = sorted(g.edges)
    out = []
    for k in range(len(edges) + 1):
        for sub in itertools.combinations(edges, k):
            if is_matching(sub):
                out.append(frozenset(sub))
    return out


def to_nx(g):
    if isinstance(g, nx.Graph):
        return g
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return h


def nx_match(g):
    return len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


def brute_alternating_cycle(g, m):
    """Enumerate every cycle with networkx and test alternation directly."""
    m = {frozenset(e) for e in m}
    for cyc in nx.simple_cycles(to_nx(g)):
        if len(cyc) % 2:
            continue
        ring = [frozenset((cyc[i], cyc[(i + 1) % len(cyc)])) for i in range(len(cyc))]
        flags = [e in m for e in ring]
        if all(flags[i] != flags[(i + 1) % len(flags)] for i in range(len(flags))):
            return True
    return False


def leibniz_det(a, p):
    n = len(a)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = term * a[i][perm[i]] % p
            if not term:
                break
        total += -term if inv % 2 else term
    return total % p


def rank_by_minors(a, p):
    """Largest k with a nonzero k x k minor mod p."""
    a = [[int(x) % p for x in row] for row in a]
    n = len(a)
    for k in range(n, 0, -1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                sub = [[a[r][c] for c in cols] for r in rows]
                if leibniz_det(sub, p):
                    return k
    return 0


def count_pm_brute(g):
    return sum(1 for m in brute_matchings(g) if 2 * len(m) == g.order)
