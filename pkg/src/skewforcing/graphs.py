"""Simple undirected graphs on vertices ``0..n-1``.

Vertex sets are passed around either as Python sets or as integer bitmasks
(bit ``v`` set means vertex ``v`` is present); the latter is what the inner
loops of the forcing and matching code use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "Graph",
    "GraphError",
    "FamilySpec",
    "from_edge_list",
    "generate",
    "path",
    "cycle",
    "complete",
    "complete_multipartite",
    "star",
    "wheel",
    "hypercube",
    "pineapple",
    "super_triangle",
    "half_graph",
    "necklace",
    "empty",
    "disjoint_union",
    "corona",
    "cartesian_product",
    "tensor_like_k3xk3",
    "induced_subgraph",
    "vertex_sum",
    "is_connected",
    "components",
    "cut_vertices",
    "degree_stats",
    "is_bipartite",
    "is_tree",
    "is_unicyclic",
    "is_complete_multipartite",
    "canonical_form",
    "certificate",
    "enumerate_connected",
    "enumerate_all",
    "enumerate_trees",
    "enumerate_bipartite",
    "parse_graph6",
    "emit_graph6",
    "parse_edge_list",
    "emit_edge_list",
    "mask_of",
    "members",
]


class GraphError(ValueError):
    """Raised for malformed graphs, bad parameters or unparseable input."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph.

    ``edges`` holds normalised pairs ``(u, v)`` with ``u < v``.  Equality is
    labelled equality; use :func:`canonical_form` or :func:`certificate` to
    compare up to isomorphism.
    """

    order: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.order < 0:
            raise GraphError(f"negative order {self.order}")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.order):
                raise GraphError(f"bad edge {e} for order {self.order}")

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks, one per vertex."""
        nb = [0] * self.order
        for u, v in self.edges:
            nb[u] |= 1 << v
            nb[v] |= 1 << u
        return tuple(nb)

    @cached_property
    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.order)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def __len__(self) -> int:
        return self.order

    def neighbors(self, v: int) -> set[int]:
        return set(members(self.adj[v]))

    def closed_neighbors(self, v: int) -> set[int]:
        return self.neighbors(v) | {v}

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.order, self.order), dtype=np.int8)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def complement(self) -> Graph:
        return Graph(
            self.order,
            frozenset(
                (u, v)
                for u, v in itertools.combinations(range(self.order), 2)
                if not self.has_edge(u, v)
            ),
        )

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph whose vertex ``i`` is old vertex ``perm[i]``."""
        inv = [0] * self.order
        for new, old in enumerate(perm):
            inv[old] = new
        return from_edge_list(self.order, [(inv[u], inv[v]) for u, v in self.edges])

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_list})"


def from_edge_list(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph, deduplicating ``{u, v}`` / ``{v, u}``."""
    if n < 1:
        raise GraphError(f"order must be >= 1, got {n}")
    norm = set()
    for e in edges:
        u, v = tuple(e)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} out of range for order {n}")
        norm.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(norm))


# ---------------------------------------------------------------------------
# named families

def empty(n: int) -> Graph:
    return from_edge_list(n, [])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return from_edge_list(n, itertools.combinations(range(n), 2))


def complete_multipartite(parts: Iterable[int]) -> Graph:
    parts = list(parts)
    if len(parts) < 1 or any(p < 1 for p in parts):
        raise GraphError(f"bad part sizes {parts}")
    label = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(label)
    return from_edge_list(
        n, [(u, v) for u, v in itertools.combinations(range(n), 2) if label[u] != label[v]]
    )


def star(k: int) -> Graph:
    """``K_{1,k}`` with centre 0."""
    if k < 1:
        raise GraphError("star needs k >= 1")
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def wheel(n: int) -> Graph:
    """``W_n``: a rim ``C_{n-1}`` on vertices ``0..n-2`` plus hub ``n-1``."""
    if n < 4:
        raise GraphError("wheel needs n >= 4")
    rim = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    return from_edge_list(n, rim + [(i, n - 1) for i in range(n - 1)])


def hypercube(s: int) -> Graph:
    if s < 1:
        raise GraphError("hypercube needs s >= 1")
    n = 1 << s
    return from_edge_list(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(s) if not v >> b & 1])


def pineapple(m: int, k: int) -> Graph:
    """``K_m`` on ``0..m-1`` with ``k`` pendant vertices hung on vertex 0."""
    if m < 3 or k < 1:
        raise GraphError("pineapple needs m >= 3, k >= 1")
    edges = list(itertools.combinations(range(m), 2))
    edges += [(0, m + i) for i in range(k)]
    return from_edge_list(m + k, edges)


def super_triangle(n: int) -> Graph:
    """Triangular grid with rows of length 1..n.

    Vertex ``(r, c)`` (``0 <= c <= r < n``) is adjacent to ``(r, c+1)``,
    ``(r+1, c)`` and ``(r+1, c+1)``.
    """
    if n < 1:
        raise GraphError("super-triangle needs n >= 1")
    idx = {}
    for r in range(n):
        for c in range(r + 1):
            idx[r, c] = len(idx)
    edges = []
    for (r, c), i in idx.items():
        for nb in ((r, c + 1), (r + 1, c), (r + 1, c + 1)):
            if nb in idx:
                edges.append((i, idx[nb]))
    return from_edge_list(len(idx), edges)


def half_graph(s: int) -> Graph:
    """``u_i`` (vertex i) ~ ``v_j`` (vertex s+j) iff i <= j."""
    if s < 1:
        raise GraphError("half-graph needs s >= 1")
    return from_edge_list(2 * s, [(i, s + j) for i in range(s) for j in range(i, s)])


def necklace(s: int) -> Graph:
    """``s`` diamonds in a ring.

    Diamond ``d`` uses vertices ``4d..4d+3``: tips ``4d`` and ``4d+3`` and
    middle pair ``4d+1, 4d+2``.  Tip ``4d+3`` is joined to tip ``4(d+1)``.
    """
    if s < 2:
        raise GraphError("necklace needs s >= 2")
    edges = []
    for d in range(s):
        a, b, c, t = 4 * d, 4 * d + 1, 4 * d + 2, 4 * d + 3
        edges += [(a, b), (a, c), (b, c), (b, t), (c, t)]
        edges.append((t, (4 * (d + 1)) % (4 * s)))
    return from_edge_list(4 * s, edges)


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_multipartite": (None, None),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "hypercube": (hypercube, 1),
    "pineapple": (pineapple, 2),
    "super_triangle": (super_triangle, 1),
    "half_graph": (half_graph, 1),
    "necklace": (necklace, 1),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise GraphError(f"unknown family {self.family!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        arity = _FAMILIES[self.family][1]
        if arity is not None and len(self.params) != arity:
            raise GraphError(f"{self.family} takes {arity} parameter(s), got {self.params}")


def generate(spec: FamilySpec | str, *params: int) -> Graph:
    """Build a named graph, e.g. ``generate("cycle", 5)``."""
    if isinstance(spec, str):
        spec = FamilySpec(spec, params)
    if spec.family == "complete_multipartite":
        return complete_multipartite(spec.params)
    fn = _FAMILIES[spec.family][0]
    return fn(*spec.params)


# ---------------------------------------------------------------------------
# operators

def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.order
    return from_edge_list(
        g.order + h.order, list(g.edges) + [(u + off, v + off) for u, v in h.edges]
    )


def corona(g: Graph, h: Graph) -> Graph:
    """One copy of ``h`` per vertex ``v`` of ``g``, ``v`` joined to all of it.

    Vertex ``v`` of ``g`` keeps label ``v``; copy ``v`` of ``h`` occupies
    ``g.order + v*h.order ...``.
    """
    n = g.order
    edges = list(g.edges)
    for v in range(n):
        base = n + v * h.order
        edges += [(base + a, base + b) for a, b in h.edges]
        edges += [(v, base + a) for a in range(h.order)]
    return from_edge_list(n + n * h.order, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(a, x)`` gets label ``a*h.order + x``."""
    m = h.order
    edges = []
    for a in range(g.order):
        edges += [(a * m + x, a * m + y) for x, y in h.edges]
    for x in range(m):
        edges += [(a * m + x, b * m + x) for a, b in g.edges]
    return from_edge_list(g.order * m, edges)


def tensor_like_k3xk3() -> Graph:
    """Direct product ``K_3 x K_3``: ``(i,j) ~ (k,l)`` iff ``i != k`` and ``j != l``.

    Vertex ``(i, j)`` is labelled ``3*i + j``, so the rows ``{3i, 3i+1, 3i+2}``
    are the three colour classes.
    """
    cells = [(i, j) for i in range(3) for j in range(3)]
    edges = [
        (3 * a + b, 3 * c + d)
        for (a, b), (c, d) in itertools.combinations(cells, 2)
        if a != c and b != d
    ]
    return from_edge_list(9, edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``s`` plus the old -> new vertex map."""
    keep = sorted(set(s))
    if not keep:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    for v in keep:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} out of range")
    vmap = {old: new for new, old in enumerate(keep)}
    edges = [(vmap[u], vmap[v]) for u, v in g.edges if u in vmap and v in vmap]
    return from_edge_list(len(keep), edges), vmap


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in g.vertices if u != v])[0]


def vertex_sum(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Glue ``g1`` and ``g2`` at ``v1 ~ v2``.

    ``g1`` keeps its labels; the vertices of ``g2`` other than ``v2`` follow
    in their original order.
    """
    if not 0 <= v1 < g1.order or not 0 <= v2 < g2.order:
        raise GraphError("vertex_sum: vertex out of range")
    vmap = {}
    nxt = g1.order
    for x in range(g2.order):
        if x == v2:
            vmap[x] = v1
        else:
            vmap[x] = nxt
            nxt += 1
    edges = list(g1.edges) + [(vmap[a], vmap[b]) for a, b in g2.edges]
    return from_edge_list(nxt, edges)


# ---------------------------------------------------------------------------
# structure

def _reach(g: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph) -> list[list[int]]:
    left = g.full_mask
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = _reach(g, v, left)
        out.append(members(comp))
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.order > 0 and _reach(g, 0, g.full_mask) == g.full_mask


def cut_vertices(g: Graph) -> set[int]:
    """Vertices whose removal increases the number of components."""
    base = len(components(g))
    out = set()
    for v in g.vertices:
        if g.order == 1:
            break
        allowed = g.full_mask & ~(1 << v)
        count = 0
        left = allowed
        while left:
            s = (left & -left).bit_length() - 1
            left &= ~_reach(g, s, allowed)
            count += 1
        # an isolated vertex disappearing drops a component; that is not a cut
        if count > base - (g.adj[v] == 0):
            out.add(v)
    return out


def degree_stats(g: Graph) -> tuple[int, int]:
    d = g.degrees()
    return min(d), max(d)


def two_coloring(g: Graph) -> list[int] | None:
    color = [-1] * g.order
    for s in g.vertices:
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in members(g.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.size == g.order - 1


def is_unicyclic(g: Graph) -> bool:
    return is_connected(g) and g.size == g.order


def unique_cycle(g: Graph) -> list[int]:
    """Vertices of the cycle of a unicyclic graph (leaf stripping)."""
    if not is_unicyclic(g):
        raise GraphError("graph is not unicyclic")
    deg = g.degrees()
    alive = g.full_mask
    leaves = [v for v in g.vertices if deg[v] == 1]
    while leaves:
        v = leaves.pop()
        alive &= ~(1 << v)
        for w in members(g.adj[v] & alive):
            deg[w] -= 1
            if deg[w] == 1:
                leaves.append(w)
    return members(alive)


def is_complete_multipartite(g: Graph) -> list[int] | None:
    """Part sizes (sorted) if the complement is a disjoint union of cliques.

    Parts of a complete multipartite graph are its classes of pairwise
    non-adjacent vertices; ``K_n`` gives ``n`` singleton parts.  A single
    vertex is not complete multipartite (at least two parts are needed).
    """
    if not is_connected(g):
        raise GraphError("is_complete_multipartite expects a connected graph")
    if g.order < 2:
        return None
    full = g.full_mask
    parts = []
    seen = 0
    for v in g.vertices:
        if seen >> v & 1:
            continue
        part = full & ~g.adj[v]  # v and its non-neighbours
        for w in members(part):
            if full & ~g.adj[w] != part:
                return None
        parts.append(part.bit_count())
        seen |= part
    return sorted(parts)


# ---------------------------------------------------------------------------
# canonical forms

def _pairs(n: int) -> list[tuple[int, int]]:
    """Upper-triangle positions in graph6 (column-major) order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


@lru_cache(maxsize=None)
def _all_perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


def _lexmin(g: Graph, perms: np.ndarray) -> Graph:
    n = g.order
    if n <= 1:
        return g
    a = g.adjacency_matrix().astype(bool)
    pairs = _pairs(n)
    ii = np.array([p[0] for p in pairs])
    jj = np.array([p[1] for p in pairs])
    best_key = None
    best_perm = None
    # chunked so memory stays bounded for 8! and up
    for start in range(0, len(perms), 1 << 15):
        block = perms[start:start + (1 << 15)]
        bits = a[block[:, ii], block[:, jj]]
        # bitstrings longer than 62 bits do not fit an int64 key; compare row-wise
        keys = np.packbits(bits, axis=1)
        order = np.lexsort(keys.T[::-1])
        cand = keys[order[0]]
        if best_key is None or tuple(cand) < tuple(best_key):
            best_key = cand
            best_perm = block[order[0]]
    return g.relabel([int(x) for x in best_perm])


def canonical_form(g: Graph) -> Graph:
    """Relabelling with the lexicographically least adjacency bit-string.

    The bit-string is the graph6 upper triangle; all ``n!`` permutations are
    tried, so this is meant for ``n <= 8``.
    """
    if g.order > 9:
        raise GraphError("canonical_form is exhaustive; use certificate() for n > 9")
    return _lexmin(g, _all_perms(g.order))


def _refined_cells(g: Graph) -> list[list[int]]:
    """Colour refinement; cells listed in an isomorphism-invariant order."""
    colour = [0] * g.order
    ncol = 1
    while True:
        sigs = [
            (colour[v], tuple(sorted(colour[w] for w in members(g.adj[v])))) for v in g.vertices
        ]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colour = [index[s] for s in sigs]
        if len(index) == ncol:
            break
        ncol = len(index)
    cells: list[list[int]] = [[] for _ in range(ncol)]
    for v in g.vertices:
        cells[colour[v]].append(v)
    return cells


def certificate(g: Graph) -> str:
    """Isomorphism certificate usable beyond the reach of :func:`canonical_form`.

    Vertices are split into colour-refinement cells (ordered invariantly) and
    the least bit-string is taken over permutations within cells.  Two graphs
    get the same certificate iff they are isomorphic.
    """
    cells = _refined_cells(g)
    blocks = [list(itertools.permutations(c)) for c in cells]
    total = 1
    for b in blocks:
        total *= len(b)
    if total > 5_000_000:
        raise GraphError(f"certificate: {total} cell permutations is too many")
    perms = np.array(
        [sum(choice, ()) for choice in itertools.product(*blocks)], dtype=np.intp
    ).reshape(-1, g.order)
    return emit_graph6(_lexmin(g, perms))


@lru_cache(maxsize=None)
def _connected_canonical(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    found: dict[Graph, None] = {}
    # every connected graph has a vertex whose deletion leaves it connected
    for h in _connected_canonical(n - 1):
        for nb in range(1, 1 << (n - 1)):
            g = Graph(n, h.edges | {(u, n - 1) for u in members(nb)})
            found.setdefault(canonical_form(g), None)
    return tuple(sorted(found, key=emit_graph6))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonical representative per connected graph of order ``n``."""
    if not 1 <= n <= 7:
        raise GraphError("enumerate_connected supports 1 <= n <= 7")
    yield from _connected_canonical(n)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    found: dict[str, Graph] = {}
    for t in _trees(n - 1):
        for v in range(n - 1):
            g = Graph(n, t.edges | {(v, n - 1)})
            found.setdefault(certificate(g), g)
    return tuple(found[k] for k in sorted(found))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All trees of order ``n`` up to isomorphism."""
    if not 1 <= n <= 12:
        raise GraphError("enumerate_trees supports 1 <= n <= 12")
    yield from _trees(n)


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    found: dict[str, Graph] = {}
    for h in _all_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            g = Graph(n, h.edges | {(u, n - 1) for u in members(nb)})
            found.setdefault(certificate(g), g)
    return tuple(found[k] for k in sorted(found))


def enumerate_all(n: int) -> Iterator[Graph]:
    """All graphs of order ``n`` (connected or not) up to isomorphism."""
    if not 1 <= n <= 7:
        raise GraphError("enumerate_all supports 1 <= n <= 7")
    yield from _all_graphs(n)


@lru_cache(maxsize=None)
def _bipartite(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    found: dict[str, Graph] = {}
    for h in _bipartite(n - 1):
        for nb in range(1 << (n - 1)):
            g = Graph(n, h.edges | {(u, n - 1) for u in members(nb)})
            if is_bipartite(g):
                found.setdefault(certificate(g), g)
    return tuple(found[k] for k in sorted(found))


def enumerate_bipartite(n: int, connected: bool = False) -> Iterator[Graph]:
    """All bipartite graphs of order ``n`` up to isomorphism."""
    if not 1 <= n <= 9:
        raise GraphError("enumerate_bipartite supports 1 <= n <= 9")
    for g in _bipartite(n):
        if not connected or is_connected(g):
            yield g


# ---------------------------------------------------------------------------
# graph6 / edge-list text

_G6_HEADER = ">>graph6<<"


def emit_graph6(g: Graph) -> str:
    n = g.order
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        head = [63, 63] + [n >> s & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _pairs(n)]
    bits += [0] * (-len(bits) % 6)
    body = [
        int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)
    ]
    return "".join(chr(x + 63) for x in head + body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in vals):
        raise GraphError(f"graph6: invalid character in {text!r}")
    if vals[0] < 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise GraphError("graph6: truncated order field")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        rest = vals[4:]
    else:
        if len(vals) < 8:
            raise GraphError("graph6: truncated order field")
        n = 0
        for x in vals[2:8]:
            n = n << 6 | x
        rest = vals[8:]
    if n == 0:
        raise GraphError("graph6: order 0 graphs are not supported")
    pairs = _pairs(n)
    need = -(-len(pairs) // 6)
    if len(rest) != need:
        raise GraphError(f"graph6: expected {need} data bytes for n={n}, got {len(rest)}")
    edges = []
    for k, (i, j) in enumerate(pairs):
        if rest[k // 6] >> (5 - k % 6) & 1:
            edges.append((i, j))
    return from_edge_list(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"] + [f"{u} {v}" for u, v in g.edge_list]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"edge list: {exc}") from None
    if len(header) != 2:
        raise GraphError("edge list header must be 'n m'")
    n, m = header
    if len(pairs) != m or any(len(p) != 2 for p in pairs):
        raise GraphError(f"edge list: header promises {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)
