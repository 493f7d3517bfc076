"""Skew-symmetric matrices over GF(p) and minimum / maximum skew rank.

Ranks are exact (integer Gaussian elimination mod ``p``).  The minimum skew
rank of a graph is defined over a field; here an odd prime field stands in
and results are reported per prime.  Small primes can behave differently
from large or infinite fields, so callers comparing against closed forms
should treat a mismatch as a property of the field first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .forcing import zminus
from .graphs import (
    Graph,
    GraphError,
    components,
    induced_subgraph,
    is_complete_multipartite,
    is_tree,
    is_unicyclic,
    members,
    unique_cycle,
)
from .matching import all_maximum_matchings, is_uniquely_restricted, matching_number

__all__ = [
    "SkewRankError",
    "BudgetExceeded",
    "SkewMatrixGF",
    "RankBounds",
    "is_prime",
    "random_skew_matrix",
    "rank_gfp",
    "batch_rank_gfp",
    "max_skew_rank_sampled",
    "min_skew_rank_exhaustive",
    "min_skew_rank_witness",
    "mr_formula",
    "rank_bounds",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 1 << 24


class SkewRankError(ValueError):
    pass


class BudgetExceeded(SkewRankError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _check_prime(p: int) -> None:
    if p == 2:
        raise SkewRankError("p = 2 is excluded: skew-symmetric and symmetric coincide")
    if not is_prime(p):
        raise SkewRankError(f"{p} is not an odd prime")


@dataclass(frozen=True, eq=False)
class SkewMatrixGF:
    """A skew-symmetric matrix over GF(p) with entries stored in ``0..p-1``."""

    p: int
    entries: np.ndarray

    def __post_init__(self):
        _check_prime(self.p)
        a = np.asarray(self.entries, dtype=np.int64) % self.p
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise SkewRankError("matrix must be square")
        if np.any((a + a.T) % self.p):
            raise SkewRankError("matrix is not skew-symmetric")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def graph(self) -> Graph:
        a = self.entries
        return Graph(
            self.n,
            frozenset((i, j) for i, j in itertools.combinations(range(self.n), 2) if a[i, j]),
        )

    def congruent(self, diag) -> SkewMatrixGF:
        """``D A D`` for the diagonal matrix ``D = diag(diag)``."""
        d = np.asarray(diag, dtype=np.int64) % self.p
        return SkewMatrixGF(self.p, d[:, None] * self.entries * d[None, :])

    @classmethod
    def from_upper(cls, g: Graph, p: int, values) -> SkewMatrixGF:
        """Matrix with ``a[u, v] = values[k]`` for the k-th edge ``(u, v)`` of ``g``."""
        a = np.zeros((g.order, g.order), dtype=np.int64)
        for (u, v), x in zip(g.edge_list, values):
            a[u, v] = x % p
            a[v, u] = -x % p
        return cls(p, a)


def _inverses(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        inv[x] = pow(x, p - 2, p)
    return inv


def batch_rank_gfp(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack ``(B, n, n)`` of matrices over GF(p)."""
    m = np.array(mats, dtype=np.int64) % p
    if m.ndim != 3:
        raise SkewRankError("expected a (batch, n, n) array")
    bsz, nrows, ncols = m.shape
    inv = _inverses(p)
    rank = np.zeros(bsz, dtype=np.int64)
    rows = np.arange(nrows)
    for col in range(ncols):
        cand = (m[:, :, col] != 0) & (rows[None, :] >= rank[:, None])
        act = np.nonzero(cand.any(axis=1))[0]
        if act.size == 0:
            continue
        piv = np.argmax(cand[act], axis=1)
        r0 = rank[act]
        top = m[act, r0].copy()
        m[act, r0] = m[act, piv]
        m[act, piv] = top
        pivot_row = m[act, r0] * inv[m[act, r0, col]][:, None] % p
        m[act, r0] = pivot_row
        factors = m[act, :, col].copy()
        factors[np.arange(act.size), r0] = 0
        m[act] = (m[act] - factors[:, :, None] * pivot_row[:, None, :]) % p
        rank[act] += 1
    return rank


def rank_gfp(a: SkewMatrixGF) -> int:
    return int(batch_rank_gfp(a.entries[None], a.p)[0])


def random_skew_matrix(g: Graph, p: int, seed=None) -> SkewMatrixGF:
    """Uniform nonzero entries on the edges of ``g``."""
    _check_prime(p)
    rng = np.random.default_rng(seed)
    return SkewMatrixGF.from_upper(g, p, rng.integers(1, p, size=g.size))


def max_skew_rank_sampled(g: Graph, p: int = 11, trials: int = 20, seed=0) -> int:
    """Largest rank seen over ``trials`` random matrices supported on ``g``."""
    _check_prime(p)
    if trials < 1:
        raise SkewRankError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    vals = rng.integers(1, p, size=(trials, g.size))
    return int(batch_rank_gfp(_stack(g, p, vals), p).max())


def _stack(g: Graph, p: int, vals: np.ndarray) -> np.ndarray:
    n = g.order
    mats = np.zeros((vals.shape[0], n, n), dtype=np.int64)
    if g.size:
        uu = np.array([u for u, _ in g.edge_list])
        vv = np.array([v for _, v in g.edge_list])
        mats[:, uu, vv] = vals % p
        mats[:, vv, uu] = -vals % p
    return mats


def _forest_edges(g: Graph) -> set[tuple[int, int]]:
    seen = 0
    tree = set()
    for root in g.vertices:
        if seen >> root & 1:
            continue
        seen |= 1 << root
        stack = [root]
        while stack:
            u = stack.pop()
            for w in members(g.adj[u] & ~seen):
                seen |= 1 << w
                tree.add((min(u, w), max(u, w)))
                stack.append(w)
    return tree


def min_skew_rank_witness(
    g: Graph,
    p: int = 3,
    budget: int = DEFAULT_BUDGET,
    normalize_forest: bool = True,
    chunk: int = 1 << 14,
) -> tuple[int, SkewMatrixGF]:
    """Exhaustive minimum rank over all matrices in S^-(GF(p), g) and a witness.

    With ``normalize_forest`` the entries on a spanning forest are pinned to
    1.  That loses nothing: every matrix is diagonally congruent (``DAD``,
    same rank, same graph) to one with those entries equal to 1.  With it
    off, all ``(p-1)^|E|`` matrices are enumerated.
    """
    _check_prime(p)
    edges = g.edge_list
    fixed = _forest_edges(g) if normalize_forest else set()
    free_idx = [k for k, e in enumerate(edges) if e not in fixed]
    base = p - 1
    total = base ** len(free_idx)
    if total > budget:
        raise BudgetExceeded(
            f"{total} matrices to enumerate over GF({p}) exceeds budget {budget}"
        )
    if not edges:
        return 0, SkewMatrixGF(p, np.zeros((g.order, g.order), dtype=np.int64))
    best = None
    best_vals = None
    powers = base ** np.arange(len(free_idx), dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        vals = np.ones((idx.size, len(edges)), dtype=np.int64)
        if free_idx:
            vals[:, free_idx] = (idx[:, None] // powers[None, :]) % base + 1
        ranks = batch_rank_gfp(_stack(g, p, vals), p)
        k = int(np.argmin(ranks))
        if best is None or ranks[k] < best:
            best, best_vals = int(ranks[k]), vals[k]
            if best == 2:
                break
    return best, SkewMatrixGF.from_upper(g, p, best_vals)


def min_skew_rank_exhaustive(
    g: Graph, p: int = 3, budget: int = DEFAULT_BUDGET, normalize_forest: bool = True
) -> int:
    return min_skew_rank_witness(g, p, budget, normalize_forest)[0]


def _has_ur_maximum_matching(g: Graph) -> bool:
    return any(is_uniquely_restricted(g, m) for m in all_maximum_matchings(g))


def _mr_connected(g: Graph) -> int | None:
    if g.order == 1:
        return 0
    if is_complete_multipartite(g) is not None:
        return 2
    if is_tree(g):
        return 2 * matching_number(g)
    if is_unicyclic(g):
        mr = 2 * matching_number(g)
        if len(unique_cycle(g)) % 2 == 0 and not _has_ur_maximum_matching(g):
            mr -= 2
        return mr
    return None


def mr_formula(g: Graph) -> int | None:
    """Closed-form minimum skew rank where one is known, else ``None``.

    Recognised: complete multipartite graphs, trees, unicyclic graphs, and
    disjoint unions of these (the rank of a direct sum adds up).
    """
    total = 0
    for comp in components(g):
        h = induced_subgraph(g, comp)[0]
        mr = _mr_connected(h)
        if mr is None:
            return None
        total += mr
    return total


@dataclass(frozen=True)
class RankBounds:
    lower: int
    upper: int
    exact_gfp: int | None = None
    p: int | None = None


def rank_bounds(g: Graph, p: int | None = None, budget: int = DEFAULT_BUDGET) -> RankBounds:
    """``|G| - Z^-(G) <= mr^- <= 2 match(G)``, plus the GF(p) minimum if asked.

    The exact value is left as ``None`` when the enumeration would exceed
    ``budget``.
    """
    lower = g.order - zminus(g)[0]
    upper = 2 * matching_number(g)
    exact = None
    if p is not None:
        try:
            exact = min_skew_rank_exhaustive(g, p, budget)
        except BudgetExceeded:
            exact = None
    return RankBounds(lower, upper, exact, p)
