"""Skew colour change rule and skew zero forcing numbers.

Rule: any vertex ``u`` (black or white) with exactly one white neighbour
``v`` forces ``v`` black.  Unlike ordinary zero forcing, ``u`` itself need
not be black, so the empty set can force (e.g. on ``P_2``).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable

from .graphs import Graph, GraphError, mask_of, members

__all__ = [
    "ColorTrace",
    "skew_closure",
    "closure_mask",
    "is_skew_forcing_set",
    "zminus",
    "all_minimum_szfs",
]


@dataclass
class ColorTrace:
    initial: frozenset[int]
    black: frozenset[int]
    forces: list[tuple[int, int]] = field(default_factory=list)

    def all_black(self, g: Graph) -> bool:
        return len(self.black) == g.order


def _check(g: Graph, z: Iterable[int]) -> int:
    z = list(z)
    for v in z:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} out of range for order {g.order}")
    return mask_of(z)


def closure_mask(g: Graph, black: int) -> int:
    """Black set (as a bitmask) after applying the rule to a fixpoint."""
    adj = g.adj
    changed = True
    while changed:
        changed = False
        for nb in adj:
            w = nb & ~black
            if w and not w & (w - 1):
                black |= w
                changed = True
    return black


def skew_closure(g: Graph, z: Iterable[int], rng: random.Random | None = None) -> ColorTrace:
    """Run the rule from ``z`` and record the forces.

    By default the lowest-indexed eligible forcer fires first.  Passing
    ``rng`` picks a uniformly random eligible force at every step instead;
    the final black set does not depend on the order.
    """
    black = _check(g, z)
    start = black
    forces = []
    adj = g.adj
    while True:
        eligible = []
        for u, nb in enumerate(adj):
            w = nb & ~black
            if w and not w & (w - 1):
                eligible.append((u, w.bit_length() - 1))
                if rng is None:
                    break
        if not eligible:
            break
        u, v = eligible[0] if rng is None else rng.choice(eligible)
        black |= 1 << v
        forces.append((u, v))
    return ColorTrace(frozenset(members(start)), frozenset(members(black)), forces)


def is_skew_forcing_set(g: Graph, z: Iterable[int]) -> bool:
    return closure_mask(g, _check(g, z)) == g.full_mask


def _search_space(g: Graph) -> tuple[int, list[int]]:
    """Forced members (isolated vertices) and the vertices worth branching on.

    Vertices black in the closure of the forced members never belong to a
    minimum forcing set: dropping one leaves the closure unchanged.
    """
    forced = mask_of(v for v in g.vertices if g.adj[v] == 0)
    base = closure_mask(g, forced)
    return forced, [v for v in g.vertices if not base >> v & 1]


def zminus(g: Graph) -> tuple[int, frozenset[int]]:
    """Skew zero forcing number and one minimum forcing set.

    Subsets are tried by increasing size; any superset of a forcing set
    forces, so the first hit is minimum.
    """
    forced, free = _search_space(g)
    full = g.full_mask
    for k in range(len(free) + 1):
        for extra in itertools.combinations(free, k):
            z = forced | mask_of(extra)
            if closure_mask(g, z) == full:
                return z.bit_count(), frozenset(members(z))
    raise AssertionError("the full vertex set always forces")


def all_minimum_szfs(g: Graph) -> list[frozenset[int]]:
    """Every forcing set of size ``zminus(g)``, in lexicographic order."""
    forced, free = _search_space(g)
    full = g.full_mask
    for k in range(len(free) + 1):
        hits = [
            frozenset(members(forced | mask_of(extra)))
            for extra in itertools.combinations(free, k)
            if closure_mask(g, forced | mask_of(extra)) == full
        ]
        if hits:
            return sorted(hits, key=sorted)
    raise AssertionError("the full vertex set always forces")
