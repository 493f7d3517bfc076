"""Matching matroids, basis-exchange checks, and the zero forcing matroid.

For a bipartite graph whose maximum matchings are all uniquely restricted,
the minimum skew zero forcing sets are exactly the complements of the
vertex sets saturated by maximum matchings.  :func:`verify_zero_forcing_matroid`
checks that on a given graph by computing both families independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .forcing import all_minimum_szfs
from .graphs import Graph, is_bipartite, members
from .matching import all_maximum_matchings, is_uniquely_restricted, saturated_mask

__all__ = [
    "SetFamily",
    "MatroidReport",
    "matching_matroid_bases",
    "is_matroid_basis_family",
    "dual_bases",
    "all_max_matchings_ur",
    "verify_zero_forcing_matroid",
]


@dataclass(frozen=True)
class SetFamily:
    ground: frozenset[int]
    members: frozenset[frozenset[int]]

    def __post_init__(self):
        object.__setattr__(self, "ground", frozenset(self.ground))
        object.__setattr__(self, "members", frozenset(frozenset(m) for m in self.members))
        for m in self.members:
            if not m <= self.ground:
                raise ValueError(f"member {sorted(m)} is not inside the ground set")

    @classmethod
    def of(cls, ground: Iterable[int], sets: Iterable[Iterable[int]]) -> SetFamily:
        return cls(frozenset(ground), frozenset(frozenset(s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[list[int]]:
        return sorted(sorted(m) for m in self.members)


def matching_matroid_bases(g: Graph) -> SetFamily:
    """Distinct vertex sets saturated by maximum matchings."""
    bases = {frozenset(members(saturated_mask(m))) for m in all_maximum_matchings(g)}
    return SetFamily(frozenset(g.vertices), frozenset(bases))


def is_matroid_basis_family(f: SetFamily) -> bool:
    """Equal cardinalities plus the basis exchange axiom, by brute force."""
    if not f.members:
        raise ValueError("a basis family must be nonempty")
    sizes = {len(b) for b in f.members}
    if len(sizes) != 1:
        return False
    for b1 in f.members:
        for b2 in f.members:
            for x in b1 - b2:
                drop = b1 - {x}
                if not any(drop | {y} in f.members for y in b2 - b1):
                    return False
    return True


def dual_bases(f: SetFamily) -> SetFamily:
    return SetFamily(f.ground, frozenset(f.ground - b for b in f.members))


def all_max_matchings_ur(g: Graph) -> bool:
    return all(is_uniquely_restricted(g, m) for m in all_maximum_matchings(g))


@dataclass
class MatroidReport:
    status: str  # "pass", "fail" or "precondition_failed"
    reason: str = ""
    forcing_family: SetFamily | None = None
    dual_family: SetFamily | None = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def verify_zero_forcing_matroid(g: Graph) -> MatroidReport:
    """Minimum forcing sets vs. the dual of the matching matroid.

    Graphs outside the hypothesis (not bipartite, or with a maximum matching
    that is not uniquely restricted) get status ``precondition_failed``.
    """
    if not is_bipartite(g):
        return MatroidReport("precondition_failed", "graph is not bipartite")
    if not all_max_matchings_ur(g):
        return MatroidReport(
            "precondition_failed", "max matchings not uniquely restricted"
        )
    ground = frozenset(g.vertices)
    forcing = SetFamily(ground, frozenset(all_minimum_szfs(g)))
    dual = dual_bases(matching_matroid_bases(g))
    is_matroid = is_matroid_basis_family(forcing)
    same = forcing == dual
    report = MatroidReport(
        "pass" if is_matroid and same else "fail",
        forcing_family=forcing,
        dual_family=dual,
        details={"basis_exchange": is_matroid, "equals_dual": same},
    )
    if not is_matroid:
        report.reason = "minimum forcing sets violate basis exchange"
    elif not same:
        report.reason = "minimum forcing sets differ from dual matching-matroid bases"
    return report
