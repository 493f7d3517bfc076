"""Skew zero forcing sets, matchings and minimum skew rank of small graphs."""

from .forcing import ColorTrace, all_minimum_szfs, is_skew_forcing_set, skew_closure, zminus
from .graphs import (
    FamilySpec,
    Graph,
    GraphError,
    cartesian_product,
    corona,
    enumerate_connected,
    from_edge_list,
    generate,
    induced_subgraph,
    parse_graph6,
    emit_graph6,
    tensor_like_k3xk3,
    vertex_sum,
)
from .matching import (
    all_maximum_matchings,
    count_perfect_matchings,
    is_uniquely_restricted,
    matching_number,
    maximum_matching,
    maximum_ur_matching,
    unsaturated_set,
)
from .matroid import (
    SetFamily,
    dual_bases,
    is_matroid_basis_family,
    matching_matroid_bases,
    verify_zero_forcing_matroid,
)
from .skewrank import (
    RankBounds,
    SkewMatrixGF,
    max_skew_rank_sampled,
    min_skew_rank_exhaustive,
    mr_formula,
    random_skew_matrix,
    rank_bounds,
    rank_gfp,
)

__version__ = "0.1.0"
