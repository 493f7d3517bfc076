import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import rank_by_minors
from skewforcing import graphs as gr
from skewforcing.matching import matching_number
from skewforcing.skewrank import (
    BudgetExceeded,
    SkewMatrixGF,
    SkewRankError,
    batch_rank_gfp,
    max_skew_rank_sampled,
    min_skew_rank_exhaustive,
    min_skew_rank_witness,
    mr_formula,
    random_skew_matrix,
    rank_bounds,
    rank_gfp,
)

PRIMES = st.sampled_from([3, 5, 7, 11, 13])


def test_random_matrix_examples():
    a = random_skew_matrix(gr.complete(2), 3, seed=1)
    assert (a.entries[0, 1] + a.entries[1, 0]) % 3 == 0 and a.entries[0, 1]
    assert rank_gfp(a) == 2
    assert rank_gfp(random_skew_matrix(gr.empty(4), 5, seed=0)) == 0
    c4 = random_skew_matrix(gr.cycle(4), 5, seed=3)
    assert np.count_nonzero(c4.entries) == 8
    assert c4.graph() == gr.cycle(4)


@pytest.mark.parametrize("p", [2, 4, 9, 1])
def test_bad_primes_rejected(p):
    with pytest.raises(SkewRankError):
        random_skew_matrix(gr.path(3), p, seed=0)


def test_matrix_must_be_skew():
    with pytest.raises(SkewRankError):
        SkewMatrixGF(3, [[0, 1], [1, 0]])


def test_rank_examples():
    assert rank_gfp(SkewMatrixGF(5, np.zeros((3, 3), dtype=int))) == 0
    assert rank_gfp(SkewMatrixGF(3, [[0, 1], [-1, 0]])) == 2
    # complete bipartite K_{2,2} as [[0, x y^T], [-y x^T, 0]] has rank 2
    x, y = np.array([1, 2]), np.array([3, 4])
    blk = np.outer(x, y)
    a = np.block([[np.zeros((2, 2), int), blk], [-blk.T, np.zeros((2, 2), int)]])
    m = SkewMatrixGF(7, a)
    assert m.graph() == gr.complete_multipartite([2, 2])
    assert rank_gfp(m) == 2


@given(graphs(max_order=9), PRIMES, st.integers(0, 2**32))
@settings(max_examples=150)
def test_rank_is_even(g, p, seed):
    assert rank_gfp(random_skew_matrix(g, p, seed)) % 2 == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_rank_agrees_with_minors(p):
    rng = np.random.default_rng(p)
    for n in range(1, 6):
        for g in gr.enumerate_connected(n):
            a = random_skew_matrix(g, p, rng)
            assert rank_gfp(a) == rank_by_minors(a.entries.tolist(), p)


@given(st.integers(1, 5), st.integers(1, 5), PRIMES, st.integers(0, 2**32))
@settings(max_examples=60)
def test_batch_rank_general_matrices(r, c, p, seed):
    rng = np.random.default_rng(seed)
    mats = rng.integers(0, p, size=(4, r, c))
    # sparsify so rank-deficient cases show up
    mats[rng.random(mats.shape) < 0.5] = 0
    for k, m in enumerate(mats):
        assert batch_rank_gfp(mats, p)[k] == rank_by_minors_rect(m.tolist(), p)


def rank_by_minors_rect(a, p):
    r, c = len(a), len(a[0])
    n = max(r, c)
    square = [row + [0] * (n - c) for row in a] + [[0] * n for _ in range(n - r)]
    return rank_by_minors(square, p)


@given(graphs(max_order=8), PRIMES, st.integers(0, 2**32))
@settings(max_examples=80)
def test_diagonal_congruence_keeps_rank_and_graph(g, p, seed):
    a = random_skew_matrix(g, p, seed)
    d = np.random.default_rng(seed).integers(1, p, size=g.order)
    b = a.congruent(d)
    assert b.graph() == g
    assert rank_gfp(b) == rank_gfp(a)


@pytest.mark.parametrize(
    "g, expected",
    [(gr.path(4), 4), (gr.cycle(5), 4), (gr.tensor_like_k3xk3(), 8)],
)
def test_sampled_max_rank(g, expected):
    assert max_skew_rank_sampled(g, 11, 20, seed=0) == expected == 2 * matching_number(g)


@pytest.mark.parametrize(
    "g, p, expected",
    [(gr.path(4), 3, 4), (gr.complete_multipartite([2, 3]), 3, 2),
     (gr.tensor_like_k3xk3(), 3, 6), (gr.cycle(4), 3, 2), (gr.cycle(5), 3, 4),
     (gr.empty(3), 3, 0)],
)
def test_min_rank_examples(g, p, expected):
    assert min_skew_rank_exhaustive(g, p) == expected
    rank, witness = min_skew_rank_witness(g, p)
    assert rank_gfp(witness) == rank and witness.graph() == g


@pytest.mark.parametrize("p", [3, 5])
def test_forest_normalisation_loses_nothing(p):
    budget = 1 << 16
    for n in range(2, 6):
        for g in gr.enumerate_connected(n):
            if (p - 1) ** g.size > budget:
                continue
            assert min_skew_rank_exhaustive(g, p) == min_skew_rank_exhaustive(
                g, p, normalize_forest=False
            )


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        min_skew_rank_exhaustive(gr.complete(6), 5, normalize_forest=False)
    with pytest.raises(BudgetExceeded):
        min_skew_rank_exhaustive(gr.complete(6), 3, budget=10)


@pytest.mark.parametrize("p", [3, 5])
def test_rank_sandwich_small_graphs(p):
    for n in range(1, 6):
        for g in gr.enumerate_connected(n):
            b = rank_bounds(g, p)
            assert b.lower <= b.exact_gfp <= b.upper <= g.order


def test_rank_bounds_examples():
    b = rank_bounds(gr.complete_multipartite([3, 3]))
    assert (b.lower, b.upper, b.exact_gfp) == (2, 6, None)
    b = rank_bounds(gr.path(5), p=3)
    assert (b.lower, b.upper, b.exact_gfp) == (4, 4, 4)
    b = rank_bounds(gr.tensor_like_k3xk3())
    assert (b.lower, b.upper) == (4, 8)


def test_mr_formula_examples():
    assert mr_formula(gr.cycle(4)) == 2
    assert mr_formula(gr.cycle(5)) == 4
    assert mr_formula(gr.cycle(6)) == 4
    assert mr_formula(gr.complete(5)) == 2
    assert mr_formula(gr.tensor_like_k3xk3()) is None
    assert mr_formula(gr.Graph(1)) == 0
    assert mr_formula(gr.disjoint_union(gr.path(3), gr.cycle(5))) == 6
    for t in gr.enumerate_trees(7):
        assert mr_formula(t) == 2 * matching_number(t)


@pytest.mark.parametrize("n", range(1, 9))
def test_tree_formula_agrees_with_gf3(n):
    for t in gr.enumerate_trees(n):
        assert mr_formula(t) == min_skew_rank_exhaustive(t, 3)


@pytest.mark.parametrize("n", range(3, 8))
def test_unicyclic_formula_agrees_with_gf3(n):
    for g in gr.enumerate_connected(n):
        if gr.is_unicyclic(g):
            assert mr_formula(g) == min_skew_rank_exhaustive(g, 3)


@pytest.mark.parametrize("p, n, expected", [(3, 4, 2), (3, 5, 4), (5, 6, 2)])
def test_clique_rank_two_needs_p_plus_one_points(p, n, expected):
    # rank 2 on K_n needs n distinct points of the projective line over GF(p)
    assert min_skew_rank_exhaustive(gr.complete(n), p) == expected
