"""Spanning decisions, critical elements, s-bases, thickness, and
change of base.

A spanning witness asserts v = (tangible combination) + ghost, so the
ghost surplus is part of the returned value and every test can replay
the reconstruction identity exactly.
"""

import pytest

from supertropical import (
    Mat,
    NoChangeOfBaseError,
    Vec,
    ZERO,
    change_of_base,
    is_almost_tangible,
    is_critical,
    is_generalized_permutation,
    is_thick,
    max_rank,
    s_base,
    spans,
    spans_set,
)
from helpers import (
    G,
    T,
    Z,
    mat,
    rand_tangible,
    rand_tangible_vec,
    rand_vec,
    rows,
    vec,
)

E1, E2 = rows("0 -inf\n-inf 0")
CB_TRIPLE = rows("1 1\n1v 1\n1 1v")


# -- spans -------------------------------------------------------------

def test_spans_two_generator_example():
    S = rows("1 1\n2 3")
    w = spans(S, vec("4 5"))
    assert w is not None
    assert w.support == (0, 1)
    assert w.coeffs == (T(2), T(2))
    assert w.ghost_part == vec("-inf -inf")
    assert w.is_valid(S, vec("4 5"))


def test_spans_fails_on_ghosted_generator():
    assert spans([vec("1v 3")], vec("1 3v")) is None


def test_spans_with_ghost_surplus():
    w = spans([vec("1 2")], vec("1 3v"))
    assert w is not None
    assert w.coeffs == (T(0),)
    assert w.ghost_part == vec("-inf 3v")


def test_spans_member_of_family():
    S = rows("1 2v\n0 1")
    w = spans(S, S[0])
    assert w is not None
    assert w.support == (0,)
    assert w.coeffs[0] == T(0)
    assert w.is_valid(S, S[0])


def test_spans_zero_target():
    # The zero vector is spanned only via a zero generator.
    zero = vec("-inf -inf")
    assert spans(rows("1 2\n0 1"), zero) is None
    w = spans([vec("1 2"), zero], zero)
    assert w is not None and w.support == (1,)


def test_spans_set_examples(rng):
    S = rows("0 -inf\n-inf 0")
    assert spans_set(S, S)
    extras = [rand_vec(rng, 2) for _ in range(5)]
    assert spans_set(S, extras)  # the standard base spans everything
    assert not spans_set([vec("1 1v")], [vec("1 1")])


def test_sum_of_spanners_can_fail():
    # Both generators span v on their own, their sum does not.
    v = vec("1 3v")
    w1, w2 = vec("1 2"), vec("1 3")
    assert spans([w1], v) is not None
    assert spans([w2], v) is not None
    assert w1 + w2 == vec("1v 3")
    assert spans([w1 + w2], v) is None


# -- critical elements -------------------------------------------------

def test_standard_base_vectors_critical():
    assert is_critical(0, [E1, E2])
    assert is_critical(1, [E1, E2])


def test_spanned_vector_not_critical():
    S = rows("0 -inf\n-inf 0\n0 0")
    assert not is_critical(2, S)


def test_ghost_variant_family_all_critical():
    for i in range(3):
        assert is_critical(i, CB_TRIPLE)


def test_is_critical_index_checked():
    with pytest.raises(Exception):
        is_critical(5, [E1, E2])


# -- s-bases -----------------------------------------------------------

def test_s_base_drops_spanned_vector():
    r = s_base(rows("0 -inf\n-inf 0\n0 0"))
    assert r.kind == "s-base"
    assert r.indices == (0, 1)
    assert r.rank == 2
    assert r.normalized == (vec("0 -inf"), vec("-inf 0"))


def test_s_base_keeps_ghost_variants():
    r = s_base(CB_TRIPLE)
    assert r.indices == (0, 1, 2)
    assert r.normalized == (vec("0 0"), vec("0v 0"), vec("0 0v"))


def test_s_base_scaled_axes_with_extras():
    S = [T(2) * E1, T(3) * E2, vec("2 3")]
    r = s_base(S)
    assert r.indices == (0, 1)
    assert r.normalized == (E1, E2)


def test_s_base_collapses_projective_duplicates():
    S = [vec("1 2"), vec("3 4"), vec("0 1")]  # first and third same class
    r = s_base(S)
    assert 0 in r.indices and 2 not in r.indices


def _spanning_instance(rng, n=3):
    base = []
    for _ in range(rng.randint(1, 3)):
        v = rand_tangible_vec(rng, n, lo=-2, hi=3)
        base.append(v)
    extras = []
    for _ in range(rng.randint(0, 2)):
        comb = Vec([ZERO] * n)
        for b in base:
            if rng.random() < 0.7:
                comb = comb + rand_tangible(rng, -2, 2) * b
        if not comb.is_zero():
            extras.append(comb)
    return base + extras


def test_s_base_projective_invariance(rng):
    for _ in range(25):
        S = _spanning_instance(rng)
        r1 = s_base(S)
        order = list(range(len(S)))
        rng.shuffle(order)
        S2 = [rand_tangible(rng, -2, 2) * S[i] for i in order]
        r2 = s_base(S2)
        assert set(r1.normalized) == set(r2.normalized)


def test_s_base_members_are_critical(rng):
    for _ in range(20):
        S = _spanning_instance(rng)
        r = s_base(S)
        for i in r.indices:
            assert is_critical(i, S)


def test_s_base_spans_input_and_meets_rank_bound(rng):
    for _ in range(20):
        S = _spanning_instance(rng)
        r = s_base(S)
        assert spans_set(list(r.normalized), S)
        assert len(r.indices) >= max_rank(S)


def test_s_base_members_almost_tangible(rng):
    for _ in range(20):
        S = _spanning_instance(rng)
        r = s_base(S)
        for v in r.normalized:
            assert is_almost_tangible(v, S)


def test_any_spanning_subset_contains_enough(rng):
    # A spanning set can never be smaller than the rank.
    for _ in range(20):
        S = _spanning_instance(rng)
        m = max_rank(S)
        for size in range(1, len(S) + 1):
            subset = S[:size]
            if spans_set(subset, S):
                assert size >= m


def test_span_closure_is_a_subspace(rng):
    for _ in range(20):
        S = [rand_tangible_vec(rng, 3, lo=-2, hi=2) for _ in range(2)]
        spanned = []
        for _ in range(2):
            comb = Vec([ZERO] * 3)
            for s in S:
                comb = comb + rand_tangible(rng, -2, 2) * s
            bump = rand_vec(rng, 3, zero_p=0.6, ghost_p=1.0).nu()
            spanned.append(comb + bump)
        v, u = spanned
        assert spans(S, v) is not None
        assert spans(S, u) is not None
        assert spans(S, v + u) is not None
        assert spans(S, rand_tangible(rng) * v) is not None


# -- thickness ---------------------------------------------------------

def test_scaled_subspace_is_thick(rng):
    V = [rand_vec(rng, 3) for _ in range(3)]
    W = [T(5) * v for v in V]
    assert is_thick(W, V)


def test_strip_is_thick():
    assert is_thick(rows("3 0\n0 3"), [E1, E2])


def test_line_is_not_thick():
    assert not is_thick([vec("1 1")], [E1, E2])


# -- generalized permutations ------------------------------------------

def test_generalized_permutation_examples():
    assert is_generalized_permutation(mat("-inf 2\n7 -inf"))
    assert not is_generalized_permutation(mat("0 0\n-inf 0"))
    assert is_generalized_permutation(Mat.identity(3))


def test_generalized_permutation_rejects_ghost_entries():
    assert not is_generalized_permutation(mat("-inf 2v\n7 -inf"))


# -- change of base ----------------------------------------------------

def test_change_of_base_diagonal():
    A = Mat.identity(2)
    Ap = Mat.diagonal([T(2), T(3)])
    P = change_of_base(A, Ap)
    assert P == Mat.diagonal([T(2), T(3)])
    assert P @ A == Ap


def test_change_of_base_antidiagonal():
    A = Mat.identity(2)
    Ap = mat("-inf 3\n5 -inf")
    P = change_of_base(A, Ap)
    assert P == mat("-inf 3\n5 -inf")
    assert is_generalized_permutation(P)


def test_change_of_base_failure():
    with pytest.raises(NoChangeOfBaseError):
        change_of_base(Mat.identity(2), mat("0 0\n-inf 0"))


# -- almost tangible ---------------------------------------------------

def test_tangible_vectors_almost_tangible():
    assert is_almost_tangible(vec("1 2"), [E1, E2])


def test_ghosted_vector_almost_tangible_in_small_space():
    S = rows("1 1v\n0 1")
    assert is_almost_tangible(vec("1 1v"), S)


def test_nonzero_ghost_never_almost_tangible():
    assert not is_almost_tangible(vec("1v 1v"), [E1, E2])
    assert not is_almost_tangible(vec("-inf 0v"), [E1, E2])


def test_zero_vector_almost_tangible():
    assert is_almost_tangible(vec("-inf -inf"), [E1, E2])
