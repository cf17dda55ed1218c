"""Closed bases, dual functionals, ghost kernels, and the double dual.

Evaluation convention used throughout: for a closed base held as the
rows of A, the dual guarantees (unit on the matching base vector, ghost
elsewhere) are checked against the columns of A.  The ghost-variant
quasi-identity base below pins that choice: with rows it would evaluate
to a ghost where the unit is required.
"""

import pytest

from supertropical import (
    InvalidInputError,
    MapByMatrix,
    Mat,
    NotInClosedSpanError,
    SingularMatrixError,
    Vec,
    ZERO,
    close_base,
    double_dual,
    dual_base,
    ghost_kernel,
    is_ghost_monic,
    is_iso,
    is_nonsingular,
    is_tropically_onto,
    permanent,
    quasi_identity,
    reconstruct,
)
from helpers import (
    G,
    T,
    mat,
    rand_mat,
    rand_nonsingular,
    rand_vec,
    rows,
    vec,
)

E1, E2 = rows("0 -inf\n-inf 0")
DA = mat("0 1v\n-inf 0")  # idempotent quasi-identity, used as a base


# -- closing a base ----------------------------------------------------

def test_close_standard_base():
    AB, closed = close_base([E1, E2])
    assert AB == Mat.identity(2)
    assert closed == [E1, E2]


def test_close_idempotent_quasi_identity():
    assert DA @ DA == DA
    AB, closed = close_base(DA.row_list())
    assert AB == DA
    assert closed == DA.row_list()


def test_close_diagonal():
    D = Mat.diagonal([T(2), T(3)])
    AB, _ = close_base(D.row_list())
    assert AB == D


def test_close_unclosed_base_changes_it():
    A = mat("0 0\n-inf 0")
    AB, _ = close_base(A.row_list())
    assert AB == mat("0 0v\n-inf 0")
    IA = quasi_identity(AB)[0]
    assert IA @ AB == AB  # now a fixed point


def test_close_singular_rejected():
    with pytest.raises(SingularMatrixError):
        close_base(rows("1 1\n1v 1"))


# -- dual base ---------------------------------------------------------

def test_dual_of_standard_base():
    eps = dual_base([E1, E2])
    assert eps[0].covector == E1
    assert eps[1].covector == E2
    assert eps[0](vec("3 7")) == T(3)
    assert eps[1](vec("3 7")) == T(7)


def test_dual_of_quasi_identity_base():
    eps = dual_base(DA.row_list())
    assert eps[0].covector == vec("0 1v")
    assert eps[1].covector == vec("-inf 0")
    b1, b2 = DA.col(0), DA.col(1)
    assert eps[0](b1) == T(0)
    assert eps[0](b2) == G(1)
    assert eps[1](b1) == ZERO
    assert eps[1](b2) == T(0)


def test_dual_of_diagonal_base():
    D = Mat.diagonal([T(2), T(3)])
    eps = dual_base(D.row_list())
    assert eps[0].covector == vec("-2 -inf")
    assert eps[1].covector == vec("-inf -3")


def test_dual_base_requires_closed_input():
    with pytest.raises(InvalidInputError):
        dual_base(rows("0 0\n-inf 0"))


def test_dual_guarantees_on_generated_bases(rng):
    for _ in range(25):
        A = rand_nonsingular(rng, 3)
        AB, closed = close_base(A.row_list())
        if not is_nonsingular(AB):
            continue
        eps = dual_base(closed)
        emat = Mat([e.covector.entries for e in eps])
        assert is_nonsingular(emat)
        for i in range(3):
            for j in range(3):
                val = eps[i](AB.col(j))
                if i == j:
                    assert val == T(0)
                else:
                    assert val.is_ghost0()


# -- reconstruction ----------------------------------------------------

def test_reconstruct_standard_base(rng):
    for _ in range(10):
        v = rand_vec(rng, 2)
        assert reconstruct([E1, E2], v) == v


def test_reconstruct_quasi_identity_member():
    IA = quasi_identity(DA)[0]
    v = IA.apply(vec("1 1"))
    assert v == vec("2v 1")
    assert reconstruct(DA.row_list(), v) == v


def test_reconstruct_rejects_outsiders():
    # (1, 1v) is not a fixed point of the quasi-identity, so it is not
    # in the closed span.
    with pytest.raises(NotInClosedSpanError):
        reconstruct(DA.row_list(), vec("1 1v"))


def test_reconstruct_base_columns():
    for j in range(2):
        b = DA.col(j)
        assert reconstruct(DA.row_list(), b) == b


def test_reconstruct_randomized_members(rng):
    count = 0
    for _ in range(40):
        A = rand_nonsingular(rng, 3)
        AB, closed = close_base(A.row_list())
        if not is_nonsingular(AB):
            continue
        IA = quasi_identity(AB)[0]
        u = rand_vec(rng, 3)
        v = IA.apply(u)
        if IA.apply(v) != v:
            continue  # idempotence gives a fixed point; guard anyway
        assert reconstruct(closed, v) == v
        count += 1
    assert count >= 20


# -- kernels and map classification ------------------------------------

def test_ghost_kernel_of_identity():
    ker = ghost_kernel(MapByMatrix(Mat.identity(2)))
    assert ker(vec("1v -inf"))
    assert ker(vec("-inf -inf"))
    assert not ker(vec("0 -inf"))


def test_ghost_kernel_of_all_ghost_map(rng):
    ker = ghost_kernel(MapByMatrix(mat("1v 2v\n0v 1v")))
    for _ in range(10):
        assert ker(rand_vec(rng, 2))


def test_ghost_kernel_of_all_ones():
    M = mat("0 0\n0 0")
    ker = ghost_kernel(MapByMatrix(M))
    assert M.apply(vec("0 0")) == vec("0v 0v")
    assert ker(vec("0 0"))
    assert not ker(vec("1 0"))


def test_ghost_monic_identity():
    assert is_ghost_monic(MapByMatrix(Mat.identity(2)), [E1, E2])


def test_ghost_monic_fails_for_ties():
    assert not is_ghost_monic(MapByMatrix(mat("0 0\n0 0")), [E1, E2])
    assert not is_ghost_monic(MapByMatrix(mat("1v 2v\n0v 1v")), [E1, E2])


def test_tropically_onto():
    assert is_tropically_onto(MapByMatrix(Mat.identity(2)), 2)
    assert not is_tropically_onto(MapByMatrix(mat("1v 2v\n0v 1v")), 2)


def test_iso_examples():
    assert is_iso(MapByMatrix(Mat.identity(2)))
    assert not is_iso(MapByMatrix(mat("0 0\n0 0")))
    assert is_iso(MapByMatrix(mat("-inf 2\n7 -inf")))


def test_iso_composition(rng):
    gp = [mat("-inf 2\n7 -inf"), mat("3 -inf\n-inf -1"), mat("-inf -1\n0 -inf")]
    for _ in range(6):
        P = gp[rng.randrange(3)] @ gp[rng.randrange(3)]
        assert is_iso(MapByMatrix(P))


# -- monotonicity ------------------------------------------------------

def test_map_preserves_surpassing(rng):
    for _ in range(40):
        M = rand_mat(rng, 3, 3)
        w = rand_vec(rng, 3)
        bump = rand_vec(rng, 3, zero_p=0.5).nu()
        v = w + bump
        assert v.surpasses(w)
        assert M.apply(v).surpasses(M.apply(w))


def test_map_preserves_nu_order(rng):
    for _ in range(40):
        M = rand_mat(rng, 3, 3)
        w = rand_vec(rng, 3)
        v = w + rand_vec(rng, 3, zero_p=0.4)
        assert v.nu_ge(w)
        assert M.apply(v).nu_ge(M.apply(w))


# -- double dual -------------------------------------------------------

def test_double_dual_standard_base(rng):
    for _ in range(10):
        v = rand_vec(rng, 2)
        assert double_dual([E1, E2], v) == v


def test_double_dual_base_columns():
    f0 = double_dual(DA.row_list(), DA.col(0))
    f1 = double_dual(DA.row_list(), DA.col(1))
    assert f0 == vec("0 -inf")
    assert f1 == vec("1v 0")
    # tangible on the matching index, ghost or zero elsewhere
    for j, f in enumerate((f0, f1)):
        for i, x in enumerate(f):
            if i == j:
                assert x == T(0)
            else:
                assert x.is_ghost0()


def test_double_dual_never_all_ghost_on_tangible_members(rng):
    # A nonzero member of the closed span cannot evaluate to ghost
    # against every dual functional unless it is itself ghost.
    for _ in range(25):
        A = rand_nonsingular(rng, 2)
        AB, closed = close_base(A.row_list())
        if not is_nonsingular(AB):
            continue
        IA = quasi_identity(AB)[0]
        v = IA.apply(rand_vec(rng, 2))
        if v.is_zero() or v.is_ghost():
            continue
        f = double_dual(closed, v)
        assert not f.is_ghost()
