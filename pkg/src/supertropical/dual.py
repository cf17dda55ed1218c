"""Closed bases, dual functionals, ghost kernels, and the double dual.

A base given as matrix rows is closed when multiplying by its own
quasi-identity changes nothing.  Closing a base replaces A by I_A A.
The dual base consists of row functionals read off the twisted inverse
nabla(A) A nabla(A); evaluating them against the columns of A produces
the unit on the diagonal and ghost-or-zero off it, which is exactly the
entry pattern of the second quasi-identity nabla(A) A.

The reconstruction identity A (nabla(A) A nabla(A)) v = v holds for
every fixed point v of the quasi-identity, and membership in the closed
span is tested through that fixed-point equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .dependence import max_rank
from .exceptions import (
    InvalidInputError,
    NotInClosedSpanError,
    ShapeError,
)
from .matrices import Mat, Vec, nabla, quasi_identity
from .scalars import ZERO, ghost, tangible

__all__ = [
    "Functional",
    "MapByMatrix",
    "close_base",
    "dual_base",
    "reconstruct",
    "ghost_kernel",
    "is_ghost_monic",
    "is_tropically_onto",
    "is_iso",
    "double_dual",
]


@dataclass(frozen=True)
class Functional:
    """A linear functional represented strictly by its covector row."""

    covector: Vec

    def __call__(self, v):
        return self.covector.dot(v)

    def __str__(self):
        return str(self.covector)


@dataclass(frozen=True)
class MapByMatrix:
    """The map v -> M v for a fixed matrix M."""

    matrix: Mat

    def __call__(self, v):
        return self.matrix.apply(v)

    @property
    def source_dim(self):
        return self.matrix.cols

    @property
    def target_dim(self):
        return self.matrix.rows


def _row_matrix(B):
    B = list(B)
    if not B:
        raise InvalidInputError("empty base")
    A = Mat([v.entries for v in B])
    if not A.is_square():
        raise InvalidInputError(
            "a base of the full space must be square as a row matrix"
        )
    return A


def close_base(B):
    """Close a d-base: multiply its row matrix by the quasi-identity.

    Returns the closed row matrix together with its rows.  Raises
    SingularMatrixError when the base is not independent enough to have
    a tangible permanent.
    """
    A = _row_matrix(B)
    I_A, _ = quasi_identity(A)
    A_B = I_A @ A
    I_B, _ = quasi_identity(A_B)
    if I_B @ A_B != A_B:
        raise AssertionError("closure is not a fixed point of its own quasi-identity")
    return A_B, A_B.row_list()


def _is_closed(A):
    I_A, _ = quasi_identity(A)
    return I_A @ A == A


def dual_base(B):
    """Dual functionals of a closed base.

    The i-th functional is the i-th row of nabla(A) A nabla(A).  Against
    the columns of A these rows evaluate to the unit on the diagonal and
    ghost or zero elsewhere; both facts are asserted here.
    """
    A = _row_matrix(B)
    if not _is_closed(A):
        raise InvalidInputError("base is not closed; run close_base first")
    nb = nabla(A)
    E = nb @ A @ nb
    n = A.rows
    for i in range(n):
        row = E.row(i)
        for j in range(n):
            val = row.dot(A.col(j))
            if i == j:
                if not val.is_tangible0():
                    raise AssertionError(
                        f"functional {i} does not evaluate to the unit on its own vector"
                    )
            elif not val.is_ghost0():
                raise AssertionError(
                    f"functional {i} is tangible on foreign vector {j}"
                )
    return [Functional(E.row(i)) for i in range(n)]


def reconstruct(B, v):
    """Rebuild a member of the closed span from its dual evaluations.

    Checks membership through the fixed-point equation of the
    quasi-identity and raises NotInClosedSpanError otherwise.
    """
    A = _row_matrix(B)
    if v.dim != A.cols:
        raise ShapeError("vector dimension does not match the base")
    I_A, _ = quasi_identity(A)
    if I_A.apply(v) != v:
        raise NotInClosedSpanError(
            "vector is not a fixed point of the quasi-identity"
        )
    nb = nabla(A)
    out = A.apply((nb @ A @ nb).apply(v))
    if out != v:
        raise AssertionError("reconstruction missed a fixed point")
    return out


def ghost_kernel(M):
    """Predicate for vectors whose image lies entirely in the ghost or
    zero layer."""
    mat = M.matrix if isinstance(M, MapByMatrix) else M

    def in_kernel(v):
        return mat.apply(v).is_ghost()

    return in_kernel


def _combination_grid(generators, extra_rows=()):
    """Coefficient value grid for combinations of the generators:
    column-wise entry differences across all supplied rows, closed once
    under chaining, with a sentinel strictly below everything."""
    vals = {0}
    rows = [list(g) for g in generators] + [list(r) for r in extra_rows]
    diffs = set()
    for j in range(len(rows[0])):
        col = [r[j].value for r in rows if not r[j].is_zero()]
        for a in col:
            for b in col:
                diffs.add(a - b)
    vals |= diffs
    for d in list(diffs):
        vals |= {v + d for v in list(vals)}
    vals.add(min(vals) - 1)
    return sorted(vals)


def is_ghost_monic(M, sample_space):
    """Whether the ghost kernel meets the span of the samples only in
    the ghost submodule.

    Decided on a finite coefficient grid (entry differences, one round
    of chaining, a sentinel, tangible and ghost layers per generator),
    so the verdict is exact on that grid and conservative beyond it.
    """
    mat = M.matrix if isinstance(M, MapByMatrix) else M
    gens = list(sample_space)
    if not gens:
        raise InvalidInputError("need at least one sample generator")
    for g in gens:
        if g.dim != mat.cols:
            raise ShapeError("sample dimension does not match the map")
    in_kernel = ghost_kernel(mat)
    values = _combination_grid(gens, extra_rows=mat.row_list())
    options = [
        [None]
        + [tangible(x) for x in values]
        + [ghost(x) for x in values]
        for _ in gens
    ]
    for tags in product(*options):
        if all(t is None for t in tags):
            continue
        acc = [ZERO] * gens[0].dim
        for t, g in zip(tags, gens):
            if t is None:
                continue
            for j, x in enumerate(g):
                acc[j] = acc[j] + t * x
        v = Vec(acc)
        if v.is_ghost():
            continue
        if in_kernel(v):
            return False
    return True


def is_tropically_onto(M, target_rank, generators=None):
    """Whether the images of the source generators reach the stated
    rank.  Defaults to the standard base of the source."""
    mat = M.matrix if isinstance(M, MapByMatrix) else M
    if generators is None:
        cols = [mat.col(j) for j in range(mat.cols)]
    else:
        cols = [mat.apply(g) for g in generators]
    return max_rank(cols) == target_rank


def is_iso(M, sample_space=None, target_rank=None):
    """Ghost monic and tropically onto together."""
    mat = M.matrix if isinstance(M, MapByMatrix) else M
    if sample_space is None:
        n = mat.cols
        sample_space = [
            Vec([tangible(0) if j == i else ZERO for j in range(n)])
            for i in range(n)
        ]
    if target_rank is None:
        target_rank = mat.rows
    return is_ghost_monic(mat, sample_space) and is_tropically_onto(
        mat, target_rank
    )


def double_dual(B, v):
    """Evaluation vector of v against the dual base: component i is the
    i-th dual functional applied to v."""
    eps = dual_base(B)
    return Vec([e(v) for e in eps])
