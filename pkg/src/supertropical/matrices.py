"""Vectors, matrices and the permanent-based determinant theory.

Everything here is dense and exact.  A matrix is a grid of
:class:`~supertropical.scalars.Scalar`; the determinant of this theory is the
permanent (no signs exist in a semiring), and a square matrix counts as
nonsingular exactly when its permanent is tangible.  From the permanent we
get the adjoint (transposed grid of minors), the scaled adjoint ``nabla``,
and the pair of quasi-identities ``A @ nabla(A)`` and ``nabla(A) @ A`` that
stand in for the identity matrix in cancellation arguments.

The permanent is computed by row expansion memoized over column subsets,
which costs ``n * 2^n`` scalar operations and, unlike fast assignment
solvers, keeps exact track of whether the maximum is attained twice or
through a ghost entry.  Sizes up to 3 are unrolled.
"""

from __future__ import annotations

from .exceptions import ShapeError, SingularMatrixError
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "Vec",
    "Mat",
    "permanent",
    "is_nonsingular",
    "adjoint",
    "nabla",
    "quasi_identity",
    "g_annihilates",
    "ann_membership",
    "solve_max",
    "solve_raw",
    "surpasses_vec",
    "geq_nu_vec",
]


def _as_scalar_tuple(entries):
    t = tuple(entries)
    for x in t:
        if not isinstance(x, Scalar):
            raise TypeError(f"expected Scalar entries, got {type(x).__name__}")
    return t


class Vec:
    """An immutable dense vector of scalars."""

    __slots__ = ("_e",)

    def __init__(self, entries):
        self._e = _as_scalar_tuple(entries)
        if not self._e:
            raise ShapeError("vectors must have at least one entry")

    @property
    def dim(self):
        return len(self._e)

    @property
    def entries(self):
        return self._e

    def __len__(self):
        return len(self._e)

    def __iter__(self):
        return iter(self._e)

    def __getitem__(self, i):
        return self._e[i]

    def __add__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        if len(self._e) != len(other._e):
            raise ShapeError("vector dimensions differ")
        return Vec(a + b for a, b in zip(self._e, other._e))

    def __rmul__(self, alpha):
        if not isinstance(alpha, Scalar):
            return NotImplemented
        return Vec(alpha * x for x in self._e)

    def scale(self, alpha):
        return Vec(alpha * x for x in self._e)

    def dot(self, other):
        if len(self._e) != len(other._e):
            raise ShapeError("vector dimensions differ")
        acc = ZERO
        for a, b in zip(self._e, other._e):
            acc = acc + a * b
        return acc

    def nu(self):
        return Vec(x.nu() for x in self._e)

    def nu_hat(self):
        return Vec(x.nu_hat() for x in self._e)

    def is_zero(self):
        return all(x.is_zero() for x in self._e)

    def is_tangible(self):
        """Every entry tangible or zero."""
        return all(x.is_tangible0() for x in self._e)

    def is_ghost(self):
        """Every entry ghost or zero, i.e. the vector is zero-like."""
        return all(x.is_ghost0() for x in self._e)

    def support(self):
        """Indices of the nonzero entries."""
        return tuple(i for i, x in enumerate(self._e) if not x.is_zero())

    def surpasses(self, other):
        """Componentwise ghost surpassing."""
        if len(self._e) != len(other._e):
            raise ShapeError("vector dimensions differ")
        return all(a.ghost_surpasses(b) for a, b in zip(self._e, other._e))

    def nu_ge(self, other):
        if len(self._e) != len(other._e):
            raise ShapeError("vector dimensions differ")
        return all(a.nu_ge(b) for a, b in zip(self._e, other._e))

    def nu_le(self, other):
        return other.nu_ge(self)

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def __str__(self):
        return " ".join(str(x) for x in self._e)

    def __repr__(self):
        return f"Vec({self})"


class Mat:
    """An immutable dense matrix of scalars, stored as row tuples."""

    __slots__ = ("_r", "_shape")

    def __init__(self, rows):
        grid = []
        for r in rows:
            if isinstance(r, Vec):
                grid.append(r.entries)
            else:
                grid.append(_as_scalar_tuple(r))
        if not grid:
            raise ShapeError("matrices must have at least one row")
        width = len(grid[0])
        if width == 0:
            raise ShapeError("matrices must have at least one column")
        for r in grid:
            if len(r) != width:
                raise ShapeError("ragged rows")
        self._r = tuple(grid)
        self._shape = (len(grid), width)

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n):
        return cls.diagonal([ONE] * n)

    @classmethod
    def diagonal(cls, scalars):
        scalars = list(scalars)
        n = len(scalars)
        return cls(
            [[scalars[i] if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_cols(cls, cols):
        cols = [c.entries if isinstance(c, Vec) else _as_scalar_tuple(c) for c in cols]
        if not cols:
            raise ShapeError("need at least one column")
        return cls(list(zip(*cols)))

    # -- shape and access ----------------------------------------------

    @property
    def rows(self):
        return self._shape[0]

    @property
    def cols(self):
        return self._shape[1]

    @property
    def shape(self):
        return self._shape

    @property
    def row_tuples(self):
        return self._r

    def entry(self, i, j):
        return self._r[i][j]

    def row(self, i):
        return Vec(self._r[i])

    def col(self, j):
        return Vec(r[j] for r in self._r)

    def row_list(self):
        return [Vec(r) for r in self._r]

    def col_list(self):
        return [self.col(j) for j in range(self.cols)]

    def is_square(self):
        return self._shape[0] == self._shape[1]

    def submatrix(self, row_idx, col_idx):
        return Mat([[self._r[i][j] for j in col_idx] for i in row_idx])

    def transpose(self):
        return Mat(list(zip(*self._r)))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self._shape != other._shape:
            raise ShapeError("matrix shapes differ")
        return Mat(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._r, other._r)
            ]
        )

    def __matmul__(self, other):
        if isinstance(other, Vec):
            return self.apply(other)
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self._shape} by {other._shape}"
            )
        bt = tuple(zip(*other._r))
        out = []
        for ra in self._r:
            row = []
            for cb in bt:
                acc = ZERO
                for a, b in zip(ra, cb):
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Mat(out)

    def __rmul__(self, alpha):
        if not isinstance(alpha, Scalar):
            return NotImplemented
        return self.scale(alpha)

    def scale(self, alpha):
        return Mat([[alpha * x for x in r] for r in self._r])

    def apply(self, v):
        """Matrix times column vector."""
        if isinstance(v, Vec):
            ve = v.entries
        else:
            ve = _as_scalar_tuple(v)
        if self.cols != len(ve):
            raise ShapeError(f"cannot apply {self._shape} to a {len(ve)}-vector")
        out = []
        for r in self._r:
            acc = ZERO
            for a, b in zip(r, ve):
                acc = acc + a * b
            out.append(acc)
        return Vec(out)

    def nu(self):
        return Mat([[x.nu() for x in r] for r in self._r])

    def nu_hat(self):
        return Mat([[x.nu_hat() for x in r] for r in self._r])

    def is_ghost(self):
        return all(x.is_ghost0() for r in self._r for x in r)

    def surpasses(self, other):
        """Entrywise ghost surpassing."""
        if self._shape != other._shape:
            raise ShapeError("matrix shapes differ")
        return all(
            a.ghost_surpasses(b)
            for ra, rb in zip(self._r, other._r)
            for a, b in zip(ra, rb)
        )

    # -- plumbing -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self._r == other._r

    def __hash__(self):
        return hash(self._r)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self._r)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._r)
        return f"Mat[{body}]"


# -- permanents ---------------------------------------------------------


def _perm2(r0, r1):
    return r0[0] * r1[1] + r0[1] * r1[0]


def _perm3(r0, r1, r2):
    # Expansion along the first row; the three 2x2 minors are exactly the
    # memoized states the subset method would build.
    m0 = r1[1] * r2[2] + r1[2] * r2[1]
    m1 = r1[0] * r2[2] + r1[2] * r2[0]
    m2 = r1[0] * r2[1] + r1[1] * r2[0]
    return r0[0] * m0 + r0[1] * m1 + r0[2] * m2


def _perm_rows(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return _perm2(rows[0], rows[1])
    if n == 3:
        return _perm3(rows[0], rows[1], rows[2])
    # dp[mask] = permanent of the first popcount(mask) rows restricted to
    # the column set in mask.
    dp = [ZERO] * (1 << n)
    dp[0] = ONE
    for mask in range(1, 1 << n):
        i = mask.bit_count() - 1
        row = rows[i]
        acc = ZERO
        m = mask
        while m:
            low = m & -m
            j = low.bit_length() - 1
            acc = acc + row[j] * dp[mask ^ low]
            m ^= low
        dp[mask] = acc
    return dp[-1]


def permanent(A):
    """The permanent determinant: max over permutations of the entry sums,
    with ties and ghost entries making the result ghost."""
    if not A.is_square():
        raise ShapeError("permanent requires a square matrix")
    return _perm_rows(A.row_tuples)


def is_nonsingular(A):
    return permanent(A).is_tangible()


def adjoint(A):
    """Transposed grid of minors: entry (i, j) is the permanent of A with
    row j and column i removed.  For a 1x1 matrix this is [[one]]."""
    if not A.is_square():
        raise ShapeError("adjoint requires a square matrix")
    n = A.rows
    if n == 1:
        return Mat([[ONE]])
    rows = A.row_tuples
    out = [[None] * n for _ in range(n)]
    for j in range(n):
        kept = [rows[r] for r in range(n) if r != j]
        for i in range(n):
            minor = [tuple(x for c, x in enumerate(r) if c != i) for r in kept]
            out[i][j] = _perm_rows(minor)
    return Mat(out)


def nabla(A):
    """The adjoint divided by the permanent.

    Only defined when the permanent is tangible (the matrix is
    nonsingular); otherwise raises SingularMatrixError.
    """
    p = permanent(A)
    if not p.is_tangible():
        raise SingularMatrixError(f"permanent is {p}, not tangible")
    return adjoint(A).scale(ONE / p)


def quasi_identity(A):
    """The pair (A @ nabla(A), nabla(A) @ A).

    Both are multiplicatively idempotent, nonsingular, and surpass the
    identity entrywise: tangible one on the diagonal, ghost or zero off it.
    """
    an = nabla(A)
    return A @ an, an @ A


def g_annihilates(A, v):
    """True when A applied to the column vector v lands entirely in the
    ghost-or-zero layer."""
    return A.apply(v).is_ghost()


def ann_membership(A, v):
    """Alias of :func:`g_annihilates`: membership of v in the set of
    columns annihilating A."""
    return g_annihilates(A, v)


def solve_raw(A, v):
    """nabla(A) applied to v, ghosts kept as they come."""
    return nabla(A).apply(v)


def solve_max(A, v):
    """The tangible lift of ``nabla(A) @ v``.

    This is the value-largest tangible vector x whose image A @ x covers v
    in the ghost sense: every component of ``v + A @ x`` is ghost or zero.
    That covering property is checked before returning.
    """
    x = nabla(A).apply(v).nu_hat()
    image = A.apply(x)
    for a, b in zip(v, image):
        if not (a + b).is_ghost0():
            raise AssertionError(
                "solver postcondition failed: component "
                f"{a} + {b} is tangible"
            )
    return x


def surpasses_vec(v, w):
    return v.surpasses(w)


def geq_nu_vec(v, w):
    return v.nu_ge(w)
