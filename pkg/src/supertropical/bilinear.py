"""Bilinear forms through Gram matrices: orthogonality, radicals,
degeneracy, and the two symmetry notions.

A form is stored strictly, as the Gram matrix of a generator list, and
evaluated on coefficient vectors by x' G y.  The ghost-orthogonality
relation is directional, so the complement predicate takes a side.

Symmetry verdicts are grid-bounded by design.  The search normalizes
the first coordinate of both arguments to the unit (scaling either
argument by a tangible scalar scales both evaluation orders alike, so
ghostness and value comparisons are unaffected), draws the remaining
coordinates from the entry-difference grid of the Gram matrix with a
sentinel below everything, and optionally adds seeded random tangible
samples.  A verdict therefore certifies violations absolutely, and
certifies consistency relative to the searched set, which the verdict
records.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .dependence import DepWitness, is_dependent
from .exceptions import DegenerateSpaceError, InvalidInputError, ShapeError
from .matrices import Mat, Vec, is_nonsingular, permanent
from .scalars import ONE, ZERO, Scalar, ghost, tangible

__all__ = [
    "GramForm",
    "SymmetryVerdict",
    "gram_of_dot",
    "gram_of_form",
    "evaluate",
    "is_g_orthogonal",
    "orthogonal_complement_pred",
    "radical_and_nondegenerate",
    "gram_dependence",
    "is_orthogonal_symmetric",
    "is_supertropically_symmetric",
    "isotropy",
]


@dataclass(frozen=True)
class GramForm:
    """A strict bilinear form, fixed by its Gram matrix."""

    G: Mat

    def __post_init__(self):
        if not self.G.is_square():
            raise ShapeError("Gram matrix must be square")

    @property
    def arity(self):
        return self.G.rows


@dataclass(frozen=True)
class SymmetryVerdict:
    """Outcome of a symmetry search.

    ``witness`` is a violating argument pair when ``consistent`` is
    False.  ``grid_complete`` records that the deterministic grid was
    enumerated in full; ``samples`` counts the extra random pairs tried.
    """

    consistent: bool
    witness: tuple | None
    grid_complete: bool
    samples: int


def gram_of_dot(W):
    """Gram matrix of a family under the tropical dot product."""
    W = list(W)
    if not W:
        raise InvalidInputError("empty family")
    n = W[0].dim
    for w in W:
        if w.dim != n:
            raise ShapeError("mixed dimensions")
    return GramForm(Mat([[v.dot(w) for w in W] for v in W]))


def gram_of_form(F, W):
    """Gram matrix of a family of coefficient vectors under an ambient
    form."""
    return GramForm(
        Mat([[evaluate(F, v, w) for w in W] for v in W])
    )


def evaluate(F, x, y):
    """x' G y."""
    G = F.G
    if x.dim != G.rows or y.dim != G.cols:
        raise ShapeError("coefficient vectors do not match the form")
    return x.dot(G.apply(y))


def is_g_orthogonal(F, x, y):
    """Whether the evaluation lands in the ghost-or-zero layer.  The
    relation is directional: check both orders if you need both."""
    return evaluate(F, x, y).is_ghost0()


def orthogonal_complement_pred(F, S, side="left"):
    """Predicate for the ghost-orthogonal complement of a family.

    With ``side="left"`` the tested vector is the left argument against
    every member of S; ``side="right"`` puts it on the right.
    """
    S = list(S)
    if side not in ("left", "right"):
        raise InvalidInputError("side must be 'left' or 'right'")

    def in_complement(v):
        if side == "left":
            return all(is_g_orthogonal(F, v, s) for s in S)
        return all(is_g_orthogonal(F, s, v) for s in S)

    return in_complement


def radical_and_nondegenerate(F):
    """Membership predicate for the radical together with the
    nondegeneracy verdict.

    A vector is in the radical exactly when its row of evaluations is
    ghost everywhere, i.e. when the transposed Gram matrix annihilates
    it.  Nondegeneracy for a strict form is the tangibility of the Gram
    permanent.
    """
    G = F.G
    Gt = G.transpose()

    def in_radical(x):
        return Gt.apply(x).is_ghost()

    return in_radical, is_nonsingular(G)


def _grid_radical_witness(W, F):
    """A combination of W outside the ghost layer that the form
    annihilates against every member, if the coefficient grid holds one."""
    k = len(W)
    gram = gram_of_form(F, W).G
    vals = {0}
    for i in range(k):
        for j in range(k):
            x = gram.entry(i, j)
            if not x.is_zero():
                for a in range(k):
                    for b in range(k):
                        y = gram.entry(a, b)
                        if not y.is_zero():
                            vals.add(x.value - y.value)
    vals.add(min(vals) - 1)
    options = [
        [None] + [tangible(v) for v in sorted(vals)] + [ghost(v) for v in sorted(vals)]
        for _ in range(k)
    ]
    n = W[0].dim
    for tags in product(*options):
        if all(t is None for t in tags):
            continue
        coeff = Vec([t if t is not None else ZERO for t in tags])
        acc = [ZERO] * n
        for t, w in zip(tags, W):
            if t is None:
                continue
            for j, x in enumerate(w):
                acc[j] = acc[j] + t * x
        v = Vec(acc)
        if v.is_ghost():
            continue
        if all(
            coeff.dot(gram.col(j)).is_ghost0() for j in range(k)
        ):
            return v
    return None


def gram_dependence(W, F, strict=False):
    """Dependence of a family read off its Gram permanent.

    A tangible Gram permanent means independence: returns None.  A ghost
    permanent should force a dependence witness when the spanned
    subspace is nondegenerate; the witness is searched for and returned.
    When no witness exists the precondition is checked on the
    coefficient grid, and a degenerate span raises DegenerateSpaceError
    (that is the only way the implication can fail).  With ``strict``
    the precondition is checked up front.
    """
    W = list(W)
    if not W:
        raise InvalidInputError("empty family")
    if strict:
        bad = _grid_radical_witness(W, F)
        if bad is not None:
            raise DegenerateSpaceError(
                f"span has a non-ghost radical element {bad}"
            )
    gram = gram_of_form(F, W).G
    if permanent(gram).is_tangible():
        return None
    witness = is_dependent(W)
    if witness is not None:
        return witness
    bad = _grid_radical_witness(W, F)
    if bad is not None:
        raise DegenerateSpaceError(
            "ghost Gram permanent without dependence: span is degenerate, "
            f"radical element {bad}"
        )
    raise AssertionError(
        "ghost Gram permanent, independent family, nondegenerate span: "
        "this should be impossible"
    )


# -- symmetry searches -------------------------------------------------


def _entry_diff_values(G):
    vals = set()
    entries = [
        G.entry(i, j)
        for i in range(G.rows)
        for j in range(G.cols)
        if not G.entry(i, j).is_zero()
    ]
    for x in entries:
        vals.add(x.value)
        for y in entries:
            vals.add(x.value - y.value)
    if not vals:
        vals.add(0)
    vals.add(min(vals) - 1)
    return sorted(vals)


def _eval_tables(G, xs):
    """For each candidate argument x, the row x'G, so that both
    evaluation orders of a pair reduce to one dot product each."""
    n = G.rows
    rows = [[G.entry(i, j) for j in range(n)] for i in range(n)]
    left = []
    for x in xs:
        lx = []
        for j in range(n):
            acc = ZERO
            for i in range(n):
                acc = acc + x[i] * rows[i][j]
            lx.append(acc)
        left.append(lx)
    return left


def _dot_value_ghost(row, x):
    """Value and ghostness of row . x without building a Scalar."""
    best = None
    best_ghost = False
    for r, c in zip(row, x):
        if r.is_zero() or c.is_zero():
            continue
        v = r.value + c.value
        g = r.is_ghost() or c.is_ghost()
        if best is None or v > best:
            best, best_ghost = v, g
        elif v == best:
            best_ghost = True
    return best, best_ghost


def _candidate_args(G, rng, budget):
    """Deterministic grid of tangible arguments with unit first
    coordinate, then seeded random tangible arguments."""
    n = G.rows
    vals = _entry_diff_values(G)
    if n == 1:
        args = [Vec([ONE])]
    else:
        args = [
            Vec([ONE] + [tangible(v) for v in rest])
            for rest in product(vals, repeat=n - 1)
        ]
    extra = []
    if budget and rng is not None:
        lo = min(vals) - 2
        hi = max(vals) + 2
        for _ in range(budget):
            extra.append(
                Vec(
                    [ONE]
                    + [
                        tangible(rng.randint(int(lo), int(hi)))
                        for _ in range(n - 1)
                    ]
                )
            )
    return args, extra


def _symmetry_scan(F, budget, rng, require_nu_match):
    G = F.G
    n = G.rows
    # entry-level fast path: one-sided ghostness between opposite
    # entries is already a violation on unit vectors
    for i in range(n):
        for j in range(n):
            a, b = G.entry(i, j), G.entry(j, i)
            if a.is_ghost0() != b.is_ghost0():
                ei = Vec([ONE if c == i else ZERO for c in range(n)])
                ej = Vec([ONE if c == j else ZERO for c in range(n)])
                return SymmetryVerdict(False, (ei, ej), True, 0)
            if (
                require_nu_match
                and not a.is_ghost0()
                and not b.is_ghost0()
                and a.value != b.value
            ):
                ei = Vec([ONE if c == i else ZERO for c in range(n)])
                ej = Vec([ONE if c == j else ZERO for c in range(n)])
                return SymmetryVerdict(False, (ei, ej), True, 0)
    grid, extra = _candidate_args(G, rng, budget)
    allargs = grid + extra
    left = _eval_tables(G, allargs)
    m = len(allargs)
    for ai in range(m):
        la = left[ai]
        xa = allargs[ai]
        for bi in range(ai, m):
            v1, g1 = _dot_value_ghost(la, allargs[bi])
            v2, g2 = _dot_value_ghost(left[bi], xa)
            if v1 is None and v2 is None:
                continue
            if (v1 is None) != (v2 is None):
                return SymmetryVerdict(
                    False, (xa, allargs[bi]), bi < len(grid), len(extra)
                )
            if g1 != g2:
                return SymmetryVerdict(
                    False, (xa, allargs[bi]), bi < len(grid), len(extra)
                )
            if require_nu_match and not g1 and v1 != v2:
                return SymmetryVerdict(
                    False, (xa, allargs[bi]), bi < len(grid), len(extra)
                )
    return SymmetryVerdict(True, None, True, len(extra))


def is_orthogonal_symmetric(F, budget=0, rng=None):
    """Search for arguments whose two evaluation orders disagree about
    ghostness.  Consistency is relative to the searched grid plus the
    random budget."""
    if budget and rng is None:
        rng = random.Random(0)
    return _symmetry_scan(F, budget, rng, require_nu_match=False)


def is_supertropically_symmetric(F, budget=0, rng=None):
    """Orthogonal symmetry plus value agreement on tangible pairs."""
    if budget and rng is None:
        rng = random.Random(0)
    return _symmetry_scan(F, budget, rng, require_nu_match=True)


def isotropy(F, x):
    """Classify the self-evaluation: ``"nonisotropic"`` for a tangible
    value, ``"isotropic"`` for nonzero ghost, ``"strictly_isotropic"``
    for zero."""
    v = evaluate(F, x, x)
    if v.is_zero():
        return "strictly_isotropic"
    if v.is_tangible():
        return "nonisotropic"
    return "isotropic"
