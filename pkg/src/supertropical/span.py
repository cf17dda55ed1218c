"""Spanning, critical elements, minimal spanning sets, change of base.

Two spanning notions live here, and the difference is load bearing.

``spans`` asks whether a vector ghost-surpasses a tangible combination
of the family, with the surplus allowed to be any ambient ghost vector.
That is the right reading for the solved examples it reproduces, and
it is decided exactly: per support, each coefficient is capped by the
componentwise residual of the target against the member, candidates
come from entry differences plus a sentinel strictly below them all,
and tuples are tried largest first so the reported witness carries the
greatest workable coefficients on the least support.

Criticality, in contrast, asks whether a member can be rebuilt from the
family with the surplus ghost drawn from the spanned module itself.
The distinction matters: with an ambient surplus, the tangible vector
(1,1) would span both of its one-sided ghost variants, and the
three-element family {(1,1), (1^v,1), (1,1^v)} would collapse to a
single generator, which is wrong for the space those three generate.
Every ghost element of the module is a ghost-or-zero coefficient
combination of the generators (scaling coefficients by the ghost unit
fixes the layer without moving values), so the internal test reduces to
exact module representations.  In an exact representation each useful
coefficient must sit exactly at its residual (anything larger overshoots
somewhere, anything smaller that still touches the maximum would have to
tie a component value, hence equals a residual of the touched component,
and a term below the maximum everywhere can be dropped).  So a three-way
tag per member, tangible residual, ghost residual, or absent, decides
internal spanning completely.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .exceptions import (
    InvalidInputError,
    NoChangeOfBaseError,
    ShapeError,
)
from .dependence import BaseReport, max_rank, projective_normalize
from .matrices import Mat, Vec
from .scalars import ONE, ZERO, Scalar, ghost, tangible

__all__ = [
    "SpanWitness",
    "spans",
    "spans_set",
    "is_critical",
    "s_base",
    "is_thick",
    "is_generalized_permutation",
    "change_of_base",
    "is_almost_tangible",
]


@dataclass(frozen=True)
class SpanWitness:
    """Tangible coefficients and the ghost surplus certifying that a
    vector surpasses a combination of the family."""

    coeffs: tuple
    support: tuple
    ghost_part: Vec

    def __post_init__(self):
        support = tuple(sorted(self.support))
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "support", support)
        if not support:
            raise InvalidInputError("span witness needs a nonempty support")
        for j, g in enumerate(self.ghost_part):
            if not g.is_ghost0():
                raise InvalidInputError(
                    f"ghost part has a tangible entry at {j}"
                )

    def combination(self, vectors):
        n = self.ghost_part.dim
        acc = [ZERO] * n
        for i in self.support:
            c = self.coeffs[i]
            for j, x in enumerate(vectors[i]):
                acc[j] = acc[j] + c * x
        return Vec(acc)

    def is_valid(self, vectors, v):
        """The reconstruction identity: the combination plus the ghost
        part reproduces v exactly."""
        return self.combination(vectors) + self.ghost_part == v


def _nu(x):
    return x.value


def _residual(v, w):
    """Largest coefficient value keeping the scaled member under the
    target in every component, or None when the member is unusable
    (zero, or sticking out of the target's support)."""
    best = None
    for j, x in enumerate(w):
        if x.is_zero():
            continue
        vj = v[j]
        if vj.is_zero():
            return None
        d = _nu(vj) - _nu(x)
        if best is None or d < best:
            best = d
    return best


def _span_candidates(S, v, support):
    """Descending candidate values per member: entry differences against
    the target and against every family member, a sentinel below them
    all, filtered through the residual cap."""
    out = []
    for i in support:
        w = S[i]
        cap = _residual(v, w)
        if cap is None:
            return None
        cand = set()
        for j, x in enumerate(w):
            if x.is_zero():
                continue
            if not v[j].is_zero():
                cand.add(_nu(v[j]) - _nu(x))
            for u in S:
                if u is not w and not u[j].is_zero():
                    cand.add(_nu(u[j]) - _nu(x))
        cand.add(min(cand) - 1)
        vals = sorted((c for c in cand if c <= cap), reverse=True)
        if not vals:
            return None
        out.append(vals)
    return out


def _ghost_surplus(v, comb):
    """The canonical ghost part for a surpassed combination, or None if
    v does not surpass it."""
    parts = []
    for vj, cj in zip(v, comb):
        if not vj.ghost_surpasses(cj):
            return None
        parts.append(vj if vj.is_ghost() else ZERO)
    return Vec(parts)


def spans(S, v):
    """First witness that v surpasses a tangible combination of S, with
    supports in lexicographic order and greatest coefficients first, or
    None when no support works."""
    S = list(S)
    if not S:
        raise InvalidInputError("empty family")
    for w in S:
        if w.dim != v.dim:
            raise ShapeError("mixed dimensions")
    k = len(S)
    if v.is_zero():
        for i, w in enumerate(S):
            if w.is_zero():
                coeffs = [ZERO] * k
                coeffs[i] = ONE
                return SpanWitness(tuple(coeffs), (i,), v)
        return None
    supports = sorted(
        (s for size in range(1, k + 1) for s in combinations(range(k), size))
    )
    for support in supports:
        if any(S[i].is_zero() for i in support):
            continue
        cands = _span_candidates(S, v, support)
        if cands is None:
            continue
        for tup in product(*cands):
            cs = [tangible(x) for x in tup]
            comb = [ZERO] * v.dim
            for c, i in zip(cs, support):
                for j, x in enumerate(S[i]):
                    comb[j] = comb[j] + c * x
            g = _ghost_surplus(v, comb)
            if g is not None:
                coeffs = [ZERO] * k
                for c, i in zip(cs, support):
                    coeffs[i] = c
                return SpanWitness(tuple(coeffs), support, g)
    return None


def spans_set(S, others):
    """Every vector of the second family surpassed by a combination of
    the first."""
    return all(spans(S, v) is not None for v in others)


def _tangible_ratio(w, u):
    """The tangible scalar with w = scalar * u, or None."""
    if w.dim != u.dim or w.is_zero() or u.is_zero():
        return None
    ratio = None
    for a, b in zip(w, u):
        if a.is_zero() != b.is_zero():
            return None
        if a.is_zero():
            continue
        if a.is_ghost() != b.is_ghost():
            return None
        d = _nu(a) - _nu(b)
        if ratio is None:
            ratio = d
        elif ratio != d:
            return None
    return tangible(ratio) if ratio is not None else None


def _class_indices(S, i):
    return tuple(
        j for j, w in enumerate(S)
        if j == i or _tangible_ratio(w, S[i]) is not None
    )


def _internal_spanned(v, S, excluded):
    """Spanning with the ghost surplus restricted to the module the
    family generates.

    Reduces to exact representations v = sum of tagged members, where
    members in the excluded index set may only carry ghost (or no)
    coefficients.  A representation needs a tangible coefficient outside
    the excluded set; a fully ghost target instead only needs one
    non-excluded member inside its support to carry an arbitrarily small
    tangible coefficient underneath itself.
    """
    k = len(S)
    excluded = set(excluded)
    options = []
    for i in range(k):
        opts = [None]
        r = _residual(v, S[i])
        if r is not None:
            opts.append(ghost(r))
            if i not in excluded:
                opts.append(tangible(r))
        options.append(opts)
    for tags in product(*options):
        if all(t is None for t in tags):
            continue
        if not any(
            t is not None and t.is_tangible() and i not in excluded
            for i, t in enumerate(tags)
        ):
            continue
        acc = [ZERO] * v.dim
        for t, w in zip(tags, S):
            if t is None:
                continue
            for j, x in enumerate(w):
                acc[j] = acc[j] + t * x
        if Vec(acc) == v:
            return True
    if v.is_ghost():
        # the target itself is the surplus; any small tangible multiple
        # of a usable outside member hides underneath it
        return any(
            i not in excluded
            and not S[i].is_zero()
            and _residual(v, S[i]) is not None
            for i in range(k)
        )
    return False


def is_critical(i, S):
    """Whether the i-th member cannot be rebuilt from the family once
    its whole projective class is set aside."""
    S = list(S)
    if not 0 <= i < len(S):
        raise IndexError("member index out of range")
    if S[i].is_zero():
        return False
    return not _internal_spanned(S[i], S, _class_indices(S, i))


def s_base(S):
    """The minimal spanning subset: one representative per projective
    class, kept only when critical.  Reported indices refer to the
    input; normalized representatives have their first nonzero
    coordinate scaled to the unit."""
    S = list(S)
    if not S:
        raise InvalidInputError("empty family")
    seen = []
    reps = []
    for idx, w in enumerate(S):
        if w.is_zero():
            continue
        if any(_tangible_ratio(w, S[r]) is not None for r in reps):
            continue
        reps.append(idx)
    kept = [idx for idx in reps if is_critical(idx, S)]
    return BaseReport(
        kind="s-base",
        indices=tuple(kept),
        rank=len(kept),
        normalized=tuple(projective_normalize(S[idx]) for idx in kept),
    )


def is_thick(W_gens, V_gens):
    """Whether the first family reaches the full rank of the second."""
    W_gens = list(W_gens)
    V_gens = list(V_gens)
    if not W_gens or not V_gens:
        raise InvalidInputError("empty family")
    if W_gens[0].dim != V_gens[0].dim:
        raise ShapeError("mixed ambient dimensions")
    return max_rank(W_gens) == max_rank(V_gens)


def is_generalized_permutation(P):
    """Exactly one tangible entry in every row and every column, all
    other entries zero.  These are precisely the invertible matrices."""
    m, n = P.shape
    if m != n:
        return False
    col_hits = [0] * n
    for i in range(m):
        row_hits = 0
        for j in range(n):
            x = P.entry(i, j)
            if x.is_zero():
                continue
            if not x.is_tangible():
                return False
            row_hits += 1
            col_hits[j] += 1
        if row_hits != 1:
            return False
    return all(c == 1 for c in col_hits)


def change_of_base(A, Aprime):
    """The generalized permutation matrix P with Aprime = P A, matching
    each row of Aprime to a tangible multiple of a row of A (lowest
    index on ties).  Raises when no full matching exists, which means
    the two inputs were not bases of one space."""
    if A.shape != Aprime.shape:
        raise NoChangeOfBaseError("row matrices have different shapes")
    m = A.rows
    used = set()
    rows = []
    for i in range(m):
        target = Aprime.row(i)
        match = None
        for j in range(m):
            if j in used:
                continue
            alpha = _tangible_ratio(target, A.row(j))
            if alpha is not None:
                match = (j, alpha)
                break
        if match is None:
            raise NoChangeOfBaseError(
                f"row {i} is not a tangible multiple of any unused row"
            )
        used.add(match[0])
        rows.append(
            [match[1] if j == match[0] else ZERO for j in range(m)]
        )
    P = Mat(rows)
    if P @ A != Aprime:
        raise AssertionError("change of base failed its defining identity")
    return P


def is_almost_tangible(v, S):
    """Whether the only module elements surpassed by v (with a surplus
    ghost from the module) are its own tangible multiples.

    Tangible vectors qualify outright; nonzero ghost vectors never do.
    Mixed vectors are checked by the residual-tag grid over the family.
    """
    if v.is_zero() or v.is_tangible():
        return True
    if v.is_ghost():
        return False
    S = list(S)
    k = len(S)
    options = []
    for i in range(k):
        opts = [None]
        r = _residual(v, S[i])
        if r is not None:
            opts.extend((tangible(r), ghost(r)))
        options.append(opts)
    for tags in product(*options):
        if all(t is None for t in tags):
            continue
        acc = [ZERO] * v.dim
        for t, w in zip(tags, S):
            if t is None:
                continue
            for j, x in enumerate(w):
                acc[j] = acc[j] + t * x
        w = Vec(acc)
        if w == v or _tangible_ratio(w, v) is not None:
            continue
        if _surpasses_with_internal_ghost(v, w, S):
            return False
    return True


def _surpasses_with_internal_ghost(v, w, S):
    """True when v = w + g for some ghost g inside the module of S."""
    need = []
    for j in range(v.dim):
        vj, wj = v[j], w[j]
        if vj == wj:
            need.append(None)  # no surplus required here
            continue
        if vj.is_zero():
            return False
        if vj.is_tangible():
            return False  # w must match tangible components exactly
        if wj.nu_gt(vj):
            return False
        need.append(vj)  # the surplus must land exactly on vj
    # the surplus pattern: exactly vj where needed, nu-below elsewhere,
    # zero outside the support of v; search ghost-tag combinations
    def fits(g):
        for j in range(v.dim):
            gj = g[j]
            target = need[j]
            if target is not None:
                if gj != target:
                    return False
            else:
                vj = v[j]
                if vj.is_zero():
                    if not gj.is_zero():
                        return False
                elif gj.nu_gt(vj):
                    return False
                elif gj.nu_matches(vj) and vj.is_tangible():
                    return False
        return True

    if all(n is None for n in need):
        return True  # zero surplus suffices and is in every module
    options = []
    for i in range(len(S)):
        r = _residual(v, S[i])
        opts = [None]
        if r is not None:
            opts.append(ghost(r))
        options.append(opts)
    for tags in product(*options):
        acc = [ZERO] * v.dim
        for t, u in zip(tags, S):
            if t is None:
                continue
            for j, x in enumerate(u):
                acc[j] = acc[j] + t * x
        if fits(Vec(acc)):
            return True
    return False
