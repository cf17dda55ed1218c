"""Tropical dependence, rank, greedy bases and saturation.

A family of vectors is *tropically dependent* when some combination with
tangible coefficients over a nonempty support lands entirely in the ghost
layer.  With a target vector v in front the same condition, v plus the
combination being ghost, says v depends on the family.  Witnesses carry
their coefficients and support and can always be re-verified.

Deciding dependence is cheap: k vectors in dimension n are independent
exactly when some k by k column submatrix of their row matrix is
nonsingular, and more than n vectors are always dependent.  Producing a
witness is the interesting part.  The search enumerates supports (smallest
first, then lexicographic) and, per support, a finite candidate grid of
coefficient values.

The candidate grid deserves a comment, because the obvious one is too
small.  In any ghost-producing combination each essential term ties some
other term (or the target) at some component; writing the tie out gives a
difference equation between the two coefficients.  Chasing such equations
along a path of ties expresses every coefficient as a chain of entry
differences anchored either at the target (whose coefficient is the unit)
or at a unit-normalized member of the support.  Ties can chain: there are
families where a valid coefficient is reachable only through two or more
linked ties, so single entry differences do not suffice.  The grid used
here is therefore closed under difference chains up to length k-1, which
is enough because a witness can always be normalized so that its tie graph
is a forest of depth at most k-1 hanging off the anchors.

Saturation raises the coefficients of a dependence as far as validity
allows.  The constructive route classifies each component of the target as
either still essential (the target's own value is needed there to make the
sum ghost) or dominated, takes the valid grid assignments minimizing the
number of essential components, folds their pointwise supremum into the
target for the coefficients it pins down, and recurses on the rest.  A
second, independent route simply takes the pointwise supremum of every
valid same-support grid assignment; the two must agree and tests hold
them to that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .exceptions import InvalidInputError, ShapeError
from .matrices import Mat, Vec, _perm_rows
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "DepWitness",
    "BaseReport",
    "is_dependent",
    "depends_on",
    "rank",
    "max_rank",
    "d_base",
    "extend_with_tangible",
    "saturate",
    "saturate_by_sup",
    "sup_witness",
    "sum_saturated",
    "annihilator_set",
    "projective_normalize",
]


@dataclass(frozen=True)
class DepWitness:
    """Coefficients proving a dependence.

    ``coeffs[i]`` is tangible for i in ``support`` and zero elsewhere.
    ``target`` is the vector being expressed (with unit coefficient), or
    None for a dependence among the family itself.
    """

    coeffs: tuple
    support: tuple
    target: Vec | None = None

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        support = tuple(sorted(self.support))
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "support", support)
        if not support:
            raise InvalidInputError("witness support must be nonempty")
        sset = set(support)
        if len(sset) != len(support):
            raise InvalidInputError("witness support has duplicates")
        for i, c in enumerate(coeffs):
            if not isinstance(c, Scalar):
                raise TypeError("witness coefficients must be scalars")
            if i in sset:
                if not c.is_tangible():
                    raise InvalidInputError(
                        f"coefficient {i} on the support must be tangible"
                    )
            elif not c.is_zero():
                raise InvalidInputError(
                    f"coefficient {i} off the support must be zero"
                )

    def combination(self, vectors):
        """The combination this witness asserts to be ghost: the target
        (if any) plus the coefficient-weighted family members."""
        if len(vectors) != len(self.coeffs):
            raise ShapeError("witness length does not match the family")
        n = vectors[self.support[0]].dim
        if self.target is not None:
            acc = list(self.target.entries)
        else:
            acc = [ZERO] * n
        for i in self.support:
            c = self.coeffs[i]
            for j, x in enumerate(vectors[i]):
                acc[j] = acc[j] + c * x
        return Vec(acc)

    def is_valid(self, vectors):
        return self.combination(vectors).is_ghost()


@dataclass(frozen=True)
class BaseReport:
    """Result of a base computation: which inputs were kept and their
    projectively normalized representatives."""

    kind: str
    indices: tuple
    rank: int
    normalized: tuple = field(default=())


def projective_normalize(v):
    """Scale so the first nonzero coordinate has value zero (the unit
    value).  Ghost coordinates keep their ghostness."""
    for x in v:
        if not x.is_zero():
            return v.scale(ONE / x.nu_hat())
    return v


# -- decision ----------------------------------------------------------


def _independent(vectors):
    """True when the family admits a nonsingular square column submatrix
    of full family size."""
    k = len(vectors)
    if k == 0:
        return True
    n = vectors[0].dim
    for v in vectors:
        if v.dim != n:
            raise ShapeError("mixed dimensions in the family")
    if k > n:
        return False
    rows = [v.entries for v in vectors]
    for cols in combinations(range(n), k):
        sub = [tuple(r[j] for j in cols) for r in rows]
        if _perm_rows(sub).is_tangible():
            return True
    return False


def rank(A):
    """Size of the largest nonsingular square submatrix (0 for a matrix
    with no tangible structure at all)."""
    m, n = A.shape
    rows = A.row_tuples
    for k in range(min(m, n), 0, -1):
        for ri in combinations(range(m), k):
            picked = [rows[i] for i in ri]
            for ci in combinations(range(n), k):
                sub = [tuple(r[j] for j in ci) for r in picked]
                if _perm_rows(sub).is_tangible():
                    return k
    return 0


def max_rank(S):
    """Rank of the row matrix of the family: the size of its largest
    tropically independent subset."""
    if not S:
        raise InvalidInputError("empty family")
    return rank(Mat(list(S)))


# -- witness search ----------------------------------------------------


def _value_rows(vectors, idx):
    return {i: tuple(x.value for x in vectors[i]) for i in idx}


def _chain_candidates(rows, target_vals, support):
    """Per-index candidate coefficient values for one support.

    Seeds are the unit value (a member may be normalized to the unit) and,
    with a target, the differences that tie a member directly to the
    target.  Propagation then closes the seeds under tie equations between
    members, to chain depth len(support) - 1.
    """
    cand = {i: {0} for i in support}
    frontier = {i: set(cand[i]) for i in support}
    if target_vals is not None:
        for i in support:
            row = rows[i]
            extra = set()
            for j, tv in enumerate(target_vals):
                if tv is not None and row[j] is not None:
                    extra.add(tv - row[j])
            frontier[i] |= extra - cand[i]
            cand[i] |= extra
    deltas = {}
    for a in support:
        ra = rows[a]
        for b in support:
            if a == b:
                continue
            rb = rows[b]
            ds = {ra[j] - rb[j] for j in range(len(ra))
                  if ra[j] is not None and rb[j] is not None}
            if ds:
                deltas[(a, b)] = ds
    for _ in range(max(0, len(support) - 1)):
        moved = False
        new_frontier = {i: set() for i in support}
        for (a, b), ds in deltas.items():
            fa = frontier[a]
            if not fa:
                continue
            fresh = {x + d for x in fa for d in ds} - cand[b]
            if fresh:
                new_frontier[b] |= fresh
                cand[b] |= fresh
                moved = True
        if not moved:
            break
        frontier = new_frontier
    return {i: sorted(cand[i]) for i in support}


def _iter_supports(k):
    for size in range(1, k + 1):
        yield from combinations(range(k), size)


def _valid_on_support(vectors, target, support, coeff_scalars):
    """Check that target plus the weighted members over the support is
    entirely ghost or zero."""
    n = vectors[support[0]].dim
    for j in range(n):
        acc = target[j] if target is not None else ZERO
        for i, c in zip(support, coeff_scalars):
            acc = acc + c * vectors[i].entries[j]
        if not acc.is_ghost0():
            return False
    return True


def _search_witness(vectors, target, supports=None):
    """First valid witness in (support size, support, coefficient tuple)
    order, or None.  Enumerating small supports first means the returned
    support is always irredundant: every proper sub-support was already
    tried and failed."""
    k = len(vectors)
    rows = _value_rows(vectors, range(k))
    tvals = tuple(x.value for x in target) if target is not None else None
    todo = supports if supports is not None else _iter_supports(k)
    for support in todo:
        cand = _chain_candidates(rows, tvals, support)
        for tup in product(*(cand[i] for i in support)):
            cs = [Scalar(v) for v in tup]
            if _valid_on_support(vectors, target, support, cs):
                coeffs = [ZERO] * k
                for i, c in zip(support, cs):
                    coeffs[i] = c
                return DepWitness(tuple(coeffs), support, target)
    return None


def is_dependent(S):
    """A verified witness if the family is tropically dependent, else None.

    The decision goes through square submatrix permanents; the witness
    then comes from the candidate grid search.  The two must agree, which
    is itself a useful internal crosscheck.

    A dependence without a target is scale invariant, so the returned
    witness is normalized to have the unit at its first support index.
    """
    S = list(S)
    if not S:
        raise InvalidInputError("empty family")
    if _independent(S):
        return None
    w = _search_witness(S, None)
    if w is None:
        raise AssertionError(
            "submatrix decision says dependent but no grid witness exists"
        )
    inv = ONE / w.coeffs[w.support[0]]
    w = DepWitness(tuple(c * inv for c in w.coeffs), w.support, None)
    if not w.is_valid(S):
        raise AssertionError("witness failed re-verification")
    return w


def depends_on(v, S):
    """A verified witness expressing v over the family in the ghost sense
    (v plus the combination is ghost), or None."""
    S = list(S)
    if not S:
        raise InvalidInputError("empty family")
    for u in S:
        if u.dim != v.dim:
            raise ShapeError("mixed dimensions")
    w = _search_witness(S, v)
    if w is not None and not w.is_valid(S):
        raise AssertionError("witness failed re-verification")
    return w


# -- bases -------------------------------------------------------------


def d_base(S, order=None):
    """Greedy maximal independent subset, scanning in the given order.

    Different orders can genuinely return different sizes; the visit order
    is explicit so results are reproducible.
    """
    S = list(S)
    if not S:
        raise InvalidInputError("empty family")
    if order is None:
        order = range(len(S))
    order = list(order)
    if sorted(order) != list(range(len(S))):
        raise InvalidInputError("order must be a permutation of the indices")
    kept = []
    kept_idx = []
    for idx in order:
        if _independent(kept + [S[idx]]):
            kept.append(S[idx])
            kept_idx.append(idx)
    return BaseReport(
        kind="d-base",
        indices=tuple(kept_idx),
        rank=len(kept_idx),
        normalized=tuple(projective_normalize(v) for v in kept),
    )


def extend_with_tangible(S, v):
    """Indices of members that stay independent together with the tangible
    vector v: all of them if possible, otherwise the first (lowest index)
    subset of size one less."""
    S = list(S)
    if not _independent(S):
        raise InvalidInputError("the family must be independent")
    if not v.is_tangible() or v.is_zero():
        raise InvalidInputError("the new vector must be tangible and nonzero")
    k = len(S)
    if _independent(S + [v]):
        return tuple(range(k))
    for subset in combinations(range(k), k - 1):
        if _independent([S[i] for i in subset] + [v]):
            return subset
    raise AssertionError(
        "no size k-1 subset stays independent with the new vector, "
        "which a tangible nonzero vector should always allow"
    )


# -- saturation --------------------------------------------------------


def _classify_components(v, S, support, coeffs):
    """Split component indices by whether the target's own value is still
    essential for ghostness there.

    Essential (type one): the target attains the componentwise maximum
    and either is ghost itself or ties exactly one tangible term.  In all
    other cases the terms of the support cover the component on their own.
    """
    n = v.dim
    essential = []
    for j in range(n):
        vj = v[j]
        if vj.is_zero():
            continue
        terms = [coeffs[i] * S[i].entries[j] for i in support]
        top = vj
        for t in terms:
            if t.nu_gt(top):
                top = t
        if not vj.nu_matches(top):
            continue
        if vj.is_ghost():
            essential.append(j)
            continue
        matching = [t for t in terms if t.nu_matches(top) and not t.is_zero()]
        if len(matching) == 1 and matching[0].is_tangible():
            essential.append(j)
    return essential


def _grid_assignments(v, S, support):
    """All valid coefficient assignments for this support drawn from the
    chain candidate grid, as dicts index -> Scalar."""
    rows = _value_rows(S, support)
    tvals = tuple(x.value for x in v)
    cand = _chain_candidates(rows, tvals, support)
    out = []
    for tup in product(*(cand[i] for i in support)):
        cs = [Scalar(x) for x in tup]
        if _valid_on_support(S, v, support, cs):
            out.append(dict(zip(support, cs)))
    return out


def _sup_assignment(assignments, support):
    best = {}
    for i in support:
        top = None
        for a in assignments:
            c = a[i]
            if top is None or c.nu_gt(top):
                top = c
        best[i] = top.nu_hat()
    return best


def _saturate_recursive(v, S, support):
    """The constructive saturation: pin down the coefficients anchored at
    essential components, fold them into the target, recurse on the rest.
    Returns a dict index -> Scalar for every index in support."""
    support = tuple(support)
    if not support:
        return {}
    assignments = _grid_assignments(v, S, support)
    if not assignments:
        raise AssertionError("a valid witness must exist on the grid")
    counted = [
        (len(_classify_components(v, S, support, a)), a) for a in assignments
    ]
    fewest = min(c for c, _ in counted)
    sup = _sup_assignment([a for c, a in counted if c == fewest], support)
    if not _valid_on_support(S, v, support, [sup[i] for i in support]):
        raise AssertionError("supremum of valid assignments lost validity")
    essential = _classify_components(v, S, support, sup)
    anchored = []
    for i in support:
        for j in essential:
            term = sup[i] * S[i].entries[j]
            if not term.is_zero() and term.nu_matches(v[j]):
                anchored.append(i)
                break
    if not anchored:
        # nothing is pinned by the target any more; the remaining
        # coefficients are already grid-maximal, so they are final
        return dict(sup)
    out = {i: sup[i] for i in anchored}
    rest = tuple(i for i in support if i not in out)
    folded = v
    for i in anchored:
        folded = folded + S[i].scale(sup[i])
    out.update(_saturate_recursive(folded, S, rest))
    return out


def _check_saturate_inputs(v, S, w):
    if w.target is None or w.target != v:
        raise InvalidInputError("witness target must be the given vector")
    if len(w.coeffs) != len(S):
        raise ShapeError("witness length does not match the family")
    if not _independent(S):
        raise InvalidInputError("the family must be independent")
    if not w.is_valid(S):
        raise InvalidInputError("not a valid dependence witness")


def _is_irredundant(v, S, support):
    rows = _value_rows(S, range(len(S)))
    tvals = tuple(x.value for x in v)
    for size in range(1, len(support)):
        for sub in combinations(support, size):
            cand = _chain_candidates(rows, tvals, sub)
            for tup in product(*(cand[i] for i in sub)):
                cs = [Scalar(x) for x in tup]
                if _valid_on_support(S, v, sub, cs):
                    return False
    return True


def saturate(v, S, w):
    """The unique coefficientwise largest witness with the same support.

    Requires an independent family and a valid, support-irredundant
    witness.  When the family is square, nonsingular, the target tangible
    and the support full, the answer drops out of the matrix solver
    applied to the transposed system; otherwise the constructive
    recursion runs.
    """
    S = list(S)
    _check_saturate_inputs(v, S, w)
    if not _is_irredundant(v, S, w.support):
        raise InvalidInputError("witness support is reducible")
    n = v.dim
    if (
        len(S) == n
        and w.support == tuple(range(n))
        and v.is_tangible()
        and not v.is_zero()
    ):
        fast = _saturate_fast(v, S)
        if fast is not None:
            return fast
    coeffs_map = _saturate_recursive(v, S, w.support)
    coeffs = [ZERO] * len(S)
    for i, c in coeffs_map.items():
        coeffs[i] = c
    out = DepWitness(tuple(coeffs), w.support, v)
    if not out.is_valid(S):
        raise AssertionError("saturated witness failed re-verification")
    return out


def _saturate_fast(v, S):
    from .matrices import is_nonsingular, solve_max

    A = Mat(list(S))
    if not is_nonsingular(A):
        return None
    x = solve_max(A.transpose(), v)
    if not all(c.is_tangible() for c in x):
        return None
    w = DepWitness(tuple(x.entries), tuple(range(len(S))), v)
    return w if w.is_valid(S) else None


def saturate_by_sup(v, S, w):
    """Independent second route to the saturated witness: the pointwise
    supremum of every valid same-support assignment on the candidate
    grid."""
    S = list(S)
    _check_saturate_inputs(v, S, w)
    assignments = _grid_assignments(v, S, w.support)
    if not assignments:
        raise AssertionError("a valid witness must exist on the grid")
    sup = _sup_assignment(assignments, w.support)
    coeffs = [ZERO] * len(S)
    for i in w.support:
        coeffs[i] = sup[i]
    out = DepWitness(tuple(coeffs), w.support, v)
    if not out.is_valid(S):
        raise AssertionError("supremum witness failed re-verification")
    return out


def sup_witness(w1, w2, S=None):
    """Coefficientwise join of two witnesses for the same target: the
    tangible lift of the coefficient sums.  Joining valid witnesses keeps
    validity, which is re-checked when the family is supplied."""
    if w1.target != w2.target:
        raise InvalidInputError("witnesses must share a target")
    if len(w1.coeffs) != len(w2.coeffs):
        raise ShapeError("witness lengths differ")
    coeffs = tuple(
        (a + b).nu_hat() for a, b in zip(w1.coeffs, w2.coeffs)
    )
    support = tuple(sorted(set(w1.support) | set(w2.support)))
    out = DepWitness(coeffs, support, w1.target)
    if S is not None and not out.is_valid(list(S)):
        raise AssertionError("joined witness failed re-verification")
    return out


def sum_saturated(w1, w2, S=None):
    """Witness for the sum of two targets from saturated witnesses for
    each: coefficients are the tangible lifts of the sums.

    Saturated here means maximal among all coefficient assignments over
    the whole family, not just those sharing the witness's support.  For
    an independent family that forces every coefficient to be finite: a
    zero coefficient can always be raised to some small finite value
    without disturbing any component, so a witness that skips a member
    is never maximal.  When the family is supplied, both inputs are
    checked against that stronger condition; without it the caller
    vouches for the inputs, and a merely support-maximal witness can
    produce a sum that is valid but short of saturated."""
    if w1.target is None or w2.target is None:
        raise InvalidInputError("both witnesses need targets")
    if len(w1.coeffs) != len(w2.coeffs):
        raise ShapeError("witness lengths differ")
    if S is not None:
        S = list(S)
        for w in (w1, w2):
            again = saturate_by_sup(w.target, S, w)
            if again.coeffs != w.coeffs:
                raise InvalidInputError("input witness is not saturated")
            if len(w.support) != len(S):
                raise InvalidInputError(
                    "input witness is not saturated: it has no "
                    "coefficient on some family member"
                )
    coeffs = tuple((a + b).nu_hat() for a, b in zip(w1.coeffs, w2.coeffs))
    support = tuple(sorted(set(w1.support) | set(w2.support)))
    return DepWitness(coeffs, support, w1.target + w2.target)


# -- annihilators ------------------------------------------------------


def annihilator_set(A):
    """Tangible, independent column vectors sent into the ghost layer by
    the matrix: one per column outside a maximal independent column set.

    Each vector has unit value at its own column, support inside the
    chosen column base elsewhere, and zero at the remaining columns, so
    the family is independent by its identity pattern.
    """
    cols = A.col_list()
    n = A.cols
    base = []
    base_idx = []
    for j in range(n):
        if _independent(base + [cols[j]]):
            base.append(cols[j])
            base_idx.append(j)
    out = []
    for j in range(n):
        if j in base_idx:
            continue
        w = _search_witness(base + [cols[j]], None)
        if w is None:
            raise AssertionError(
                "a column outside a maximal independent set must be dependent"
            )
        last = len(base)
        if last not in w.support:
            raise AssertionError(
                "dependence among an independent base alone is impossible"
            )
        unit = w.coeffs[last]
        entries = [ZERO] * n
        for pos, c in zip(base_idx, w.coeffs[:last]):
            entries[pos] = c / unit
        entries[j] = ONE
        u = Vec(entries)
        if not A.apply(u).is_ghost():
            raise AssertionError("constructed annihilator failed its check")
        out.append(u)
    return out
