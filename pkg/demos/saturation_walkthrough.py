"""Dependence witnesses, and how far their coefficients can be pushed.

A vector depends tropically on a family when some tangible combination
drags the whole sum, target included, into the ghost layer.  The
witness records which members took part and with what coefficients.
Coefficients can usually be raised before ghostness breaks; saturation
pushes each one as high as it will go.

The second half of the demo is a cautionary tale.  Saturation is
relative to a support.  A witness that is maximal over its own support
but silent on some family member is not maximal outright, and summing
two such witnesses can land strictly below the saturated witness of
the summed target.  The validated entry point refuses that trap; this
script walks straight into it with the check disabled, so you can see
the gap.
"""

from supertropical import (
    DepWitness,
    InvalidInputError,
    depends_on,
    parse_matrix,
    parse_vector,
    print_vector,
    saturate,
    sum_saturated,
    tangible,
)


def describe(tag, w):
    coeffs = " ".join(
        "-inf" if c.is_zero() else str(c.value) for c in w.coeffs
    )
    print(f"  {tag}: support {w.support}  coeffs [{coeffs}]")


S = [parse_vector(t) for t in ("2 2 0", "3 -1 -3", "5 -1 3")]
print("family:")
for w in S:
    print("  ", print_vector(w))

v1 = parse_vector("4 2 1")
v2 = parse_vector("7 4 5")

w1 = depends_on(v1, S)
w2 = depends_on(v2, S)
describe("raw witness for (4,2,1)", w1)
describe("raw witness for (7,4,5)", w2)

s1 = saturate(v1, S, w1)
s2 = saturate(v2, S, w2)
print("\nafter saturation over each witness's own support")
print("(the search already picked maximal coefficients here):")
describe("saturated for (4,2,1)", s1)
describe("saturated for (7,4,5)", s2)

# s1 touches all three members; s2 skips the middle one.  Over its
# two-member support s2 is maximal, but with the middle member allowed
# in, its middle coefficient could grow from nothing to 4.
print("\nsumming them with validation on is refused:")
try:
    sum_saturated(s1, s2, S)
except InvalidInputError as e:
    print("  InvalidInputError:", e)

print("\nwith validation off, the sum goes through but undersaturates:")
loose = sum_saturated(s1, s2)
describe("unchecked sum", loose)
print("  target", print_vector(loose.target))

# the middle coefficient of the sum stops at 1, yet 4 still gives a
# valid witness for the same target
bumped = DepWitness(
    coeffs=(tangible(2), tangible(4), tangible(2)),
    support=(0, 1, 2),
    target=loose.target,
)
assert bumped.is_valid(S)
describe("a strictly larger witness", bumped)

# repair: extend the second witness to its true maximum over the whole
# family, then the sum is saturated and the validated call accepts it
full2 = DepWitness(
    coeffs=(tangible(2), tangible(4), tangible(2)),
    support=(0, 1, 2),
    target=v2,
)
assert full2.is_valid(S)
fixed = sum_saturated(s1, full2, S)
print("\nwith the second witness extended over the whole family:")
describe("validated sum", fixed)
