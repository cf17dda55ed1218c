"""A walk through the two-layer arithmetic.

Every scalar is either the bottom element, a tangible rational, or a
ghost rational.  Addition keeps the larger value and demotes ties to
the ghost layer; multiplication adds values and lets ghosts absorb.
Run this file to see the layer rules play out on small examples.
"""

from fractions import Fraction

from supertropical import (
    ZERO,
    add,
    ghost,
    ghost_surpasses,
    mul,
    nu,
    nu_hat,
    print_scalar,
    tangible,
)


def show(label, x):
    print(f"  {label:<28} {print_scalar(x)}")


print("addition takes the value-larger argument:")
show("3 + 5", add(tangible(3), tangible(5)))
show("3 + 5v", add(tangible(3), ghost(5)))
show("5v + 3", add(ghost(5), tangible(3)))

print("\nties collapse to the ghost layer, whatever the inputs were:")
show("5 + 5", add(tangible(5), tangible(5)))
show("5 + 5v", add(tangible(5), ghost(5)))
show("5v + 5v", add(ghost(5), ghost(5)))

print("\nthe bottom element is neutral:")
show("-inf + 7", add(ZERO, tangible(7)))
show("-inf + -inf", add(ZERO, ZERO))

print("\nmultiplication adds values; one ghost factor ghosts the product:")
show("2 * 3", mul(tangible(2), tangible(3)))
show("2 * 3v", mul(tangible(2), ghost(3)))
show("2v * 3v", mul(ghost(2), ghost(3)))
show("-inf * 3v", mul(ZERO, ghost(3)))

print("\nvalues are exact rationals, not floats:")
third = tangible(Fraction(1, 3))
show("1/3 * 1/3", mul(third, third))
show("1/3 + 2/6", add(third, tangible(Fraction(2, 6))))

print("\nnu forgets the layer, nu_hat re-tangibles:")
show("nu(4)", nu(tangible(4)))
show("nu(4v)", nu(ghost(4)))
show("nu_hat(4v)", nu_hat(ghost(4)))

print("\nghost-surpassing: b is a plus something ghost")
cases = [
    (tangible(3), tangible(3)),
    (ghost(3), tangible(3)),
    (ghost(5), tangible(3)),
    (tangible(5), tangible(3)),
    (ghost(3), ghost(5)),
]
for b, a in cases:
    verdict = ghost_surpasses(b, a)
    print(f"  {print_scalar(b):>4} surpasses {print_scalar(a):<4} {verdict}")

# the relation orders the layers but is not a total order on values
assert ghost_surpasses(ghost(5), tangible(3))
assert not ghost_surpasses(tangible(5), tangible(3))
