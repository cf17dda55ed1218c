"""Bilinear forms by Gram matrix: symmetry scans and isotropy.

A form is fixed by a square Gram matrix and evaluated by sandwiching.
Two symmetry readings are on offer.  The orthogonal scan only watches
the layers: swapping the arguments must never flip a value between
ghost and tangible.  The supertropical scan additionally pins tangible
values, so it reacts to bare numeric asymmetry at once.
"""

import random

from supertropical import (
    GramForm,
    evaluate,
    gram_of_form,
    is_orthogonal_symmetric,
    is_supertropically_symmetric,
    isotropy,
    parse_matrix,
    parse_vector,
    print_matrix,
    print_scalar,
    print_vector,
    radical_and_nondegenerate,
)

G = GramForm(parse_matrix("3 7 7\n-8 9 -7\n7 -7 4"))
print("Gram matrix (asymmetric on purpose):")
print(print_matrix(G.G))

x = parse_vector("0 0 0")
print("\nG(x,x) for the all-unit vector:", print_scalar(evaluate(G, x, x)))
print("its isotropy label:", isotropy(G, x))
print("a ghost vector's label:", isotropy(G, parse_vector("0v 0v 0v")))

rad, nondeg = radical_and_nondegenerate(G)
print("\nnondegenerate:", nondeg,
      " all-unit vector in radical:", rad(x))

# the strict scan spots 7 against -8 already on unit vectors
strict = is_supertropically_symmetric(G, budget=200, rng=random.Random(1))
sx, sy = strict.witness
print("\nvalue-pinning scan consistent:", strict.consistent,
      " witness:", print_vector(sx), "/", print_vector(sy),
      " after", strict.samples, "random samples")

# the layer-only scan shrugs at value gaps, but deeper in the argument
# grid it finds a pair where one order goes ghost and the other stays
# tangible
loose = is_orthogonal_symmetric(G, budget=200, rng=random.Random(1))
lx, ly = loose.witness
print("layer-only scan consistent:   ", loose.consistent)
print("  witness x =", print_vector(lx), " y =", print_vector(ly))
print("  G(x,y) =", print_scalar(evaluate(G, lx, ly)),
      "  G(y,x) =", print_scalar(evaluate(G, ly, lx)))

# an honestly symmetric matrix satisfies both readings
H = GramForm(parse_matrix("0 1\n1 0"))
print("\nsymmetric Gram matrix [[0,1],[1,0]]:",
      "layer-only", is_orthogonal_symmetric(H, budget=50).consistent,
      "/ value-pinning", is_supertropically_symmetric(H, budget=50).consistent)

# Gram matrix of a family under the ambient form
W = [parse_vector(t) for t in ("0 0 0", "0 1 2", "2 1 0")]
inner = gram_of_form(G, W)
print("\npairwise evaluations of a three-member family:")
print(print_matrix(inner.G))
