"""Permanent determinants and how close they come to multiplying.

The determinant here is the permanent: a sum over permutations with no
signs, because there are none to be had.  It is not multiplicative, but
the defect is one-sided and entirely ghost, and the adjoint still
builds a working near-inverse.
"""

from supertropical import (
    Mat,
    adjoint,
    ghost_surpasses,
    nabla,
    parse_matrix,
    permanent,
    print_matrix,
    print_scalar,
    quasi_identity,
)

A = parse_matrix("0 1\n3 0")
B = parse_matrix("0 2\n1 0")

dA, dB, dAB = permanent(A), permanent(B), permanent(A @ B)
print("det A       =", print_scalar(dA))
print("det B       =", print_scalar(dB))
print("det AB      =", print_scalar(dAB))
print("det A det B =", print_scalar(dA * dB))
print("det AB surpasses det A det B:", ghost_surpasses(dAB, dA * dB))

# two nonsingular matrices whose products are singular in both orders
C = parse_matrix("0 0v\n-inf 0")
D = parse_matrix("0 -inf\n0v 0")
print("\na sharper failure: nonsingular factors, singular products")
print("det C  =", print_scalar(permanent(C)))
print("det D  =", print_scalar(permanent(D)))
print("det CD =", print_scalar(permanent(C @ D)))
print("det DC =", print_scalar(permanent(D @ C)))

print("\nthe adjoint, entry by entry, for A:")
print(print_matrix(adjoint(A)))
print("nabla A (adjoint over the determinant):")
print(print_matrix(nabla(A)))

left, right = quasi_identity(A)
print("A @ nabla A, the left quasi-identity:")
print(print_matrix(left))
print("nabla A @ A, the right one:")
print(print_matrix(right))

# quasi-identities square to themselves and surpass the true identity
assert left @ left == left
assert right @ right == right
I = Mat.identity(2)
for i in range(2):
    for j in range(2):
        assert ghost_surpasses(left.entry(i, j), I.entry(i, j))
print("both quasi-identities are idempotent and entrywise above the identity")
