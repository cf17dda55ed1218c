"""Dual functionals over a closed base.

A base gets closed by folding it through its own quasi-identity; on
the closed base the rows of nabla A nabla give coordinate functionals
that read off, up to ghosts, how a member was combined.  Reconstruction
runs the reading backwards.
"""

from supertropical import (
    Mat,
    NotInClosedSpanError,
    close_base,
    dual_base,
    parse_matrix,
    parse_vector,
    print_scalar,
    print_vector,
    reconstruct,
)

A = parse_matrix("0 3\n4 0")
AB, closed = close_base(A.row_list())
print("base rows:      ", [print_vector(r) for r in A.row_list()])
print("closed base rows:", [print_vector(r) for r in closed])

eps = dual_base(closed)
print("\nfunctionals against the closed columns, unit on the diagonal:")
for i, f in enumerate(eps):
    line = "  ".join(
        f"eps{i}(col{j}) = {print_scalar(f(AB.col(j)))}"
        for j in range(AB.cols)
    )
    print(" ", line)

# combine the closed rows with coefficients 1 and 2, then recover the
# member from its functional readings alone
coeffs = parse_vector("1 2")
v = Mat(list(closed)).transpose().apply(coeffs)
print("\nmember 1*row0 + 2*row1 =", print_vector(v))
r = reconstruct(closed, v)
print("reconstructed          =", print_vector(r))
assert r == v

# vectors outside the closed span are detected, not mangled
try:
    reconstruct(closed, parse_vector("9 -7"))
except NotInClosedSpanError as e:
    print("\n(9 -7) is refused:", e)
