"""Minimal spanning sets and moving between them."""

from supertropical import (
    Mat,
    change_of_base,
    is_critical,
    is_generalized_permutation,
    parse_scalar,
    parse_vector,
    print_matrix,
    print_vector,
    s_base,
    spans,
)

S = [parse_vector(t) for t in ("0 -inf", "-inf 0", "1 2", "3 -inf")]
print("family:")
for v in S:
    print("  ", print_vector(v))

# the third member is a combination of the first two, so it adds nothing
w = spans(S[:2], S[2])
print("\n(1 2) from the axis pair, coefficients:",
      " ".join(str(c.value) for c in w.coeffs))

rep = s_base(S)
print("\nminimal spanning subset: indices", rep.indices, "rank", rep.rank)
print("normalized representatives:",
      [print_vector(v) for v in rep.normalized])

# criticality is a property of a member's projective class: the last
# member is a scaled copy of the first, so it is critical even though
# the base keeps only one of the two
for i, v in enumerate(S):
    print(f"  member {i} {print_vector(v):>7}  critical: {is_critical(i, S)}")

# two minimal bases of one space differ by a generalized permutation
kept = [S[i] for i in rep.indices]
other = [S[1].scale(parse_scalar("2")), S[0].scale(parse_scalar("5"))]
P = change_of_base(Mat(kept), Mat(other))
print("\nchange of base onto a scaled, reordered copy:")
print(print_matrix(P))
assert is_generalized_permutation(P)
assert Mat(other) == P @ Mat(kept)
