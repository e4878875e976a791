# Permutation automorphism groups
#
# |PAut(C)| depends only on (k, m, n):
#   (n - (2^k-1) m)! * (m!)^(2^k-1) * |GL(k, 2)|
# We compare that with an exhaustive search and with the group generated by
# explicit cell-level generators.

from cwcodes import canonical_code, extend_with_zeros, parse_cycles
from cwcodes.autgroup import (
    brute_force_paut, group_order, paut_order_formula, s3_subgroup_generators,
    structured_paut_generators,
)

for k, m, n in [(2, 1, 3), (2, 1, 5), (2, 2, 6), (3, 1, 7), (2, 2, 8)]:
    code = canonical_code(k, m, n)
    print((k, m, n), paut_order_formula(k, m, n), brute_force_paut(code).order)

# Two named automorphisms of the weight-4 code of length 6 already generate all of PAut
D = canonical_code(2, 2, 6)
s1, s2 = parse_cycles("(1 4 5 2 3 6)", 6), parse_cycles("(1 3 2 4)(5 6)", 6)
print(group_order([s1, s2], 6))

# Generators from the cell structure of the simplex code of length 15
rep = structured_paut_generators(canonical_code(4, 1), closure_limit=15)
print(rep.order, len(rep.generators))

# Every constant weight code with k >= 2 has an S_3 inside PAut
for k, m in [(2, 1), (3, 1), (3, 2), (2, 5)]:
    a, b = s3_subgroup_generators(k, m)
    print((k, m), a, b)

# Weight-2 codes: orbits {1,2,3} and the padding
print(brute_force_paut(extend_with_zeros(canonical_code(2, 1), 6)).orbits)
