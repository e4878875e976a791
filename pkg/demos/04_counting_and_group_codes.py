# Counting codes and ruling out group codes
#
# The number of distinct codes with parameters (k, m, n) is n! / |PAut|. An
# exhaustive census over cell assignments confirms it on small cases. A code
# can only be a group code if PAut acts transitively on coordinates.

from cwcodes import canonical_code, extend_with_zeros
from cwcodes.autgroup import census_count, code_count_formula, group_code_necessary

for k, m, n in [(2, 1, 4), (2, 1, 5), (2, 2, 6), (3, 1, 7)]:
    print((k, m, n), code_count_formula(k, m, n), census_count(k, m, n).count)

print(code_count_formula(5, 3, 100))  # exact big integer

for n in range(3, 7):
    verdict = group_code_necessary(extend_with_zeros(canonical_code(2, 1), n))
    print(n, verdict.reason)

print(group_code_necessary(canonical_code(2, 2, 7)).reason)
