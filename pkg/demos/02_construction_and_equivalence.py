# Building constant weight codes and mapping one onto another
#
# For any k and m, alternating blocks of 2^(k-i) m ones and zeros give a
# k-dimensional code of weight 2^(k-1) m on (2^k - 1) m coordinates. Padding
# with zeros reaches any longer length, and every code with the same
# parameters is a coordinate permutation of this one.

import random

from cwcodes import (
    Permutation, canonical_code, canonical_rows, check_characterization,
    equivalence_permutation, permute_code, render_cycles,
)

for row in canonical_rows(3, 1):
    print(row)  # the simplex code of length 7

code = canonical_code(3, 2, 16)  # weight 8, two padding coordinates
print(code, end="")
print(check_characterization(code).summary())

# Scramble the coordinates, then recover an explicit permutation back
rng = random.Random(0)
img = list(range(1, 17))
rng.shuffle(img)
scrambled = permute_code(Permutation(tuple(img)), code)

sigma = equivalence_permutation(code, scrambled)
print(render_cycles(sigma))
print(permute_code(sigma, code) == scrambled)
