# Support partitions and the constant-weight test
#
# A binary linear code is constant weight when every nonzero codeword has the
# same Hamming weight. Rather than listing all 2^k codewords, we can look at the
# supports A_1..A_k of a basis and cut their union into cells A^I: coordinates
# lying in exactly the supports indexed by I.

from cwcodes import Codeword, check_characterization, enumerate_codewords, span_basis
from cwcodes.supports import partition, relative_symmetric_difference, subset_mask

# The code {000000, 111100, 001111, 110011}
D = span_basis([Codeword.from_string("111100"), Codeword.from_string("001111")])
for word in enumerate_codewords(D):
    print(word, word.weight)

# Cells of the two supports {1,2,3,4} and {3,4,5,6}
p = partition([{1, 2, 3, 4}, {3, 4, 5, 6}])
print(p.render())

# The support of c1 + c2 is the union of cells hit an odd number of times
print(sorted(relative_symmetric_difference(p, subset_mask([1, 2]))))

# The test: every cell must hold w / 2^(k-1) coordinates
verdict = check_characterization(D)
print(verdict.summary())

# A basis of weight-3 words fails at once: 3 is odd
bad = [Codeword.from_string("1110"), Codeword.from_string("0111")]
print(check_characterization(bad).summary())

# Unequal cells are reported by the smallest offending index set
skew = [Codeword.from_string("1111000"), Codeword.from_string("0111100")]
print(check_characterization(skew).summary())
