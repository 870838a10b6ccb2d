"""From an affine extremal weight to a certified tensor embedding.

The A2 weight mu = w1 - 2w2 at level 2 is the running example: its
graded character has dimension 5, restriction to the node-2 subalgebra
splits as 2 + 3, and the splitting ((0,-1), (1,-1)) embeds the module
into a tensor product of two level-1 modules.
"""

from demazure import (demazure_character, demazure_operator, dominance_algorithm,
                      embedding_certificate, find_1_admissible, g0_branch,
                      AffineWeight, root_system)

rs = root_system("A", 2)
mu = (1, -2)

char = demazure_character(rs, mu, 2)
print("dim =", char.dimension())
for (fin, lvl, grade), mult in char.sorted_terms():
    print("  grade %d  %s  x%d" % (grade, fin, mult))

# the same character assembled by hand: straighten mu, then fold the
# one-node operators back along the word
lam, word = dominance_algorithm(rs, AffineWeight(mu, 2, 0))
from demazure import GradedCharacter
by_hand = GradedCharacter.from_weight(lam.finite, 2, 0)
for i in reversed(word):
    by_hand = demazure_operator(rs, i, by_hand)
assert by_hand == char
print("operator fold along word %s agrees" % (word,))

print()
print("restriction to node 2:")
for rec in g0_branch(rs, char, (2,)):
    print("  top %s grade %d: dim %d x%d"
          % (rec.finite, rec.grade, rec.dimension, rec.multiplicity))

print()
split = find_1_admissible(rs, mu, 2)
print("first 1-admissible split:", split)
cert = embedding_certificate(rs, mu, split, 1)
print("certificate:", cert.verdict())
print("  lhs dim %d <= rhs dim %d"
      % (cert.lhs.dimension(), cert.rhs.dimension()))
