"""Walk affine weights into the dominant chamber and come back.

The walk applies simple affine reflections at nodes with negative pairing
until none is left; the recorded word then transports the dominant
representative back to the start, coordinate for coordinate.
"""

from demazure import AffineWeight, affine_reflect, dominance_algorithm, root_system


def walk(family, rank, finite, level, degree=0):
    rs = root_system(family, rank)
    w = AffineWeight(tuple(finite), level, degree)
    lam, word = dominance_algorithm(rs, w)
    print("%s%d  %r" % (family, rank, w))
    print("  dominant %r after word %s" % (lam, word))
    back = lam
    for i in reversed(word):
        back = affine_reflect(rs, i, back)
    assert back == w
    print("  word transports it back, length %d" % len(word))
    return lam, word


walk("A", 2, (1, -2), 2)

# the same finite weight at level 1 needs a different route: the node-0
# pairing changes with the level
walk("A", 2, (1, -2), 1)

# long roots make the walk jump in degree
walk("G", 2, (-1, -1), 3, degree=1)

walk("C", 3, (0, -2, 1), 2)
