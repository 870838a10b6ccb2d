"""Admissible splittings of one C2 weight, in full detail.

mu = 2w1 + w2 splits into two parts in several ways.  The split
(w1+w2, w1) fails the count condition at the long-ish root a1+a2 for
r = 1 but passes for r = 2; the split (2w1, w2) passes both.  The
balanced split spreads every root pairing as evenly as possible; in
type A that always yields a 1-admissible split, but here it lands on
the failing (w1+w2, w1), which is the point of the example.
"""

from demazure import (balanced_split, enumerate_dominant_splits, is_r_admissible,
                      minimal_r, root_system)

rs = root_system("C", 2)
mu = (2, 1)

for split in [((1, 1), (1, 0)), ((2, 0), (0, 1))]:
    print("split", split)
    for r in (1, 2):
        rep = is_r_admissible(rs, mu, split, r)
        print("  r=%d  admissible=%s" % (r, rep.admissible))
        for rec in rep.failures:
            print("    fails at root %s sign %s: counts %s, m(%d)=%d"
                  % (rec.profile.root, rec.profile.sign,
                     rec.profile.counts, r, rec.profile.m(r)))
    print("  minimal r:", minimal_r(rs, mu, split))

print()
print("balanced:", balanced_split(rs, mu, 2))

print()
print("all dominant 2-part splits of", mu)
for split in enumerate_dominant_splits(rs, mu, 2):
    rep = is_r_admissible(rs, mu, split, 1)
    print("  %-22s 1-admissible=%s" % (split, rep.admissible))
