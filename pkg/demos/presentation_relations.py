"""Relation sets of one graded presentation, three ways.

For a single root the p-function is graded with step d*k; the full set M
of minimal mixed products collapses to the sparse set M' and further to
the pure powers M''.  The xi tuple of any graded p-function is a
partition, which is what drives the collapse.
"""

from demazure import (convexity_report, demazure_p, mmmr_classify, relations_M,
                      relations_Mpp, relations_Mprime, root_system, s_sets,
                      simplified_demazure_relations, sm_pair, xi_tuple)

rs = root_system("A", 1)
fam = demazure_p(rs, (-5,), 2)
root = rs.positive_roots[0]

p = fam.pfunction(root, "+")
print("p-function values:", [p(i) for i in range(p.cutoff + 2)])
print("xi tuple:", xi_tuple(p))

for name, rels in [("M", relations_M(fam)), ("M'", relations_Mprime(fam)),
                   ("M''", relations_Mpp(fam))]:
    print("%-3s %d relations" % (name, len(rels)))

print("classes:", {str(k): v.name for k, v in mmmr_classify(fam).items()})

report = convexity_report(fam)
print("convexity: ok=%s over %d checks" % (report.ok, len(report.records)))

print()
print("simplified presentation of the same module:")
for rel in simplified_demazure_relations(rs, (-5,), 2):
    print("  %s %s deg %s  %s" % (rel.root, rel.sign, rel.factors, rel.tags))

# the index sets behind the tuple relations count bounded partitions
print()
print("|S(r, s)| for r = 6:", [len(s_sets(6, s)) for s in range(8)])
print("stage/remainder of 0..9 with step 3:", [sm_pair(x, 3) for x in range(10)])
