"""The path-crystal side of the running A2 example.

Two level-1 subcrystals are tensored; the component of the extremal
weight w1 - 2w2 has six path vertices.  Drawn at the weight level the
component collapses to the familiar five-node diamond, because two of
its vertices share the weight (0, 0): one dead end reached by the
1-arrow, one interior point of a 2-string.  The five-element object
itself is the word subcrystal of the tensor, extracted by saturating
f-strings letter by letter.
"""

from demazure import (build_crystal, component_of, crystal_decomposition,
                      demazure_subcrystal, root_system, tensor_crystal,
                      to_dot, weight_graph)

rs = root_system("A", 2)

d1 = demazure_subcrystal(rs, build_crystal(rs, (1, 0)), (2, 1), (1, 0))
d2 = demazure_subcrystal(rs, build_crystal(rs, (0, 1)), (2,), (0, 1))
print("factors: %d and %d vertices" % (len(d1.vertices), len(d2.vertices)))

t = tensor_crystal(rs, d1, d2)
print("tensor: %d vertices" % len(t.vertices))

comp = component_of(t, (1, -2))
print("component of (1,-2): %d vertices, %d edges"
      % (len(comp.vertices), len(comp.edges)))
for v in comp.vertices:
    print("  %s  steps %s" % (v.weight(), v.steps))

weights, edges = weight_graph(comp)
print("weight-level view: %d nodes" % len(weights))
for u, v, i in edges:
    print("  %s -%d-> %s" % (u, i, v))

print()
print("decomposition along node-2 arrows:")
for piece in crystal_decomposition(comp, (2,)):
    print("  source %s  size %d  x%d" % (piece.weight, piece.size, piece.count))

print()
sub = demazure_subcrystal(rs, t, (2, 1), (1, 1))
print("word subcrystal of the tensor: %d vertices, %d edges"
      % (len(sub.vertices), len(sub.edges)))
print(to_dot(sub))
