#!/usr/bin/env python3
"""The weighted path model behind the curvature coefficients.

Vertices are composition vectors.  Each step either prepends a zero entry
(weight 1), stays put (weight q^(entry sum + length)), or raises one entry
(weight a power of q that depends on the convention).  The coefficient of
a word in the expanded power of the deformed differential is the total
weight of all paths of the right length ending at that word's vector.
"""

from qcurvature import Comp, WeightRule, enumerate_vertices, path_sum_dp, path_sum_enum, successors

print("Vertices reachable within 3 steps:")
print(" ", ", ".join(str(c) for c in enumerate_vertices(3)))

print("\nOutgoing edges of s = (0,1) under each increment convention:")
for rule in WeightRule:
    print(f"  {rule.value}:")
    for edge in successors(Comp((0, 1)), rule):
        label = edge.kind if edge.index is None else f"{edge.kind}({edge.index})"
        print(f"    {edge.source} -> {edge.target}   weight {edge.weight}   [{label}]")

print("\nPath sums to each 3-step vertex (dynamic programming == enumeration):")
for s in enumerate_vertices(3):
    dp = path_sum_dp(s, 3, WeightRule.PREFIX)
    enum = path_sum_enum(s, 3, WeightRule.PREFIX)
    assert dp == enum
    print(f"  c_q({s}, 3) = {dp}")

print("\nWhere the two conventions split: the vector (2) in three steps.")
print("The only path is ∅ -> (0) -> (1) -> (2); its weight should be 1.")
for rule in WeightRule:
    print(f"  {rule.value}: {path_sum_enum(Comp((2,)), 3, rule)}")
print("The prefix convention gives 1; the literal table gives q.  The")
print("operator oracle (demo 03) arbitrates in favour of prefix.")
