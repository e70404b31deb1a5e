"""
Average intersection numbers
============================

"""

from jointenum import (F, Permutation, avg_intersection_codes, avg_intersection_groups,
                       avg_intersection_induced, closure, span)

# abstract groups: |G' & H| averaged over conjugates G' of G
G = closure([Permutation.from_cycles("(1,2)", 3)])
H = closure([Permutation.from_cycles("(1,3,2)", 3)])
print("groups:", avg_intersection_groups(G, H).value)

# codes: |C' & D| averaged over equivalent C', and the same number from translation groups
A = F(2)
C = span([(1, 1, 0)], A, 3)
D = span([(1, 1, 0), (0, 1, 1)], A, 3)
delta = avg_intersection_codes(C, D)
print("Delta(C, D) =", delta.value, "over", delta.orbit_size, "codes")
print("induced groups give", avg_intersection_induced(C, D).value)
