"""
Cycle indices of translation groups
===================================

"""

# each codeword moves the points (i, a) of {1..n} x A^l by translation
from jointenum import F, joint_cycle_index, lr_cjwe, span, t_substitution

A = F(2)
C = span([(1, 0), (0, 1)], A, 2)
D = span([(1, 1)], A, 2)

# one summand per pair (g, h), with one indeterminate per cycle length
Zc = joint_cycle_index([C, D])
for c, rec in Zc.summands():
    print(rec.elements, dict(rec.cycles))

# the T-map reads each summand back as a weight-enumerator monomial
W = t_substitution(Zc)
print("T(Z) == W:", W == lr_cjwe([C, D]))

# cycle indices serialise with their tuple table, so the round trip is lossless
from jointenum.cycleindex import CycleIndexPoly
print("JSON round trip:", CycleIndexPoly.from_json(Zc.to_json()) == Zc)
