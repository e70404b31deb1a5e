"""
Averages over equivalent codes and conjugate groups
===================================================

"""

from jointenum import (F, Permutation, avg_cycle_index, avg_lr_cjwe, closure, span,
                       verify_average_identity)
from jointenum.polynomial import render

# average over the three conjugates of a transposition group in S_3
G = closure([Permutation.from_cycles("(1,2)", 3)])
H = closure([Permutation.from_cycles("(1,3,2)", 3)])
rep = avg_cycle_index(G, H)
print(rep.orbit_size, "copies")
print(rep.value.render())

# for codes the average runs over permutation-equivalent copies of the first code
A = F(3)
C = span([(1, 2, 0)], A, 3)
D = span([(1, 1, 1)], A, 3)
avg = avg_lr_cjwe([C, D])
print("orbit size", avg.orbit_size)
print(render(avg.value))

# averaging commutes with the T-map, in both normalisations
for mode in ("distinct", "uniform"):
    print(mode, verify_average_identity([C, D], mode).equal)
