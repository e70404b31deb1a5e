"""
Codes over Z_k
==============

"""

from jointenum import Z, dual, joint_cycle_index, lr_cjwe, span, t_substitution, verify_duality

# over Z_4 a column sum can have additive order 2 or 4
A = Z(4)
C = span([(1, 2)], A, 2)
print("C =", sorted(C.words))
for rec in joint_cycle_index([C]).records.values():
    print(rec.elements, dict(rec.cycles))

# the T-map and the duality still hold; the dual is a submodule, not a subspace
print("T(Z) == W:", t_substitution(joint_cycle_index([C])) == lr_cjwe([C]))
print("dual:", sorted(dual(C).words))
print("MacWilliams:", verify_duality([C, C], (1, 0)).equal)

# Z_6 mixes orders 2 and 3 in one alphabet
S = span([(1, 2, 3)], Z(6), 3)
print("Z_6 T-map:", t_substitution(joint_cycle_index([S])) == lr_cjwe([S]))
