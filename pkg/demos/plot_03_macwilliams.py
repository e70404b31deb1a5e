"""
MacWilliams transforms with dual patterns
=========================================

"""

import itertools

from jointenum import F, JointCode, character_matrix, lr_cjwe, macwilliams_transform, span, verify_duality
from jointenum.polynomial import render

# the character matrix of F_4, entries are cyclotomic integers of order 2
A = F(4)
for row in character_matrix(A):
    print([str(z.as_integer()) for z in row])

# over F_3 the entries are cube roots of unity and must cancel in the result
B = F(3)
C = span([(1, 1, 1)], B, 3)
W = lr_cjwe([C])
print("dual enumerator:", render(macwilliams_transform(W, (1,), B, sizes=(C.size,))))

# every dual pattern of a pair of joint codes over F_2
E = F(2)
P = JointCode([span([(1, 0)], E, 2), span([(1, 1)], E, 2)])
Q = JointCode([span([(1, 1)], E, 2), span([(1, 1)], E, 2)])
for pat in itertools.product((0, 1), repeat=2):
    print(pat, verify_duality([P, Q], pat).equal)

# three exact engines compute the same transform
W2 = lr_cjwe([P, Q])
outs = [macwilliams_transform(W2, (1, 1), E, sizes=(P.size, Q.size), method=m)
        for m in ("dense", "sparse", "generic")]
print("engines agree:", outs[0] == outs[1] == outs[2])
