"""
Complete joint weight enumerators
=================================

"""

# two binary codes of length 2: the whole space and the repetition code
from jointenum import F, JointCode, cjwe, cwe_genus, lr_cjwe, span
from jointenum.polynomial import render

A = F(2)
C = span([(1, 0), (0, 1)], A, 2)
D = span([(1, 1)], A, 2)

# pairs (u, v) in C x D; x_{ab} counts the coordinates where u_i = a and v_i = b
W = cjwe(C, D)
print("W_{C,D} =", render(W))

# genus 2 of a single code counts pairs from C x C the same way
print("genus 2 of D:", render(cwe_genus(D, 2)))

# joint codes stack l codes into l x n matrices; r of them give l x r indices
P1, P2 = JointCode([C, D]), JointCode([D, D])
W22 = lr_cjwe([P1, P2])
print(len(W22), "monomials, coefficients sum to", W22.coefficient_sum(), "=", P1.size * P2.size)
