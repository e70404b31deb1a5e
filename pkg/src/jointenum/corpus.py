"""A fixed collection of small codes used for regression checks and demos.

All codes are tiny on purpose: every identity in the package is checked by
enumerating both sides in full, so the corpus has to stay at desk scale.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .algebra import F, Z
from .codes import JointCode, LinearCode, full_code, span, zero_code


def small_codes() -> dict[str, LinearCode]:
    F2, F3, F4, F5 = F(2), F(3), F(4), F(5)
    Z3, Z4, Z6 = Z(3), Z(4), Z(6)
    return {
        "F2_full_2": full_code(F2, 2),
        "F2_rep_2": span([(1, 1)], F2, 2),
        "F2_e1_2": span([(1, 0)], F2, 2),
        "F2_zero_3": zero_code(F2, 3),
        "F2_rep_3": span([(1, 1, 1)], F2, 3),
        "F2_even_3": span([(1, 1, 0), (0, 1, 1)], F2, 3),
        "F2_e1_3": span([(1, 0, 0)], F2, 3),
        "F2_pairs_4": span([(1, 1, 0, 0), (0, 0, 1, 1)], F2, 4),
        "F2_rep_4": span([(1, 1, 1, 1)], F2, 4),
        "F3_rep_2": span([(1, 1)], F3, 2),
        "F3_anti_2": span([(1, 2)], F3, 2),
        "F3_rep_3": span([(1, 1, 1)], F3, 3),
        "F3_sum0_3": span([(1, 2, 0), (0, 1, 2)], F3, 3),
        "F4_rep_2": span([(1, 1)], F4, 2),
        "F4_t_2": span([(1, 2)], F4, 2),
        "F4_hex_3": span([(1, 2, 3)], F4, 3),
        "F5_2_2": span([(1, 2)], F5, 2),
        "F5_rep_2": span([(1, 1)], F5, 2),
        "Z3_rep_2": span([(1, 1)], Z3, 2),
        "Z4_rep_2": span([(1, 1)], Z4, 2),
        "Z4_12_2": span([(1, 2)], Z4, 2),
        "Z4_two_2": span([(2, 2)], Z4, 2),
        "Z4_13_2": span([(1, 3)], Z4, 2),
        "Z4_202_3": span([(2, 0, 2)], Z4, 3),
        "Z4_112_3": span([(1, 1, 2)], Z4, 3),
        "Z6_123_3": span([(1, 2, 3)], Z6, 3),
        "Z6_rep_2": span([(1, 1)], Z6, 2),
        "Z6_30_2": span([(3, 0)], Z6, 2),
    }


def duality_cases(max_ell: int = 2, max_r: int = 2, tuple_budget: int = 4096,
                  space_budget: int = 2**20) -> Iterator[tuple[str, tuple[JointCode, ...]]]:
    """Tuples of joint codes (l <= max_ell, r <= max_r) built from the corpus.

    Codes are grouped by alphabet and length. A tuple is skipped when its
    number of codeword tuples exceeds ``tuple_budget`` or when the ambient
    space |A|^(l n r) exceeds ``space_budget``; the transformed polynomial
    can have that many monomials in the worst case.
    """
    codes = small_codes()
    groups: dict = {}
    for name, C in codes.items():
        groups.setdefault((C.alphabet, C.length), []).append((name, C))
    for (A, _n), members in groups.items():
        for ell in range(1, max_ell + 1):
            if A.size**ell > 16:
                continue
            joints = []
            for combo in itertools.combinations_with_replacement(members, ell):
                P = JointCode([C for _, C in combo])
                joints.append(("x".join(nm for nm, _ in combo), P))
            for r in range(1, max_r + 1):
                if A.size ** (ell * _n * r) > space_budget:
                    continue
                for tup in itertools.combinations_with_replacement(joints, r):
                    total = 1
                    for _, P in tup:
                        total *= P.size
                    if total > tuple_budget:
                        continue
                    yield " | ".join(nm for nm, _ in tup), tuple(P for _, P in tup)
