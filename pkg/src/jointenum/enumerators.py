"""Complete weight enumerators by direct enumeration.

Every enumerator is a polynomial in x-variables indexed by alphabet matrices
in column-major form (see :mod:`jointenum.polynomial`). For tuples
``(c_1, ..., c_r)`` of joint-code elements the variable attached to
coordinate i is the l x r matrix whose k-th column is the i-th column of c_k.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from typing import Sequence

from .codes import CodeError, JointCode, LinearCode
from .polynomial import SparsePoly

DEFAULT_TUPLE_CAP = 2**22


def _check_cap(total: int, cap: int):
    if total > cap:
        raise CodeError(f"enumeration over {total} tuples exceeds tuple cap {cap}")


def composition_counter(elements: Sequence) -> Counter:
    """n_a(c_1, ..., c_r) for every a, as a Counter over x-indices.

    ``elements`` are l x n matrices (tuples of rows).
    """
    cols = [list(zip(*m)) for m in elements]
    n = len(cols[0])
    return Counter(tuple(c[i] for c in cols) for i in range(n))


def lr_cjwe(joint_codes: Sequence[JointCode | LinearCode], cap: int = DEFAULT_TUPLE_CAP) -> SparsePoly:
    """The (l, r)-fold complete joint weight enumerator of Pi_1, ..., Pi_r."""
    codes = [JointCode.of(P) for P in joint_codes]
    if not codes:
        raise CodeError("need at least one joint code")
    P0 = codes[0]
    for P in codes[1:]:
        if P.alphabet != P0.alphabet or P.length != P0.length or P.ell != P0.ell:
            raise CodeError("joint codes must share alphabet, length and l")
    _check_cap(math.prod(P.size for P in codes), cap)
    n = P0.length
    # precompute each element's column list once
    col_lists = [[tuple(zip(*m)) for m in P.elements()] for P in codes]
    acc: Counter = Counter()
    for combo in itertools.product(*col_lists):
        mono = Counter(tuple(c[i] for c in combo) for i in range(n))
        acc[tuple(sorted(mono.items()))] += 1
    return SparsePoly._raw(dict(acc), "x")


def cwe_genus(C: LinearCode, g: int, cap: int = DEFAULT_TUPLE_CAP) -> SparsePoly:
    """Complete weight enumerator of genus g; variables indexed by a in A^g."""
    if g < 1:
        raise CodeError("genus must be >= 1")
    _check_cap(C.size**g, cap)
    acc: Counter = Counter()
    for vs in itertools.product(C.words, repeat=g):
        mono = Counter((tuple(v[i] for v in vs),) for i in range(C.length))
        acc[tuple(sorted(mono.items()))] += 1
    return SparsePoly._raw(dict(acc), "x")


def cjwe(C: LinearCode, D: LinearCode, cap: int = DEFAULT_TUPLE_CAP) -> SparsePoly:
    """Complete joint weight enumerator of C and D; variables indexed by (u_i, v_i)."""
    if C.alphabet != D.alphabet or C.length != D.length:
        raise CodeError("codes must share alphabet and length")
    _check_cap(C.size * D.size, cap)
    acc: Counter = Counter()
    for u in C.words:
        for v in D.words:
            mono = Counter(((a,), (b,)) for a, b in zip(u, v))
            acc[tuple(sorted(mono.items()))] += 1
    return SparsePoly._raw(dict(acc), "x")
