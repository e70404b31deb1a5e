"""Character matrices and tensor-product MacWilliams transforms.

The transform at a flagged tuple position k substitutes, for every x-variable
``x_a`` with ``a = (a_1, ..., a_r)`` (columns in A^l)::

    x_a  ->  sum_{v in A^l} chi(a_k . v) x_{(a_1, ..., v, ..., a_r)}

which is the action of ``T^{(x) l}`` on that position. Flagged positions are
applied one after another and the result is divided by the product of the
corresponding joint-code sizes.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import Alphabet, Cyclotomic, cyclotomic_polynomial
from .codes import DEFAULT_SEARCH_CAP, JointCode, LinearCode
from .enumerators import lr_cjwe
from .polynomial import PolynomialError, SparsePoly, linear_substitute

MAX_CHARACTER_ALPHABET = 25
MAX_FAST_COLUMNS = 256
METHODS = ("auto", "dense", "sparse", "generic")


class MacWilliamsError(ValueError):
    pass


def character_matrix(alphabet: Alphabet) -> tuple[tuple[Cyclotomic, ...], ...]:
    """T = (chi(ab))_{a, b}, rows and columns in canonical element order."""
    if alphabet.size > MAX_CHARACTER_ALPHABET:
        raise MacWilliamsError(f"character matrix needs |A| <= {MAX_CHARACTER_ALPHABET}")
    return tuple(tuple(alphabet.character(alphabet.mul(a, b)) for b in alphabet.elements)
                 for a in alphabet.elements)


def _infer_shape(P: SparsePoly) -> tuple[int, int] | None:
    vs = P.variables()
    if not vs:
        return None
    return len(vs[0][0]), len(vs[0])


def _position_rule(alphabet: Alphabet, ell: int, k: int):
    """Substitution rule x_a -> sum_v chi(a_k . v) x_{a[k <- v]} for position k."""
    vectors = list(itertools.product(alphabet.elements, repeat=ell))
    order = alphabet.char_order

    def rule(a):
        if len(a[k]) != ell:
            raise MacWilliamsError("polynomial variable shape does not match l")
        terms = {}
        ak = a[k]
        for v in vectors:
            e = alphabet.character_exponent(alphabet.dot(ak, v))
            var = a[:k] + (v,) + a[k + 1:]
            terms[((var, 1),)] = Cyclotomic.eta(order, e)
        return SparsePoly._raw(terms, "x")

    return rule


class _Kernel:
    """Expansions of prod_{c in M} (sum_v chi(c . v) x_v) for multisets M of columns.

    Coefficients are integer vectors in Z[x]/(x^m - 1), or plain integers
    when m = 2. Results are cached per multiset, since the same column
    multisets recur across monomials and across calls.
    """

    def __init__(self, alphabet: Alphabet, ell: int):
        self.m = alphabet.char_order
        self.vectors = list(itertools.product(alphabet.elements, repeat=ell))
        self.alphabet = alphabet
        self._row = {}
        self._raw = {(): {(): (1,) + (0,) * (self.m - 1)}}
        self._terms = {}
        self._vars = {}

    def _exponents(self, c):
        row = self._row.get(c)
        if row is None:
            A = self.alphabet
            row = self._row[c] = [A.character_exponent(A.dot(c, v)) for v in self.vectors]
        return row

    def _expand_raw(self, cols: tuple) -> dict:
        hit = self._raw.get(cols)
        if hit is not None:
            return hit
        base = self._expand_raw(cols[:-1])
        row = self._exponents(cols[-1])
        m = self.m
        out: dict = {}
        for key, arr in base.items():
            for vi, e in enumerate(row):
                nk = tuple(sorted(key + (vi,)))
                acc = out.get(nk)
                if acc is None:
                    acc = out[nk] = [0] * m
                for j, a in enumerate(arr):
                    if a:
                        acc[(j + e) % m] += a
        out = {k: tuple(v) for k, v in out.items()}
        self._raw[cols] = out
        return out

    def expand(self, cols: tuple) -> list:
        """Nonzero terms for a sorted tuple of columns, as ((index, count), ...) and weight."""
        hit = self._terms.get(cols)
        if hit is not None:
            return hit
        out = []
        for vkey, arr in self._expand_raw(cols).items():
            w = arr[0] - arr[1] if self.m == 2 else arr
            if (w != 0) if self.m == 2 else any(arr):
                counts = tuple((vi, vkey.count(vi)) for vi in sorted(set(vkey)))
                out.append((counts, w))
        self._terms[cols] = out
        return out

    def blocks(self, rest: tuple, cols: tuple, k: int) -> list:
        """Expansion of one variable group as (sorted variable block, weight) pairs."""
        key = (k, rest)
        var_of = self._vars.get(key)
        if var_of is None:
            if len(self._vars) > 1 << 16:
                self._vars.clear()
            var_of = self._vars[key] = [rest[:k] + (v,) + rest[k:] for v in self.vectors]
        return [(tuple((var_of[vi], c) for vi, c in counts), w) for counts, w in self.expand(cols)]


@functools.lru_cache(maxsize=32)
def _kernel(alphabet: Alphabet, ell: int) -> _Kernel:
    return _Kernel(alphabet, ell)


def _cyclic_mul(a: tuple, b: tuple, m: int) -> tuple:
    out = [0] * m
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[(i + j) % m] += x * y
    return tuple(out)


def _fast_step(terms: dict, kernel: _Kernel, k: int) -> dict:
    """One flagged position on a polynomial with rational coefficients.

    Variables sharing every column except the k-th are expanded together;
    distinct groups produce disjoint variables, so their expansions combine
    by concatenation. For m = 2 the ring Z[eta_2] is Z and plain signed
    integers replace the coefficient vectors.
    """
    m = kernel.m
    binary = m == 2
    acc: dict = {}
    for mono, c in terms.items():
        groups: dict = {}
        for var, e in mono:
            rest = var[:k] + var[k + 1:]
            groups.setdefault(rest, []).extend([var[k]] * e)
        lists = [kernel.blocks(rest, tuple(sorted(cols)), k) for rest, cols in groups.items()]
        if len(lists) == 1:
            combos = ((blk, w) for blk, w in lists[0])
        else:
            combos = _combine(lists, m)
        for blk, w in combos:
            key = tuple(sorted(blk)) if len(lists) > 1 else blk
            if binary:
                acc[key] = acc.get(key, 0) + c * w
            else:
                slot = acc.get(key)
                if slot is None:
                    acc[key] = [c * a for a in w]
                else:
                    for j, a in enumerate(w):
                        if a:
                            slot[j] += c * a
    if binary:
        return {mono: v for mono, v in acc.items() if v}
    out = {}
    for mono, arr in acc.items():
        den = 1
        for a in arr:
            if isinstance(a, Fraction):
                den = math.lcm(den, a.denominator)
        z = Cyclotomic(m, [int(a * den) for a in arr]).as_integer()
        if z is None:
            raise MacWilliamsError("cyclotomic coefficients did not cancel")
        if z:
            out[mono] = Fraction(z, den) if den != 1 else z
    return out


def _combine(lists, m):
    for parts in itertools.product(*lists):
        blk = ()
        w = None
        for b, x in parts:
            blk += b
            if w is None:
                w = x
            elif m == 2:
                w *= x
            else:
                w = _cyclic_mul(w, x, m)
        yield blk, w


# -- dense path --
#
# P = sum_mono c * prod_i x_{w_i}; put c on the sorted sequence (w_1..w_n)
# of variable indices. The transform acts on every coordinate axis by the
# same V x V matrix, so it is n mode-products on a V^n tensor whose entries
# lie in Z[x]/(x^m - 1) (a trailing axis of length m). Orderings of the
# same multiset are collected at the end.

DENSE_SPACE_CAP = 2**21
_EXACT_FLOAT = 2**52


def _column_index(col, q):
    i = 0
    for a in col:
        i = i * q + a
    return i


def _dense_matrix(alphabet: Alphabet, ell: int, pattern: Sequence[int]) -> np.ndarray:
    """V x V table of character exponents at flagged positions, -1 for structural zeros."""
    vectors = list(itertools.product(alphabet.elements, repeat=ell))
    q = len(vectors)
    T = np.array([[alphabet.character_exponent(alphabet.dot(u, v)) for v in vectors]
                  for u in vectors], dtype=np.int64)
    eye = np.full((q, q), -1, dtype=np.int64)
    np.fill_diagonal(eye, 0)
    m = alphabet.char_order
    E = np.zeros((1, 1), dtype=np.int64)
    for d in pattern:
        F = T if d else eye
        E = np.where((E[:, None, :, None] < 0) | (F[None, :, None, :] < 0), -1,
                     (E[:, None, :, None] + F[None, :, None, :]) % m).reshape(E.shape[0] * q, -1)
    return E


@functools.lru_cache(maxsize=16)
def _canonical_index(V: int, n: int) -> np.ndarray:
    """Flat index of the sorted rearrangement of every index sequence in [V]^n."""
    grid = np.sort(np.indices((V,) * n).reshape(n, -1).T, axis=1)
    return np.ravel_multi_index(grid.T, (V,) * n)


def _dense_transform(P: SparsePoly, alphabet: Alphabet, ell: int, pattern: Sequence[int]):
    """Transform of the numerator, or None when the dense path does not apply."""
    terms = P.terms()
    if not terms or any(type(c) is not int for _, c in terms):
        return None
    degs = P.total_degrees()
    if len(degs) != 1:
        return None
    (n,) = degs
    r = len(pattern)
    qcol = alphabet.size**ell
    V = qcol**r
    m = alphabet.char_order
    if n == 0 or V**n * m > DENSE_SPACE_CAP:
        return None
    bound = sum(abs(c) for _, c in terms) * V**n * math.factorial(n)
    if bound >= _EXACT_FLOAT:
        return None
    vectors = list(itertools.product(alphabet.elements, repeat=ell))
    cidx = {v: i for i, v in enumerate(vectors)}

    def var_index(var):
        i = 0
        for col in var:
            i = i * qcol + cidx[col]
        return i

    f = np.zeros((V,) * n + (m,), dtype=np.float64)
    for mono, c in terms:
        seq = sorted(i for var, e in mono for i in [var_index(var)] * e)
        f[tuple(seq) + (0,)] += c
    E = _dense_matrix(alphabet, ell, pattern)
    shifts = [(s, (E == s).astype(np.float64).T) for s in range(m) if (E == s).any()]
    for axis in range(n):
        g = np.moveaxis(f, axis, 0)
        shape = g.shape
        flat = g.reshape(V, -1)
        out = np.zeros_like(flat)
        for s, S in shifts:
            h = (S @ flat).reshape(shape)
            out += np.roll(h, s, axis=-1).reshape(V, -1) if s else h.reshape(V, -1)
        f = np.moveaxis(out.reshape(shape), 0, axis)
    f = np.rint(f.reshape(-1, m)).astype(np.int64)
    canon = _canonical_index(V, n)
    acc = np.zeros((V**n, m), dtype=np.int64)
    np.add.at(acc, canon, f)
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    for d in range(m - 1, deg - 1, -1):
        lead = acc[:, d].copy()
        if lead.any():
            acc[:, d - deg:d + 1] -= lead[:, None] * np.array(phi, dtype=np.int64)[None, :]
    if acc[:, 1:deg].any():
        raise MacWilliamsError("cyclotomic coefficients did not cancel")
    live = np.nonzero(acc[:, 0])[0]
    var_of = []
    for i in range(V):
        cols, j = [], i
        for _ in range(r):
            cols.append(vectors[j % qcol])
            j //= qcol
        var_of.append(tuple(reversed(cols)))
    out = {}
    for flat_i in live.tolist():
        seq = np.unravel_index(flat_i, (V,) * n)
        counts: dict = {}
        for i in seq:
            counts[int(i)] = counts.get(int(i), 0) + 1
        mono = tuple(sorted((var_of[i], e) for i, e in counts.items()))
        out[mono] = int(acc[flat_i, 0])
    return SparsePoly._raw(out, "x")


def _settle(P: SparsePoly) -> SparsePoly:
    """Demote cyclotomic coefficients to integers when they all are rational."""
    try:
        return P.rationalize()
    except PolynomialError:
        return P


def macwilliams_transform(P: SparsePoly, pattern: Sequence[int], alphabet: Alphabet,
                          sizes: Sequence[int] | None = None, ell: int | None = None,
                          method: str = "auto") -> SparsePoly:
    """Apply (T^delta_1)^{(x) l} (x) ... (x) (T^delta_r)^{(x) l} and the size prefactor.

    ``sizes[k]`` is |Pi_k| and is needed only where ``pattern[k]`` is 1.
    The result must have rational coefficients; otherwise MacWilliamsError.

    ``method`` picks the engine: ``"dense"`` (tensor mode-products, integer
    homogeneous input within DENSE_SPACE_CAP), ``"sparse"`` (grouped
    per-position expansion), ``"generic"`` (plain linear substitution with
    cyclotomic coefficients) or ``"auto"`` (first applicable of these).
    All of them are exact.
    """
    if method not in METHODS:
        raise MacWilliamsError(f"method must be one of {METHODS}")
    pattern = [int(d) for d in pattern]
    if any(d not in (0, 1) for d in pattern):
        raise MacWilliamsError("dual pattern entries must be 0 or 1")
    shape = _infer_shape(P)
    if shape is not None:
        if ell is not None and shape[0] != ell:
            raise MacWilliamsError(f"polynomial has l = {shape[0]}, expected {ell}")
        ell = shape[0]
        if len(pattern) != shape[1]:
            raise MacWilliamsError(f"pattern has length {len(pattern)}, polynomial has r = {shape[1]}")
    flagged = [k for k, d in enumerate(pattern) if d]
    if not flagged:
        return P
    if sizes is None or any(k >= len(sizes) or not sizes[k] for k in flagged):
        raise MacWilliamsError("joint-code sizes are required at every flagged position")
    if shape is None:
        return P.scale(Fraction(1, math.prod(sizes[k] for k in flagged)))
    prefactor = Fraction(1, math.prod(sizes[k] for k in flagged))
    if method in ("auto", "dense"):
        Q = _dense_transform(P, alphabet, ell, pattern)
        if Q is not None:
            return Q.scale(prefactor)
        if method == "dense":
            raise MacWilliamsError("dense engine needs a homogeneous integer polynomial within the size cap")
    Q = P
    kernel = None
    if method != "generic" and alphabet.size**ell <= MAX_FAST_COLUMNS:
        kernel = _kernel(alphabet, ell)
    for k in flagged:
        if kernel is not None and Q.domain != "cyclotomic":
            Q = SparsePoly._raw(_fast_step(dict(Q.terms()), kernel, k), "x")
        else:
            Q = _settle(linear_substitute(Q, _position_rule(alphabet, ell, k)))
    try:
        Q = Q.rationalize()
    except PolynomialError as exc:
        raise MacWilliamsError(f"cyclotomic coefficients did not cancel: {exc}") from None
    return Q.scale(prefactor)


@dataclass
class DualityReport:
    equal: bool
    lhs: SparsePoly
    rhs: SparsePoly
    pattern: tuple[int, ...]

    def to_json(self) -> dict:
        from .polynomial import poly_to_json
        return {"equal": self.equal, "pattern": list(self.pattern),
                "lhs": poly_to_json(self.lhs), "rhs": poly_to_json(self.rhs)}


def verify_duality(joint_codes: Sequence[JointCode | LinearCode], pattern: Sequence[int],
                   search_cap: int = DEFAULT_SEARCH_CAP) -> DualityReport:
    """Compare the enumerator of the dualised codes with the transform of the original.

    Left side: direct enumeration with Pi_k replaced by its componentwise dual
    wherever pattern[k] = 1. Right side: macwilliams_transform of the
    enumerator of the undualised codes.
    """
    codes = [JointCode.of(P) for P in joint_codes]
    pattern = tuple(int(d) for d in pattern)
    if len(pattern) != len(codes):
        raise MacWilliamsError("pattern length must equal the number of joint codes")
    hat = [P.dual(search_cap) if d else P for P, d in zip(codes, pattern)]
    lhs = lr_cjwe(hat)
    rhs = macwilliams_transform(lr_cjwe(codes), pattern, codes[0].alphabet,
                                sizes=[P.size for P in codes], ell=codes[0].ell)
    return DualityReport(lhs == rhs, lhs, rhs, pattern)
