"""Code-induced permutation groups, complete joint cycle indices and the T-map.

An element c of an l-fold joint code acts on ``{1..n} x A^l`` by the
translation ``(i, x) -> (i, x + c_i)``. The r-fold complete joint cycle
index of Pi_1, ..., Pi_r is the (unnormalised) sum over tuples
``(g_1, ..., g_r)`` of ``prod_i s((g_1..g_r), i)^c(g_1...g_r, i)``.

s-variables are ``(tuple_id, cycle_length)``; a :class:`CycleIndexPoly` keeps
the side table ``tuple_id -> TupleRecord`` that the T-map needs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Alphabet, make_alphabet
from .codes import CodeError, JointCode, LinearCode, Matrix
from .permgroup import PermGroup, Permutation, compose, cycle_counts
from .polynomial import SparsePoly, coeff_from_json, coeff_to_json

DEFAULT_CYCLE_TUPLE_CAP = 2**20
DEFAULT_POINT_CAP = 10**4


class TMapConsistencyError(RuntimeError):
    """A summand's cycle structure disagrees with the closed form; indicates a bug."""


@dataclass(frozen=True)
class TupleRecord:
    """One summand's originating tuple.

    ``elements`` holds the r joint-code elements (l x n matrices) for
    code-induced indices, or the r permutations for abstract groups.
    """

    elements: tuple
    cycles: tuple[tuple[int, int], ...]

    @property
    def is_code_tuple(self) -> bool:
        return not isinstance(self.elements[0], Permutation)


class _Translator:
    """Builds translation permutations of {1..n} x A^l, caching per column."""

    def __init__(self, alphabet: Alphabet, ell: int, n: int, point_cap: int = DEFAULT_POINT_CAP):
        self.alphabet, self.ell, self.n = alphabet, ell, n
        self.block = alphabet.size**ell
        if n * self.block > point_cap:
            raise CodeError(f"point set size {n * self.block} exceeds point cap {point_cap}")
        self.vectors = list(itertools.product(alphabet.elements, repeat=ell))
        self.index = {v: i for i, v in enumerate(self.vectors)}
        self._cache: dict = {}

    def column_map(self, col) -> tuple[int, ...]:
        t = self._cache.get(col)
        if t is None:
            A = self.alphabet
            t = tuple(self.index[A.vec_add(x, col)] for x in self.vectors)
            self._cache[col] = t
        return t

    def permutation(self, mat: Matrix) -> Permutation:
        if len(mat) != self.ell or any(len(r) != self.n for r in mat):
            raise CodeError("element shape does not match the point set")
        image = []
        b = self.block
        for i, col in enumerate(zip(*mat)):
            off = i * b
            image.extend(off + y for y in self.column_map(col))
        return Permutation(image, check=False)


def _as_matrix(element) -> Matrix:
    element = tuple(element)
    if element and isinstance(element[0], int):
        return (element,)
    return tuple(tuple(r) for r in element)


def induced_permutation(element, alphabet: Alphabet, point_cap: int = DEFAULT_POINT_CAP) -> Permutation:
    """The translation permutation of an l x n element (a bare word means l = 1)."""
    mat = _as_matrix(element)
    return _Translator(alphabet, len(mat), len(mat[0]), point_cap).permutation(mat)


def induced_group(code: JointCode | LinearCode, point_cap: int = DEFAULT_POINT_CAP) -> PermGroup:
    """G(Pi): the additive group of Pi as translations of {1..n} x A^l."""
    from .permgroup import PointSet

    P = JointCode.of(code)
    tr = _Translator(P.alphabet, P.ell, P.length, point_cap)
    return PermGroup((tr.permutation(m) for m in P.elements()),
                     points=PointSet.product(P.length, P.alphabet, P.ell))


def column_sums(elements: Sequence[Matrix], alphabet: Alphabet) -> list[tuple[int, ...]]:
    """beta^i: the sum over k of the i-th columns of the elements, for each i."""
    cols = [list(zip(*m)) for m in elements]
    out = []
    for i in range(len(cols[0])):
        acc = cols[0][i]
        for c in cols[1:]:
            acc = alphabet.vec_add(acc, c[i])
        out.append(acc)
    return out


def lr_weight(elements: Sequence[Matrix], alphabet: Alphabet) -> int:
    """Number of coordinates whose column sum over the tuple is nonzero."""
    return sum(1 for b in column_sums([_as_matrix(e) for e in elements], alphabet) if any(b))


def expected_cycle_counts(elements: Sequence[Matrix], alphabet: Alphabet) -> dict[int, int]:
    """Cycle type of the product translation, from the closed form.

    Coordinate i contributes m / L_i cycles of length L_i, where m = |A|^l and
    L_i is the additive order of beta^i (1 or p over F_q, k / gcd(beta^i, k)
    over Z_k).
    """
    mats = [_as_matrix(e) for e in elements]
    m = alphabet.size ** len(mats[0])
    counts: dict[int, int] = {}
    for beta in column_sums(mats, alphabet):
        L = alphabet.additive_order(beta)
        counts[L] = counts.get(L, 0) + m // L
    return dict(sorted(counts.items()))


class CycleIndexPoly:
    """A cycle-index polynomial together with its tuple side table."""

    def __init__(self, poly: SparsePoly, records: dict[int, TupleRecord],
                 alphabet: Alphabet | None = None, ell: int | None = None,
                 length: int | None = None):
        self.poly = poly
        self.records = records
        self.alphabet = alphabet
        self.ell = ell
        self.length = length

    def __len__(self):
        return len(self.poly)

    def __eq__(self, other):
        if not isinstance(other, CycleIndexPoly):
            return NotImplemented
        return self.summand_table() == other.summand_table()

    def summands(self) -> list[tuple[object, TupleRecord]]:
        """(coefficient, record) pairs in canonical polynomial order."""
        out = []
        for mono, c in self.poly.terms():
            tid = mono[0][0][0]
            out.append((c, self.records[tid]))
        return out

    def summand_table(self) -> dict:
        """Content-keyed view: tuple elements -> (coefficient, cycle type)."""
        return {rec.elements: (c, rec.cycles) for c, rec in self.summands()}

    def scale(self, s) -> "CycleIndexPoly":
        return CycleIndexPoly(self.poly.scale(s), self.records, self.alphabet, self.ell, self.length)

    @classmethod
    def weighted_sum(cls, parts: Sequence[tuple[object, "CycleIndexPoly"]]) -> "CycleIndexPoly":
        """sum_k w_k Z_k, identifying s-variables of tuples with identical content."""
        registry: dict = {}
        records: dict[int, TupleRecord] = {}
        acc: dict = {}
        meta = None
        for w, Z in parts:
            if meta is None:
                meta = (Z.alphabet, Z.ell, Z.length)
            for mono, c in Z.poly.terms():
                rec = Z.records[mono[0][0][0]]
                tid = registry.get(rec.elements)
                if tid is None:
                    tid = registry[rec.elements] = len(registry)
                    records[tid] = rec
                nm = tuple(((tid, i), e) for (_, i), e in mono)
                acc[nm] = acc.get(nm, 0) + Fraction(w) * c
        alphabet, ell, length = meta if meta else (None, None, None)
        return cls(SparsePoly._raw(acc, "s"), records, alphabet, ell, length)

    # -- rendering --

    def _fmt_element(self, e) -> str:
        if isinstance(e, Permutation):
            return str(e)
        return "/".join("".join(str(a) for a in r) if self.alphabet is None or self.alphabet.size <= 10
                        else ",".join(str(a) for a in r) for r in e)

    def render(self) -> str:
        if self.poly.is_zero():
            return "0"
        pieces = []
        for (mono, c), (_, rec) in zip(self.poly.terms(), self.summands()):
            label = "(" + ",".join(self._fmt_element(e) for e in rec.elements) + ")"
            body = " ".join(f"s({label},{i})^{e}" for (_, i), e in mono)
            pieces.append(body if c == 1 else f"{c} {body}")
        return " + ".join(pieces)

    __str__ = render

    def to_json(self) -> dict:
        out = []
        for c, rec in self.summands():
            if rec.is_code_tuple:
                tup = [[list(r) for r in e] for e in rec.elements]
            else:
                tup = [str(e) for e in rec.elements]
            out.append({"coeff": coeff_to_json(c), "tuple": tup,
                        "cycles": [list(x) for x in rec.cycles]})
        d = {"kind": "cycle_index", "summands": out}
        if self.alphabet is not None:
            d.update({"alphabet": self.alphabet.to_json(), "l": self.ell, "n": self.length})
        return d

    @classmethod
    def from_json(cls, d: dict) -> "CycleIndexPoly":
        if "alphabet" not in d:
            raise CodeError("only code-induced cycle indices can be parsed")
        alphabet = make_alphabet(d["alphabet"])
        records, acc = {}, {}
        for tid, s in enumerate(d["summands"]):
            elems = tuple(tuple(tuple(int(a) for a in r) for r in e) for e in s["tuple"])
            cyc = tuple((int(L), int(c)) for L, c in s["cycles"])
            records[tid] = TupleRecord(elems, cyc)
            acc[tuple(((tid, L), c) for L, c in cyc)] = coeff_from_json(s["coeff"])
        return cls(SparsePoly._raw(acc, "s"), records, alphabet, d.get("l"), d.get("n"))


def _check_shapes(codes: Sequence[JointCode]):
    P0 = codes[0]
    for P in codes[1:]:
        if P.alphabet != P0.alphabet or P.length != P0.length or P.ell != P0.ell:
            raise CodeError("joint codes must share alphabet, length and l")


def joint_cycle_index(joint_codes: Sequence[JointCode | LinearCode],
                      cap: int = DEFAULT_CYCLE_TUPLE_CAP,
                      point_cap: int = DEFAULT_POINT_CAP) -> CycleIndexPoly:
    """The r-fold complete joint cycle index of G(Pi_1), ..., G(Pi_r).

    Each summand's cycle type is read off the explicit product permutation
    g_1 g_2 ... g_r on {1..n} x A^l.
    """
    codes = [JointCode.of(P) for P in joint_codes]
    if not codes:
        raise CodeError("need at least one joint code")
    _check_shapes(codes)
    total = math.prod(P.size for P in codes)
    if total > cap:
        raise CodeError(f"cycle index over {total} tuples exceeds tuple cap {cap}")
    P0 = codes[0]
    tr = _Translator(P0.alphabet, P0.ell, P0.length, point_cap)
    lists = [[(m, tr.permutation(m)) for m in P.elements()] for P in codes]
    records: dict[int, TupleRecord] = {}
    acc: dict = {}
    for tid, combo in enumerate(itertools.product(*lists)):
        prod = combo[0][1]
        for _, g in combo[1:]:
            prod = compose(prod, g)
        counts = cycle_counts(prod)
        cyc = tuple(counts.items())
        records[tid] = TupleRecord(tuple(m for m, _ in combo), cyc)
        acc[tuple(((tid, i), c) for i, c in cyc)] = 1
    return CycleIndexPoly(SparsePoly._raw(acc, "s"), records, P0.alphabet, P0.ell, P0.length)


def group_cycle_index(groups: Sequence[PermGroup], cap: int = DEFAULT_CYCLE_TUPLE_CAP) -> CycleIndexPoly:
    """The r-fold complete joint cycle index of abstract permutation groups."""
    if not groups:
        raise CodeError("need at least one group")
    d = groups[0].degree
    if any(G.degree != d for G in groups):
        raise CodeError("groups act on different point sets")
    total = math.prod(G.order for G in groups)
    if total > cap:
        raise CodeError(f"cycle index over {total} tuples exceeds tuple cap {cap}")
    records: dict[int, TupleRecord] = {}
    acc: dict = {}
    for tid, combo in enumerate(itertools.product(*(G.elements for G in groups))):
        prod = combo[0]
        for g in combo[1:]:
            prod = compose(prod, g)
        cyc = tuple(cycle_counts(prod).items())
        records[tid] = TupleRecord(tuple(combo), cyc)
        acc[tuple(((tid, i), c) for i, c in cyc)] = 1
    return CycleIndexPoly(SparsePoly._raw(acc, "s"), records)


def t_substitution(Z: CycleIndexPoly) -> SparsePoly:
    """Apply the T-map: each summand becomes prod_i x_{(c_1i, ..., c_ri)}.

    The x-monomial is read coordinate by coordinate from the stored tuple.
    Every summand's recorded cycle type is checked against the closed form
    (m (n - wt) fixed points, and m / L_i cycles of length L_i per moved
    coordinate), which is the exponent bookkeeping the fractional powers of
    the substitution encode.
    """
    if Z.alphabet is None:
        raise CodeError("T-map needs a code-induced cycle index with alphabet metadata")
    A = Z.alphabet
    acc: dict = {}
    for mono, c in Z.poly.terms():
        tid = mono[0][0][0]
        rec = Z.records.get(tid)
        if rec is None or not rec.is_code_tuple:
            raise CodeError(f"cycle index is missing tuple metadata for id {tid}")
        if any(t != tid for (t, _), _ in mono):
            raise CodeError("a cycle-index monomial mixes several tuples")
        got = {i: e for (_, i), e in mono}
        want = expected_cycle_counts(rec.elements, A)
        if got != want:
            raise TMapConsistencyError(
                f"tuple {rec.elements}: cycle type {got} differs from closed form {want}")
        m = A.size ** len(rec.elements[0])
        n = len(rec.elements[0][0])
        wt = lr_weight(rec.elements, A)
        if got.get(1, 0) != m * (n - wt):
            raise TMapConsistencyError(f"tuple {rec.elements}: too few fixed points for weight {wt}")
        if A.is_field and wt and got.get(A.p, 0) != (m // A.p) * wt:
            raise TMapConsistencyError(f"tuple {rec.elements}: wrong number of {A.p}-cycles")
        cols = [list(zip(*e)) for e in rec.elements]
        xm: dict = {}
        for i in range(n):
            v = tuple(cl[i] for cl in cols)
            xm[v] = xm.get(v, 0) + 1
        key = tuple(sorted(xm.items()))
        acc[key] = acc.get(key, 0) + c
    return SparsePoly._raw(acc, "x")
