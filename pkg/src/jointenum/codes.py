"""Linear codes over an :class:`~jointenum.algebra.Alphabet` and l-fold joint codes.

Codes are held as explicit sorted codeword lists. A joint code
``C_1 x ... x C_l`` is enumerated lazily; its elements are l x n matrices
stored as tuples of rows, row j being a codeword of ``C_j``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import Alphabet, make_alphabet
from .permgroup import Permutation

DEFAULT_CODE_CAP = 2**20
DEFAULT_SEARCH_CAP = 2**20
MAX_ORBIT_LENGTH = 8
MAX_ORBIT_ELL = 2

Word = tuple[int, ...]
Matrix = tuple[Word, ...]


class CodeError(ValueError):
    pass


class LinearCode:
    """A linear code (F_q-subspace or Z_k-submodule) of A^n."""

    def __init__(self, alphabet: Alphabet, length: int, words: Sequence[Word],
                 generators: Sequence[Word] | None = None):
        self.alphabet = alphabet
        self.length = length
        self.words: tuple[Word, ...] = tuple(sorted(set(tuple(w) for w in words)))
        self._set = frozenset(self.words)
        self.generators: tuple[Word, ...] = tuple(tuple(g) for g in generators) if generators is not None \
            else self.words
        if any(len(w) != length for w in self.words):
            raise CodeError("codeword length does not match code length")

    def __len__(self):
        return len(self.words)

    @property
    def size(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return tuple(w) in self._set

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and self.alphabet == other.alphabet
                and self.length == other.length and self._set == other._set)

    def __hash__(self):
        return hash((self.alphabet, self.length, self._set))

    def __lt__(self, other):
        return self.words < other.words

    def __repr__(self):
        shown = ", ".join("".join(map(str, w)) for w in self.words[:8])
        more = ", ..." if self.size > 8 else ""
        return f"LinearCode({self.alphabet!r}, n={self.length}, {{{shown}{more}}})"

    def is_linear(self) -> bool:
        """Closure under addition and scalar multiplication (exhaustive)."""
        A = self.alphabet
        if tuple([0] * self.length) not in self._set:
            return False
        for u in self.words:
            for a in A.elements:
                if A.vec_scale(a, u) not in self._set:
                    return False
            for v in self.words:
                if A.vec_add(u, v) not in self._set:
                    return False
        return True

    def intersection(self, other: "LinearCode") -> "LinearCode":
        return LinearCode(self.alphabet, self.length, [w for w in self.words if w in other._set])

    def to_json(self) -> dict:
        return {"alphabet": self.alphabet.to_json(), "length": self.length,
                "generators": [list(g) for g in self.generators]}


def span(generators: Sequence[Sequence[int]], alphabet: Alphabet, n: int,
         cap: int = DEFAULT_CODE_CAP) -> LinearCode:
    """All A-linear combinations of the generators."""
    gens = [tuple(int(x) for x in g) for g in generators]
    for g in gens:
        if len(g) != n:
            raise CodeError(f"generator {g} does not have length {n}")
        if any(not 0 <= x < alphabet.size for x in g):
            raise CodeError(f"generator {g} has entries outside the alphabet")
    words = {tuple([0] * n)}
    for g in gens:
        multiples = {alphabet.vec_scale(a, g) for a in alphabet.elements}
        new = set()
        for w in words:
            for mg in multiples:
                new.add(alphabet.vec_add(w, mg))
                if len(new) > cap:
                    raise CodeError(f"code size exceeds code cap {cap}")
        words = new
    return LinearCode(alphabet, n, sorted(words), generators=gens)


def zero_code(alphabet: Alphabet, n: int) -> LinearCode:
    return span([], alphabet, n)


def full_code(alphabet: Alphabet, n: int) -> LinearCode:
    return span([tuple(int(i == j) for i in range(n)) for j in range(n)], alphabet, n)


def dual(C: LinearCode, cap: int = DEFAULT_SEARCH_CAP) -> LinearCode:
    """Exhaustive dual {v : u.v = 0 for every u in C}.

    Orthogonality to a generating set suffices by bilinearity.
    """
    A, n = C.alphabet, C.length
    if A.size**n > cap:
        raise CodeError(f"dual search space {A.size}^{n} exceeds search cap {cap}")
    gens = [g for g in C.generators if any(g)]
    out = [v for v in itertools.product(A.elements, repeat=n)
           if all(A.dot(g, v) == 0 for g in gens)]
    return LinearCode(A, n, out)


def permute_word(u: Word, sigma: Permutation) -> Word:
    """sigma(u) = (u_sigma(1), ..., u_sigma(n))."""
    return tuple(u[s] for s in sigma.image)


def permute_code(C: LinearCode, sigma: Permutation) -> LinearCode:
    if sigma.degree != C.length:
        raise CodeError("permutation degree does not match code length")
    return LinearCode(C.alphabet, C.length, [permute_word(w, sigma) for w in C.words],
                      generators=[permute_word(g, sigma) for g in C.generators])


class JointCode:
    """The l-fold joint code C_1 x ... x C_l."""

    def __init__(self, components: Sequence[LinearCode]):
        comps = tuple(components)
        if not comps:
            raise CodeError("a joint code needs at least one component")
        A, n = comps[0].alphabet, comps[0].length
        for C in comps:
            if C.alphabet != A:
                raise CodeError("joint code components use different alphabets")
            if C.length != n:
                raise CodeError("joint code components have different lengths")
        self.components = comps
        self.alphabet = A
        self.length = n

    @classmethod
    def of(cls, code: "LinearCode | JointCode") -> "JointCode":
        return code if isinstance(code, JointCode) else cls([code])

    @property
    def ell(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return math.prod(C.size for C in self.components)

    def __len__(self):
        return self.size

    def elements(self) -> Iterator[Matrix]:
        return itertools.product(*(C.words for C in self.components))

    def __contains__(self, mat):
        return len(mat) == self.ell and all(tuple(r) in C for r, C in zip(mat, self.components))

    def dual(self, cap: int = DEFAULT_SEARCH_CAP) -> "JointCode":
        return JointCode([dual(C, cap) for C in self.components])

    def __eq__(self, other):
        return isinstance(other, JointCode) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __lt__(self, other):
        return tuple(C.words for C in self.components) < tuple(C.words for C in other.components)

    def __repr__(self):
        return f"JointCode(l={self.ell}, n={self.length}, size={self.size})"

    def to_json(self) -> dict:
        return {"components": [C.to_json() for C in self.components]}


def make_joint(codes: Sequence[LinearCode]) -> JointCode:
    return JointCode(codes)


def columns(mat: Matrix) -> list[Word]:
    """The columns c_1..c_n of an l x n matrix."""
    return list(zip(*mat))


def row(mat: Matrix, j: int) -> Word:
    """mu_j: the j-th row (0-based)."""
    return mat[j]


@dataclass(frozen=True)
class IotaAction:
    """iota = (pi; sigma_1, ..., sigma_l): row j of the image is sigma_j applied to row pi(j)."""

    pi: Permutation
    sigmas: tuple[Permutation, ...]

    def __post_init__(self):
        if len(self.sigmas) != self.pi.degree:
            raise CodeError("iota needs one coordinate permutation per row")

    @classmethod
    def identity(cls, ell: int, n: int) -> "IotaAction":
        return cls(Permutation.identity(ell), tuple(Permutation.identity(n) for _ in range(ell)))

    def apply(self, mat: Matrix) -> Matrix:
        return tuple(permute_word(mat[self.pi(j)], s) for j, s in enumerate(self.sigmas))


def apply_iota(P: JointCode, iota: IotaAction) -> JointCode:
    if iota.pi.degree != P.ell:
        raise CodeError("iota row permutation does not match l")
    return JointCode([permute_code(P.components[iota.pi(j)], s) for j, s in enumerate(iota.sigmas)])


def _transpositions(n: int) -> list[Permutation]:
    return [Permutation.from_cycles([(0, i)], n, one_based=False) for i in range(1, n)]


def code_orbit(C: LinearCode) -> list[LinearCode]:
    """Distinct codes sigma(C), sigma in S_n, in sorted order.

    Explored breadth-first under the generating transpositions (1 i), so only
    distinct images are ever materialised.
    """
    if C.length > MAX_ORBIT_LENGTH:
        raise CodeError(f"orbit enumeration needs n <= {MAX_ORBIT_LENGTH}, got {C.length}")
    gens = _transpositions(C.length)
    seen = {C}
    frontier = [C]
    while frontier:
        nxt = []
        for D in frontier:
            for t in gens:
                E = permute_code(D, t)
                if E not in seen:
                    seen.add(E)
                    nxt.append(E)
        frontier = nxt
    return sorted(seen)


def joint_orbit(P: JointCode) -> list[JointCode]:
    """Distinct joint codes iota(P), iota in S_l x| S_n^l, in sorted order.

    iota(P) has components sigma_j(C_pi(j)), so the orbit is the set of
    row-rearrangements of products of component orbits.
    """
    if P.ell > MAX_ORBIT_ELL or P.length > MAX_ORBIT_LENGTH:
        raise CodeError(f"joint orbit enumeration needs l <= {MAX_ORBIT_ELL} and n <= {MAX_ORBIT_LENGTH}")
    orbits = [code_orbit(C) for C in P.components]
    out = set()
    for pi in itertools.permutations(range(P.ell)):
        for combo in itertools.product(*(orbits[pi[j]] for j in range(P.ell))):
            out.add(JointCode(combo))
    return sorted(out)


def equivalence_class(obj: "LinearCode | JointCode") -> list:
    """Distinct permutation-equivalent codes (or iota-equivalent joint codes)."""
    if isinstance(obj, JointCode):
        return joint_orbit(obj)
    return code_orbit(obj)


def equivalence_group_order(obj: "LinearCode | JointCode") -> int:
    """|S_n| for codes, |S_l x| S_n^l| = l! (n!)^l for joint codes."""
    n = obj.length
    if isinstance(obj, JointCode):
        return math.factorial(obj.ell) * math.factorial(n) ** obj.ell
    return math.factorial(n)


# -- JSON --


def code_from_json(data: dict, cap: int = DEFAULT_CODE_CAP) -> LinearCode:
    if not isinstance(data, dict):
        raise CodeError("code description must be an object")
    for field in ("alphabet", "length"):
        if field not in data:
            raise CodeError(f"code description is missing field '{field}'")
    A = make_alphabet(data["alphabet"])
    n = data["length"]
    if not isinstance(n, int) or n < 1:
        raise CodeError(f"code field 'length' must be a positive integer, got {n!r}")
    if "generators" in data:
        return span(data["generators"], A, n, cap)
    if "words" in data:
        C = LinearCode(A, n, [tuple(w) for w in data["words"]])
        if not C.is_linear():
            raise CodeError("code field 'words' does not list a linear code")
        return C
    raise CodeError("code description is missing field 'generators'")


def joint_from_json(data: dict, cap: int = DEFAULT_CODE_CAP) -> JointCode:
    """Joint code description ``{"components": [code, ...]}``; a bare code gives l = 1."""
    if isinstance(data, dict) and "components" in data:
        comps = data["components"]
        if not isinstance(comps, list) or not comps:
            raise CodeError("joint code field 'components' must be a non-empty list")
        return JointCode([code_from_json(c, cap) for c in comps])
    return JointCode([code_from_json(data, cap)])
