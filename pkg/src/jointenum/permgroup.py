"""Permutations of finite point sets and small permutation groups.

Permutations act on point indices ``0 .. degree-1``; a :class:`PointSet`
attaches labels when the points mean something (for instance the pairs
``(i, x)`` of ``{1..n} x A^l``). Products follow the left-to-right
convention ``(gh)(a) = h(g(a))``.
"""

from __future__ import annotations

import itertools
import math
from typing import Hashable, Iterable, Sequence

DEFAULT_GROUP_CAP = 10**5
MAX_CONJUGATION_DEGREE = 8


class PermutationError(ValueError):
    pass


class PointSet:
    """Ordered, distinct point labels."""

    def __init__(self, labels: Iterable[Hashable]):
        self.labels = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise PermutationError("point labels must be distinct")

    @classmethod
    def abstract(cls, n: int) -> "PointSet":
        return cls(range(1, n + 1))

    @classmethod
    def product(cls, n: int, alphabet, ell: int) -> "PointSet":
        """The set {1..n} x A^ell, coordinate-major, A^ell in lexicographic order."""
        cols = list(itertools.product(alphabet.elements, repeat=ell))
        return cls((i, x) for i in range(1, n + 1) for x in cols)

    def __len__(self):
        return len(self.labels)

    def index(self, label) -> int:
        return self._index[label]

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)


class Permutation:
    """A bijection of ``range(degree)`` stored as its image tuple."""

    __slots__ = ("image", "_hash")

    def __init__(self, image: Iterable[int], check: bool = True):
        self.image = tuple(image)
        if check and sorted(self.image) != list(range(len(self.image))):
            raise PermutationError(f"{self.image} is not a permutation")
        self._hash = hash(self.image)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]] | str, degree: int,
                    one_based: bool = True) -> "Permutation":
        """Build from disjoint cycles, e.g. ``[(1, 2), (3, 4)]`` or ``"(1,2)(3,4)"``."""
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles)
        image = list(range(degree))
        seen = set()
        off = 1 if one_based else 0
        for cyc in cycles:
            pts = [c - off for c in cyc]
            for a in pts:
                if not 0 <= a < degree or a in seen:
                    raise PermutationError(f"bad cycle {tuple(cyc)} for degree {degree}")
                seen.add(a)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                image[a] = b
        return cls(image, check=False)

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, a: int) -> int:
        return self.image[a]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __lt__(self, other):
        return self.image < other.image

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for a, b in enumerate(self.image):
            inv[b] = a
        return Permutation(inv, check=False)

    def is_identity(self) -> bool:
        return all(a == b for a, b in enumerate(self.image))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self.image)
        out = []
        for start in range(len(self.image)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            b = self.image[start]
            while b != start:
                cyc.append(b)
                seen[b] = True
                b = self.image[b]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_counts(self) -> dict[int, int]:
        return cycle_counts(self)

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(a + 1) for a in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({list(self.image)})"


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    text = text.replace(" ", "")
    if text in ("", "()"):
        return []
    if not (text.startswith("(") and text.endswith(")")):
        raise PermutationError(f"cannot parse cycle notation {text!r}")
    out = []
    for chunk in text[1:-1].split(")("):
        if chunk:
            try:
                out.append(tuple(int(t) for t in chunk.split(",")))
            except ValueError:
                raise PermutationError(f"cannot parse cycle notation {text!r}") from None
    return out


def compose(g: Permutation, h: Permutation) -> Permutation:
    """The product gh, acting as a -> h(g(a))."""
    if g.degree != h.degree:
        raise PermutationError(f"degree mismatch: {g.degree} vs {h.degree}")
    hi = h.image
    return Permutation([hi[a] for a in g.image], check=False)


def cycle_counts(g: Permutation) -> dict[int, int]:
    """Map cycle length -> number of cycles of that length (fixed points included)."""
    counts: dict[int, int] = {}
    img = g.image
    seen = bytearray(len(img))
    for start in range(len(img)):
        if seen[start]:
            continue
        length = 0
        b = start
        while not seen[b]:
            seen[b] = 1
            b = img[b]
            length += 1
        counts[length] = counts.get(length, 0) + 1
    return dict(sorted(counts.items()))


class PermGroup:
    """A finite permutation group given by its full element list."""

    def __init__(self, elements: Iterable[Permutation], degree: int | None = None,
                 points: PointSet | None = None, check: bool = False):
        elems = sorted(set(elements))
        if not elems:
            if degree is None:
                raise PermutationError("empty group needs a degree")
            elems = [Permutation.identity(degree)]
        self.degree = elems[0].degree
        if any(g.degree != self.degree for g in elems):
            raise PermutationError("elements act on different degrees")
        self.elements = tuple(elems)
        self._set = frozenset(elems)
        self.points = points
        if check:
            ident = Permutation.identity(self.degree)
            if ident not in self._set:
                raise PermutationError("group does not contain the identity")
            for g in elems:
                if g.inverse() not in self._set:
                    raise PermutationError("group is not closed under inverses")
                for h in elems:
                    if compose(g, h) not in self._set:
                        raise PermutationError("group is not closed under composition")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self._set

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def __lt__(self, other):
        return self.elements < other.elements

    def intersection(self, other: "PermGroup") -> "PermGroup":
        return PermGroup((g for g in self.elements if g in other._set), degree=self.degree)

    def conjugate(self, sigma: Permutation) -> "PermGroup":
        """The group sigma^-1 G sigma."""
        s_inv = sigma.inverse()
        return PermGroup((compose(compose(s_inv, g), sigma) for g in self.elements),
                         points=self.points)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.elements[:6])
        more = ", ..." if len(self.elements) > 6 else ""
        return f"PermGroup(order={self.order}, [{gens}{more}])"


def closure(generators: Sequence[Permutation], degree: int | None = None,
            cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    """Smallest group containing the generators (breadth-first closure)."""
    gens = list(generators)
    if not gens:
        if degree is None:
            raise PermutationError("closure of no generators needs a degree")
        return PermGroup([], degree=degree)
    d = gens[0].degree
    if degree is not None and degree != d:
        raise PermutationError("generator degree does not match")
    ident = Permutation.identity(d)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(g, s)
                if h not in seen:
                    seen.add(h)
                    if len(seen) > cap:
                        raise PermutationError(f"group order exceeds group cap {cap}")
                    nxt.append(h)
        frontier = nxt
    return PermGroup(seen)


def symmetric_group(n: int) -> list[Permutation]:
    """All n! permutations of range(n), in lexicographic order of images."""
    return [Permutation(p, check=False) for p in itertools.permutations(range(n))]


def conjugates(G: PermGroup) -> list[PermGroup]:
    """sigma^-1 G sigma for every sigma in the full symmetric group, with repetition."""
    if G.degree > MAX_CONJUGATION_DEGREE:
        raise PermutationError(
            f"conjugation over S_{G.degree} exceeds the point-set cap {MAX_CONJUGATION_DEGREE}")
    return [G.conjugate(s) for s in symmetric_group(G.degree)]


def isomorphic_copies(G: PermGroup) -> list[PermGroup]:
    """Distinct groups permutation-isomorphic to G on the same point set.

    A permutation isomorphism onto a group on the same set is conjugation by a
    bijection of that set, so these are the distinct S_n-conjugates of G.
    """
    return sorted(set(conjugates(G)))


def symmetric_group_order(n: int) -> int:
    return math.factorial(n)
