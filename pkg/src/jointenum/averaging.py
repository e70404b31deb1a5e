"""Averages over equivalent codes and isomorphic groups.

Only the first argument is ever averaged. Two normalisations are supported:

``"distinct"``
    divide the sum over the distinct equivalent objects by their number.
``"uniform"``
    average over every element of the acting group (S_n, S_l x| S_n^l, or
    Sym(Omega)), counting each image with its multiplicity.

Each image of a transitive action appears |stabiliser| times, so both modes
give the same value; the uniform weights are computed from orbit-stabiliser
rather than by walking the whole group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .codes import (CodeError, JointCode, LinearCode, equivalence_class,
                    equivalence_group_order)
from .cycleindex import (CycleIndexPoly, group_cycle_index, induced_group,
                         joint_cycle_index, t_substitution)
from .enumerators import lr_cjwe
from .permgroup import PermGroup, conjugates, isomorphic_copies, symmetric_group_order
from .polynomial import SparsePoly

MODES = ("distinct", "uniform")


@dataclass
class AverageReport:
    value: object
    orbit_size: int
    group_order: int
    mode: str
    members: list = field(default_factory=list, repr=False)

    @property
    def normalizer(self) -> int:
        return self.orbit_size if self.mode == "distinct" else self.group_order


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _weights(n_distinct: int, group_order: int, mode: str) -> Fraction:
    """Weight of each distinct orbit member under the chosen normalisation."""
    _check_mode(mode)
    if mode == "distinct":
        return Fraction(1, n_distinct)
    if group_order % n_distinct:
        raise ArithmeticError("orbit size does not divide the group order")
    multiplicity = group_order // n_distinct
    return Fraction(multiplicity, group_order)


def avg_lr_cjwe(codes: Sequence[LinearCode | JointCode], mode: str = "distinct") -> AverageReport:
    """Mean of the (l, r)-fold complete joint weight enumerator over Pi_1' ~ Pi_1."""
    _check_mode(mode)
    first, rest = codes[0], list(codes[1:])
    orbit = equivalence_class(first)
    order = equivalence_group_order(first)
    w = _weights(len(orbit), order, mode)
    total = SparsePoly({}, "x")
    for member in orbit:
        total = total + lr_cjwe([member] + rest)
    return AverageReport(total.scale(w), len(orbit), order, mode, orbit)


def avg_cycle_index(first, *rest, mode: str = "distinct") -> AverageReport:
    """G_1-average r-fold complete joint cycle index.

    With codes (LinearCode or JointCode) the copies of G_1 are the groups
    G(Pi_1') for Pi_1' ~ Pi_1. With PermGroups they are the distinct
    Sym(Omega)-conjugates of G_1.
    """
    _check_mode(mode)
    if isinstance(first, PermGroup):
        if mode == "distinct":
            copies = isomorphic_copies(first)
            w = Fraction(1, len(copies))
            parts = [(w, group_cycle_index([G] + list(rest))) for G in copies]
            order = symmetric_group_order(first.degree)
        else:
            allc = conjugates(first)
            copies = sorted(set(allc))
            order = len(allc)
            parts = [(Fraction(allc.count(G), order), group_cycle_index([G] + list(rest))) for G in copies]
        return AverageReport(CycleIndexPoly.weighted_sum(parts), len(copies), order, mode, copies)
    orbit = equivalence_class(first)
    order = equivalence_group_order(first)
    w = _weights(len(orbit), order, mode)
    parts = [(w, joint_cycle_index([member] + list(rest))) for member in orbit]
    return AverageReport(CycleIndexPoly.weighted_sum(parts), len(orbit), order, mode, orbit)


@dataclass
class AverageIdentityReport:
    equal: bool
    direct: SparsePoly
    via_cycle_index: SparsePoly
    orbit_size: int
    mode: str

    def to_json(self) -> dict:
        from .polynomial import poly_to_json
        return {"equal": self.equal, "orbit_size": self.orbit_size, "mode": self.mode,
                "lhs": poly_to_json(self.direct), "rhs": poly_to_json(self.via_cycle_index)}


def verify_average_identity(codes: Sequence[LinearCode | JointCode], mode: str = "distinct") -> AverageIdentityReport:
    """Average enumerator computed directly versus T(average cycle index)."""
    direct = avg_lr_cjwe(codes, mode)
    Zav = avg_cycle_index(codes[0], *codes[1:], mode=mode)
    via = t_substitution(Zav.value)
    return AverageIdentityReport(direct.value == via, direct.value, via, direct.orbit_size, mode)


def avg_intersection_codes(C: LinearCode, D: LinearCode, mode: str = "distinct") -> AverageReport:
    """Delta(C, D): mean of |C' & D| over codes C' permutation-equivalent to C."""
    if C.alphabet != D.alphabet or C.length != D.length:
        raise CodeError("codes must share alphabet and length")
    orbit = equivalence_class(C)
    order = equivalence_group_order(C)
    w = _weights(len(orbit), order, mode)
    value = sum((w * C2.intersection(D).size for C2 in orbit), Fraction(0))
    return AverageReport(value, len(orbit), order, mode, orbit)


def avg_intersection_groups(G: PermGroup, H: PermGroup, copies: Sequence[PermGroup] | None = None,
                            mode: str = "distinct") -> AverageReport:
    """Average intersection number of G and H.

    ``copies`` defaults to the Sym(Omega)-conjugates of G. Pass an explicit
    family (for example the code-induced groups from :func:`induced_copies`)
    to average over that family instead; in distinct mode repeats are dropped,
    in uniform mode they are kept as multiplicities.
    """
    _check_mode(mode)
    if copies is None:
        family = conjugates(G) if mode == "uniform" else isomorphic_copies(G)
        order = symmetric_group_order(G.degree)
    else:
        family = list(copies)
        order = len(family)
        if mode == "distinct":
            family = sorted(set(family))
    if not family:
        raise ValueError("empty family of copies")
    Hs = set(H.elements)
    total = sum(sum(1 for g in Gp.elements if g in Hs) for Gp in family)
    n_distinct = len(set(family))
    return AverageReport(Fraction(total, len(family)), n_distinct, order, mode, family)


def induced_copies(C: LinearCode, mode: str = "distinct") -> list[PermGroup]:
    """The family {G(C') : C' ~ C} of code-induced copies of G(C)."""
    orbit = equivalence_class(C)
    groups = [induced_group(C2) for C2 in orbit]
    if mode == "uniform":
        mult = equivalence_group_order(C) // len(orbit)
        return [G for G in groups for _ in range(mult)]
    return groups


def avg_intersection_induced(C: LinearCode, D: LinearCode, mode: str = "distinct") -> AverageReport:
    """Average intersection number of G(C) and H(D) over the code-induced copies."""
    return avg_intersection_groups(induced_group(C), induced_group(D),
                                   copies=induced_copies(C, mode), mode=mode)
