"""Complete joint weight enumerators, complete joint cycle indices and their identities."""

from .algebra import Alphabet, AlphabetError, Cyclotomic, F, Z, cyclotomic_is_zero, make_alphabet
from .averaging import (AverageReport, avg_cycle_index, avg_intersection_codes,
                        avg_intersection_groups, avg_intersection_induced, avg_lr_cjwe,
                        induced_copies, verify_average_identity)
from .codes import (CodeError, IotaAction, JointCode, LinearCode, apply_iota, dual,
                    equivalence_class, full_code, make_joint, permute_code, span, zero_code)
from .cycleindex import (CycleIndexPoly, group_cycle_index, induced_group, induced_permutation,
                         joint_cycle_index, lr_weight, t_substitution)
from .enumerators import cjwe, composition_counter, cwe_genus, lr_cjwe
from .macwilliams import character_matrix, macwilliams_transform, verify_duality
from .permgroup import (PermGroup, Permutation, PointSet, closure, compose, cycle_counts,
                        isomorphic_copies)
from .polynomial import SparsePoly, linear_substitute, poly_from_json, poly_to_json

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetError",
    "AverageReport",
    "CodeError",
    "CycleIndexPoly",
    "Cyclotomic",
    "F",
    "IotaAction",
    "JointCode",
    "LinearCode",
    "PermGroup",
    "Permutation",
    "PointSet",
    "SparsePoly",
    "Z",
    "apply_iota",
    "avg_cycle_index",
    "avg_intersection_codes",
    "avg_intersection_groups",
    "avg_intersection_induced",
    "avg_lr_cjwe",
    "character_matrix",
    "cjwe",
    "closure",
    "compose",
    "composition_counter",
    "cwe_genus",
    "cycle_counts",
    "cyclotomic_is_zero",
    "dual",
    "equivalence_class",
    "full_code",
    "group_cycle_index",
    "induced_copies",
    "induced_group",
    "induced_permutation",
    "isomorphic_copies",
    "joint_cycle_index",
    "linear_substitute",
    "lr_cjwe",
    "lr_weight",
    "macwilliams_transform",
    "make_alphabet",
    "make_joint",
    "permute_code",
    "poly_from_json",
    "poly_to_json",
    "span",
    "t_substitution",
    "verify_average_identity",
    "verify_duality",
    "zero_code",
]
