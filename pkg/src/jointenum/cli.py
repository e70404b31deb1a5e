"""Batch command-line front end.

Every verb reads code (or group) JSON files, runs one library operation and
writes JSON or text to stdout or ``--out``. Exit status: 0 on success, 1 when
a ``verify`` identity fails, 2 on usage, input or cap errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .algebra import AlphabetError
from .averaging import (MODES, avg_cycle_index, avg_intersection_codes, avg_intersection_groups,
                        avg_intersection_induced, avg_lr_cjwe, verify_average_identity)
from .codes import (DEFAULT_CODE_CAP, DEFAULT_SEARCH_CAP, CodeError, JointCode, joint_from_json)
from .cycleindex import (DEFAULT_POINT_CAP, CycleIndexPoly, TMapConsistencyError,
                         group_cycle_index, joint_cycle_index, t_substitution)
from .enumerators import DEFAULT_TUPLE_CAP, cjwe, cwe_genus, lr_cjwe
from .macwilliams import MacWilliamsError, verify_duality
from .permgroup import DEFAULT_GROUP_CAP, PermGroup, Permutation, PermutationError, closure
from .polynomial import PolynomialError, SparsePoly, poly_to_json, render


class UsageError(Exception):
    pass


INPUT_ERRORS = (CodeError, AlphabetError, PolynomialError, PermutationError, MacWilliamsError,
                UsageError, ValueError)


# -- input --


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _is_group_input(d) -> bool:
    return isinstance(d, dict) and "degree" in d and "alphabet" not in d


def _group_from_json(d: dict, cap: int) -> PermGroup:
    n = d.get("degree")
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"group field 'degree' must be a positive integer, got {n!r}")
    gens = d.get("generators", [])
    if not isinstance(gens, list):
        raise UsageError("group field 'generators' must be a list")
    perms = []
    for g in gens:
        if isinstance(g, str):
            perms.append(Permutation.from_cycles(g, n))
        elif isinstance(g, list):
            perms.append(Permutation(tuple(g)))
        else:
            raise UsageError(f"group field 'generators' has bad entry {g!r}")
    return closure(perms, n, cap)


class Inputs:
    """Parsed positional inputs: either all codes or all groups."""

    def __init__(self, paths: Sequence[str], args):
        if not paths:
            raise UsageError("at least one input file is required")
        raw = [(p, _load(p)) for p in paths]
        kinds = {_is_group_input(d) for _, d in raw}
        if len(kinds) > 1:
            raise UsageError("inputs mix permutation groups and codes")
        self.groups_only = kinds == {True}
        self.items = []
        for p, d in raw:
            try:
                if self.groups_only:
                    self.items.append(_group_from_json(d, args.group_cap))
                else:
                    self.items.append(joint_from_json(d, args.code_cap))
            except INPUT_ERRORS as exc:
                raise UsageError(f"{p}: {exc}") from None
        if not self.groups_only:
            P0 = self.items[0]
            for p, P in zip(paths[1:], self.items[1:]):
                if P.alphabet != P0.alphabet:
                    raise UsageError(f"{p}: field 'alphabet' differs from the first input")
                if P.length != P0.length:
                    raise UsageError(f"{p}: field 'length' differs from the first input")
                if P.ell != P0.ell:
                    raise UsageError(f"{p}: number of 'components' differs from the first input")

    def codes(self, verb: str) -> list[JointCode]:
        if self.groups_only:
            raise UsageError(f"{verb} needs code inputs, not permutation groups")
        return self.items


def _check_shape(args, codes: list[JointCode]):
    if getattr(args, "l", None) is not None and args.l != codes[0].ell:
        raise UsageError(f"--l {args.l} does not match inputs with l = {codes[0].ell}")
    if getattr(args, "r", None) is not None and args.r != len(codes):
        raise UsageError(f"--r {args.r} does not match {len(codes)} input files")


def _plain_code(P: JointCode, verb: str):
    if P.ell != 1:
        raise UsageError(f"{verb} takes plain codes (l = 1); use enum-lr for joint codes")
    return P.components[0]


def _parse_pattern(text: str | None, r: int) -> tuple[int, ...]:
    if text is None:
        return tuple([1] * r)
    try:
        pat = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--pattern must be comma-separated 0/1 values, got {text!r}") from None
    if any(d not in (0, 1) for d in pat):
        raise UsageError(f"--pattern entries must be 0 or 1, got {text!r}")
    if len(pat) != r:
        raise UsageError(f"--pattern has {len(pat)} entries for {r} inputs")
    return pat


def _threads_hint():
    # accepted for interface compatibility; computation is single-threaded
    val = os.environ.get("JOINTENUM_THREADS")
    if val is None:
        return
    try:
        if int(val) < 1:
            raise ValueError
    except ValueError:
        raise UsageError(f"JOINTENUM_THREADS must be a positive integer, got {val!r}") from None


# -- output --


def _ratio(x) -> str:
    return str(Fraction(x))


class Result:
    def __init__(self, data: dict, text: str, ok: bool = True):
        self.data, self.text, self.ok = data, text, ok


def _poly_result(p: SparsePoly, ell=None, r=None) -> Result:
    return Result(poly_to_json(p, ell, r), render(p))


def _report_text(pairs: Sequence[tuple[str, object]]) -> str:
    return "\n".join(f"{k}: {v}" for k, v in pairs)


def _emit(res: Result, args):
    if args.format == "json":
        out = json.dumps(res.data, indent=2, ensure_ascii=False) + "\n"
    else:
        out = res.text + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            raise UsageError(f"--out {args.out}: {exc.strerror}") from None
    else:
        sys.stdout.write(out)


# -- verbs --


def cmd_enum_cwe(args) -> Result:
    if len(args.inputs) != 1:
        raise UsageError("enum-cwe takes exactly one code file")
    (P,) = Inputs(args.inputs, args).codes("enum-cwe")
    C = _plain_code(P, "enum-cwe")
    return _poly_result(cwe_genus(C, args.genus, args.tuple_cap), args.genus, 1)


def cmd_enum_cjwe(args) -> Result:
    if len(args.inputs) != 2:
        raise UsageError("enum-cjwe takes exactly two code files")
    P, Q = Inputs(args.inputs, args).codes("enum-cjwe")
    C, D = _plain_code(P, "enum-cjwe"), _plain_code(Q, "enum-cjwe")
    return _poly_result(cjwe(C, D, args.tuple_cap), 1, 2)


def cmd_enum_lr(args) -> Result:
    codes = Inputs(args.inputs, args).codes("enum-lr")
    _check_shape(args, codes)
    return _poly_result(lr_cjwe(codes, args.tuple_cap), codes[0].ell, len(codes))


def _cycle_index(inp: Inputs, args) -> CycleIndexPoly:
    if inp.groups_only:
        return group_cycle_index(inp.items, args.tuple_cap)
    _check_shape(args, inp.items)
    return joint_cycle_index(inp.items, args.tuple_cap, args.point_cap)


def cmd_cycle_index(args) -> Result:
    Z = _cycle_index(Inputs(args.inputs, args), args)
    return Result(Z.to_json(), Z.render())


def cmd_tmap(args) -> Result:
    if len(args.inputs) == 1:
        d = _load(args.inputs[0])
        if isinstance(d, dict) and d.get("kind") == "cycle_index":
            try:
                Z = CycleIndexPoly.from_json(d)
            except (KeyError, TypeError) as exc:
                raise UsageError(f"{args.inputs[0]}: malformed cycle index ({exc})") from None
            return _poly_result(t_substitution(Z), Z.ell)
    inp = Inputs(args.inputs, args)
    codes = inp.codes("tmap")
    _check_shape(args, codes)
    Z = joint_cycle_index(codes, args.tuple_cap, args.point_cap)
    return _poly_result(t_substitution(Z), codes[0].ell, len(codes))


def _duality(args):
    codes = Inputs(args.inputs, args).codes("macwilliams")
    _check_shape(args, codes)
    pat = _parse_pattern(args.pattern, len(codes))
    rep = verify_duality(codes, pat, args.search_cap)
    ell, r = codes[0].ell, len(codes)
    data = {"equal": rep.equal, "pattern": list(pat),
            "lhs": poly_to_json(rep.lhs, ell, r), "rhs": poly_to_json(rep.rhs, ell, r)}
    text = _report_text([("pattern", ",".join(map(str, pat))), ("lhs", render(rep.lhs)),
                         ("rhs", render(rep.rhs)), ("equal", str(rep.equal).lower())])
    return Result(data, text, rep.equal)


def cmd_macwilliams(args) -> Result:
    res = _duality(args)
    res.ok = True
    return res


def cmd_average(args) -> Result:
    inp = Inputs(args.inputs, args)
    if not inp.groups_only:
        _check_shape(args, inp.items)
    rep = avg_cycle_index(inp.items[0], *inp.items[1:], mode=args.mode)
    data = {"mode": args.mode, "orbit_size": rep.orbit_size, "group_order": rep.group_order,
            "cycle_index": rep.value.to_json()}
    pairs = [("mode", args.mode), ("orbit_size", rep.orbit_size),
             ("group_order", rep.group_order), ("cycle_index", rep.value.render())]
    if not inp.groups_only:
        en = avg_lr_cjwe(inp.items, args.mode)
        ell, r = inp.items[0].ell, len(inp.items)
        data["enumerator"] = poly_to_json(en.value, ell, r)
        pairs.append(("enumerator", render(en.value)))
    return Result(data, _report_text(pairs))


def _two(args, verb):
    if len(args.inputs) != 2:
        raise UsageError(f"{verb} takes exactly two input files")
    return Inputs(args.inputs, args)


def _intersection_data(args, verb):
    inp = _two(args, verb)
    if inp.groups_only:
        G, H = inp.items
        if G.degree != H.degree:
            raise UsageError("groups act on different point sets")
        rep = avg_intersection_groups(G, H, mode=args.mode)
        data = {"mode": args.mode, "reading": "abstract", "orbit_size": rep.orbit_size,
                "group_order": rep.group_order, "value": _ratio(rep.value)}
        pairs = [("mode", args.mode), ("reading", "abstract"),
                 ("orbit_size", rep.orbit_size), ("value", _ratio(rep.value))]
        return data, pairs, None
    P, Q = inp.items
    C, D = _plain_code(P, verb), _plain_code(Q, verb)
    delta = avg_intersection_codes(C, D, args.mode)
    jav = avg_intersection_induced(C, D, args.mode)
    equal = delta.value == jav.value
    data = {"mode": args.mode, "reading": "code-induced", "orbit_size": delta.orbit_size,
            "group_order": delta.group_order, "delta": _ratio(delta.value),
            "group_average": _ratio(jav.value), "equal": equal}
    pairs = [("mode", args.mode), ("reading", "code-induced"), ("orbit_size", delta.orbit_size),
             ("delta", _ratio(delta.value)), ("group_average", _ratio(jav.value)),
             ("equal", str(equal).lower())]
    return data, pairs, equal


def cmd_intersect(args) -> Result:
    data, pairs, _ = _intersection_data(args, "intersect")
    return Result(data, _report_text(pairs))


def cmd_verify(args) -> Result:
    what = args.identity
    if what == "tmap":
        codes = Inputs(args.inputs, args).codes("verify tmap")
        _check_shape(args, codes)
        Z = joint_cycle_index(codes, args.tuple_cap, args.point_cap)
        try:
            lhs = t_substitution(Z)
        except TMapConsistencyError as exc:
            return Result({"identity": what, "equal": False, "error": str(exc)},
                          f"equal: false\nerror: {exc}", False)
        rhs = lr_cjwe(codes, args.tuple_cap)
        ell, r = codes[0].ell, len(codes)
        equal = lhs == rhs
        data = {"identity": what, "equal": equal, "lhs": poly_to_json(lhs, ell, r),
                "rhs": poly_to_json(rhs, ell, r)}
        text = _report_text([("lhs", render(lhs)), ("rhs", render(rhs)),
                             ("equal", str(equal).lower())])
        return Result(data, text, equal)
    if what == "macwilliams":
        res = _duality(args)
        res.data = {"identity": what, **res.data}
        return res
    if what == "average":
        codes = Inputs(args.inputs, args).codes("verify average")
        _check_shape(args, codes)
        rep = verify_average_identity(codes, args.mode)
        ell, r = codes[0].ell, len(codes)
        data = {"identity": what, "equal": rep.equal, "mode": rep.mode,
                "orbit_size": rep.orbit_size, "lhs": poly_to_json(rep.direct, ell, r),
                "rhs": poly_to_json(rep.via_cycle_index, ell, r)}
        text = _report_text([("mode", rep.mode), ("orbit_size", rep.orbit_size),
                             ("lhs", render(rep.direct)), ("rhs", render(rep.via_cycle_index)),
                             ("equal", str(rep.equal).lower())])
        return Result(data, text, rep.equal)
    data, pairs, equal = _intersection_data(args, "verify intersection")
    if equal is None:
        raise UsageError("verify intersection needs two code files")
    return Result({"identity": what, **data}, _report_text(pairs), equal)


# -- parser --


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", metavar="PATH", help="write the result here instead of stdout")
    caps = p.add_argument_group("size caps")
    caps.add_argument("--tuple-cap", type=_positive, default=DEFAULT_TUPLE_CAP,
                      help="max codeword tuples enumerated (default %(default)s)")
    caps.add_argument("--code-cap", type=_positive, default=DEFAULT_CODE_CAP,
                      help="max code size built from generators (default %(default)s)")
    caps.add_argument("--search-cap", type=_positive, default=DEFAULT_SEARCH_CAP,
                      help="max vectors searched for a dual (default %(default)s)")
    caps.add_argument("--point-cap", type=_positive, default=DEFAULT_POINT_CAP,
                      help="max points n*|A|^l for induced permutations (default %(default)s)")
    caps.add_argument("--group-cap", type=_positive, default=DEFAULT_GROUP_CAP,
                      help="max group order in closures (default %(default)s)")
    return p


def _shape_flags(p):
    p.add_argument("--l", type=_positive, help="expected number of components per joint code")
    p.add_argument("--r", type=_positive, help="expected number of joint codes")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="jointenum",
                                     description="Complete joint weight enumerators and cycle indices.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("enum-cwe", parents=[common], help="complete weight enumerator of genus g")
    p.add_argument("--genus", type=_positive, default=1)
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_enum_cwe)

    p = sub.add_parser("enum-cjwe", parents=[common], help="complete joint weight enumerator of C, D")
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_enum_cjwe)

    p = sub.add_parser("enum-lr", parents=[common], help="(l, r)-fold complete joint weight enumerator")
    _shape_flags(p)
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_enum_lr)

    p = sub.add_parser("cycle-index", parents=[common], help="complete joint cycle index")
    _shape_flags(p)
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_cycle_index)

    p = sub.add_parser("tmap", parents=[common], help="T-substitution of the joint cycle index")
    _shape_flags(p)
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_tmap)

    p = sub.add_parser("macwilliams", parents=[common], help="MacWilliams transform report")
    _shape_flags(p)
    p.add_argument("--pattern", help="comma-separated 0/1 dual flags, one per input (default all 1)")
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_macwilliams)

    p = sub.add_parser("average", parents=[common], help="average cycle index and enumerator")
    _shape_flags(p)
    p.add_argument("--mode", choices=MODES, default="distinct")
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_average)

    p = sub.add_parser("intersect", parents=[common], help="average intersection numbers")
    p.add_argument("--mode", choices=MODES, default="distinct")
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("verify", parents=[common], help="check an identity; exit 0 iff it holds")
    p.add_argument("identity", choices=("tmap", "macwilliams", "average", "intersection"))
    _shape_flags(p)
    p.add_argument("--pattern", help="dual flags for macwilliams (default all 1)")
    p.add_argument("--mode", choices=MODES, default="distinct")
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads_hint()
        res = args.func(args)
        _emit(res, args)
    except INPUT_ERRORS as exc:
        msg = str(exc)
        for name in ("tuple", "code", "search", "point", "group"):
            if f"{name} cap" in msg:
                msg += f" (raise it with --{name}-cap)"
                break
        print(f"jointenum {args.verb}: error: {msg}", file=sys.stderr)
        return 2
    return 0 if res.ok else 1


def main(argv: Sequence[str] | None = None):
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
    sys.exit(code)


if __name__ == "__main__":
    main()
