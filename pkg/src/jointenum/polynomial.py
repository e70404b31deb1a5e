"""Sparse exact multivariate polynomials.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable.
Two variable families are used:

* ``"x"``: the variable is an l x r alphabet matrix stored column-major as a
  tuple of r columns, each a tuple of l entries. Tuple ordering is then the
  lexicographic order on the column-major flattening.
* ``"s"``: the variable is ``(tuple_id, cycle_length)``.

Coefficients are ints, :class:`~fractions.Fraction` or
:class:`~jointenum.algebra.Cyclotomic`; zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping

from .algebra import Cyclotomic

Monomial = tuple[tuple[Hashable, int], ...]


class PolynomialError(ValueError):
    pass


def _is_zero(c) -> bool:
    if isinstance(c, Cyclotomic):
        return c.is_zero()
    return c == 0


def _normalize_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    if isinstance(c, bool):
        return int(c)
    return c


def _domain_of(c) -> str:
    if isinstance(c, Cyclotomic):
        return "cyclotomic"
    if isinstance(c, Fraction):
        return "rational"
    return "integer"


def _add_coeff(a, b):
    if isinstance(a, Fraction) and isinstance(b, Cyclotomic) or isinstance(b, Fraction) and isinstance(a, Cyclotomic):
        raise PolynomialError("cannot add rational and cyclotomic coefficients")
    return a + b


def _mul_coeff(a, b):
    if isinstance(a, Fraction) and isinstance(b, Cyclotomic) or isinstance(b, Fraction) and isinstance(a, Cyclotomic):
        if isinstance(a, Fraction) and a.denominator == 1:
            return int(a) * b
        if isinstance(b, Fraction) and b.denominator == 1:
            return a * int(b)
        raise PolynomialError("cannot multiply rational and cyclotomic coefficients")
    return a * b


def make_monomial(pairs: Iterable[tuple[Hashable, int]] | Mapping) -> Monomial:
    if isinstance(pairs, Mapping):
        pairs = pairs.items()
    acc: dict = {}
    for v, e in pairs:
        if e < 0:
            raise PolynomialError("negative exponents are not allowed")
        if e:
            acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for v, e in m2:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def _lex_key(mono: Monomial) -> tuple:
    return tuple(v for v, e in mono for _ in range(e))


class SparsePoly:
    """Immutable sparse polynomial with exact coefficients."""

    __slots__ = ("_terms", "family")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = (), family: str = "x"):
        self.family = family
        acc: dict[Monomial, object] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = make_monomial(mono)
            acc[mono] = _add_coeff(acc[mono], c) if mono in acc else c
        self._terms = {m: _normalize_coeff(c) for m, c in acc.items() if not _is_zero(c)}

    @classmethod
    def _raw(cls, terms: dict, family: str) -> "SparsePoly":
        p = cls.__new__(cls)
        p.family = family
        p._terms = {m: _normalize_coeff(c) for m, c in terms.items() if not _is_zero(c)}
        return p

    @classmethod
    def constant(cls, c, family: str = "x") -> "SparsePoly":
        return cls({(): c}, family)

    @classmethod
    def var(cls, v, family: str = "x") -> "SparsePoly":
        return cls._raw({((v, 1),): 1}, family)

    # -- inspection --

    def terms(self) -> list[tuple[Monomial, object]]:
        """Terms in canonical order: lex on the expanded variable sequence."""
        return sorted(self._terms.items(), key=lambda t: _lex_key(t[0]))

    def __iter__(self):
        return iter(self.terms())

    def __len__(self):
        return len(self._terms)

    def coefficient(self, mono) -> object:
        return self._terms.get(make_monomial(mono), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> list:
        return sorted({v for m in self._terms for v, _ in m})

    @property
    def domain(self) -> str:
        rank = {"integer": 0, "rational": 1, "cyclotomic": 2}
        best = "integer"
        for c in self._terms.values():
            d = _domain_of(c)
            if rank[d] > rank[best]:
                best = d
        return best

    def total_degrees(self) -> set[int]:
        return {sum(e for _, e in m) for m in self._terms}

    def coefficient_sum(self):
        total = 0
        for c in self._terms.values():
            total = _add_coeff(total, c)
        return _normalize_coeff(total)

    def evaluate(self, values: Mapping | Callable):
        get = values if callable(values) else values.__getitem__
        total = 0
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                t = _mul_coeff(t, get(v) ** e)
            total = _add_coeff(total, t)
        return _normalize_coeff(total)

    # -- arithmetic --

    def _check_family(self, other: "SparsePoly"):
        if self.family != other.family and self._terms and other._terms:
            raise PolynomialError(f"cannot combine {self.family}- and {other.family}-polynomials")

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(other, self.family)
        self._check_family(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = _add_coeff(acc[m], c) if m in acc else c
        return SparsePoly._raw(acc, self.family if self._terms else other.family)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw({m: -c for m, c in self._terms.items()}, self.family)

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(other, self.family)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "SparsePoly":
        return SparsePoly._raw({m: _mul_coeff(c, s) for m, c in self._terms.items()}, self.family)

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            return self.scale(other)
        self._check_family(other)
        acc: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = monomial_mul(m1, m2)
                c = _mul_coeff(c1, c2)
                acc[m] = _add_coeff(acc[m], c) if m in acc else c
        return SparsePoly._raw(acc, self.family)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, s):
        if isinstance(s, SparsePoly):
            raise PolynomialError("polynomial division is not supported")
        return self.scale(Fraction(1, 1) / s)

    def __pow__(self, e: int):
        if e < 0:
            raise PolynomialError("negative powers are not supported")
        result = SparsePoly.constant(1, self.family)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            if self._terms.keys() != other._terms.keys():
                return False
            return all(self._terms[m] == other._terms[m] for m in self._terms)
        if isinstance(other, (int, Fraction)):
            return self == SparsePoly.constant(other, self.family)
        return NotImplemented

    def __hash__(self):
        return hash(tuple((m, c) for m, c in self.terms()))

    def __repr__(self):
        return f"SparsePoly({self.family}, {len(self._terms)} terms)"

    def __str__(self):
        return render(self)

    # -- substitution --

    def map_coefficients(self, f: Callable) -> "SparsePoly":
        return SparsePoly._raw({m: f(c) for m, c in self._terms.items()}, self.family)

    def rationalize(self) -> "SparsePoly":
        """Replace cyclotomic coefficients by the integers they equal.

        Raises PolynomialError if some coefficient is not rational.
        """
        def conv(c):
            if isinstance(c, Cyclotomic):
                v = c.as_integer()
                if v is None:
                    raise PolynomialError(f"coefficient {c} does not reduce to a rational")
                return v
            return c
        return self.map_coefficients(conv)

    def rename(self, f: Callable) -> "SparsePoly":
        """Apply a bijective variable renaming."""
        acc: dict = {}
        for m, c in self._terms.items():
            nm = make_monomial((f(v), e) for v, e in m)
            acc[nm] = _add_coeff(acc[nm], c) if nm in acc else c
        return SparsePoly._raw(acc, self.family)


def linear_substitute(p: SparsePoly, rule: Mapping | Callable) -> SparsePoly:
    """Substitute each variable v by the polynomial rule(v) and expand exactly.

    ``rule`` is a mapping or callable returning a SparsePoly (typically a
    linear form). Powers of each image are cached, so a monomial of degree d
    costs d - 1 polynomial products at most.
    """
    get = rule if callable(rule) else (lambda v: rule[v])
    images: dict = {}
    powers: dict = {}

    def image_pow(v, e):
        key = (v, e)
        if key in powers:
            return powers[key]
        if v not in images:
            try:
                img = get(v)
            except KeyError:
                raise PolynomialError(f"substitution rule is missing variable {v!r}") from None
            if img is None:
                raise PolynomialError(f"substitution rule is missing variable {v!r}")
            images[v] = img
        img = images[v]
        out = img if e == 1 else image_pow(v, e - 1) * img
        powers[key] = out
        return out

    acc: dict = {}
    family = p.family
    for m, c in p._terms.items():
        term = None
        for v, e in m:
            f = image_pow(v, e)
            term = f if term is None else term * f
        if term is None:
            acc[()] = _add_coeff(acc[()], c) if () in acc else c
            continue
        family = term.family
        for tm, tc in term._terms.items():
            val = _mul_coeff(tc, c)
            acc[tm] = _add_coeff(acc[tm], val) if tm in acc else val
    return SparsePoly._raw(acc, family)


# -- rendering and JSON --


def _fmt_entry(a: int, wide: bool) -> str:
    return f"{a}," if wide else str(a)


def format_xindex(var, wide: bool = False) -> str:
    """Render an x-variable subscript row by row, rows separated by '|'."""
    cols = var
    ell = len(cols[0]) if cols else 0
    rows = []
    for j in range(ell):
        entries = [str(col[j]) for col in cols]
        rows.append(",".join(entries) if wide else "".join(entries))
    return "|".join(rows)


def xindex_to_rows(var) -> list[list[int]]:
    cols = var
    ell = len(cols[0]) if cols else 0
    return [[col[j] for col in cols] for j in range(ell)]


def xindex_from_rows(rows) -> tuple:
    if not rows:
        raise PolynomialError("empty x-index matrix")
    r = len(rows[0])
    if any(len(rw) != r for rw in rows):
        raise PolynomialError("ragged x-index matrix")
    return tuple(tuple(int(rw[k]) for rw in rows) for k in range(r))


def _fmt_coeff(c) -> str:
    if isinstance(c, Cyclotomic):
        return f"({c})"
    return str(c)


def render(p: SparsePoly, var_formatter: Callable | None = None) -> str:
    """Text form, e.g. ``x_{00}^2 + 2 x_{00} x_{10}``."""
    if p.is_zero():
        return "0"
    if var_formatter is None:
        if p.family == "x":
            wide = any(a > 9 for v in p.variables() for col in v for a in col)
            var_formatter = lambda v: f"x_{{{format_xindex(v, wide)}}}"
        else:
            var_formatter = lambda v: f"s({v[0]},{v[1]})"
    out = []
    for m, c in p.terms():
        body = " ".join(var_formatter(v) + (f"^{e}" if e != 1 else "") for v, e in m)
        sign = "+"
        if isinstance(c, (int, Fraction)) and c < 0:
            sign, c = "-", -c
        if not body:
            piece = _fmt_coeff(c)
        elif c == 1 and not isinstance(c, Cyclotomic):
            piece = body
        else:
            piece = f"{_fmt_coeff(c)} {body}"
        out.append((sign, piece))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, piece in out[1:]:
        text += f" {sign} {piece}"
    return text


def coeff_to_json(c):
    if isinstance(c, Cyclotomic):
        return {"order": c.order, "coeffs": list(c.coeffs)}
    return str(c)


def coeff_from_json(d):
    if isinstance(d, dict):
        try:
            return Cyclotomic(int(d["order"]), [int(x) for x in d["coeffs"]])
        except (KeyError, TypeError, ValueError):
            raise PolynomialError(f"bad cyclotomic coefficient {d!r}") from None
    if isinstance(d, int):
        return d
    try:
        v = Fraction(str(d))
    except ValueError:
        raise PolynomialError(f"bad coefficient {d!r}") from None
    return _normalize_coeff(v)


def poly_to_json(p: SparsePoly, ell: int | None = None, r: int | None = None) -> dict:
    if p.family == "x":
        vs = p.variables()
        if vs:
            r = len(vs[0]) if r is None else r
            ell = len(vs[0][0]) if ell is None else ell
        terms = [{"coeff": coeff_to_json(c),
                  "monomial": [[xindex_to_rows(v), e] for v, e in m]} for m, c in p.terms()]
        return {"vars": "x", "l": ell, "r": r, "terms": terms}
    terms = [{"coeff": coeff_to_json(c), "monomial": [[list(v), e] for v, e in m]}
             for m, c in p.terms()]
    return {"vars": p.family, "terms": terms}


def poly_from_json(d: dict) -> SparsePoly:
    if not isinstance(d, dict) or "terms" not in d:
        raise PolynomialError("polynomial JSON needs field 'terms'")
    family = d.get("vars", "x")
    terms = []
    for t in d["terms"]:
        if "coeff" not in t or "monomial" not in t:
            raise PolynomialError("polynomial term needs fields 'coeff' and 'monomial'")
        c = coeff_from_json(t["coeff"])
        if family == "x":
            mono = [(xindex_from_rows(v), int(e)) for v, e in t["monomial"]]
        else:
            mono = [(tuple(v), int(e)) for v, e in t["monomial"]]
        terms.append((mono, c))
    return SparsePoly(terms, family)
