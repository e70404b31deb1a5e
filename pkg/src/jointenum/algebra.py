"""Exact arithmetic for the code alphabets F_{p^e} and Z_k, and for Z[eta_m].

Alphabet elements are plain ints: the canonical index 0..m-1. For a prime
field or Z_k the index is the residue itself; for F_{p^e} with e > 1 the index
of c_0 + c_1 t + ... + c_{e-1} t^{e-1} is c_0 + c_1 p + ... + c_{e-1} p^{e-1}.
Index 0 is always the additive identity.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence

MAX_ALPHABET_SIZE = 256


class AlphabetError(ValueError):
    """Raised for an invalid alphabet description."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


# -- integer polynomials, coefficient lists low-to-high --


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod_monic(num: Sequence[int], den: Sequence[int], mod: int | None = None) -> list[int]:
    """Remainder of num by a monic den, over Z (mod=None) or Z/mod."""
    r = list(num)
    d = len(den) - 1
    for top in range(len(r) - 1, d - 1, -1):
        c = r[top]
        if mod is not None:
            c %= mod
        if c:
            for j in range(d + 1):
                r[top - d + j] -= c * den[j]
        r[top] = 0
    r = r[:d] if len(r) > d else r
    if mod is not None:
        r = [x % mod for x in r]
    return _trim(r)


def _poly_div_monic(num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Exact quotient over Z of num by a monic den."""
    r = list(num)
    d = len(den) - 1
    q = [0] * max(len(r) - d, 0)
    for top in range(len(r) - 1, d - 1, -1):
        c = r[top]
        q[top - d] = c
        if c:
            for j in range(d + 1):
                r[top - d + j] -= c * den[j]
    if any(r[:d]):
        raise ArithmeticError("division is not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (low-to-high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("order must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_div_monic(num, cyclotomic_polynomial(d))
    return tuple(num)


def is_irreducible_mod_p(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2 over F_p."""
    f = _trim([c % p for c in poly])
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = list(low) + [1]
            inv_lead = pow(f[-1], -1, p)
            monic_f = [(c * inv_lead) % p for c in f]
            if not _poly_mod_monic(monic_f, g, p):
                return False
    return True


class Cyclotomic:
    """An element sum_j c_j eta_m^j of Z[eta_m], stored in Z[x]/(x^m - 1).

    Two representatives are equal when their difference vanishes modulo the
    m-th cyclotomic polynomial.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[int] = ()):
        if order < 1:
            raise ValueError("order must be positive")
        c = [0] * order
        for j, v in enumerate(coeffs):
            if not isinstance(v, int):
                raise TypeError("cyclotomic coefficients must be integers")
            c[j % order] += v
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def eta(cls, order: int, power: int = 1) -> "Cyclotomic":
        c = [0] * order
        c[power % order] = 1
        return cls(order, c)

    @classmethod
    def from_int(cls, order: int, value: int) -> "Cyclotomic":
        return cls(order, [value])

    def lift(self, order: int) -> "Cyclotomic":
        """Re-express in Z[eta_order]; order must be a multiple of self.order."""
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        step = order // self.order
        c = [0] * order
        for j, v in enumerate(self.coeffs):
            c[j * step] = v
        return Cyclotomic(order, c)

    def _coerce(self, other) -> "tuple[Cyclotomic, Cyclotomic]":
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self, other
            L = math.lcm(self.order, other.order)
            return self.lift(L), other.lift(L)
        if isinstance(other, bool) or not isinstance(other, int):
            if isinstance(other, Fraction) and other.denominator == 1:
                return self, Cyclotomic(self.order, [int(other)])
            raise TypeError(f"cannot combine Cyclotomic with {type(other).__name__}")
        return self, Cyclotomic(self.order, [other])

    def __add__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return Cyclotomic(self.order, [x * other for x in self.coeffs])
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        m = a.order
        out = [0] * m
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[(i + j) % m] += x * y
        return Cyclotomic(m, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = Cyclotomic.from_int(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        return Cyclotomic(self.order, [self.coeffs[-j % self.order] for j in range(self.order)])

    def reduced(self) -> tuple[int, ...]:
        """Canonical remainder modulo Phi_m, trailing zeros trimmed."""
        return tuple(_poly_mod_monic(self.coeffs, cyclotomic_polynomial(self.order)))

    def is_zero(self) -> bool:
        return not self.reduced()

    def as_integer(self) -> int | None:
        """The integer this element equals, or None if it is not rational."""
        r = self.reduced()
        if not r:
            return 0
        if len(r) == 1:
            return r[0]
        return None

    def __eq__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (a - b).is_zero()

    def __hash__(self):
        r = self.reduced()
        if len(r) <= 1:
            return hash(r[0] if r else 0)
        # representation depends on the order, so equal values of different
        # orders that are not rational may hash differently; all arithmetic
        # here stays within one alphabet's order
        return hash((self.order, r))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self.order}, {list(self.coeffs)})"

    def __str__(self):
        parts = []
        for j, c in enumerate(self.reduced()):
            if c:
                parts.append(f"{c}" if j == 0 else f"{c}*eta{self.order}^{j}")
        return " + ".join(parts) if parts else "0"


def cyclotomic_is_zero(z: Cyclotomic) -> bool:
    return z.is_zero()


class Alphabet:
    """A finite alphabet: the field F_{p^e} or the ring Z_k.

    Elements are the ints ``0 .. size-1`` and all arithmetic goes through
    precomputed tables.
    """

    def __init__(self, kind: str, p: int | None = None, e: int = 1,
                 modulus: Sequence[int] | None = None, k: int | None = None):
        if kind == "field":
            if p is None or not is_prime(p):
                raise AlphabetError(f"p must be prime, got {p!r}")
            if e < 1:
                raise AlphabetError(f"extension degree e must be >= 1, got {e!r}")
            size = p**e
            if e > 1:
                if modulus is None:
                    raise AlphabetError("field with e > 1 needs a modulus polynomial")
                modulus = [int(c) % p for c in modulus]
                if len(_trim(list(modulus))) != e + 1 or modulus[-1] != 1:
                    raise AlphabetError(f"modulus must be monic of degree {e}: {modulus}")
                if not is_irreducible_mod_p(modulus, p):
                    raise AlphabetError(f"modulus {modulus} is reducible over F_{p}")
                modulus = tuple(modulus)
            else:
                modulus = None
            self.kind, self.p, self.e, self.k, self.modulus = "field", p, e, None, modulus
            self.char_order = p
        elif kind == "ring":
            if k is None or k < 2:
                raise AlphabetError(f"ring modulus k must be >= 2, got {k!r}")
            size = k
            self.kind, self.p, self.e, self.k, self.modulus = "ring", None, 1, k, None
            self.char_order = k
        else:
            raise AlphabetError(f"unknown alphabet kind {kind!r}")
        if size > MAX_ALPHABET_SIZE:
            raise AlphabetError(f"alphabet size {size} exceeds cap {MAX_ALPHABET_SIZE}")
        self.size = size
        self._build_tables()

    # -- construction --

    def _vec(self, a: int) -> list[int]:
        v = []
        for _ in range(self.e):
            v.append(a % self.p)
            a //= self.p
        return v

    def _index(self, v: Sequence[int]) -> int:
        return sum(c * self.p**j for j, c in enumerate(v))

    def _build_tables(self):
        m = self.size
        rng = range(m)
        if self.kind == "ring" or self.e == 1:
            n = m
            self._add = tuple(tuple((a + b) % n for b in rng) for a in rng)
            self._mul = tuple(tuple((a * b) % n for b in rng) for a in rng)
            self._neg = tuple((-a) % n for a in rng)
            if self.kind == "field":
                self._trace = tuple(rng)
            else:
                self._trace = None
            return
        p, e = self.p, self.e
        vecs = [self._vec(a) for a in rng]
        self._add = tuple(
            tuple(self._index([(x + y) % p for x, y in zip(vecs[a], vecs[b])]) for b in rng) for a in rng
        )
        self._neg = tuple(self._index([(-x) % p for x in vecs[a]]) for a in rng)
        mul = []
        for a in rng:
            row = []
            for b in rng:
                prod = [0] * (2 * e - 1)
                for i, x in enumerate(vecs[a]):
                    for j, y in enumerate(vecs[b]):
                        prod[i + j] += x * y
                rem = _poly_mod_monic(prod, self.modulus, p)
                rem = rem + [0] * (e - len(rem))
                row.append(self._index(rem))
            mul.append(tuple(row))
        self._mul = tuple(mul)
        trace = []
        for a in rng:
            acc, power = 0, a
            for _ in range(e):
                acc = self._add[acc][power]
                power = self.power(power, p)
            # the trace lies in the prime subfield, i.e. index < p
            if acc >= p:
                raise ArithmeticError("trace left the prime field; modulus is broken")
            trace.append(acc)
        self._trace = tuple(trace)

    # -- identity --

    def _key(self):
        return (self.kind, self.p, self.e, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.kind == "ring":
            return f"Alphabet(Z_{self.k})"
        if self.e == 1:
            return f"Alphabet(F_{self.p})"
        return f"Alphabet(F_{self.size}, modulus={list(self.modulus)})"

    @property
    def is_field(self) -> bool:
        return self.kind == "field"

    @property
    def elements(self) -> range:
        return range(self.size)

    # -- arithmetic --

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def power(self, a: int, n: int) -> int:
        result = 1
        for _ in range(n):
            result = self._mul[result][a]
        return result

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        acc = 0
        add, mul = self._add, self._mul
        for x, y in zip(u, v):
            acc = add[acc][mul[x][y]]
        return acc

    def vec_add(self, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
        add = self._add
        return tuple(add[x][y] for x, y in zip(u, v))

    def vec_scale(self, a: int, u: Sequence[int]) -> tuple[int, ...]:
        row = self._mul[a]
        return tuple(row[x] for x in u)

    def additive_order(self, vec: Sequence[int]) -> int:
        """Order of a vector of A^l in the additive group.

        Closed forms: p for a nonzero vector over a field of characteristic p,
        k / gcd(v_1, ..., v_l, k) over Z_k.
        """
        if self.kind == "ring":
            return self.k // math.gcd(self.k, *vec)
        return 1 if not any(vec) else self.p

    # -- traces and characters --

    def trace(self, a: int) -> int:
        """Absolute trace a + a^p + ... + a^{p^(e-1)}, as an element of F_p."""
        if self.kind != "field":
            raise AlphabetError("trace is only defined for field alphabets")
        return self._trace[a]

    def character_exponent(self, a: int) -> int:
        """j with chi(a) = eta^j, for the canonical additive character."""
        if self.kind == "field":
            return self._trace[a]
        return a

    def character(self, a: int) -> Cyclotomic:
        return Cyclotomic.eta(self.char_order, self.character_exponent(a))

    # -- serialization --

    def to_json(self) -> dict:
        if self.kind == "ring":
            return {"kind": "ring", "k": self.k}
        d = {"kind": "field", "p": self.p, "e": self.e}
        if self.modulus is not None:
            d["modulus"] = list(self.modulus)
        return d

    def format_element(self, a: int) -> str:
        return str(a)


def make_alphabet(spec: dict | str) -> Alphabet:
    """Build an alphabet from its JSON description.

    Accepts ``{"kind": "field", "p": 2, "e": 2, "modulus": [1, 1, 1]}``,
    ``{"kind": "ring", "k": 4}``, or shorthands such as ``"F4"`` and ``"Z6"``
    (prime powers get the default moduli of :func:`F`).
    """
    if isinstance(spec, str):
        s = spec.strip()
        if s[:1] in "Ff" and s[1:].isdigit():
            return F(int(s[1:]))
        if s[:1] in "Zz" and s[1:].isdigit():
            return Alphabet("ring", k=int(s[1:]))
        raise AlphabetError(f"unrecognised alphabet shorthand {spec!r}")
    if not isinstance(spec, dict):
        raise AlphabetError("alphabet description must be an object")
    kind = spec.get("kind")
    if kind == "field":
        if "p" not in spec:
            raise AlphabetError("field alphabet is missing field 'p'")
        return Alphabet("field", p=spec["p"], e=spec.get("e", 1), modulus=spec.get("modulus"))
    if kind == "ring":
        if "k" not in spec:
            raise AlphabetError("ring alphabet is missing field 'k'")
        return Alphabet("ring", k=spec["k"])
    raise AlphabetError(f"alphabet field 'kind' must be 'field' or 'ring', got {kind!r}")


def F(q: int) -> Alphabet:
    """Shortcut for small fields; F(4) and F(8), F(9) use fixed Conway-style moduli."""
    default_moduli = {4: (2, [1, 1, 1]), 8: (2, [1, 1, 0, 1]), 9: (3, [2, 2, 1]),
                      16: (2, [1, 1, 0, 0, 1]), 25: (5, [2, 4, 1]), 27: (3, [1, 2, 0, 1])}
    if is_prime(q):
        return Alphabet("field", p=q)
    if q in default_moduli:
        p, mod = default_moduli[q]
        return Alphabet("field", p=p, e=len(mod) - 1, modulus=mod)
    raise AlphabetError(f"no default field of order {q}")


def Z(k: int) -> Alphabet:
    return Alphabet("ring", k=k)
