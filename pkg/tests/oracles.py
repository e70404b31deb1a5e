"""Slow, independent reference implementations used to cross-check the library.

Nothing here reuses the library's enumeration, orbit or substitution code;
only alphabets and codes (as plain word lists) are taken from it.
"""

from __future__ import annotations

import cmath
import itertools
import math
import random
from collections import Counter
from fractions import Fraction


def all_vectors(A, n):
    return list(itertools.product(range(A.size), repeat=n))


def brute_dual_words(A, n, words):
    """All v with <u, v> = 0 for every listed word u."""
    return sorted(v for v in all_vectors(A, n) if all(A.dot(u, v) == 0 for u in words))


def brute_span_words(A, n, gens):
    """Closure under addition and scalar multiples, by fixed-point iteration."""
    S = {tuple([0] * n)}
    frontier = set(S)
    while frontier:
        new = set()
        for u in frontier:
            for g in gens:
                for a in range(A.size):
                    w = tuple(A.add(x, A.mul(a, y)) for x, y in zip(u, g))
                    if w not in S:
                        new.add(w)
        S |= new
        frontier = new
    return sorted(S)


def brute_lr_counter(component_words, A, n):
    """(l, r)-fold enumerator as Counter{frozen multiset of columns -> count}.

    ``component_words[k][j]`` is the word list of C_{k,j}. Iterates over the
    full ambient space and tests membership, unlike the library which walks
    the codes.
    """
    r = len(component_words)
    ell = len(component_words[0])
    members = [[set(ws) for ws in comp] for comp in component_words]
    space = all_vectors(A, n)
    acc = Counter()
    per_joint = []
    for k in range(r):
        mats = [m for m in itertools.product(space, repeat=ell)
                if all(m[j] in members[k][j] for j in range(ell))]
        per_joint.append(mats)
    for combo in itertools.product(*per_joint):
        cols = []
        for i in range(n):
            cols.append(tuple(tuple(combo[k][j][i] for j in range(ell)) for k in range(r)))
        acc[frozenset(Counter(cols).items())] += 1
    return acc


def poly_counter(P):
    """Library polynomial -> the same Counter format as brute_lr_counter."""
    return Counter({frozenset(m): c for m, c in P.terms()})


def root_of_unity(m, e):
    return cmath.exp(2j * math.pi * e / m)


def cyclotomic_value(z):
    return sum(c * root_of_unity(z.order, j) for j, c in enumerate(z.coeffs))


def coeff_value(c):
    if hasattr(c, "coeffs"):
        return cyclotomic_value(c)
    return complex(Fraction(c))


def eval_poly(P, values):
    total = 0j
    for mono, c in P.terms():
        t = coeff_value(c)
        for v, e in mono:
            t *= values[v] ** e
        total += t
    return total


def numeric_macwilliams(P, pattern, A, ell, sizes, rng=None):
    """Evaluate (1/prod |Pi_k|) P(T x) at a random complex point, together with x.

    Returns (x values, transformed value); compare with the dual enumerator at x.
    """
    rng = rng or random.Random(0)
    r = len(pattern)
    cols = list(itertools.product(range(A.size), repeat=ell))
    allvars = list(itertools.product(cols, repeat=r))
    x = {v: complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for v in allvars}
    m = A.char_order

    def chi(a, b):
        return root_of_unity(m, A.character_exponent(A.dot(a, b)))

    # y_a = sum over v at flagged positions of prod chi(a_k . v_k) x_{a with v}
    def image(a):
        choices = [cols if pattern[k] else [a[k]] for k in range(r)]
        total = 0j
        for v in itertools.product(*choices):
            w = 1
            for k in range(r):
                if pattern[k]:
                    w *= chi(a[k], v[k])
            total += w * x[tuple(v)]
        return total

    y = {a: image(a) for a in allvars}
    scale = 1
    for k in range(r):
        if pattern[k]:
            scale *= sizes[k]
    return x, eval_poly(P, y) / scale


def translation_cycle_type(elements, A, n):
    """Cycle type of prod_k (translation by c_k) on {1..n} x A^l, by walking orbits.

    ``elements`` are l x n matrices (tuples of rows).
    """
    ell = len(elements[0])
    pts = [(i, v) for i in range(n) for v in itertools.product(range(A.size), repeat=ell)]

    def act(p):
        i, v = p
        for mat in elements:
            v = tuple(A.add(v[j], mat[j][i]) for j in range(ell))
        return (i, v)

    seen = set()
    counts = Counter()
    for p in pts:
        if p in seen:
            continue
        L = 0
        q = p
        while q not in seen:
            seen.add(q)
            q = act(q)
            L += 1
        counts[L] += 1
    return dict(sorted(counts.items()))


def permute(u, sigma):
    return tuple(u[sigma[i]] for i in range(len(u)))


def brute_orbit_codes(words, n):
    """Every image of the code under S_n (with multiplicity n!/|orbit|)."""
    out = []
    for sigma in itertools.permutations(range(n)):
        out.append(tuple(sorted(permute(u, sigma) for u in words)))
    return out


def brute_avg_intersection(words_c, words_d, n):
    D = set(words_d)
    images = brute_orbit_codes(words_c, n)
    distinct = sorted(set(images))
    return Fraction(sum(sum(1 for u in img if u in D) for img in distinct), len(distinct))


def perm_mul(g, h):
    """(gh)(a) = h(g(a)), 0-based image tuples."""
    return tuple(h[g[a]] for a in range(len(g)))


def perm_closure(gens):
    d = len(gens[0])
    e = tuple(range(d))
    G = {e}
    changed = True
    while changed:
        changed = False
        for g in list(G):
            for s in gens:
                h = perm_mul(g, s)
                if h not in G:
                    G.add(h)
                    changed = True
    return G


def brute_group_avg_intersection(G, H, d):
    """Mean of |G' & H| over distinct S_d conjugates G' of G."""
    copies = set()
    for sigma in itertools.permutations(range(d)):
        inv = [0] * d
        for a, b in enumerate(sigma):
            inv[b] = a
        inv = tuple(inv)
        copies.add(frozenset(perm_mul(perm_mul(inv, g), sigma) for g in G))
    Hs = set(H)
    return Fraction(sum(len(c & Hs) for c in copies), len(copies))


def field_is_domain(A):
    """No zero divisors among nonzero elements (a field check by multiplication table)."""
    return all(A.mul(a, b) != 0 for a in range(1, A.size) for b in range(1, A.size))
