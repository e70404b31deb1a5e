import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from jointenum import F, JointCode, Z, span  # noqa: E402

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "demos", "data")


def random_code(rng, A, n, max_gens=2):
    k = rng.randint(0, max_gens)
    gens = [tuple(rng.randrange(A.size) for _ in range(n)) for _ in range(k)]
    return span(gens, A, n)


def random_joint(rng, A, n, ell, max_gens=2):
    return JointCode([random_code(rng, A, n, max_gens) for _ in range(ell)])


def random_case(rng, q_choices=(2, 3, 4, 5), max_n=5, max_ell=2, max_r=2, ring=False,
                tuple_cap=4096):
    """A random tuple of joint codes over one alphabet, small enough to enumerate."""
    while True:
        q = rng.choice(q_choices)
        A = Z(q) if ring else F(q)
        n = rng.randint(1, max_n)
        ell = rng.randint(1, max_ell)
        r = rng.randint(1, max_r)
        # keep the point set n * |A|^l and the tuple count at desk scale
        if A.size ** ell > 25:
            ell = 1
        tup = tuple(random_joint(rng, A, n, ell) for _ in range(r))
        total = 1
        for P in tup:
            total *= P.size
        if total <= tuple_cap:
            return tup


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture
def pair():
    A = F(2)
    return span([(0, 1), (1, 0)], A, 2), span([(1, 1)], A, 2)


@pytest.fixture
def joint_pair(pair):
    C, D = pair
    return JointCode([C, D]), JointCode([D, D])


@pytest.fixture
def data_dir():
    return os.path.abspath(DATA)
