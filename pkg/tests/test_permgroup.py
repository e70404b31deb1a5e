import itertools

import pytest
from hypothesis import given, settings, strategies as st

from jointenum import Permutation, PermGroup, PointSet, closure, compose, cycle_counts, isomorphic_copies
from jointenum.permgroup import PermutationError, conjugates, parse_cycles, symmetric_group

from oracles import perm_closure, perm_mul


def P(text, n):
    return Permutation.from_cycles(text, n)


def test_from_cycles_and_str():
    g = P("(1,2)(3,4)", 5)
    assert g.image == (1, 0, 3, 2, 4)
    assert str(g) == "(1,2)(3,4)"
    assert str(Permutation.identity(3)) == "()"
    assert parse_cycles("(1, 3, 2)") == [(1, 3, 2)]
    assert str(P("(1,3,2)", 3)) == "(1,3,2)"


def test_bad_cycles():
    with pytest.raises(PermutationError):
        P("(1,4)", 3)
    with pytest.raises(PermutationError):
        P("(1,2)(2,3)", 3)
    with pytest.raises(PermutationError):
        Permutation([0, 0, 1])


def test_product_convention():
    # (gh)(a) = h(g(a)): apply g first
    g, h = P("(1,2)", 3), P("(2,3)", 3)
    gh = compose(g, h)
    assert gh(0) == h(g(0)) == 2
    assert str(gh) == "(1,3,2)"
    assert g * h == gh


def test_cycle_counts_include_fixed_points():
    assert cycle_counts(P("(1,2)", 4)) == {1: 2, 2: 1}
    assert cycle_counts(Permutation.identity(3)) == {1: 3}
    assert cycle_counts(P("(1,2,3)(4,5)", 6)) == {1: 1, 2: 1, 3: 1}


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_group_laws(data):
    n = data.draw(st.integers(1, 6))
    a, b, c = (Permutation(data.draw(st.permutations(list(range(n))))) for _ in range(3))
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, a.inverse()).is_identity()
    assert compose(a, b).image == perm_mul(a.image, b.image)
    assert sum(L * k for L, k in cycle_counts(a).items()) == n


def test_closure_orders():
    assert closure([P("(1,2)", 3)]).order == 2
    assert closure([P("(1,3,2)", 3)]).order == 3
    assert closure([P("(1,2)", 4), P("(1,2,3,4)", 4)]).order == 24
    assert closure([P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)]).order == 4
    assert closure([], degree=3).order == 1


def test_closure_matches_oracle():
    gens = [P("(1,2,3)", 5), P("(4,5)", 5)]
    G = closure(gens)
    assert {g.image for g in G} == perm_closure([g.image for g in gens])
    PermGroup(G.elements, check=True)


def test_closure_cap():
    with pytest.raises(PermutationError, match="group cap"):
        closure([P("(1,2)", 5), P("(1,2,3,4,5)", 5)], cap=50)


def test_isomorphic_copies_of_transposition_group():
    G1 = closure([P("(1,2)", 3)])
    copies = isomorphic_copies(G1)
    assert len(copies) == 3
    assert {str(g) for C in copies for g in C if not g.is_identity()} == {"(1,2)", "(1,3)", "(2,3)"}
    assert len(conjugates(G1)) == 6


def test_normal_subgroup_has_one_copy():
    A3 = closure([P("(1,2,3)", 3)])
    assert isomorphic_copies(A3) == [A3]


def test_intersection():
    G = closure([P("(1,2)", 3)])
    H = closure([P("(1,3,2)", 3)])
    assert G.intersection(H).order == 1
    S3 = PermGroup(symmetric_group(3))
    assert S3.intersection(G) == G


def test_point_sets():
    from jointenum import F
    ps = PointSet.product(2, F(2), 1)
    assert ps.labels == ((1, (0,)), (1, (1,)), (2, (0,)), (2, (1,)))
    assert ps.index((2, (1,))) == 3
    assert len(PointSet.abstract(4)) == 4
    with pytest.raises(PermutationError):
        PointSet([1, 1])


def test_symmetric_group_is_complete():
    S = symmetric_group(4)
    assert len(S) == 24 == len(set(S))
    assert set(p.image for p in S) == set(itertools.permutations(range(4)))
