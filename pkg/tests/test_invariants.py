import time
from itertools import combinations

import pytest

from codegrees.chartab import character_table, classes_of
from codegrees.constructions import (build, catalog_names, cyclic,
                                     generalized_quaternion, symmetric)
from codegrees.group import subgroup, subgroup_from_elements
from codegrees.invariants import (NotSolvableError, cod_partition, codegree,
                                  codegree_set, fitting_height,
                                  fitting_subgroup, kernel,
                                  normal_from_handle, normal_subgroups,
                                  solvable_radical, vanishing_off_subgroup)
from codegrees.perm import parse_cycles


def test_kernels_of_s4():
    S4 = symmetric(4)
    T = character_table(S4)
    kernel_orders = sorted(kernel(chi).order for chi in T.chars)
    # trivial char -> S4; sign -> A4; degree 2 -> V4; two faithful cubics
    assert kernel_orders == [1, 1, 4, 12, 24]


def test_codegrees_s4():
    S4 = symmetric(4)
    T = character_table(S4)
    cods = sorted(codegree(chi) for chi in T.chars)
    assert cods == [1, 2, 3, 8, 8]
    assert codegree_set(S4).values == (1, 2, 3, 8)


def test_codegrees_q8():
    assert codegree_set(generalized_quaternion(8)).values == (1, 2, 4)


def brute_force_normal_subgroups(G):
    """Oracle: enumerate all class-index unions that form subgroups."""
    cc = classes_of(G)
    r = len(cc)
    found = set()
    others = [i for i in range(1, r)]
    for k in range(len(others) + 1):
        for combo in combinations(others, k):
            indices = frozenset((0,) + combo)
            total = sum(cc.sizes[i] for i in indices)
            if G.order % total:
                continue
            if any(cc.inverse_map[i] not in indices for i in indices):
                continue
            elems = [x for i in indices for x in cc.class_elements[i]]
            H = subgroup_from_elements(G, elems)
            if H.order == total:
                found.add(indices)
    return found


def test_normal_subgroups_against_bruteforce_oracle():
    start = time.monotonic()
    for name in catalog_names():
        G = build(name)
        cc = classes_of(G)
        if len(cc) > 12:
            continue
        computed = {n.class_indices for n in normal_subgroups(G)}
        assert computed == brute_force_normal_subgroups(G), name
    assert time.monotonic() - start < 60.0


def test_normal_subgroup_counts():
    assert [n.order for n in normal_subgroups(symmetric(4))] == [1, 4, 12, 24]
    assert len(normal_subgroups(generalized_quaternion(8))) == 6


def test_fitting_and_radical():
    S4 = symmetric(4)
    assert fitting_subgroup(S4).order == 4
    assert solvable_radical(S4).order == 24
    G = build("CSU(2,3)")
    assert fitting_subgroup(G).order == 8


def test_fitting_height():
    fd = fitting_height(symmetric(4))
    assert fd.height == 3
    assert [n.order for n in fd.series] == [4, 12, 24]
    assert fitting_height(generalized_quaternion(8)).height == 1
    assert fitting_height(cyclic(2)).height == 1
    assert fitting_height(build("CSU(2,3)")).height == 3


def test_fitting_height_nonsolvable_rejected():
    from codegrees.constructions import alternating
    A5 = alternating(5)
    with pytest.raises(NotSolvableError):
        fitting_height(A5)


def test_vanishing_off_subgroups():
    S4 = symmetric(4)
    T = character_table(S4)
    deg2 = next(c for c in T.chars if c.degree == 2)
    assert vanishing_off_subgroup(deg2).order == 12
    Q8 = generalized_quaternion(8)
    TQ = character_table(Q8)
    deg2q = next(c for c in TQ.chars if c.degree == 2)
    assert vanishing_off_subgroup(deg2q).order == 2
    # linear characters never vanish
    lin = next(c for c in T.chars if c.degree == 1)
    assert vanishing_off_subgroup(lin).order == 24


def test_cod_partition():
    S4 = symmetric(4)
    cc = classes_of(S4)
    V4 = normal_from_handle(cc, subgroup(
        S4, [parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)]))
    over, off = cod_partition(S4, V4)
    assert over == frozenset({1, 2, 3})
    assert off == frozenset({8})
    # N = G: quotient is trivial
    full = normal_from_handle(cc, S4)
    over, off = cod_partition(S4, full)
    assert over == frozenset({1})
    # N = 1: everything inflates
    triv = normal_from_handle(cc, subgroup(S4, []))
    over, off = cod_partition(S4, triv)
    assert over == frozenset({1, 2, 3, 8})
    assert off == frozenset()


def test_codegree_set_basic_properties():
    for name in ["S4", "Q8", "C6", "GL(2,3)", "Gamma(9)"]:
        G = build(name)
        cs = codegree_set(G)
        assert 1 in cs.values
        assert max(cs.values) <= G.order
        if G.order > 1:
            assert len(cs.values) >= 2
