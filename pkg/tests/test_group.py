from itertools import permutations as all_perms

import pytest

from codegrees.group import (NotAMemberError, PermGroup, centralizer_order,
                             conjugacy_classes, coset_action, derived_length,
                             derived_series, exponent, is_nilpotent,
                             is_solvable, normal_closure, p_part, subgroup,
                             subgroup_from_elements, sylow)
from codegrees.perm import parse_cycles


def G_from(degree, cycs):
    return PermGroup(degree, [parse_cycles(c, degree) for c in cycs])


def S(m):
    return G_from(m, ["(1,2)", "(" + ",".join(str(i + 1) for i in range(m)) + ")"])


def test_orders_match_bruteforce():
    S4 = S(4)
    assert S4.order == 24
    assert set(g.images for g in S4.elements()) == \
        set(all_perms(range(4)))
    assert S(6).order == 720


def test_membership():
    S4 = S(4)
    assert parse_cycles("(1,3)(2,4)", 4) in S4
    A4 = G_from(4, ["(1,2,3)", "(2,3,4)"])
    assert A4.order == 12
    assert parse_cycles("(1,2)", 4) not in A4


def test_subgroup_lagrange_and_membership_check():
    S4 = S(4)
    H = subgroup(S4, [parse_cycles("(1,2,3)", 4)])
    assert H.order == 3
    with pytest.raises(NotAMemberError):
        subgroup(G_from(4, ["(1,2,3)", "(2,3,4)"]), [parse_cycles("(1,2)", 4)])


def test_subgroup_from_elements_reduces_generators():
    S4 = S(4)
    H = subgroup_from_elements(S4, S4.elements())
    assert H.order == 24
    assert len(H.generators) <= 5


def test_derived_series_s4():
    S4 = S(4)
    assert [H.order for H in derived_series(S4)] == [24, 12, 4, 1]
    assert is_solvable(S4)
    assert derived_length(S4) == 3


def test_exponent_and_pparts():
    assert exponent(S(4)) == 12
    assert p_part(24, 2) == 8
    assert p_part(24, 5) == 1
    assert p_part(48, 2) == 16


def test_conjugacy_classes_s4():
    cc = conjugacy_classes(S(4))
    assert sorted(cc.sizes) == [1, 3, 6, 6, 8]
    assert sum(cc.sizes) == 24
    assert cc.reps[0].is_identity
    # class sizes divide the order and reps represent their own classes
    for i, rep in enumerate(cc.reps):
        assert cc.class_of(rep) == i
        assert len(cc.class_elements[i]) == cc.sizes[i]


def test_power_maps():
    cc = conjugacy_classes(S(4))
    for k, rep in enumerate(cc.reps):
        for m in range(cc.exponent):
            assert cc.power_maps[m][k] == cc.class_of(rep ** m)
    # inverse map: class of rep^-1
    for k, rep in enumerate(cc.reps):
        assert cc.inverse_map[k] == cc.class_of(rep.inverse())


def test_centralizer_order():
    S4 = S(4)
    assert centralizer_order(S4, parse_cycles("(1,2)", 4)) == 4


def test_sylow_and_nilpotency():
    S4 = S(4)
    assert sylow(S4, 2).order == 8
    assert sylow(S4, 3).order == 3
    assert not is_nilpotent(S4)
    Q8 = G_from(8, ["(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)"])
    assert is_nilpotent(Q8)


def test_normal_closure():
    S4 = S(4)
    N = normal_closure(S4, [parse_cycles("(1,2)(3,4)", 4)])
    assert N.order == 4
    N2 = normal_closure(S4, [parse_cycles("(1,2)", 4)])
    assert N2.order == 24


def test_coset_action_quotient():
    S4 = S(4)
    V4 = subgroup(S4, [parse_cycles("(1,2)(3,4)", 4),
                       parse_cycles("(1,3)(2,4)", 4)])
    action = coset_action(S4, V4)
    assert action.group.order == 6
    # kernel of the quotient map is exactly V4
    ker = [g for g in S4.elements() if action.apply(g).is_identity]
    assert len(ker) == 4
    assert all(g in V4 for g in ker)
    # homomorphism property on a sample
    a = parse_cycles("(1,2)", 4)
    b = parse_cycles("(1,2,3,4)", 4)
    assert action.apply(a * b) == action.apply(a) * action.apply(b)
