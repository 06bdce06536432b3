import pytest

from codegrees.perm import Permutation, parse_cycles, print_cycles


def test_composition_convention():
    # (p*q)(i) = p(q(i)): (1,2) * (2,3) maps 3 -> 2 -> 1, i.e. (1,2,3)
    p = parse_cycles("(1,2)", 3)
    q = parse_cycles("(2,3)", 3)
    assert print_cycles(p * q) == "(1,2,3)"


def test_identity_prints_as_unit():
    assert print_cycles(Permutation.identity(5)) == "()"
    assert parse_cycles("()", 4).is_identity


def test_parse_roundtrip():
    for text in ["(1,2)", "(1,2,3)(4,5)", "(2,4,6)(1,3)", "()"]:
        p = parse_cycles(text, 6)
        assert parse_cycles(print_cycles(p), 6) == p


def test_parse_whitespace_insensitive():
    assert parse_cycles(" ( 1 , 2 ) ( 3 , 4 ) ", 4) == \
        parse_cycles("(1,2)(3,4)", 4)


def test_parse_errors_report_position():
    with pytest.raises(ValueError, match="position"):
        parse_cycles("(1,2", 4)
    with pytest.raises(ValueError, match="position"):
        parse_cycles("(1,2)x(3,4)", 4)
    with pytest.raises(ValueError, match="exceeds degree"):
        parse_cycles("(1,5)", 4)


def test_inverse_and_order():
    p = parse_cycles("(1,2,3)(4,5)", 5)
    assert (p * p.inverse()).is_identity
    assert p.order() == 6
    assert (p ** 6).is_identity
    assert not (p ** 3).is_identity


def test_conjugate():
    p = parse_cycles("(1,2)", 4)
    by = parse_cycles("(1,3)", 4)
    # by * p * by^-1 relabels 1 <-> 3 in the cycle
    assert p.conjugate(by) == parse_cycles("(2,3)", 4)


def test_cycle_type_includes_fixed_points():
    p = parse_cycles("(1,2,3)(4,5)", 6)
    assert p.cycle_type() == (1, 2, 3)
