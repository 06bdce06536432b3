import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from codegrees.cyclo import (NotAnIntegerError, integer, one,
                             rational, root_of_unity, zero)


def test_vanishing_sums():
    # 1 + z_3 + z_3^2 = 0, and likewise for any prime order
    for n in (3, 5, 7):
        total = zero
        for k in range(n):
            total = total + root_of_unity(n, k)
        assert total.is_zero


def test_conductor_reduction():
    # z_12^3 = i lives at conductor 4
    i = root_of_unity(12, 3).reduce_conductor()
    assert i.n == 4
    assert i == root_of_unity(4, 1)
    assert (i * i) == integer(-1)


def test_cross_conductor_equality_and_hash():
    a = root_of_unity(6, 2)
    b = root_of_unity(3, 1)
    assert a == b
    assert hash(a) == hash(b)


def test_rational_detection():
    assert rational(Fraction(3, 2)).is_rational
    assert (root_of_unity(5, 1) + root_of_unity(5, 4)).is_rational is False
    r = root_of_unity(8, 1) * root_of_unity(8, 7)
    assert r == one
    assert r.to_integer() == 1
    with pytest.raises(NotAnIntegerError):
        rational(Fraction(1, 2)).to_integer()


def test_conjugation():
    z = root_of_unity(7, 2)
    assert z.conj() == root_of_unity(7, 5)
    v = z + root_of_unity(7, 5)  # real: z + conj(z)
    assert v.conj() == v


def test_e_strings():
    assert root_of_unity(3, 2).e_string() == "E(3)^2"
    assert root_of_unity(4, 1).e_string() == "E(4)"
    assert integer(-2).e_string() == "-2"
    assert root_of_unity(12, 3).e_string() == "E(4)"
    assert rational(Fraction(1, 2)).e_string() == "1/2"
    assert root_of_unity(3, 1).scale(-1).e_string() == "-E(3)"


def test_galois():
    z = root_of_unity(9, 1)
    assert z.galois(2) == root_of_unity(9, 2)
    v = z + integer(3)
    assert v.galois(2) == root_of_unity(9, 2) + integer(3)


def test_ring_axioms_random():
    rng = random.Random(7)

    def rand_elem():
        n = rng.choice([1, 2, 3, 4, 5, 6, 8, 12])
        total = zero
        for _ in range(rng.randint(1, 3)):
            c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            total = total + root_of_unity(n, rng.randrange(n)).scale(c)
        return total

    for _ in range(300):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a * b).conj() == a.conj() * b.conj()


@given(st.integers(min_value=1, max_value=24),
       st.integers(min_value=0, max_value=23))
@settings(max_examples=80, deadline=None)
def test_roots_of_unity_multiply(n, k):
    k = k % n
    z = root_of_unity(n, k)
    assert z * z.conj() == one
    # z^n = 1 by repeated multiplication
    acc = one
    for _ in range(n):
        acc = acc * z
    assert acc == one


@given(st.integers(min_value=-20, max_value=20),
       st.integers(min_value=-20, max_value=20))
@settings(max_examples=60, deadline=None)
def test_integers_embed(a, b):
    assert integer(a) + integer(b) == integer(a + b)
    assert integer(a) * integer(b) == integer(a * b)
