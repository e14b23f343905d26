import cmath
import random
from fractions import Fraction

import pytest

from spherex.cyclo import (
    Accumulator,
    Cyc,
    cyc_as_rational,
    cyc_make,
    cyclotomic_poly,
    root_of_unity_log,
)
from spherex.errors import NotRationalError, NotRootOfUnityError


def float_eval(n, terms):
    return sum(
        Fraction(c) * cmath.exp(2j * cmath.pi * e / n) for e, c in terms
    )


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_make_basics():
    assert cyc_make(4, [(2, 1)]) == -1
    assert cyc_make(1, [(0, 1)]) == 1
    assert cyc_make(5, []) == 0
    # exponents reduce mod n
    assert cyc_make(5, [(7, 1)]) == Cyc.root(5, 2)


def test_square_of_z8_combinations():
    # oracle: float evaluation pins the signs
    x = cyc_make(8, [(1, 1), (7, -1)])
    assert abs(float_eval(8, [(1, 1), (7, -1)]) ** 2 - (-2)) < 1e-12
    assert x * x == -2
    y = cyc_make(8, [(1, 1), (7, 1)])
    assert abs(float_eval(8, [(1, 1), (7, 1)]) ** 2 - 2) < 1e-12
    assert y * y == 2


def test_as_rational():
    assert cyc_as_rational(Cyc.root(3) + Cyc.root(3, 2)) == Fraction(-1)
    assert cyc_as_rational(Cyc.rational(5, 7)) == Fraction(5, 7)
    with pytest.raises(NotRationalError) as err:
        cyc_as_rational(Cyc.root(5))
    assert err.value.value == Cyc.root(5)


def test_root_of_unity_log():
    assert root_of_unity_log(Cyc.root(8, 3)) == (8, 3)
    assert root_of_unity_log(Cyc.rational(-1)) == (2, 1)
    assert root_of_unity_log(Cyc.rational(1)) == (1, 0)
    # zeta_6^2 = zeta_3; minimality cross-checked by direct powering
    order, exp = root_of_unity_log(Cyc.root(6, 2))
    assert (order, exp) == (3, 1)
    v = Cyc.root(6, 2)
    assert v ** order == 1
    assert all(v ** k != 1 for k in range(1, order))
    with pytest.raises(NotRootOfUnityError):
        root_of_unity_log(Cyc.rational(2))
    with pytest.raises(NotRootOfUnityError):
        root_of_unity_log(Cyc.root(5) + 1)


def test_negative_roots_of_unity():
    assert root_of_unity_log(-Cyc.root(5)) == (10, 7)
    assert root_of_unity_log(-Cyc.root(8)) == (8, 5)


def rand_cyc(rng, max_coeff=5):
    n = rng.choice([1, 3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16, 20, 21, 24])
    k = rng.randint(1, 4)
    return Cyc.make(n, [(rng.randrange(n), rng.randint(-max_coeff, max_coeff)) for _ in range(k)])


def test_field_axioms_random():
    rng = random.Random(20240817)
    for _ in range(150):
        a, b, c = rand_cyc(rng), rand_cyc(rng), rand_cyc(rng)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inv() == 1
        assert a - a == 0


def test_conjugation_properties():
    rng = random.Random(7)
    for _ in range(80):
        a, b = rand_cyc(rng), rand_cyc(rng)
        assert (a * b).conj() == a.conj() * b.conj()
        assert (a + b).conj() == a.conj() + b.conj()
        assert a.conj().conj() == a


def test_canonical_uniqueness_construction_orders():
    # same algebraic value via different construction orders
    a = (Cyc.root(12) + Cyc.root(4)) * Cyc.root(3)
    b = Cyc.root(12) * Cyc.root(3) + Cyc.root(3) * Cyc.root(4)
    assert a == b and hash(a) == hash(b)
    # cancellation collapses the conductor
    u = Cyc.root(15) + Cyc.root(5) - Cyc.root(15)
    assert u == Cyc.root(5) and u.n == 5
    total = sum((Cyc.root(7, e) for e in range(1, 7)), Cyc.rational(0))
    assert total == -1 and total.n == 1


def test_conductor_minimization():
    assert Cyc.root(6).n == 3          # = -zeta_3^2
    assert Cyc.root(24, 3).n == 8
    assert (Cyc.root(24) ** 3) == Cyc.root(8)
    assert Cyc.make(24, [(9, 1)]) == Cyc.root(8, 3)
    v = Cyc.root(16) * Cyc.root(16, 15)
    assert v == 1 and v.n == 1
    # scrambled membership: an element of Q(zeta_8) written over conductor 24
    w = Cyc.root(8, 3) + Cyc.root(3) * 0
    assert w.n == 8
    x = (Cyc.root(3) + 1) * Cyc.root(8, 3) - Cyc.root(3) * Cyc.root(8, 3)
    assert x == Cyc.root(8, 3) and x.n == 8


def test_float_embedding_consistency():
    rng = random.Random(99)
    for _ in range(60):
        n = rng.choice([5, 8, 12, 16, 21, 24])
        terms = [(rng.randrange(n), rng.randint(-5, 5)) for _ in range(3)]
        v = Cyc.make(n, terms)
        assert abs(complex(v) - float_eval(n, terms)) < 1e-10


def test_division_errors():
    with pytest.raises(ZeroDivisionError):
        Cyc.rational(0).inv()
    with pytest.raises(ZeroDivisionError):
        Cyc.root(5) / 0


def test_pow_and_galois():
    a = Cyc.root(7) + 2
    assert a ** 0 == 1
    assert a ** 3 == a * a * a
    assert a ** -2 == (a * a).inv()
    assert Cyc.root(7).galois(3) == Cyc.root(7, 3)
    with pytest.raises(ValueError):
        Cyc.root(6).galois(0)


def test_text_and_json_round_trip():
    values = [
        Cyc.rational(0),
        Cyc.rational(-7, 3),
        Cyc.root(8) - Cyc.root(8, 3) * Fraction(2, 5),
        Cyc.make(12, [(1, Fraction(1, 2)), (5, 3)]),
    ]
    for v in values:
        assert Cyc.from_json(v.to_json()) == v
    assert Cyc.rational(0).to_text() == "0"
    assert Cyc.rational(5, 7).to_text() == "5/7"
    assert Cyc.root(8).to_text() == "z(8)"
    assert (-Cyc.root(8)).to_text() == "-z(8)"


def test_coeff_map_view():
    v = cyc_make(8, [(1, Fraction(1, 2)), (3, -2)])
    assert v.coeff_map() == {1: Fraction(1, 2), 3: Fraction(-2)}


def test_accumulator_matches_naive_sum():
    rng = random.Random(3)
    acc = Accumulator(24)
    ref = Cyc.rational(0)
    for _ in range(25):
        a = Cyc.make(rng.choice([1, 3, 4, 8, 12, 24]), [(rng.randrange(4), rng.randint(-3, 3))])
        b = Cyc.make(rng.choice([1, 3, 4, 8]), [(rng.randrange(3), rng.randint(-3, 3))])
        num, den = rng.randint(-5, 5), rng.randint(1, 7)
        acc.add_product(a, b, num, den)
        ref = ref + a * b * Fraction(num, den)
    assert acc.finalize() == ref
