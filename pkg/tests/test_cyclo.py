from __future__ import annotations

import cmath
import random
from fractions import Fraction
from math import gcd

import pytest

from commcount.cyclo import (
    Cyclo,
    NotRationalError,
    cyclo_root,
    cyclo_to_rational,
    cyclotomic_polynomial,
    degree,
    format_cyclo,
    parse_cyclo,
)


def numeric(z: Cyclo) -> complex:
    # independent floating evaluation used only as a test oracle
    return sum(
        float(c) * cmath.exp(2j * cmath.pi * k / z.conductor)
        for k, c in enumerate(z.coeffs)
    )


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_cyclotomic_polynomials_small():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_product_recovers_x_n_minus_1():
    for n in range(1, 31):
        prod = [1]
        for d in range(1, n + 1):
            if n % d == 0:
                prod = poly_mul(prod, list(cyclotomic_polynomial(d)))
        expect = [0] * (n + 1)
        expect[0], expect[n] = -1, 1
        assert prod == expect


def test_degree_is_totient():
    for n in range(1, 50):
        assert degree(n) == totient(n)


def test_root_products():
    z5 = [cyclo_root(5, k) for k in range(5)]
    assert (z5[1] + z5[4]) * (z5[2] + z5[3]) == Cyclo.rational(-1)
    assert cyclo_root(2) * cyclo_root(3) == cyclo_root(6, 5)
    assert cyclo_root(4) * cyclo_root(4) == Cyclo.rational(-1)
    for n in (1, 2, 3, 4, 6, 7, 12):
        assert cyclo_root(n) ** n == Cyclo.rational(1)


def test_root_of_unity_sums():
    # sum over all nontrivial n-th roots of unity is -1
    for n in range(2, 31):
        total = Cyclo.rational(0)
        for k in range(1, n):
            total = total + cyclo_root(n, k)
        assert total == Cyclo.rational(-1)
    # odd n: the same sum grouped as zeta^(2k) + zeta^(-2k)
    for n in range(3, 31, 2):
        total = Cyclo.rational(0)
        for k in range(1, (n - 1) // 2 + 1):
            total = total + cyclo_root(n, 2 * k) + cyclo_root(n, -2 * k)
        assert total == Cyclo.rational(-1)


def test_exponent_wraparound():
    rng = random.Random(20260813)
    for _ in range(200):
        n = rng.randrange(1, 16)
        a, b = rng.randrange(2 * n), rng.randrange(2 * n)
        prod = cyclo_root(n, a) * cyclo_root(n, b)
        assert prod == cyclo_root(n, (a + b) % n)
        assert abs(numeric(prod) - cmath.exp(2j * cmath.pi * (a + b) / n)) < 1e-9


def random_value(rng, max_conductor=12):
    n = rng.randrange(1, max_conductor + 1)
    total = Cyclo.rational(Fraction(rng.randrange(-3, 4), rng.randrange(1, 4)))
    for _ in range(rng.randrange(0, 3)):
        q = Fraction(rng.randrange(-3, 4), rng.randrange(1, 4))
        total = total + q * cyclo_root(n, rng.randrange(n))
    return total


def test_field_laws_on_random_samples():
    rng = random.Random(43)
    for _ in range(120):
        a, b, c = (random_value(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == Cyclo.rational(0)
        assert (a * b).conj() == a.conj() * b.conj()
        assert a.conj().conj() == a
        assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-9
        assert abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-9


def test_conjugate_fixes_reals():
    z = cyclo_root(7) + cyclo_root(7, 6)
    assert z.conj() == z
    assert z.is_real()
    w = cyclo_root(7)
    assert w.conj() != w


def test_to_rational():
    assert cyclo_to_rational(Cyclo.rational(Fraction(7, 2))) == Fraction(7, 2)
    # zeta_6^3 = -1 is rational even though the conductor is 6
    assert cyclo_root(6, 3).to_rational() == -1
    z = cyclo_root(5)
    with pytest.raises(NotRationalError) as info:
        z.to_rational()
    assert info.value.value == z


def test_equality_across_conductors():
    assert cyclo_root(6, 2) == cyclo_root(3)
    assert cyclo_root(8, 2) == cyclo_root(4)
    z = cyclo_root(3) + 1
    assert z.at_conductor(12) == z
    assert z.at_conductor(12).conductor == 12
    with pytest.raises(ValueError):
        z.at_conductor(5)


def test_division():
    assert (2 * cyclo_root(3)) / 2 == cyclo_root(3)
    assert cyclo_root(3) / Fraction(1, 3) == 3 * cyclo_root(3)
    with pytest.raises(ZeroDivisionError):
        cyclo_root(3) / 0
    with pytest.raises(NotRationalError):
        cyclo_root(3) / cyclo_root(5)


def test_format_canonical():
    phi = -(cyclo_root(5, 2) + cyclo_root(5, 3))  # the golden ratio
    assert format_cyclo(phi) == "-E(5)^2-E(5)^3"
    assert format_cyclo(Cyclo.rational(0)) == "0"
    assert format_cyclo(Cyclo.rational(Fraction(-3, 2))) == "-3/2"
    assert format_cyclo(cyclo_root(4)) == "E(4)"
    assert format_cyclo(3 * cyclo_root(4) + Fraction(1, 2)) == "1/2+3*E(4)"


def test_parse_round_trip():
    rng = random.Random(7)
    values = [random_value(rng) for _ in range(80)]
    values += [
        Cyclo.rational(0),
        Cyclo.rational(-5),
        cyclo_root(8, 3),
        -(cyclo_root(5, 2) + cyclo_root(5, 3)),
    ]
    for z in values:
        assert parse_cyclo(format_cyclo(z)) == z


def test_parse_inputs():
    assert parse_cyclo("2 + E(3)") == 2 + cyclo_root(3)
    assert parse_cyclo("-1/2") == Cyclo.rational(Fraction(-1, 2))
    assert parse_cyclo("-E(5)-E(5)^4") == -(cyclo_root(5) + cyclo_root(5, 4))
    assert parse_cyclo("2*E(7)^3") == 2 * cyclo_root(7, 3)
    assert parse_cyclo("E(1)") == Cyclo.rational(1)
    for bad in ("", "E(", "2**E(3)", "E(3)^", "1//2", "x+1"):
        with pytest.raises(ValueError):
            parse_cyclo(bad)


def test_immutability():
    z = cyclo_root(5)
    with pytest.raises(AttributeError):
        z.conductor = 7
