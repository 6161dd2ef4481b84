"""Base rings: exhaustive small-modulus checks and number helpers."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gradedrings import QQ, ZZ, Zmod
from gradedrings.errors import ScalarDomainError
from gradedrings.scalars import crt, prime_factors


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 9, 12])
def test_units_and_inverses_exhaustively(n):
    R = Zmod(n)
    for a in range(n):
        if gcd(a, n) == 1:
            assert R.is_unit(a)
            assert (a * R.inverse_of(a)) % n == 1
        else:
            assert not R.is_unit(a)


@pytest.mark.parametrize("n", [2, 4, 6, 9, 12])
def test_annihilator_generator_generates_the_annihilator(n):
    R = Zmod(n)
    for a in range(1, n):
        g = R.annihilator_generator(a)
        assert (a * g) % n == 0
        killers = {b for b in range(n) if (a * b) % n == 0}
        generated = {(g * c) % n for c in range(n)}
        assert killers == generated


def test_normalize_wraps_and_rejects():
    R = Zmod(6)
    assert R.normalize(-1) == 5
    with pytest.raises(ScalarDomainError):
        R.normalize(Fraction(1, 2))  # residues are plain integers
    assert ZZ.normalize(-7) == -7
    with pytest.raises(ScalarDomainError):
        ZZ.normalize(Fraction(1, 3))
    assert QQ.normalize(Fraction(1, 3)) == Fraction(1, 3)
    assert QQ.normalize(2) == Fraction(2)


def test_integer_units():
    assert ZZ.is_unit(1) and ZZ.is_unit(-1)
    assert not ZZ.is_unit(2) and not ZZ.is_unit(0)
    assert QQ.is_unit(Fraction(-7, 3))
    assert not QQ.is_unit(Fraction(0))


@given(st.integers(2, 10_000))
def test_prime_factors_multiply_back(n):
    fac = prime_factors(n)
    prod = 1
    for p, e in fac.items():
        assert e >= 1
        for q in fac:
            if q != p:
                assert p % q != 0 or p == q
        prod *= p ** e
    assert prod == n


def test_prime_factors_of_primes_and_powers():
    assert prime_factors(7) == {7: 1}
    assert prime_factors(8) == {2: 3}
    assert prime_factors(12) == {2: 2, 3: 1}
    assert prime_factors(420) == {2: 2, 3: 1, 5: 1, 7: 1}


@given(st.integers(0, 11), st.integers(0, 34))
def test_crt_reconstructs(a, b):
    x = crt([a % 12, b % 35], [12, 35])
    assert x % 12 == a % 12
    assert x % 35 == b % 35
    assert 0 <= x < 12 * 35


def test_zmod_element_listing():
    assert list(Zmod(4).elements()) == [0, 1, 2, 3]
