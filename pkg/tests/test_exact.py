from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from grover_support.exact import ExtScalar, RadicandMismatch, ext_arith, ext_sign


def test_radical_squares_to_radicand():
    s = ExtScalar.sqrt(2)
    assert s * s == ExtScalar(2, 0, 2)
    assert ext_arith(s, s, "mul") == 2


def test_additive_inverse():
    assert ext_arith(ExtScalar(1, 0, 2), ExtScalar(-1, 0, 2), "add") == 0
    assert not ext_arith(ExtScalar(1, 0, 2), ExtScalar(1, 0, 2), "sub")


def test_coin_row_norm_k3():
    a = ExtScalar(0, Fraction(2, 3), 2)
    b = ExtScalar(Fraction(1, 3), 0, 2)
    assert a * a + b * b == 1


def test_mismatched_radicand_rejected():
    with pytest.raises(RadicandMismatch):
        ext_arith(ExtScalar.sqrt(2), ExtScalar.sqrt(3), "add")
    with pytest.raises(RadicandMismatch):
        ExtScalar.sqrt(2) * ExtScalar.sqrt(5)


def test_perfect_square_radicand_folds():
    x = ExtScalar(1, 3, 4)
    assert x.irr == 0 and x.rat == 7
    assert ExtScalar(Fraction(1, 2), Fraction(1, 2), 1) == 1


@pytest.mark.parametrize(
    "value, expected",
    [
        (ExtScalar(0, 1, 2), 1),
        (ExtScalar(Fraction(-1, 3), 0, 2), -1),
        (ExtScalar(2, -3, 2), -1),
        (ExtScalar(-2, 3, 2), 1),
        (ExtScalar(5, -3, 2), 1),
        (ExtScalar(0, 0, 2), 0),
    ],
)
def test_sign_examples(value, expected):
    assert ext_sign(value) == expected


def test_division_roundtrip():
    a = ExtScalar(Fraction(3, 7), Fraction(-2, 5), 6)
    b = ExtScalar(1, 1, 6)
    assert (a / b) * b == a


_rats = st.fractions(min_value=-50, max_value=50, max_denominator=60)
_radicands = st.sampled_from([2, 3, 5, 6, 7, 19])


@given(_radicands, _rats, _rats, _rats, _rats)
def test_sign_multiplicative(r, a, b, c, d):
    x, y = ExtScalar(a, b, r), ExtScalar(c, d, r)
    assert ext_sign(x * y) == ext_sign(x) * ext_sign(y)


@given(_radicands, _rats, _rats)
def test_sign_zero_iff_zero(r, a, b):
    assert (ext_sign(ExtScalar(a, b, r)) == 0) == (a == 0 and b == 0)


@given(_radicands, _rats, _rats)
def test_sign_agrees_with_float(r, a, b):
    x = ExtScalar(a, b, r)
    f = float(x)
    if abs(f) > 1e-9:
        assert ext_sign(x) == (1 if f > 0 else -1)


def test_sign_multiplicative_seeded_1000():
    rng = random.Random(20240601)

    def draw(r):
        return ExtScalar(
            Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4)),
            Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4)),
            r,
        )

    for _ in range(1000):
        r = rng.choice([2, 3, 8, 10, 19])
        x, y = draw(r), draw(r)
        assert ext_sign(x * y) == ext_sign(x) * ext_sign(y)
