import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import random

import pytest
from sympy.polys.domains import QQ

from algebra.rational import format_poly, format_rat, parse_poly, parse_rat
from algebra.series import (TSeries, extract, make_ring, pderiv, series_compose, series_exp,
                            series_inverse, series_log, series_mul)
from utils.errors import DomainError, TruncationError, UsageError

R = make_ring(("u", "z", "p1", "p2"))
u, z, p1, p2 = R.gens


def random_series(order, unit=False, seed=0):
    rng = random.Random(seed)
    coeffs = []
    for k in range(order + 1):
        c = R.zero
        for _ in range(3):
            c += QQ(rng.randint(-5, 5), rng.randint(1, 4)) * u ** rng.randint(0, 2) * z ** rng.randint(0, 2) * p1 ** rng.randint(0, 1)
        coeffs.append(c)
    if unit:
        coeffs[0] = R.one
    return TSeries.from_coeffs(R, order, coeffs)


def test_mul_identity_and_difference_of_squares():
    f = random_series(5, seed=1)
    assert series_mul(TSeries.one(R, 5), f) == f
    a = TSeries.from_coeffs(R, 3, [1, 1])
    b = TSeries.from_coeffs(R, 3, [1, -1])
    assert series_mul(a, b) == TSeries.from_coeffs(R, 3, [1, 0, -1])


def test_mul_commutative_associative_distributive():
    f, g, h = (random_series(6, seed=s) for s in (2, 3, 4))
    assert series_mul(f, g) == series_mul(g, f)
    assert series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h))
    assert series_mul(f, g + h) == series_mul(f, g) + series_mul(f, h)


def test_mul_rejects_mismatched_orders_and_rings():
    with pytest.raises(UsageError):
        series_mul(TSeries.one(R, 3), TSeries.one(R, 4))
    other = make_ring(("u",))
    with pytest.raises(UsageError):
        series_mul(TSeries.one(R, 3), TSeries.one(other, 3))


def test_log_of_one_plus_t():
    f = TSeries.from_coeffs(R, 3, [1, 1])
    assert series_log(f) == TSeries.from_coeffs(R, 3, [0, 1, QQ(-1, 2), QQ(1, 3)])
    assert series_log(TSeries.one(R, 4)).is_zero()


def test_exp_log_inverse():
    f = random_series(6, unit=True, seed=5)
    assert series_exp(series_log(f)) == f


def test_log_requires_unit_constant_term():
    with pytest.raises(DomainError):
        series_log(TSeries.from_coeffs(R, 2, [2, 1]))


def test_inverse():
    f = random_series(5, seed=6)
    f = TSeries.from_coeffs(R, 5, [3] + list(f.coeffs[1:]))
    assert series_mul(f, series_inverse(f)) == TSeries.one(R, 5)


def test_pderiv():
    f = TSeries.from_coeffs(R, 2, [p1 ** 2])
    assert pderiv(f, "p1").coeff(0) == 2 * p1
    assert pderiv(TSeries.from_coeffs(R, 2, [p1]), "p2").is_zero()
    g = random_series(4, seed=7)
    assert pderiv(pderiv(g, "u"), "z") == pderiv(pderiv(g, "z"), "u")
    with pytest.raises(UsageError):
        pderiv(g, "q7")


def test_extract():
    f = TSeries.from_coeffs(R, 2, [1, 3 * u])
    assert extract(f, 1, {"u": 1}) == 3
    assert extract(f, 2, {"u": 1}) == 0
    g = random_series(2, seed=8)
    assert extract(f + g, 1, {"u": 1}) == extract(f, 1, {"u": 1}) + extract(g, 1, {"u": 1})
    with pytest.raises(TruncationError):
        extract(f, 3, {})
    with pytest.raises(TruncationError):
        f.coeff(5)


def test_rational_formatting():
    assert format_rat(QQ(10)) == "10"
    assert format_rat(QQ(-3, 6)) == "-1/2"
    assert parse_rat("-1/2") == QQ(-1, 2)
    assert format_poly(5 * u * z + 2 * u ** 2) == "2*u^2 + 5*u*z"
    with pytest.raises(UsageError):
        parse_rat("1/0")


def test_parse_poly_inverts_format():
    p = u ** 2 * QQ(3, 2) - u * z + 7
    assert parse_poly(format_poly(p), R) == p
    assert parse_poly("-u", R) == -u
    assert parse_poly("0", R) == R.zero
    with pytest.raises(UsageError):
        parse_poly("u**2", R)


def test_compose_with_exponential():
    from math import factorial

    g = random_series(5, seed=4)
    g = TSeries(R, (R.zero,) + g.coeffs[1:])
    exp_t = TSeries.from_coeffs(R, 5, [QQ(1, factorial(k)) for k in range(6)])
    assert series_compose(exp_t, g) == series_exp(g)
    with pytest.raises(DomainError):
        series_compose(exp_t, TSeries.one(R, 5))
