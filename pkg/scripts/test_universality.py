import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import math

import pytest
import sympy

from algebra.series import TSeries
from meanders.arches import catalan
from recurrences.orientable import planar_maps_closed_form
from universality.critical import critical_point, discriminant_check, eliminate_f, exponent_estimate
from universality.stuffed import (disc_weights, on_weights, rooted_total, stuffed_catalytic_check,
                                  stuffed_Mk)
from universality.system import (AlgSystem, colored_model_counts, colored_series, maps_quadratic_residual,
                                 nonseparable_composition_check, nonseparable_series, perturb)
from utils.errors import UsageError


def _values(series):
    return [c.LC if c else 0 for c in series.coeffs]


# --- sistema algébrico ---

def test_first_coefficients():
    assert _values(colored_series(1, 3)) == [1, 2, 9, 54]
    assert _values(colored_series(2, 2)) == [1, 4, 34]
    assert colored_series(3, 0).coeff(0) == 1


def test_single_set_counts_planar_maps():
    assert maps_quadratic_residual(colored_series(1, 20)).is_zero()
    assert _values(colored_series(1, 8)) == [planar_maps_closed_form(n) for n in range(9)]


@pytest.mark.parametrize("N", [1, 2, 3])
def test_coefficients_are_nonnegative(N):
    assert all(c >= 0 for c in _values(colored_series(N, 12)))


def test_symbolic_parameter():
    f = colored_series(None, 2)
    N = f.ring.gens[0]
    assert f.coeff(1) == 2 * N
    assert f.coeff(2) == 8 * N ** 2 + N


def test_nonseparable_maps():
    assert _values(nonseparable_series(3)) == [1, 2, 1, 2]
    assert nonseparable_composition_check(15)
    assert not nonseparable_composition_check(15, perturb(nonseparable_series(15), 3))


def test_rejects_bad_parameters():
    with pytest.raises(UsageError):
        AlgSystem("colored", 0)
    with pytest.raises(UsageError):
        AlgSystem("cubic")
    with pytest.raises(UsageError):
        critical_point(-1)
    with pytest.raises(UsageError):
        colored_model_counts(4, 1)


# --- contagem direta ---

def test_colored_model_matches_series():
    assert colored_model_counts(1, 3) == [1, 2, 9, 54]
    assert colored_model_counts(2, 2) == [1, 4, 34]
    assert colored_model_counts(3, 1) == [1, 6]


@pytest.mark.slow
def test_colored_model_three_sets():
    assert colored_model_counts(3, 2, threads=2) == _values(colored_series(3, 2))


# --- ponto crítico ---

def test_rational_critical_points():
    maps = critical_point(1)
    assert maps.t_c == sympy.Rational(1, 12)
    assert maps.is_rational
    assert maps.phase == "maps"
    assert discriminant_check(maps)
    baby = critical_point(sympy.Rational(9, 5))
    assert baby.t_c == sympy.Rational(25, 432)
    assert baby.phase == "baby universes"


@pytest.mark.parametrize("N", [sympy.Rational(1, 2), 1, sympy.Rational(3, 2)])
def test_maps_phase_formula(N):
    assert critical_point(N).t_c == sympy.Rational(4, 3) / (N + 3) ** 2


def test_tree_phase_is_algebraic():
    point = critical_point(4)
    assert point.phase == "trees"
    assert point.minimal_polynomial.degree() == 2
    assert math.isclose(float(point.t_c), (4 + math.sqrt(12)) / 256, rel_tol=1e-12)
    lo, hi = point.interval
    assert float(lo) <= float(point.t_c) <= float(hi)
    assert discriminant_check(point)


def test_eliminated_polynomial_vanishes_on_series():
    poly = eliminate_f(1)
    f, t = poly.gens
    coeffs = _values(colored_series(1, 6))
    series = sum(sympy.Integer(int(c)) * t ** k for k, c in enumerate(coeffs))
    residual = sympy.expand(poly.as_expr().subs(f, series))
    assert all(residual.coeff(t, k) == 0 for k in range(7))


def test_exponent_needs_coefficients():
    with pytest.raises(UsageError):
        exponent_estimate([1, 0], 0.1)


@pytest.mark.slow
@pytest.mark.parametrize("N,expected", [(1, -2.5), (sympy.Rational(9, 5), -5 / 3)])
def test_exponent_estimate(N, expected):
    point = critical_point(N, estimate=True, T=400)
    assert abs(point.exponent - expected) < 0.1


# --- mapas recheados ---

def test_no_elements_gives_catalan():
    Ms = stuffed_Mk({}, 5)
    R = Ms[0].ring
    for j in range(6):
        assert Ms[2 * j] == TSeries.from_coeffs(R, 5, {j: catalan(j)})
    assert all(Ms[2 * j + 1].is_zero() for j in range(5))


def test_disc_elements_give_planar_maps():
    Ms = stuffed_Mk(disc_weights(8), 4)
    assert _values(rooted_total(Ms)) == [planar_maps_closed_form(n) for n in range(5)]
    assert stuffed_catalytic_check(disc_weights(8), Ms)


def test_catalytic_check_detects_perturbation():
    weights = disc_weights(6)
    Ms = stuffed_Mk(weights, 3)
    broken = list(Ms)
    broken[2] = perturb(Ms[2], 2)
    assert not stuffed_catalytic_check(weights, broken)


def test_loop_model_reduces_to_discs():
    T = 3
    weights = {**disc_weights(2 * T), **on_weights(2 * T)}
    Ms = stuffed_Mk(weights, T)
    assert stuffed_catalytic_check(weights, Ms)
    plain = stuffed_Mk(disc_weights(2 * T), T)
    assert [m.substitute({"n": 0}) for m in Ms] == plain


def test_stuffed_rejects_bad_elements():
    with pytest.raises(UsageError):
        stuffed_Mk({(0,): 1}, 2)
    with pytest.raises(UsageError):
        stuffed_Mk(disc_weights(4), 2, s=3)
    with pytest.raises(UsageError):
        stuffed_Mk({}, -1)
