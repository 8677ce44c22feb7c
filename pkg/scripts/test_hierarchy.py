import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import random

import pytest
from sympy import Matrix, Rational
from sympy.polys.domains import QQ

from algebra.series import TSeries, gen, make_ring, power_sums, series_log
from hierarchy.bkp import ChargedSeries, bkp_residuals, fixed_charge_residual
from hierarchy.kp import kp_residual
from hierarchy.monotone import monotone_evolution_residual
from hierarchy.pfaffian import (SkewMatrix, monotone_entry, pfaffian, pfaffian_schur_series,
                                schur_pfaffian_matrix, verify_monotone_pfaffian)
from hierarchy.virasoro import virasoro_residual
from partitions.partition import Partition, partitions_up_to
from tau.builders import build_tau_G, build_tau_family
from tau.weights import WeightG
from utils.errors import UsageError

P = Partition


def doubled(series: TSeries) -> TSeries:
    """p_k -> 2 p_k"""
    R = series.ring
    names = [str(s) for s in R.symbols if str(s).startswith("p")]
    return series.substitute({n: gen(R, n) * 2 for n in names})


def rational(x):
    return Rational(int(x.numerator), int(x.denominator))


@pytest.fixture(scope="module")
def zonal_maps_5():
    return doubled(build_tau_family("zonal_maps", 5).series)


# --- KP ---

def test_kp_zero():
    R = make_ring(power_sums("p", 4))
    assert kp_residual(TSeries.zero(R, 4)).is_zero()


def test_kp_maps():
    F = series_log(build_tau_family("maps", 6).series)
    assert kp_residual(F).is_zero()


def test_kp_bipartite():
    F = series_log(build_tau_family("bip", 6).series)
    assert kp_residual(F).is_zero()


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_kp_rational_weight(seed):
    rng = random.Random(seed)
    # v meio-inteiro: v + c nunca se anula num conteúdo
    G = WeightG(u=(QQ(rng.randint(-5, 5), rng.randint(1, 4)),), v=(QQ(2 * rng.randint(-4, 4) + 1, 2),))
    tau = build_tau_G(G, 6, 6, 0, q_values={1: 1})
    assert kp_residual(series_log(tau.series)).is_zero()


def test_kp_detects_non_tau():
    R = make_ring(power_sums("p", 4))
    F = TSeries.from_coeffs(R, 3, {2: gen(R, "p1") * gen(R, "p3")})
    assert not kp_residual(F).is_zero()


def test_kp_needs_p4():
    R = make_ring(power_sums("p", 3))
    with pytest.raises(UsageError):
        kp_residual(TSeries.zero(R, 3))


# --- BKP ---

def test_bkp_trivial():
    R = make_ring(power_sums("p", 5))
    tau = ChargedSeries.constant(TSeries.one(R, 5))
    assert bkp_residuals(tau, 0, 1).is_zero()


def test_bkp_orientable_reduces_to_kp():
    tau = build_tau_family("bip", 5).series
    residual = bkp_residuals(ChargedSeries.constant(tau), 0, 1)
    assert residual == kp_residual(series_log(tau))
    assert residual.is_zero()


@pytest.mark.parametrize("order", [1, 2, 3])
def test_bkp_non_oriented_maps(zonal_maps_5, order):
    R = zonal_maps_5.ring
    u = gen(R, "u")
    S2 = TSeries.from_coeffs(R, 5, {4: u * (u - 1)})
    tau = ChargedSeries.from_symbolic(zonal_maps_5, "u")
    assert bkp_residuals(tau, S2, order).is_zero()


def test_bkp_wrong_normalisation_fails(zonal_maps_5):
    R = zonal_maps_5.ring
    u = gen(R, "u")
    S2 = TSeries.from_coeffs(R, 5, {4: u * u})
    tau = ChargedSeries.from_symbolic(zonal_maps_5, "u")
    assert not bkp_residuals(tau, S2, 1).is_zero()


def test_bkp_missing_shift(zonal_maps_5):
    tau = ChargedSeries({0: zonal_maps_5, 1: zonal_maps_5})
    with pytest.raises(UsageError):
        bkp_residuals(tau, 0, 1)
    with pytest.raises(UsageError):
        bkp_residuals(ChargedSeries.constant(zonal_maps_5), 0, 4)


def test_fixed_charge_zero():
    R = make_ring(power_sums("p", 5))
    assert fixed_charge_residual(TSeries.zero(R, 7)).is_zero()
    with pytest.raises(UsageError):
        fixed_charge_residual(TSeries.zero(R, 6))


@pytest.mark.slow
def test_fixed_charge_non_oriented_maps():
    F = series_log(doubled(build_tau_family("zonal_maps", 8).series))
    residual = fixed_charge_residual(F)
    assert residual.order == 1
    assert residual.is_zero()


def test_fixed_charge_detects_non_tau():
    R = make_ring(power_sums("p", 5))
    F = TSeries.from_coeffs(R, 10, {3: gen(R, "p1") ** 3})
    residual = fixed_charge_residual(F)
    assert residual.coeff(3) == gen(R, "p1") ** 3 * 23328


# --- Virasoro ---

@pytest.mark.parametrize("i", [-1, 0, 1, 2, 3, 4])
def test_virasoro_maps(i):
    tau = build_tau_family("maps", 5).series
    assert virasoro_residual("maps", i, tau).is_zero()


@pytest.mark.parametrize("i", [-1, 0, 1, 2, 3, 4])
def test_virasoro_zonal_maps(i):
    tau = build_tau_family("zonal_maps", 5).series
    assert virasoro_residual("zonal_maps", i, tau).is_zero()


@pytest.mark.parametrize("family", ["bip", "zonal_bip"])
@pytest.mark.parametrize("i", [0, 1, 2, 3, 4])
def test_virasoro_bipartite(family, i):
    tau = build_tau_family(family, 5).series
    assert virasoro_residual(family, i, tau).is_zero()


def test_virasoro_detects_non_tau():
    R = make_ring(("u",) + power_sums("p", 2))
    tau = TSeries.from_coeffs(R, 2, {0: 1, 1: gen(R, "p1")})
    assert virasoro_residual("maps", 0, tau).coeff(0) == -gen(R, "u") ** 2


def test_virasoro_index_range():
    tau = build_tau_family("maps", 4).series
    with pytest.raises(UsageError):
        virasoro_residual("maps", -2, tau)
    with pytest.raises(UsageError):
        virasoro_residual("bip", -1, build_tau_family("bip", 4).series)
    with pytest.raises(UsageError):
        virasoro_residual("triangulations", 0, tau)


# --- evolução monótona ---

def test_monotone_evolution_orientable():
    tau = build_tau_family("monotone", 5, run_order=3)
    assert monotone_evolution_residual(tau, 0).is_zero()


def test_monotone_evolution_zonal():
    tau = build_tau_family("zonal_monotone", 5, run_order=3)
    assert monotone_evolution_residual(tau, 1).is_zero()


def test_monotone_evolution_wrong_b():
    tau = build_tau_family("zonal_monotone", 4, run_order=2)
    assert not monotone_evolution_residual(tau, 0).is_zero()


# --- Pfaffianos ---

def test_pfaffian_2x2():
    R = make_ring(("a",))
    a = R.gens[0]
    assert pfaffian(SkewMatrix(((R.zero, a), (-a, R.zero)))) == a
    assert pfaffian(SkewMatrix(((0, QQ(3)), (QQ(-3), 0)))) == 3


def random_skew(rng, k):
    rows = [[QQ(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            x = QQ(rng.randint(-9, 9), rng.randint(1, 5))
            rows[i][j], rows[j][i] = x, -x
    return SkewMatrix(tuple(tuple(r) for r in rows))


def test_pfaffian_squared_is_determinant():
    rng = random.Random(7)
    for k in (2, 4, 6):
        A = random_skew(rng, k)
        pf = pfaffian(A)
        det = Matrix([[rational(x) for x in row] for row in A.rows]).det()
        assert rational(pf) ** 2 == det


def test_pfaffian_row_scaling():
    rng = random.Random(11)
    A = random_skew(rng, 4)
    c = QQ(5, 3)
    scaled = [list(r) for r in A.rows]
    for j in range(4):
        scaled[1][j] *= c
        scaled[j][1] *= c
    assert pfaffian(SkewMatrix(tuple(tuple(r) for r in scaled))) == c * pfaffian(A)


def test_pfaffian_errors():
    with pytest.raises(UsageError):
        SkewMatrix(((0, 1), (1, 0)))
    with pytest.raises(UsageError):
        pfaffian(SkewMatrix(((0, 1, 0), (-1, 0, 0), (0, 0, 0))))


def test_schur_pfaffian_identity():
    rng = random.Random(3)
    for n in range(1, 7):
        xs = [QQ(rng.randint(1, 20), rng.randint(1, 7)) for _ in range(n)]
        product = QQ(1)
        for i in range(n):
            for j in range(i + 1, n):
                product *= (xs[i] - xs[j]) / (xs[i] + xs[j])
        assert pfaffian(schur_pfaffian_matrix(xs)) == product


def test_monotone_entries():
    assert monotone_entry(0, -1) == 1
    assert monotone_entry(-1, 0) == -1
    assert monotone_entry(0, 0) == 0
    assert monotone_entry(2, 1) == QQ(1, 48)
    assert monotone_entry(1, 0) == QQ(1, 2)
    assert monotone_entry(-1, 2) == QQ(-1, 8)


def test_monotone_pfaffian_small():
    assert verify_monotone_pfaffian(P(), 2)
    assert verify_monotone_pfaffian(P([1]), 1)
    assert verify_monotone_pfaffian(P([1, 1]), 2)


def test_monotone_pfaffian_all_small():
    for lam in partitions_up_to(6):
        for n in range(max(len(lam), 1), 7):
            assert verify_monotone_pfaffian(lam, n), (lam, n)


def test_monotone_pfaffian_perturbed():
    def perturbed(i, j):
        value = monotone_entry(i, j)
        return value * 2 if {i, j} == {2, 1} else value

    assert not verify_monotone_pfaffian(P([1, 1]), 2, entry=perturbed)


def test_monotone_pfaffian_length():
    with pytest.raises(UsageError):
        verify_monotone_pfaffian(P([1, 1, 1]), 2)


def test_pfaffian_coefficients_rebuild_zonal_monotone():
    # u = 1/(2N) com N = 5: o peso 1/(u^{-1} + c) vira 1/(10 + c)
    N, T = 5, 5
    zonal = build_tau_G(WeightG(v=(2 * N,)), T, T, 0, q_values={1: 1}, b=1).series
    assert pfaffian_schur_series(N, T) == doubled(zonal)
