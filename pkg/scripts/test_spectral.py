import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from itertools import product as cartesian

import pytest
from sympy.polys.domains import QQ

from algebra.series import TSeries, gen, poly_coeff, var_names
from oracle.constellations import count_constellations
from partitions.partition import partitions_of
from spectral.curve import cylinder_W02, disc_W01, solve_Z, x_of_z
from spectral.slices import bms_formula, bms_rooted, path_series
from spectral.system import ABSystem, solve_AB
from tau.builders import build_tau_G
from tau.genus import genus_free_energy, nabla
from tau.weights import WeightG
from utils.errors import DomainError, TruncationError, UsageError


def solved(m: int, T: int, **kwargs) -> ABSystem:
    return solve_AB(ABSystem.create(m, **kwargs), T)


def terms(series: TSeries, n: int, rename=None):
    """[t^n] indexado por nomes, para comparar séries de anéis diferentes"""
    names = var_names(series.ring)
    rename = rename or {}
    out = {}
    for monom, c in series.coeff(n).items():
        key = tuple(sorted((rename.get(names[i], names[i]), e) for i, e in enumerate(monom) if e))
        out[key] = c
    return out


def motzkin_paths(length: int) -> int:
    count = 0
    for steps in cartesian((-1, 0, 1), repeat=length):
        height, ok = 0, True
        for s in steps:
            height += s
            if height < 0:
                ok = False
                break
        if ok and height == 0:
            count += 1
    return count


# --- sistema A/B ---

def test_leading_order():
    sys_ = solved(2, 2, D1=2, D2=2)
    R, L = sys_.R, sys_.lring
    u0, u1 = gen(R, "u0"), gen(R, "u1")
    p1, p2 = gen(R, "p1"), gen(R, "p2")
    z_inv = L.power("z", -1)
    assert sys_.A[0].coeff(0) == u0
    assert sys_.A[1].coeff(0) == u1
    assert sys_.B[0].coeff(0) == R.one + p1 * u1 * z_inv + p2 * u0 * u1 ** 2 * z_inv ** 2
    assert sys_.B[1].coeff(0) == R.one + p1 * u0 * z_inv + p2 * u0 ** 2 * u1 * z_inv ** 2


def test_no_faces_keeps_B_trivial():
    sys_ = solved(2, 4, D2=2, p={})
    for c in sys_.colors:
        assert sys_.B[c] == TSeries.one(sys_.R, 4)


def test_bipartite_q1_only():
    sys_ = solved(2, 3, u=(1, 1), p={}, q={1: 1})
    R, z = sys_.R, gen(sys_.R, "z")
    expected = TSeries.from_coeffs(R, 3, [1, z])
    assert sys_.A[0] == expected
    assert sys_.A[1] == expected


def test_H_independent_of_color():
    sys_ = solved(2, 3, D1=2, D2=2)
    assert sys_.H(0) == sys_.H(1)


@pytest.mark.slow
def test_H_independent_of_color_order_four():
    sys_ = solved(2, 4, D1=2, D2=2)
    assert sys_.H(0) == sys_.H(1)


def test_H_independent_with_denominator_color():
    sys_ = solved(1, 3, s=1, D1=2, D2=2, u=(2, 3))
    assert sys_.H(0) == sys_.H(1)


def test_H_requires_solution():
    with pytest.raises(UsageError):
        ABSystem.create(2).H(0)


# --- Z(x) ---

def test_Z_without_weights():
    sys_ = solved(2, 3, p={}, q={})
    R = sys_.R
    expected = TSeries.constant(R, 3, gen(R, "u0") * gen(R, "u1") * gen(R, "x_inv"))
    assert solve_Z(sys_, 3) == expected


def test_Z_leading_term_with_denominator_color():
    sys_ = solved(1, 2, s=1, u=("a", "b"))
    R = sys_.R
    Zx = solve_Z(sys_, 2)
    assert Zx.coeff(0) == gen(R, "a") * gen(R, "b_inv") * gen(R, "x_inv")
    for c in Zx.coeffs:
        assert all(sys_.lring.degree(m, "x") < 0 for m in c.keys())


@pytest.mark.parametrize("m, kwargs", [
    (2, {"D1": 2, "D2": 2}),
    (1, {"s": 1, "u": (2, 3)}),
])
def test_X_of_Z_is_identity(m, kwargs):
    sys_ = solved(m, 2, **kwargs)
    Zx = solve_Z(sys_, 2)
    assert x_of_z(sys_, Zx) == TSeries.constant(sys_.R, 2, gen(sys_.R, "x"))


def test_Z_counts_motzkin_excursions():
    sys_ = solved(1, 5, u=(1,), D2=2, p={}, q={1: 1, 2: 1})
    Zx = solve_Z(sys_, 5)
    x_inv = gen(sys_.R, "x_inv")
    for n in range(1, 7):
        assert Zx.coeff(n - 1) == x_inv ** n * motzkin_paths(n - 1)


def test_Z_order_checks():
    sys_ = ABSystem.create(2)
    with pytest.raises(UsageError):
        solve_Z(sys_, 1)
    with pytest.raises(TruncationError):
        solve_Z(solve_AB(sys_, 1), 2)


# --- disco ---

def test_disc_vanishes_without_vertex_weights():
    sys_ = solved(2, 3, D1=2, q={})
    assert disc_W01(sys_, 3).is_zero()


@pytest.mark.parametrize("m, values", [(2, [1, 2, 5, 14]), (3, [1, 3, 12, 55])])
def test_disc_matches_closed_formula(m, values):
    sys_ = solved(m, 4, u=(1,) * m, p={}, q={1: 1})
    W = disc_W01(sys_, 4)
    x_inv = gen(sys_.R, "x_inv")
    assert W.coeff(0) == sys_.R.zero
    for n in range(1, 5):
        assert bms_formula(m, {n: 1}) == values[n - 1]
        assert W.coeff(n) == x_inv ** (n + 1) * values[n - 1]


def test_disc_matches_rooted_free_energy():
    T = 3

    def builder(T, graded=False):
        return build_tau_G(WeightG(u=(2, 3)), T, T, 0, q_values={1: 1}, graded=graded)

    rooted = nabla(genus_free_energy(builder, 0, T), "x")
    sys_ = solved(2, T, u=(2, 3), D1=T, q={1: 1})
    W = disc_W01(sys_, T)
    for n in range(T + 1):
        assert terms(W, n) == terms(rooted, n)


def test_disc_first_order_by_hand():
    sys_ = solved(2, 1, u=(2, 3), q={1: 1})
    W = disc_W01(sys_, 1)
    assert W.coeff(0) == sys_.R.zero
    assert W.coeff(1) == gen(sys_.R, "x_inv") ** 2 * 6


# --- cilindro ---

def test_cylinder_matches_free_energy():
    T = 3

    def builder(T, graded=False):
        return build_tau_G(WeightG(u=(2, 3)), T, T, 0, q_values={1: 1}, graded=graded)

    rooted = nabla(nabla(genus_free_energy(builder, 0, T), "x1"), "x2")
    sys_ = solved(2, T, u=(2, 3), D1=T, q={1: 1})
    W = cylinder_W02(sys_, T)
    for n in range(T + 1):
        assert terms(W, n) == terms(rooted, n)


def test_cylinder_second_order_by_hand():
    sys_ = solved(2, 2, u=(2, 3), p={}, q={1: 1})
    W = cylinder_W02(sys_, 2)
    y1, y2 = gen(sys_.R, "x1_inv"), gen(sys_.R, "x2_inv")
    assert W.coeff(1) == sys_.R.zero
    assert W.coeff(2) == y1 ** 2 * y2 ** 2 * 6


def test_cylinder_is_symmetric():
    sys_ = solved(2, 3, D1=2, D2=2)
    W = cylinder_W02(sys_, 3)
    swap = {"x1_inv": "x2_inv", "x2_inv": "x1_inv"}
    for n in range(4):
        assert terms(W, n) == terms(W, n, rename=swap)


def test_cylinder_vanishes_without_vertex_weights():
    sys_ = solved(2, 3, D1=2, q={})
    assert cylinder_W02(sys_, 3).is_zero()


# --- caminhos ---

def enumerated_paths(sys_: ABSystem, c: int, n: int, k: int, black: bool) -> TSeries:
    """Soma direta sobre as sequências de passos m·j - 1"""
    L, m = sys_.lring, sys_.m
    source = sys_.B if black else sys_.A
    bound = sys_.D1 if black else sys_.D2
    total = TSeries.zero(sys_.R, sys_.order)
    for steps in cartesian(range(bound + 1), repeat=n):
        if sum(m * j - 1 for j in steps) != k:
            continue
        factors = []
        for r, j in enumerate(steps, start=1):
            factors.append(L.components(source[(c - r + 1) % m], "z", -j if black else j))
        total = total + L.prod(factors, sys_.order)
    return total


def test_empty_path():
    sys_ = solved(2, 2, u=(2, 3))
    assert path_series(0, 0, 0, sys_) == TSeries.one(sys_.R, 2)
    assert path_series(1, 0, 0, sys_, black=True) == TSeries.one(sys_.R, 2)


@pytest.mark.parametrize("black", [False, True])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_path_series_matches_enumeration(n, black):
    sys_ = solved(2, 3, u=(2, 3), D1=2, D2=2)
    for c in range(2):
        for k in range(-n, 3 * n + 1):
            assert path_series(c, n, k, sys_, black) == enumerated_paths(sys_, c, n, k, black)


@pytest.mark.slow
@pytest.mark.parametrize("black", [False, True])
def test_path_series_matches_enumeration_four_steps(black):
    sys_ = solved(3, 3, u=(1, 2, 3), D1=2, D2=2)
    for c in range(3):
        for k in range(-4, 9):
            assert path_series(c, 4, k, sys_, black) == enumerated_paths(sys_, c, 4, k, black)


@pytest.mark.parametrize("m, u", [(2, (2, 3)), (3, (1, 2, 3))])
def test_elementary_slice_recursion(m, u):
    T = 3
    sys_ = solved(m, T, u=u, D1=2, D2=2)
    L, R = sys_.lring, sys_.R
    for c in range(m):
        for k in range(sys_.D2 + 1):
            expected = TSeries.constant(R, T, sys_.vertex(c) if k == 0 else R.zero)
            for s, qs in sys_.q_weights().items():
                path = path_series((c - 1) % m, m * s - 1, 1 - m * k, sys_, black=True)
                expected = expected + path.shift(s).scale(qs)
            assert L.components(sys_.A[c], "z", k) == expected
        for k in range(1, sys_.D1 + 1):
            expected = TSeries.zero(R, T)
            for s, ps in sys_.p_weights().items():
                expected = expected + path_series((c - 1) % m, m * s - 1, 1 - m * k, sys_).scale(ps)
            assert L.components(sys_.B[c], "z", -k) == expected


def test_path_series_errors():
    sys_ = solved(2, 1)
    with pytest.raises(UsageError):
        path_series(2, 1, 0, sys_)
    with pytest.raises(UsageError):
        path_series(0, -1, 0, sys_)
    with pytest.raises(UsageError):
        path_series(0, 1, 0, solved(1, 1, s=1, u=(2, 3)))


# --- fórmula fechada ---

@pytest.mark.parametrize("m, degrees, expected", [
    (3, {1: 1}, 1),
    (2, {2: 1}, 2),
    (2, {1: 1}, 1),
    (3, {1: 2}, 3),
    (3, {2: 1}, 3),
    (2, {5: 1}, 42),
])
def test_bms_values(m, degrees, expected):
    assert bms_formula(m, degrees) == expected


@pytest.mark.parametrize("m, degrees, labeled, rooted", [
    (2, {1: 1, 2: 1}, 4, 6),
    (2, {1: 3}, 2, 1),
    (2, {3: 1}, 5, 5),
    (3, {1: 2}, 3, 3),
])
def test_bms_rooted_conversion(m, degrees, labeled, rooted):
    assert bms_formula(m, degrees) == labeled
    assert bms_rooted(m, degrees) == rooted


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_bms_matches_planar_oracle(m, n):
    table = count_constellations(m, n, marks=("genus", "face_degrees"))
    planar = table.get(n, 0)
    for lam in partitions_of(n):
        degrees = dict(lam.multiplicities())
        monomial = {f"p{k}": d for k, d in degrees.items()}
        assert poly_coeff(planar, monomial) == QQ(bms_rooted(m, degrees))


@pytest.mark.slow
def test_bms_matches_planar_oracle_size_four():
    table = count_constellations(3, 4, marks=("genus", "face_degrees"))
    planar = table.get(4, 0)
    for lam in partitions_of(4):
        degrees = dict(lam.multiplicities())
        assert poly_coeff(planar, {f"p{k}": d for k, d in degrees.items()}) == QQ(bms_rooted(3, degrees))


@pytest.mark.parametrize("m, degrees", [(1, {1: 1}), (2, {}), (2, {0: 1}), (2, {1: -1}), (2, {1: 0})])
def test_bms_rejects_bad_data(m, degrees):
    with pytest.raises(UsageError):
        bms_formula(m, degrees)


# --- erros do sistema ---

@pytest.mark.parametrize("kwargs", [
    {"m": 0},
    {"m": 2, "s": -1},
    {"m": 2, "D2": 0},
    {"m": 2, "u": (1,)},
    {"m": 2, "p": {3: 1}},
    {"m": 2, "q": {0: 1}},
    {"m": 2, "u": ("a", "a")},
])
def test_create_rejects_bad_parameters(kwargs):
    with pytest.raises(UsageError):
        ABSystem.create(**kwargs)


def test_vanishing_denominator_weight():
    with pytest.raises(DomainError):
        solve_AB(ABSystem.create(1, s=1, u=(2, 0)), 2)


def test_negative_order():
    with pytest.raises(UsageError):
        solve_AB(ABSystem.create(2), -1)
