import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest
from sympy.polys.domains import QQ

from algebra.series import TSeries, extract, gen, make_ring, power_sums, series_log
from partitions.characters import to_poly
from partitions.jack import zonal_in_p
from partitions.partition import Partition, contents, hook_product, partitions_of
from tau.builders import (build_monotone_schur_form, build_tau_G, build_tau_family, weighted_hurwitz)
from tau.genus import genus_free_energy, nabla, rooted_counts
from tau.weights import WeightG
from utils.errors import DomainError, UsageError

P = Partition


def at_one(series: TSeries, n: int):
    """[t^n] com todas as variáveis em 1"""
    values = {str(s): 1 for s in series.ring.symbols}
    return extract(series.substitute(values), n, {})


def test_tau_constant_term():
    tau = build_tau_family("maps", 4)
    assert tau.series.coeff(0) == tau.ring.one


def test_trivial_weight_gives_cauchy_log():
    tau = build_tau_G(WeightG(), 4, 4, 4)
    log_tau = series_log(tau.series)
    R = tau.ring
    for k in range(1, 5):
        expected = gen(R, f"p{k}") * gen(R, f"q{k}") * QQ(1, k)
        assert log_tau.coeff(k) == expected


def test_single_constellation_is_exponential():
    tau = build_tau_G(WeightG(u=("u",)), 5, 5, 0, q_values={1: 1})
    log_tau = series_log(tau.series)
    R = tau.ring
    u = gen(R, "u")
    for k in range(1, 6):
        assert log_tau.coeff(k) == u * gen(R, f"p{k}") * QQ(1, k)


def test_maps_one_edge():
    tau = build_tau_family("maps", 2)
    rooted = rooted_counts(series_log(tau.series))
    R = tau.ring
    u, p1, p2 = gen(R, "u"), gen(R, "p1"), gen(R, "p2")
    assert rooted.coeff(1) == R.zero
    assert rooted.coeff(2) == u * p1 ** 2 + u ** 2 * p2


def test_maps_rooted_totals():
    tau = build_tau_family("maps", 6)
    rooted = rooted_counts(series_log(tau.series))
    # 2, 10, 74 mapas enraizados com 1, 2, 3 arestas (todos os gêneros)
    assert at_one(rooted, 2) == 2
    assert at_one(rooted, 4) == 10
    assert at_one(rooted, 6) == 74


def test_maps_genus_split():
    builder = lambda T, graded=False: build_tau_family("maps", T, graded=graded)
    planar = rooted_counts(genus_free_energy(builder, 0, 6))
    torus = rooted_counts(genus_free_energy(builder, 2, 6))
    assert [at_one(planar, n) for n in (2, 4, 6)] == [2, 9, 54]
    assert [at_one(torus, n) for n in (2, 4, 6)] == [0, 1, 20]


def test_genus_reconstruction():
    T = 4
    builder = lambda T, graded=False: build_tau_family("maps", T, graded=graded)
    total = None
    for two_g in range(0, 2 * T + 1):
        F = genus_free_energy(builder, two_g, T)
        total = F if total is None else total + F
    assert total == series_log(build_tau_family("maps", T).series)


def test_genus_bound():
    builder = lambda T, graded=False: build_tau_family("maps", T, graded=graded)
    # com 2 arestas o gênero não passa de 1
    assert genus_free_energy(builder, 4, 4).is_zero()


def test_bipartite_planar():
    builder = lambda T, graded=False: build_tau_family("bip", T, graded=graded)
    F0 = genus_free_energy(builder, 0, 3)
    R = F0.ring
    assert F0.coeff(1) == gen(R, "u") * gen(R, "v") * gen(R, "p1")
    rooted = rooted_counts(F0)
    assert [at_one(rooted, n) for n in (1, 2, 3)] == [1, 3, 12]


def test_zonal_maps_one_edge():
    tau = build_tau_family("zonal_maps", 2)
    log_tau = series_log(tau.series)
    R = tau.ring
    u, p1, p2 = gen(R, "u"), gen(R, "p1"), gen(R, "p2")
    assert log_tau.coeff(2) == (u * p1 ** 2 + (u ** 2 + u) * p2) * QQ(1, 4)
    # laço, laço torcido e ponte
    assert at_one(rooted_counts(log_tau, non_oriented=True), 2) == 3


def test_b_deformed_at_one_is_zonal():
    T = 3
    G = WeightG(u=("u",))
    tau = build_tau_family("b_deformed", T, G=G, b=1)
    R = tau.ring
    u = gen(R, "u")
    for n in range(T + 1):
        expected = R.zero
        for lam in partitions_of(n):
            z = zonal_in_p(lam)
            weight = R.one
            for c in contents(lam, 1):
                weight *= u + c
            expected += to_poly(z, R, "p") * to_poly(z, R, "q") * weight * QQ(1, hook_product(lam.double()))
        assert tau.series.coeff(n) == expected


def test_zonal_monotone_schur_form():
    T = 4
    zonal = build_tau_family("zonal_monotone", T, run_order=3)
    schur = build_monotone_schur_form(T, run_order=3)
    assert zonal.series == schur


def test_weighted_hurwitz_small():
    G = WeightG(u=("u",))
    assert weighted_hurwitz(G, P([2]), P([2]), [0], [], 0) == 1
    assert weighted_hurwitz(G, P([2]), P([2]), [1], [], 0) == 0
    assert weighted_hurwitz(G, P([1]), P([1]), [0], [], 0) == 1


def test_weighted_hurwitz_monotone_sign():
    G = WeightG(v=("y",))
    assert weighted_hurwitz(G, P([1, 1]), P([1, 1]), [], [2], 0) == 1
    assert weighted_hurwitz(G, P([1, 1]), P([1, 1]), [], [1], 0) == 0
    assert weighted_hurwitz(G, P([2]), P([1, 1]), [], [1], 0) == -1


def test_weighted_hurwitz_errors():
    G = WeightG(u=("u",))
    with pytest.raises(UsageError):
        weighted_hurwitz(G, P([2]), P([1]), [0], [], 0)
    with pytest.raises(UsageError):
        weighted_hurwitz(G, P([2]), P([2]), [], [], 0)


# --- G(c) ---

def test_weight_at_content_zero():
    R = make_ring(("y", "w"))
    y, w = gen(R, "y"), gen(R, "w")
    assert WeightG(v=("y",)).evaluate(QQ(0), R, 3) == y
    assert WeightG(w="w").evaluate(QQ(0), R, 3) == R.one
    assert WeightG(v=("y",)).evaluate(QQ(1), R, 2) == y - y ** 2 + y ** 3
    assert WeightG(w="w").evaluate(QQ(2), R, 2) == 1 + 2 * w + 2 * w ** 2


def test_rational_w_needs_grading():
    R = make_ring(("e",))
    e = gen(R, "e")
    with pytest.raises(DomainError):
        WeightG(w=3).evaluate(QQ(1), R, 3)
    assert WeightG(w=3).evaluate(QQ(1), R, 2, scale=e) == 1 + e * QQ(1, 3) + e ** 2 * QQ(1, 18)


@pytest.mark.parametrize("family", ["monotone", "zonal_monotone"])
def test_monotone_families_build(family):
    tau = build_tau_family(family, 3)
    assert tau.series.coeff(0) == tau.ring.one
    assert tau.series.coeff(1) != 0


def test_rational_pole_detected():
    with pytest.raises(DomainError):
        build_tau_G(WeightG(v=(1,)), 3, 3, 3)


def test_unknown_family():
    with pytest.raises(UsageError):
        build_tau_family("triangles", 2)


def test_nabla_on_p1():
    R = make_ring(power_sums("p", 2))
    F = TSeries.from_coeffs(R, 1, {1: gen(R, "p1")})
    out = nabla(F, "x")
    assert out.coeff(1) == gen(out.ring, "x_inv") ** 2
    with pytest.raises(UsageError):
        nabla(out, "x")


def test_nabla_commutes():
    F = series_log(build_tau_family("maps", 4).series)
    xy = nabla(nabla(F, "x"), "y")
    yx = nabla(nabla(F, "y"), "x").set_ring(xy.ring)
    assert xy == yx
