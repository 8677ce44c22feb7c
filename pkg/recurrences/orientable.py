# recurrences/orientable.py
"""Recorrências quadráticas para mapas orientáveis por número de arestas e gênero.

Todas seguem o mesmo esquema: um termo linear em n-1 ou n-2, um termo que sobe
o gênero e uma convolução sobre as decomposições (i, j) e (h, k). Os índices
de gênero são guardados como 2g.
"""
from math import comb, factorial
from typing import Dict, Iterator, Tuple

from sympy.polys.domains import QQ

from algebra.series import gen, make_ring
from recurrences.golden import load_initial_conditions
from recurrences.table import GenusTable, Key
from utils.errors import UsageError
from utils.logger import app_logger


def _lookup(values: Dict[Key, object], zero):
    def at(n: int, two_g: int):
        if n < -1 or two_g < 0:
            return zero
        return values.get((n, two_g), zero)
    return at


def _splits(total: int, lo: int = 0) -> Iterator[Tuple[int, int]]:
    for i in range(lo, total - lo + 1):
        yield i, total - i


def _even_splits(two_g: int) -> Iterator[Tuple[int, int]]:
    for h in range(0, two_g + 1, 2):
        yield h, two_g - h


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def gj_triangulations(nmax: int) -> GenusTable:
    """Triangulações enraizadas com n arestas (n múltiplo de 3) e gênero g.

    A recorrência anda no número k de pares de triângulos, com 3k arestas:
    (k+1) T(k,g) = 4k(3k-2)(3k-4) T(k-2,g-1) + 4 Σ (3i+2)(3j+2) T(i,h) T(j,h'),
    i + j = k - 2, h + h' = g, i, j >= -1.
    """
    values = load_initial_conditions("gj_triangulations")
    T = _lookup(values, QQ(0))
    start = max(k for k, _ in values) + 1
    for k in range(start, nmax // 3 + 1):
        for two_g in range(0, k + 2, 2):
            total = 4 * k * (3 * k - 2) * (3 * k - 4) * T(k - 2, two_g - 2)
            for i, j in _splits(k - 2, -1):
                for h, h2 in _even_splits(two_g):
                    total += 4 * (3 * i + 2) * (3 * j + 2) * T(i, h) * T(j, h2)
            if total:
                values[(k, two_g)] = total / (k + 1)
    table = GenusTable("gj_triangulations", params={"nmax": nmax})
    for (k, two_g), value in values.items():
        if k >= 1 and 3 * k <= nmax:
            table.set(3 * k, two_g, value)
    app_logger.info(f"gj_triangulations up to {nmax} edges: {len(table)} entries")
    return table


def cc_maps(nmax: int, u: str = "u") -> GenusTable:
    """m^n_g(u), mapas enraizados com u marcando vértices.

    (n+1) m^n_g = 2(1+u)(2n-1) m^{n-1}_g + (2n-3)(2n-2)(2n-1)/2 m^{n-2}_{g-1}
                  + 3 Σ (2i+1)(2j+1) m^i_h m^j_k
    """
    R = make_ring(("u",))
    x = gen(R, "u")
    values = load_initial_conditions("cc_maps", R)
    m = _lookup(values, R.zero)
    start = max(n for n, _ in values) + 1
    for n in range(start, nmax + 1):
        for two_g in range(0, n + 1, 2):
            total = 2 * (1 + x) * (2 * n - 1) * m(n - 1, two_g)
            total += m(n - 2, two_g - 2) * QQ((2 * n - 3) * (2 * n - 2) * (2 * n - 1), 2)
            for i, j in _splits(n - 2):
                for h, h2 in _even_splits(two_g):
                    total += 3 * (2 * i + 1) * (2 * j + 1) * m(i, h) * m(j, h2)
            if total:
                values[(n, two_g)] = total * QQ(1, n + 1)
    table = GenusTable("cc_maps", R, params={"nmax": nmax})
    for (n, two_g), value in values.items():
        if 1 <= n <= nmax:
            table.set(n, two_g, value)
    app_logger.info(f"cc_maps up to n={nmax}: {len(table)} entries")
    return table.relabel({"u": u}) if u != "u" else table


def kz_bipartite(nmax: int, u: str = "u", v: str = "v") -> GenusTable:
    """b^n_g(u, v), mapas bipartidos com u nos vértices brancos e v nos pretos.

    (n+1) b^n_g = (2n-1)(1+u+v) b^{n-1}_g + (n-2)[4(u+v+uv) - (1+u+v)^2] b^{n-2}_g
                  + (n-1)^2 (n-2) b^{n-2}_{g-1} + Σ_{i+j=n-2} 2(2+3i) j b^i_h b^j_k
    """
    R = make_ring(("u", "v"))
    x, y = gen(R, "u"), gen(R, "v")
    s = 1 + x + y
    bracket = 4 * (x + y + x * y) - s ** 2
    values = load_initial_conditions("kz_bipartite", R)
    b = _lookup(values, R.zero)
    start = max(n for n, _ in values) + 1
    for n in range(start, nmax + 1):
        for two_g in range(0, n, 2):
            total = (2 * n - 1) * s * b(n - 1, two_g)
            total += (n - 2) * bracket * b(n - 2, two_g)
            total += (n - 1) ** 2 * (n - 2) * b(n - 2, two_g - 2)
            for i, j in _splits(n - 2, 1):
                for h, h2 in _even_splits(two_g):
                    total += 2 * (2 + 3 * i) * j * b(i, h) * b(j, h2)
            if total:
                values[(n, two_g)] = total * QQ(1, n + 1)
    table = GenusTable("kz_bipartite", R, params={"nmax": nmax})
    for (n, two_g), value in values.items():
        if 1 <= n <= nmax:
            table.set(n, two_g, value)
    app_logger.info(f"kz_bipartite up to n={nmax}: {len(table)} entries")
    names = {"u": u, "v": v}
    return table.relabel(names) if (u, v) != ("u", "v") else table


def louf_constellations(m: int, nmax: int) -> GenusTable:
    """C^{(m)}_{n,g}, m-constelações enraizadas com n faces pretas.

    C(n,2) C_{n,g} = Σ n_1 C((m-1) n_2 + 2 - 2g_2, 2g* + 2) C_{n_1,g_1} C_{n_2,g_2},
    n_1 + n_2 = n, g = g_1 + g_2 + g*.
    """
    if m < 1:
        raise UsageError(f"constellations need m >= 1, got {m}")
    values = load_initial_conditions("louf_constellations")
    C = _lookup(values, QQ(0))
    start = max(n for n, _ in values) + 1
    for n in range(start, nmax + 1):
        for two_g in range(0, (m - 1) * (n - 1) + 1, 2):
            total = QQ(0)
            for n1, n2 in _splits(n, 1):
                for g1, rest in _even_splits(two_g):
                    for g2, g_star in _even_splits(rest):
                        weight = n1 * _binom((m - 1) * n2 + 2 - g2, g_star + 2)
                        if weight:
                            total += weight * C(n1, g1) * C(n2, g2)
            if total:
                values[(n, two_g)] = total / comb(n, 2)
    table = GenusTable("louf_constellations", params={"m": m, "nmax": nmax})
    for (n, two_g), value in values.items():
        if 1 <= n <= nmax:
            table.set(n, two_g, value)
    app_logger.info(f"louf_constellations m={m} up to n={nmax}: {len(table)} entries")
    return table


def planar_maps_closed_form(n: int) -> int:
    """Fórmula de Tutte: 2 · 3^n (2n)! / (n! (n+2)!)"""
    if n < 0:
        raise UsageError(f"n must be non-negative, got {n}")
    return 2 * 3 ** n * factorial(2 * n) // (factorial(n) * factorial(n + 2))
