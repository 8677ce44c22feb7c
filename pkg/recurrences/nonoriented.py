# recurrences/nonoriented.py
"""Mapas enraizados em superfícies quaisquer: recorrências com deslocamentos de carga.

Gêneros meio-inteiros são guardados como 2g. As somas sobre g_1 + g_2 = g
percorrem todos os meio-inteiros; g_0 desce de g_1 em passos inteiros.
"""
from math import comb
from typing import Dict, Iterator, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from algebra.series import gen, make_ring
from recurrences.golden import load_initial_conditions
from recurrences.table import GenusTable, Key
from utils.logger import app_logger


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def _lookup(values: Dict[Key, object], zero):
    """Zero fora do domínio: n < 0, 2g < 0 ou n < 2g"""
    def at(n: int, two_g: int):
        if n < 0 or two_g < 0 or two_g > n:
            return zero
        return values.get((n, two_g), zero)
    return at


def _splits(total: int) -> Iterator[Tuple[int, int]]:
    for a in range(total + 1):
        yield a, total - a


def _lowered(two_g1: int) -> Iterator[Tuple[int, int]]:
    """(2g_0, k) com g_1 - g_0 = k inteiro"""
    for k in range(two_g1 // 2 + 1):
        yield two_g1 - 2 * k, k


def nonoriented_maps_cc(nmax: int) -> GenusTable:
    """𝔥_n^g, mapas enraizados orientáveis ou não, para n <= nmax"""
    values = load_initial_conditions("nonoriented_maps_cc")
    h = _lookup(values, QQ(0))

    def quadratic(n2: int, two_g2: int):
        # Σ (2n_3-1)(2n_4-1)/4 h_{n_3-1} h_{n_4-1}
        total = QQ(0)
        for n3, n4 in _splits(n2):
            for g3, g4 in _splits(two_g2):
                total += QQ((2 * n3 - 1) * (2 * n4 - 1), 4) * h(n3 - 1, g3) * h(n4 - 1, g4)
        return total

    start = max(n for n, _ in values) + 1
    for n in range(start, nmax + 1):
        for two_g in range(0, n + 1):
            linear = n * (2 * n - 1) * (2 * h(n - 1, two_g) + h(n - 1, two_g - 1))
            linear += QQ((2 * n - 3) * (2 * n - 2) * (2 * n - 1) * (2 * n), 2) * h(n - 2, two_g - 2)

            pairs = QQ(0)
            for g1, g2 in _splits(two_g):
                for n1, n2 in _splits(n):
                    pairs += QQ((2 * n2 - 1) * (2 * n1 - 1) * n1, 2) * h(n2 - 1, g2) * h(n1 - 1, g1)

            shifted = QQ(0)
            for g1, g2 in _splits(two_g):
                for n1 in range(n):
                    n2 = n - n1
                    inner = QQ((2 * n2 - 1) * (2 * n2 - 2) * (2 * n2 - 3), 2) * h(n2 - 2, g2 - 2)
                    if (n2, g2) != (n, two_g):
                        inner -= QQ(n2 + 1, 4) * h(n2, g2)
                    inner += QQ(2 * n2 - 1, 2) * (2 * h(n2 - 1, g2) + h(n2 - 1, g2 - 1))
                    inner += 6 * quadratic(n2, g2)
                    for g0, k in _lowered(g1):
                        weight = _binom(n1 + 2 - g0, n1 - g1) * 4 ** (1 + k)
                        if weight:
                            shifted += weight * h(n1, g0) * inner

            value = (linear + 12 * pairs - shifted) * QQ(2, (n + 1) * (n - 2))
            if value:
                values[(n, two_g)] = value
    table = GenusTable("nonoriented_maps_cc", orientable=False, params={"nmax": nmax})
    for (n, two_g), value in values.items():
        if 1 <= n <= nmax:
            table.set(n, two_g, value)
    app_logger.info(f"nonoriented_maps_cc up to n={nmax}: {len(table)} entries")
    return table


def _lower_u(p: PolyElement, k: int, n1: int, two_g1: int) -> PolyElement:
    """Σ_{p+j} 2^{2(1+k)} C(p, 2+2k) u^{n_1-2g_1-j} z^j H^{p,j}"""
    R = p.ring
    terms = {}
    for (a, j), c in p.items():
        weight = _binom(a, 2 + 2 * k)
        if weight:
            key = (n1 - two_g1 - j, j)
            terms[key] = terms.get(key, QQ(0)) + c * weight * 4 ** (1 + k)
    return R.from_dict(terms) if terms else R.zero


def nonoriented_maps_uz(nmax: int) -> GenusTable:
    """H_n^g(u, z), com u nos vértices e z nas faces.

    O lado esquerdo é (1 + 3u^2 ∂_u^2 / (n(n+1))) H_n^g; cada monômio u^i z^j
    é dividido por 1 + 3i(i-1)/(n(n+1)).
    """
    R = make_ring(("u", "z"))
    u, z = gen(R, "u"), gen(R, "z")
    values = load_initial_conditions("nonoriented_maps_uz", R)
    H = _lookup(values, R.zero)

    def quadratic(n2: int, two_g2: int) -> PolyElement:
        total = R.zero
        for n3, n4 in _splits(n2):
            for g3, g4 in _splits(two_g2):
                total += H(n4 - 1, g4) * H(n3 - 1, g3) * ((2 * n3 - 1) * (2 * n4 - 1))
        return total

    start = max(n for n, _ in values) + 1
    for n in range(start, nmax + 1):
        scale = n * (n + 1)
        for two_g in range(0, n + 1):
            body = 2 * (2 * n - 1) * ((4 * u + z) * H(n - 1, two_g) - 2 * H(n - 1, two_g - 1))
            body += 4 * (2 * n - 3) * (3 * u * z * H(n - 2, two_g) + (2 * n - 1) * (n - 1) * H(n - 2, two_g - 2))
            body += 6 * quadratic(n, two_g)
            rhs = n * body

            for g1, g2 in _splits(two_g):
                for n1 in range(1, n + 1):
                    n2 = n - n1
                    inner = H(n2, g2) * QQ(-(n2 + 1), 2)
                    inner += (2 * n2 - 1) * ((4 * u + z) * H(n2 - 1, g2) - 2 * H(n2 - 1, g2 - 1))
                    inner += 2 * (2 * n2 - 3) * ((2 * n2 - 1) * (n2 - 1) * H(n2 - 2, g2 - 2) + 3 * u * z * H(n2 - 2, g2))
                    if n1 == n - 1:
                        inner += u * z * ((4 * u + z) * int(g1 == two_g) - 2 * int(g1 == two_g - 1))
                    if n1 == n - 2:
                        inner += 3 * u * z * (u * z * int(g1 == two_g) + 2 * int(g1 == two_g - 2))
                    inner += 3 * quadratic(n2, g2)
                    for g0, k in _lowered(g1):
                        if n1 == n and g0 == two_g:
                            # este termo é o 3u^2 ∂_u^2 do lado esquerdo
                            continue
                        lowered = _lower_u(H(n1, g0), k, n1, g1)
                        if not lowered:
                            continue
                        term = inner
                        if n1 == n:
                            term = term + u * (u * int(g1 == two_g) - int(g1 == two_g - 1)) * QQ(3, 2)
                        rhs -= lowered * term

            terms = {}
            for (i, j), c in rhs.items():
                terms[(i, j)] = c * QQ(scale, scale + 3 * i * (i - 1)) / scale
            value = R.from_dict(terms) if terms else R.zero
            if value:
                values[(n, two_g)] = value
    table = GenusTable("nonoriented_maps_uz", R, orientable=False, params={"nmax": nmax})
    for (n, two_g), value in values.items():
        if 1 <= n <= nmax:
            table.set(n, two_g, value)
    app_logger.info(f"nonoriented_maps_uz up to n={nmax}: {len(table)} entries")
    return table
