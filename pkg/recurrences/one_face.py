# recurrences/one_face.py
"""Mapas com uma única face: recorrências lineares com coeficientes polinomiais em n."""
from typing import Callable, Dict

from sympy.polys.domains import QQ

from algebra.series import gen, make_ring
from recurrences.golden import load_initial_conditions
from recurrences.table import GenusTable, Key
from utils.errors import UsageError
from utils.logger import app_logger

FAMILIES = ("hz", "adrianov", "ledoux", "adrianov_nonoriented")


def _lookup(values: Dict[Key, object], zero):
    def at(n: int, two_g: int):
        if n < 0 or two_g < 0:
            return zero
        return values.get((n, two_g), zero)
    return at


def _harer_zagier(n: int, two_g: int, e: Callable) -> QQ:
    total = 2 * (2 * n - 1) * e(n - 1, two_g)
    total += (n - 1) * (2 * n - 1) * (2 * n - 3) * e(n - 2, two_g - 2)
    return total / (n + 1)


def _adrianov(n: int, two_g: int, b: Callable) -> QQ:
    total = 2 * (2 * n - 1) * b(n - 1, two_g)
    total += (n - 1) ** 2 * (n - 2) * b(n - 2, two_g - 2)
    return total / (n + 1)


def _ledoux(n: int, two_g: int, u: Callable) -> QQ:
    k = (2 * n - 3) * (2 * n - 4) * (2 * n - 5)
    total = (8 * n - 2) * u(n - 1, two_g) - (4 * n - 1) * u(n - 1, two_g - 1)
    total += n * (2 * n - 3) * (10 * n - 9) * u(n - 2, two_g - 2) - 8 * (2 * n - 3) * u(n - 2, two_g)
    total += 8 * (2 * n - 3) * u(n - 2, two_g - 1)
    total += -10 * k * u(n - 3, two_g - 2) + 5 * k * u(n - 3, two_g - 3)
    total += -2 * k * (2 * n - 6) * (2 * n - 7) * u(n - 4, two_g - 4)
    return total / (n + 1)


_NUMERIC = {
    "hz": (_harer_zagier, 2, True),
    "adrianov": (_adrianov, 2, True),
    "ledoux": (_ledoux, 1, False),
}


def _numeric(nmax: int, family: str) -> GenusTable:
    rule, step, orientable = _NUMERIC[family]
    values = load_initial_conditions(f"one_face:{family}")
    at = _lookup(values, QQ(0))
    start = max(n for n, _ in values) + 1
    for n in range(start, nmax + 1):
        for two_g in range(0, n + 1, step):
            value = rule(n, two_g, at)
            if value:
                values[(n, two_g)] = value
    table = GenusTable(f"one_face:{family}", orientable=orientable, params={"nmax": nmax})
    for (n, two_g), value in values.items():
        if 1 <= n <= nmax:
            table.set(n, two_g, value)
    return table


def _adrianov_nonoriented(nmax: int) -> GenusTable:
    """𝔟_n^{i,j} como polinômio Σ 𝔟 u^i v^j, com 2g = n + 1 - i - j.

    Deslocamentos em (i, j) viram multiplicação por monômios; os grupos de
    correção são as potências (u - v)^2 e (u - v)^4.
    """
    R = make_ring(("u", "v"))
    u, v = gen(R, "u"), gen(R, "v")
    family = "one_face:adrianov_nonoriented"
    whole: Dict[int, object] = {}
    for (n, _), value in load_initial_conditions(family, R).items():
        whole[n] = whole.get(n, R.zero) + value

    def B(n: int):
        return whole.get(n, R.zero) if n >= 0 else R.zero

    shift2 = 4 * u + 4 * v - 3 * u ** 2 - 3 * v ** 2 - 2 * u * v
    shift3 = u ** 3 + v ** 3 - u ** 2 * v - u * v ** 2 - u ** 2 - v ** 2 + 2 * u * v
    start = max(whole) + 1
    for n in range(start, nmax + 1):
        total = (4 * n - 1) * (u + v - 1) * B(n - 1)
        total += (5 * n ** 3 - 16 * n ** 2 + 13 * n - 1) * B(n - 2)
        total += (2 * n - 3) * shift2 * B(n - 2)
        total += (10 * n ** 3 - 68 * n ** 2 + 150 * n - 107) * (1 - u - v) * B(n - 3)
        total += (4 * n - 11) * shift3 * B(n - 3)
        square = (u - v) ** 2
        group = (2 * n - 7) ** 2 * (n - 2) ** 2 + (5 * n ** 2 - 32 * n + 53) * square + square ** 2
        total += (4 - n) * group * B(n - 4)
        whole[n] = total * QQ(1, n + 1)

    table = GenusTable(family, R, orientable=False, params={"nmax": nmax})
    for n, poly in whole.items():
        if not 1 <= n <= nmax:
            continue
        for (i, j), c in poly.items():
            table.add(n, n + 1 - i - j, R.from_dict({(i, j): c}))
    return table


def one_face(nmax: int, family: str) -> GenusTable:
    """ε (hz), β (adrianov), u (ledoux) ou 𝔟 (adrianov_nonoriented) até nmax arestas"""
    if family not in FAMILIES:
        raise UsageError(f"unknown one-face family {family!r}; expected one of {', '.join(FAMILIES)}")
    if nmax < 0:
        raise UsageError(f"nmax must be non-negative, got {nmax}")
    if family == "adrianov_nonoriented":
        table = _adrianov_nonoriented(nmax)
    else:
        table = _numeric(nmax, family)
    app_logger.info(f"one_face {family} up to n={nmax}: {len(table)} entries")
    return table


def harer_zagier_polynomial(n: int):
    """Σ_g ε^n_g N^{n+1-2g}, o número de colagens de um 2n-ágono contado por vértices"""
    R = make_ring(("N",))
    N = gen(R, "N")
    table = one_face(n, "hz")
    if n == 0:
        return N
    return sum((N ** (n + 1 - two_g) * value for (m, two_g), value in table.items() if m == n), R.zero)
