# spectral/slices.py
"""Séries de caminhos de Łukasiewicz e a fórmula fechada das constelações planares."""
from math import comb, factorial
from typing import Mapping

from sympy.polys.domains import QQ

from algebra.series import TSeries
from spectral.system import Z, ABSystem
from utils.errors import UsageError


def path_series(c: int, n: int, k: int, sys: ABSystem, black: bool = False) -> TSeries:
    """Caminhos de n passos que sobem k, com os pesos do sistema resolvido.

    branco: [α^k] α^{-n} Π_{r=1..n} A^{(c-r+1)}(α^m)
    preto:  [α^{-k}] α^n Π_{r=1..n} B^{(c-r+1)}(α^m)
    """
    if sys.s:
        raise UsageError("path series are defined for s = 0")
    if not 0 <= c < sys.m:
        raise UsageError(f"color {c} outside 0..{sys.m - 1}")
    if n < 0:
        raise UsageError(f"number of steps must be non-negative, got {n}")
    sys._require_solved()
    L, m = sys.lring, sys.m
    zero = TSeries.zero(sys.R, sys.order)
    if (k + n) % m:
        return zero
    j = (k + n) // m
    if j < 0:
        return zero
    source = sys.B if black else sys.A
    product = L.prod((source[(c - r + 1) % m] for r in range(1, n + 1)), sys.order)
    return L.components(product, Z, -j if black else j)


def bms_formula(m: int, degrees: Mapping[int, int]) -> int:
    """m ((m-1)n - 1)! / ((m-1)n - f + 2)! Π_k (k C(mk-1, k))^{d_k}

    n = Σ k d_k e f = Σ d_k: constelações planares rotuladas com d_k faces de grau mk.
    """
    if m < 2:
        raise UsageError(f"constellations need m >= 2, got {m}")
    if not degrees or not any(degrees.values()):
        raise UsageError("at least one face is needed")
    for k, d in degrees.items():
        if k < 1 or d < 0:
            raise UsageError(f"invalid face data {k}: {d}")
    n = sum(k * d for k, d in degrees.items())
    f = sum(degrees.values())
    value = QQ(m * factorial((m - 1) * n - 1), factorial((m - 1) * n - f + 2))
    for k, d in degrees.items():
        value *= (k * comb(m * k - 1, k)) ** d
    if value.denominator != 1:
        raise UsageError(f"face data {dict(degrees)} gives a non-integer count {value}")
    return int(value.numerator)


def bms_rooted(m: int, degrees: Mapping[int, int]) -> int:
    """Contagem enraizada: rotulada · n / Π_k d_k! k^{d_k}

    A fórmula rotulada numera as faces e enraíza cada uma; a enraizada marca
    um dos n cantos brancos. Com uma única face os dois números coincidem.
    """
    labeled = bms_formula(m, degrees)
    n = sum(k * d for k, d in degrees.items())
    symmetry = 1
    for k, d in degrees.items():
        symmetry *= factorial(d) * k ** d
    value = QQ(labeled * n, symmetry)
    if value.denominator != 1:
        raise UsageError(f"face data {dict(degrees)} gives a non-integer rooted count {value}")
    return int(value.numerator)
