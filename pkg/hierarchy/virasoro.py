# hierarchy/virasoro.py
"""Vínculos de Virasoro dos mapas e mapas bipartidos, orientáveis e não orientados."""
from dataclasses import dataclass
from typing import Callable

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from algebra.series import TSeries, gen, pderiv, var_names
from utils.errors import UsageError


@dataclass(frozen=True)
class VirasoroShape:
    """L_i = p*_{i+s}/t^s - (c Σ_{a+b=i} p*_a p*_b + Σ_a p_a p*_{a+i} + diag(i) p*_i + const(i))"""

    shift: int
    pair_factor: int
    min_index: int
    diag: Callable[[int, PolyRing], PolyElement]
    const: Callable[[int, PolyRing], PolyElement]


def _u(R):
    return gen(R, "u")


def _v(R):
    return gen(R, "v")


SHAPES = {
    # nos casos orientáveis falta o termo linear em i: ele vem das arestas torcidas
    "maps": VirasoroShape(
        2, 1, -1,
        lambda i, R: _u(R) * 2,
        lambda i, R: (_u(R) * gen(R, "p1") if i == -1 else R.zero) + (_u(R) ** 2 if i == 0 else R.zero),
    ),
    "zonal_maps": VirasoroShape(
        2, 2, -1,
        lambda i, R: R(i + 1) + _u(R) * 2,
        lambda i, R: ((_u(R) * gen(R, "p1") if i == -1 else R.zero)
                      + (_u(R) * (_u(R) + 1) if i == 0 else R.zero)) * QQ(1, 2),
    ),
    "bip": VirasoroShape(
        1, 1, 0,
        lambda i, R: _u(R) + _v(R),
        lambda i, R: _u(R) * _v(R) if i == 0 else R.zero,
    ),
    "zonal_bip": VirasoroShape(
        1, 2, 0,
        lambda i, R: R(i) + _u(R) + _v(R),
        lambda i, R: _u(R) * _v(R) * QQ(1, 2) if i == 0 else R.zero,
    ),
}


def _max_part(R) -> int:
    return max((int(n[1:]) for n in var_names(R) if n.startswith("p") and n[1:].isdigit()), default=0)


def virasoro_residual(family: str, i: int, tau: TSeries) -> TSeries:
    """L_i τ até a ordem T - s (s = 2 para mapas, 1 para bipartidos); zero certifica o vínculo"""
    if family not in SHAPES:
        raise UsageError(f"unknown Virasoro family {family!r}; expected one of {tuple(SHAPES)}")
    shape = SHAPES[family]
    if i < shape.min_index:
        raise UsageError(f"{family} constraints start at i = {shape.min_index}, got {i}")
    R = tau.ring
    D = _max_part(R)
    if D < tau.order:
        raise UsageError(f"power sums up to p{tau.order} are needed, the ring stops at p{D}")
    order = tau.order - shape.shift
    if order < 0:
        raise UsageError(f"τ must reach order {shape.shift} at least")

    def star(k: int, f: TSeries) -> TSeries:
        if k <= 0 or k > D:
            return TSeries.zero(R, f.order)
        return pderiv(f, f"p{k}").scale(k)

    head = star(i + shape.shift, tau)
    body = TSeries.zero(R, tau.order)
    for a in range(1, i):
        body = body + star(a, star(i - a, tau)).scale(shape.pair_factor)
    for a in range(1, D + 1):
        if 1 <= a + i <= D:
            body = body + star(a + i, tau).scale(gen(R, f"p{a}"))
    body = body + star(i, tau).scale(shape.diag(i, R)) + tau.scale(shape.const(i, R))
    return TSeries(R, tuple(head.coeffs[n + shape.shift] - body.coeffs[n] for n in range(order + 1)))
