# hierarchy/bkp.py
"""Hierarquia BKP com carga formal: as três primeiras equações e a combinação de carga fixa."""
from dataclasses import dataclass
from typing import Mapping, Union

from sympy.polys.rings import PolyElement

from algebra.series import TSeries, gen, series_exp, series_log
from hierarchy.kp import Partials, kp1, kp2, kp3, linear, mul
from utils.errors import UsageError
from utils.logger import app_logger

SHIFTS = (-2, -1, 0, 1, 2)


@dataclass(frozen=True)
class ChargedSeries:
    """τ(N + δ, p) para os deslocamentos δ disponíveis"""

    shifts: Mapping[int, TSeries]

    def __post_init__(self):
        if 0 not in self.shifts:
            raise UsageError("a charged series needs the unshifted τ(N)")
        base = self.shifts[0]
        for delta, s in self.shifts.items():
            if s.ring != base.ring or s.order != base.order:
                raise UsageError(f"shift {delta:+d} does not share the variables and order of τ(N)")

    @classmethod
    def from_symbolic(cls, tau: TSeries, charge: str = "u") -> "ChargedSeries":
        """Deslocamentos obtidos substituindo charge -> charge + δ"""
        N = gen(tau.ring, charge)
        return cls({delta: tau.substitute({charge: N + delta}) for delta in SHIFTS})

    @classmethod
    def constant(cls, tau: TSeries) -> "ChargedSeries":
        return cls({delta: tau for delta in SHIFTS})

    def at(self, delta: int) -> TSeries:
        if delta not in self.shifts:
            raise UsageError(f"shift {delta:+d} is not available")
        return self.shifts[delta]


def _as_series(S2: Union[TSeries, PolyElement, object], like: TSeries) -> TSeries:
    if isinstance(S2, TSeries):
        return S2
    return TSeries.constant(like.ring, like.order, S2)


def bkp_residuals(tau: ChargedSeries, S2, order: int) -> TSeries:
    """Lado esquerdo menos lado direito da equação BKP de ordem 1, 2 ou 3"""
    if order not in (1, 2, 3):
        raise UsageError(f"BKP equation order must be 1, 2 or 3, got {order}")
    F = series_log(tau.at(0))
    F_plus, F_minus = series_log(tau.at(2)), series_log(tau.at(-2))
    d, d_plus, d_minus = Partials(F), Partials(F_plus), Partials(F_minus)
    S2 = _as_series(S2, F)
    # τ(N-2)τ(N+2)/τ(N)²
    ratio = mul(S2, series_exp(F_plus + F_minus - F.scale(2)))
    if order == 1:
        return kp1(d) - ratio
    if order == 2:
        return kp2(d) - mul(ratio, d_plus(1) - d_minus(1))
    jump = d_plus(1) - d_minus(1)
    bracket = linear([(1, d_plus(1, 1)), (1, d_minus(1, 1)), (2, d_plus(2)), (-2, d_minus(2)), (1, mul(jump, jump))])
    return kp3(d) - mul(ratio, bracket)


def fixed_charge_residual(F: TSeries) -> TSeries:
    """Combinação de KP1, KP2, KP3 e suas derivadas que não envolve deslocamentos da carga

    F deve ser homogêneo: as derivadas são graduadas e o índice do resultado é o
    peso em p. A ordem de saída é a ordem de F menos 7.
    """
    if F.order < 7:
        raise UsageError(f"the fixed-charge combination needs F up to weight 7, got order {F.order}")
    d = Partials(F, graded=True)
    K1, K2, K3 = kp1(d), kp2(d), kp3(d)
    d1, d2, d3 = Partials(K1, graded=True), Partials(K2, graded=True), Partials(K3, graded=True)
    K1_1 = d1(1)
    lhs = mul(d(1, 1, 1), K1, K1, K1).scale(2)
    rhs = linear([
        (1, mul(linear([(1, d3(1)), (-2, d2(2))]), K1, K1)),
        (-1, mul(linear([(1, K3), (-3, d1(1, 1))]), K1, K1_1)),
        (2, mul(linear([(1, d1(2)), (-1, d2(1))]), K1, K2)),
        (2, mul(K2, K2, K1_1)),
        (-2, mul(K1_1, K1_1, K1_1)),
        (-1, mul(K1, K1, d1(1, 1, 1))),
    ])
    out = linear([(1, lhs), (-1, rhs)])
    app_logger.debug(f"fixed-charge residual computed to weight {out.order}")
    return out
