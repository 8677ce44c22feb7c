# hierarchy/monotone.py
"""Equação de evolução dos números de Hurwitz monótonos b-deformados."""
from typing import Optional, Union

from sympy.polys.domains import QQ

from algebra.series import TSeries, gen, pderiv, to_qq, var_names
from tau.builders import TauFunction
from utils.errors import UsageError


def _max_part(R) -> int:
    return max((int(n[1:]) for n in var_names(R) if n.startswith("p") and n[1:].isdigit()), default=0)


def cut_and_join(f, b, D: int):
    """(1+b)Σ p_{m+n}p*_m p*_n + Σ p_n p_m p*_{n+m} + bΣ(n-1)p_n p*_n num coeficiente polinomial"""
    R = f.ring
    p = {k: gen(R, f"p{k}") for k in range(1, D + 1)}
    star = {k: f.diff(p[k]) * k for k in range(1, D + 1)}
    out = R.zero
    for m in range(1, D + 1):
        for n in range(1, D + 1 - m):
            if star[m]:
                out += p[m + n] * star[m].diff(p[n]) * (n * (1 + b))
            out += p[n] * p[m] * star[n + m]
    if b:
        for n in range(2, D + 1):
            out += p[n] * star[n] * ((n - 1) * b)
    return out


def monotone_evolution_residual(tau: Union[TSeries, TauFunction], b, run_order: Optional[int] = None,
                                charge: str = "u") -> TSeries:
    """∂_t τ - H_b τ, com H_b = u p_1/(1+b) - (u/t)(operador de corte e colagem)

    Com run_order K, τ só é exato até o grau n + K em u no coeficiente t^n; o
    resíduo em t^m é cortado no grau m + 1 + K, onde ainda é exato.
    """
    if isinstance(tau, TauFunction):
        run_order = tau.run_order if run_order is None else run_order
        tau = tau.series
    b = to_qq(b)
    R = tau.ring
    D = _max_part(R)
    if D < tau.order:
        raise UsageError(f"power sums up to p{tau.order} are needed, the ring stops at p{D}")
    if tau.order < 1:
        raise UsageError("the evolution equation needs τ up to order 1 at least")
    u = gen(R, charge)
    p1 = gen(R, "p1")
    u_idx = var_names(R).index(charge)
    coeffs = []
    for m in range(tau.order):
        value = tau.coeffs[m + 1] * (m + 1) - tau.coeffs[m] * u * p1 * (QQ(1) / (1 + b))
        value += u * cut_and_join(tau.coeffs[m + 1], b, D)
        if run_order is not None:
            limit = m + 1 + run_order
            value = R.from_dict({k: c for k, c in value.items() if k[u_idx] <= limit}) if value else value
        coeffs.append(value)
    return TSeries(R, tuple(coeffs))
