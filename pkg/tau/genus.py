"""Energias livres por gênero e o operador de enraizamento ∇_x."""
from typing import Callable

from sympy.polys.domains import QQ

from algebra.series import TSeries, gen, make_ring, pderiv, series_log, var_names
from tau.builders import GRADING_VAR, TauFunction
from utils.errors import UsageError


def inverse_name(x: str) -> str:
    """Variável que guarda x^{-1}: o expoente k representa x^{-k}"""
    return f"{x}_inv"


def genus_free_energy(builder: Callable[..., TauFunction], two_g: int, T: int) -> TSeries:
    """F_g = [N^{2-2g}] log τ_{G_N}(Np, Nq)

    O expoente de N de cada monômio é ℓ(λ) + ℓ(μ) menos o número de conteúdos
    divididos por N (grau na variável de graduação), como em Riemann-Hurwitz.
    """
    tau = builder(T, graded=True)
    if not tau.graded:
        raise UsageError("the builder must honour graded=True")
    log_tau = series_log(tau.series)
    R = tau.ring
    names = var_names(R)
    e_idx = names.index(GRADING_VAR)
    p_idx = [i for i, n in enumerate(names) if n.startswith("p") and n[1:].isdigit()]
    q_idx = [i for i, n in enumerate(names) if n.startswith("q") and n[1:].isdigit()]
    target = 2 - two_g
    out_names = tuple(n for n in names if n != GRADING_VAR)
    R_out = make_ring(out_names)
    coeffs = []
    for n, c in enumerate(log_tau.coeffs):
        q_len = tau.q_length(n)
        terms = {}
        for monom, value in c.items():
            q_part = sum(monom[i] for i in q_idx) if q_len is None else q_len
            exponent = sum(monom[i] for i in p_idx) + q_part - monom[e_idx]
            if exponent == target:
                key = monom[:e_idx] + monom[e_idx + 1:]
                terms[key] = terms.get(key, QQ(0)) + value
        coeffs.append(R_out.from_dict(terms) if terms else R_out.zero)
    return TSeries(R_out, tuple(coeffs))


def nabla(F: TSeries, x: str = "x") -> TSeries:
    """∇_x F = Σ_i i x^{-i-1} ∂F/∂p_i"""
    names = var_names(F.ring)
    inv = inverse_name(x)
    if inv in names:
        raise UsageError(f"{x} is already a boundary variable of this series")
    R = make_ring(names + (inv,))
    lifted = F.set_ring(R)
    xi = gen(R, inv)
    result = TSeries.zero(R, F.order)
    for name in names:
        if name.startswith("p") and name[1:].isdigit():
            i = int(name[1:])
            result = result + pderiv(lifted, name).scale(xi ** (i + 1) * i)
    return result


def rooted_counts(F: TSeries, non_oriented: bool = False) -> TSeries:
    """Séries enraizadas: n·[t^n] log τ (orientável) ou 2n·[t^n] (não orientável)"""
    factor = 2 if non_oriented else 1
    return TSeries(F.ring, tuple(c * (factor * n) for n, c in enumerate(F.coeffs)))
