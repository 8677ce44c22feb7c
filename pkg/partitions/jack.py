"""Polinômios de Jack J^{(α)}_λ na base de somas de potências (Gram-Schmidt)."""
from functools import lru_cache
from typing import Dict, Tuple

from sympy import Matrix, Rational
from sympy.polys.domains import QQ

from algebra.series import to_qq
from partitions.characters import PExpansion
from partitions.partition import Partition, partitions_of, z_lambda
from utils.errors import UsageError
from utils.logger import app_logger


def _assignments(mu: Tuple[int, ...], lam: Partition) -> int:
    """Quantas funções partes(μ) -> linhas de λ preenchem exatamente λ"""
    rows = list(lam)

    def rec(j: int) -> int:
        if j == len(mu):
            return 1 if all(r == 0 for r in rows) else 0
        count = 0
        for i in range(len(rows)):
            if rows[i] >= mu[j]:
                rows[i] -= mu[j]
                count += rec(j + 1)
                rows[i] += mu[j]
        return count

    return rec(0)


@lru_cache(maxsize=None)
def monomial_in_p(n: int) -> Dict[Partition, PExpansion]:
    """m_λ em somas de potências, para todo λ ⊢ n"""
    parts = partitions_of(n)
    # p_μ = Σ_λ R[μ][λ] m_λ
    R = Matrix([[Rational(_assignments(tuple(mu), lam)) for lam in parts] for mu in parts])
    Rinv = R.inv()
    result = {}
    for j, lam in enumerate(parts):
        # m_λ = Σ_μ (R^{-1})[λ][μ] p_μ
        exp = {}
        for i, mu in enumerate(parts):
            c = to_qq(Rinv[j, i])
            if c:
                exp[mu] = c
        result[lam] = exp
    return result


def inner_product(a: PExpansion, b: PExpansion, alpha) -> object:
    """⟨p_λ, p_μ⟩_α = δ z_λ α^{ℓ(λ)}"""
    alpha = to_qq(alpha)
    total = QQ(0)
    for mu, c in a.items():
        d = b.get(mu)
        if d:
            total += c * d * z_lambda(mu) * alpha ** len(mu)
    return total


def _combine(a: PExpansion, b: PExpansion, c) -> PExpansion:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, QQ(0)) + c * v
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _jack_basis(n: int, alpha) -> Dict[Partition, PExpansion]:
    mono = monomial_in_p(n)
    # ordem lexicográfica crescente estende a ordem de dominância
    ascending = list(reversed(partitions_of(n)))
    monic: Dict[Partition, PExpansion] = {}
    norms: Dict[Partition, object] = {}
    for lam in ascending:
        vec = dict(mono[lam])
        for mu, pm in monic.items():
            coef = inner_product(mono[lam], pm, alpha) / norms[mu]
            if coef:
                vec = _combine(vec, pm, -coef)
        monic[lam] = vec
        norms[lam] = inner_product(vec, vec, alpha)
    jacks = {}
    ones = Partition([1] * n) if n else Partition()
    for lam, vec in monic.items():
        # J_λ(p_k := N) tem coeficiente líder 1 em N
        lead = vec.get(ones)
        if not lead:
            raise UsageError(f"degenerate Jack polynomial for {lam} at alpha={alpha}")
        jacks[lam] = {mu: c / lead for mu, c in vec.items()}
    app_logger.debug(f"Jack basis computed for n={n}, alpha={alpha}")
    return jacks


def jack_in_p(lam: Partition, alpha) -> PExpansion:
    alpha = to_qq(alpha)
    if alpha <= 0:
        raise UsageError(f"Jack parameter must be positive, got {alpha}")
    return _jack_basis(lam.size, alpha)[Partition(lam)]


def zonal_in_p(lam: Partition) -> PExpansion:
    return jack_in_p(lam, 2)


def jack_norm(lam: Partition, alpha) -> object:
    """j_λ = ⟨J_λ, J_λ⟩_α; vale hook(λ)² em α=1 e hook(2λ) em α=2"""
    j = jack_in_p(lam, alpha)
    return inner_product(j, j, alpha)
