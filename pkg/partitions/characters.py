"""Caracteres de S_n (Murnaghan-Nakayama) e funções de Schur na base de somas de potências."""
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, Optional, Sequence

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from algebra.series import gen
from partitions.partition import Partition, class_size, hook_product, partitions_of, z_lambda
from utils.errors import UsageError

# Elemento do span de p_μ em grau fixo: μ -> coeficiente racional
PExpansion = Dict[Partition, object]


def _beta_to_partition(beta) -> Partition:
    ordered = sorted(beta, reverse=True)
    k = len(ordered)
    return Partition.from_parts(b - (k - 1 - i) for i, b in enumerate(ordered))


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: tuple) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    k = len(lam)
    beta = [lam[i] + k - 1 - i for i in range(k)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # cada conta saltada é uma linha extra da faixa de borda
        height = sum(1 for c in occupied if target < c < b)
        moved = (occupied - {b}) | {target}
        total += (-1) ** height * _mn(_beta_to_partition(moved), rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    """χ_λ(μ) pela regra de Murnaghan-Nakayama"""
    if lam.size != mu.size:
        raise UsageError(f"character needs |λ| = |μ|, got {lam.size} and {mu.size}")
    return _mn(Partition(lam), tuple(sorted(mu, reverse=True)))


@lru_cache(maxsize=None)
def schur_in_p(lam: Partition) -> PExpansion:
    """s_λ = Σ_μ χ_λ(μ)/z_μ p_μ"""
    result = {}
    for mu in partitions_of(lam.size):
        chi = character(lam, mu)
        if chi:
            result[mu] = QQ(chi, z_lambda(mu))
    return result


def homogeneous_in_p(n: int) -> PExpansion:
    """h_n = Σ_μ p_μ/z_μ"""
    if n < 0:
        return {}
    return {mu: QQ(1, z_lambda(mu)) for mu in partitions_of(n)}


def pmul(a: PExpansion, b: PExpansion) -> PExpansion:
    out: PExpansion = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            key = la.union(lb)
            out[key] = out.get(key, QQ(0)) + ca * cb
    return {k: v for k, v in out.items() if v}


def padd(a: PExpansion, b: PExpansion, scale=1) -> PExpansion:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, QQ(0)) + v * scale
    return {k: v for k, v in out.items() if v}


def pscale(a: PExpansion, c) -> PExpansion:
    return {k: v * c for k, v in a.items() if v * c}


def specialize(a: PExpansion, value: Callable[[int], object]):
    """Substitui p_k := value(k) e soma"""
    total = None
    for mu, c in a.items():
        term = c
        for part in mu:
            term = term * value(part)
        total = term if total is None else total + term
    return total if total is not None else QQ(0)


def theta(lam: Partition):
    """s_λ avaliado em p_2 = 1 e demais p_k = 0"""
    if lam.size % 2:
        return QQ(0)
    mu = Partition([2] * (lam.size // 2))
    return QQ(character(lam, mu), z_lambda(mu))


def to_poly(a: PExpansion, R: PolyRing, prefix: str = "p", max_part: Optional[int] = None,
            weight: Callable[[int], object] = None) -> PolyElement:
    """PExpansion -> polinômio em prefix1..prefixD, com p_k multiplicado por weight(k)

    Termos com partes maiores que max_part são descartados.
    """
    out = R.zero
    for mu, c in a.items():
        if max_part is not None and mu and mu[0] > max_part:
            continue
        term = R(c)
        for part in mu:
            term = term * gen(R, f"{prefix}{part}")
            if weight is not None:
                term = term * weight(part)
        out += term
    return out


def frobenius_count(classes: Sequence[Partition]) -> int:
    """Número de (σ_1, ..., σ_m) com σ_i ∈ C_{λ_i} e produto identidade

    H = n!^{m-1} Σ_λ Π_i χ_λ(λ_i)/z_{λ_i} / f_λ^{m-2}
    """
    if not classes:
        raise UsageError("at least one conjugacy class is required")
    n = classes[0].size
    if any(c.size != n for c in classes):
        raise UsageError("all classes must have the same size")
    m = len(classes)
    total = QQ(0)
    for lam in partitions_of(n):
        dim = factorial(n) // hook_product(lam)
        term = QQ(1)
        for c in classes:
            term *= QQ(character(lam, c) * class_size(c))
        term = term * QQ(dim) / QQ(dim) ** m * QQ(dim)
        total += term
    total = total / factorial(n)
    if QQ.denom(total) != 1:
        raise UsageError(f"non-integer Frobenius value {total}")
    return int(QQ.numer(total))
