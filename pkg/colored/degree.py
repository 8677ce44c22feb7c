# colored/degree.py
"""Grau de Gurau e jaquetas.

Cada ordem cíclica ρ das cores 0..d dá um mapa (jaqueta) cujas faces são os
ciclos bicoloridos {ρ^i(0), ρ^{i+1}(0)}. Somando os gêneros das d!/2 jaquetas
de um grafo conexo obtém-se 2 Σ_ρ g_ρ = (d-1)! ω.
"""
from itertools import permutations
from math import factorial
from typing import List, Sequence, Tuple

from colored.graph import ColoredGraph
from oracle.maps import DartMap
from utils.errors import UsageError


def gurau_degree(G: ColoredGraph) -> int:
    """ω = d·#componentes + d(d-1)n/2 - Δ_{d-2}; só para grafos fechados"""
    if not G.is_closed:
        raise UsageError("Gurau's degree is defined for closed (d+1)-colored graphs")
    d = G.d
    value = d * len(G.components()) + d * (d - 1) * G.n // 2 - G.total_cycles()
    # d(d-1)n é sempre par
    return value


def cyclic_orders(d: int) -> List[Tuple[int, ...]]:
    """Ordens cíclicas de 0..d módulo inversão, escritas (0, a_1, ..., a_d) com a_1 < a_d"""
    out = []
    for rest in permutations(range(1, d + 1)):
        if rest[0] < rest[-1]:
            out.append((0,) + rest)
    return out


def _cycle_map(G: ColoredGraph, rho: Sequence[int]) -> dict:
    rho = tuple(int(c) for c in rho)
    if sorted(rho) != list(G.colors):
        raise UsageError(f"{rho} is not a cyclic order of the colors {G.first}..{G.d}")
    return {rho[i]: rho[(i + 1) % len(rho)] for i in range(len(rho))}


def jacket(G: ColoredGraph, rho: Sequence[int]) -> DartMap:
    """Mapa com um dardo por par (vértice, cor).

    Branco w, cor c: dardo w(d+1)+c; preto j, cor c: dardo n(d+1) + j(d+1)+c.
    Os brancos giram segundo ρ, os pretos segundo ρ^{-1}.
    """
    step = _cycle_map(G, rho)
    back = {b: a for a, b in step.items()}
    k, n, base = len(G.perms), G.n, G.first
    size = 2 * n * k
    sigma, alpha = [0] * size, [0] * size
    for w in range(n):
        for c in G.colors:
            white = w * k + c - base
            black = n * k + G.sigma(c)[w] * k + c - base
            alpha[white], alpha[black] = black, white
            sigma[white] = w * k + step[c] - base
    for j in range(n):
        for c in G.colors:
            sigma[n * k + j * k + c - base] = n * k + j * k + back[c] - base
    return DartMap(tuple(sigma), tuple(alpha))


def jacket_genus_sum(G: ColoredGraph) -> int:
    """Σ_ρ 2g_ρ, componente por componente"""
    if not G.is_closed:
        raise UsageError("jackets are taken over the colors 0..d of a closed graph")
    total = 0
    for H in G.split():
        total += sum(jacket(H, rho).two_genus for rho in cyclic_orders(H.d))
    return total


def degree_from_jackets(G: ColoredGraph) -> int:
    """ω recuperado das jaquetas: Σ_ρ 2g_ρ / (d-1)!"""
    total = jacket_genus_sum(G)
    scale = factorial(G.d - 1)
    if total % scale:
        raise UsageError(f"jacket genera sum {total} is not a multiple of {scale}")
    return total // scale
