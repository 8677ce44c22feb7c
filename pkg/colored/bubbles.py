# colored/bubbles.py
"""Bolhas usadas como blocos: quárticas, octaedro, 2-cíclicas e ciclos de d = 2."""
from typing import Iterable, Sequence

from colored.graph import Bubble
from oracle.permutations import compose, cyclic_shift, identity, inverse
from utils.errors import UsageError

SWAP = (1, 0)


def _color_set(cset: Iterable[int], d: int) -> frozenset:
    cset = frozenset(int(c) for c in cset)
    if not cset or len(cset) >= d or any(c < 1 or c > d for c in cset):
        raise UsageError(f"a quartic color set must be a proper nonempty subset of 1..{d}, got {sorted(cset)}")
    return cset


def quartic_bubble(cset: Iterable[int], d: int) -> Bubble:
    """Q(c): dois brancos, as cores de c ligam cada branco ao preto de mesmo índice"""
    cset = _color_set(cset, d)
    return Bubble(tuple((0, 1) if c in cset else SWAP for c in range(1, d + 1)))


def is_admissible(cset: Iterable[int], d: int) -> bool:
    """Q(c) e Q(complemento) coincidem; fica-se com |c| < d/2, ou |c| = d/2 contendo a cor 1"""
    cset = _color_set(cset, d)
    return 2 * len(cset) < d or (2 * len(cset) == d and 1 in cset)


def octahedron_bubble() -> Bubble:
    """Grafo do cubo, dual do octaedro: brancos nos vértices pares de {0,1}^3, σ_c troca a coordenada c"""
    whites = [v for v in range(8) if bin(v).count("1") % 2 == 0]
    blacks = [v for v in range(8) if bin(v).count("1") % 2 == 1]
    return Bubble(tuple(tuple(blacks.index(w ^ (1 << (c - 1))) for w in whites) for c in (1, 2, 3)))


def two_cyclic_bubble(sigma_white: Sequence[int], sigma_black: Sequence[int]) -> Bubble:
    """Bolha de d = 4 com σ_1 = id, σ_2 = Δ_1, σ_3 = σ_• σ_∘^{-1}, σ_4 = σ_• Δ_1 σ_∘^{-1}

    As cores {1,2} e {3,4} formam um único ciclo cada; fixa-se σ_∘(0) = 0.
    """
    n = len(sigma_white)
    if len(sigma_black) != n or n < 1:
        raise UsageError("the two permutations must act on the same nonempty set")
    if sigma_white[0] != 0:
        raise UsageError(f"σ_∘ must fix the first vertex, got σ_∘(0) = {sigma_white[0]}")
    shift = cyclic_shift(n)
    w_inv = inverse(sigma_white)
    return Bubble((identity(n), shift, compose(sigma_black, w_inv),
                   compose(sigma_black, compose(shift, w_inv))))


def cycle_bubble(p: int) -> Bubble:
    """Ciclo com 2p vértices alternando as cores 1 e 2"""
    if p < 1:
        raise UsageError(f"a cycle bubble needs p >= 1, got {p}")
    return Bubble((identity(p), cyclic_shift(p)))
