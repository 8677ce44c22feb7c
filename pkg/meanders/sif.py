# meanders/sif.py
"""Permutações SIF (sem intervalo estabilizado) e a árvore de dois tipos.

Toda permutação se decompõe de modo único em blocos SIF. Há dois algoritmos:
pelos intervalos estabilizados maximais dentro do primeiro bloco conexo, ou
pelos blocos conexos após deslocamentos cíclicos. Os dois têm de concordar.
"""
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from algebra.series import TSeries, make_ring, series_compose
from meanders.arches import catalan
from meanders.systems import meander_set
from oracle.permutations import Perm, compose, cycles, cyclic_shift, inverse
from utils.errors import EnumapError, UsageError
from utils.logger import app_logger

Block = Tuple[int, ...]


def _check(sigma: Sequence[int]) -> Perm:
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(len(sigma))):
        raise UsageError(f"{sigma} is not a permutation")
    return sigma


def stabilized_intervals(sigma: Sequence[int]) -> List[Tuple[int, int]]:
    """Intervalos [a, b] próprios e não vazios com σ([a, b]) = [a, b]"""
    n = len(sigma)
    out = []
    for a in range(n):
        for b in range(a, n):
            if b - a + 1 == n:
                continue
            if all(a <= sigma[x] <= b for x in range(a, b + 1)):
                out.append((a, b))
    return out


def is_sif(sigma: Sequence[int]) -> bool:
    return not stabilized_intervals(_check(sigma))


def is_connected_perm(sigma: Sequence[int]) -> bool:
    """Nenhum prefixo próprio [0, i) é estabilizado"""
    top = -1
    for i, x in enumerate(sigma[:-1]):
        top = max(top, x)
        if top == i:
            return False
    return True


def connected_blocks(sigma: Sequence[int]) -> List[Tuple[int, int]]:
    """Blocos conexos como intervalos [início, fim)"""
    out, start, top = [], 0, -1
    for i, x in enumerate(sigma):
        top = max(top, x)
        if top == i:
            out.append((start, i + 1))
            start = i + 1
    return out


def _restrict(sigma: Sequence[int], points: Sequence[int]) -> Perm:
    """σ sobre um conjunto estável, reindexado em ordem crescente"""
    pos = {p: i for i, p in enumerate(points)}
    return tuple(pos[sigma[p]] for p in points)


def rescaled(sigma: Sequence[int], block: Sequence[int]) -> Perm:
    return _restrict(sigma, sorted(block))


# --- algoritmo dos intervalos ---

def _by_intervals(sigma: Perm, labels: Sequence[int], out: List[Block]):
    n = len(sigma)
    if not n:
        return
    _, end = connected_blocks(sigma)[0]
    first = sigma[:end]
    inner = stabilized_intervals(first)
    maximal = [(a, b) for a, b in inner
               if not any((c, d) != (a, b) and c <= a and b <= d for c, d in inner)]
    covered = {x for a, b in maximal for x in range(a, b + 1)}
    out.append(tuple(labels[x] for x in range(end) if x not in covered))
    for a, b in maximal:
        points = list(range(a, b + 1))
        _by_intervals(_restrict(sigma, points), [labels[x] for x in points], out)
    rest = list(range(end, n))
    _by_intervals(_restrict(sigma, rest), [labels[x] for x in rest], out)


def sif_blocks_intervals(sigma: Sequence[int]) -> List[Block]:
    sigma = _check(sigma)
    out: List[Block] = []
    _by_intervals(sigma, list(range(len(sigma))), out)
    return sorted(tuple(sorted(b)) for b in out)


# --- algoritmo dos deslocamentos ---

def _conjugate(sigma: Perm, labels: Sequence[int], k: int) -> Tuple[Perm, List[int]]:
    """Δ_{-k} σ Δ_k com os rótulos girados junto"""
    n = len(sigma)
    shifted = compose(cyclic_shift(n, -k), compose(sigma, cyclic_shift(n, k)))
    return shifted, [labels[(i + k) % n] for i in range(n)]


def _by_shifts(sigma: Perm, labels: Sequence[int], out: List[Block]):
    for start, end in connected_blocks(sigma):
        points = list(range(start, end))
        block, names = _restrict(sigma, points), [labels[x] for x in points]
        if len(block) == 1:
            out.append(tuple(names))
            continue
        for k in range(1, len(block)):
            shifted, shifted_names = _conjugate(block, names, k)
            if not is_connected_perm(shifted):
                _by_shifts(shifted, shifted_names, out)
                break
        else:
            out.append(tuple(names))


def sif_blocks_shifts(sigma: Sequence[int]) -> List[Block]:
    sigma = _check(sigma)
    out: List[Block] = []
    _by_shifts(sigma, list(range(len(sigma))), out)
    return sorted(tuple(sorted(b)) for b in out)


# --- árvore de dois tipos ---

@dataclass
class SIFTree:
    """Cruzes nos blocos SIF, brancos nas regiões da partição não cruzada"""

    sigma: Perm
    blocks: List[Block]
    regions: List[Tuple[int, ...]]
    tree: nx.Graph

    def white_degrees(self) -> List[int]:
        return [self.tree.degree(("o", k)) for k in range(len(self.regions))]

    def block_perms(self) -> List[Perm]:
        return [rescaled(self.sigma, b) for b in self.blocks]


def _partition_perm(blocks: Sequence[Block], n: int) -> Perm:
    """Cada bloco vira um ciclo crescente"""
    out = list(range(n))
    for b in blocks:
        for i, x in enumerate(b):
            out[x] = b[(i + 1) % len(b)]
    return tuple(out)


def sif_decompose(sigma: Sequence[int]) -> SIFTree:
    sigma = _check(sigma)
    n = len(sigma)
    if not n:
        raise UsageError("the SIF decomposition needs a nonempty permutation")
    blocks = sif_blocks_intervals(sigma)
    other = sif_blocks_shifts(sigma)
    if blocks != other:
        app_logger.error(f"SIF algorithms disagree on {sigma}: {blocks} vs {other}")
        raise EnumapError(f"SIF decompositions disagree on {sigma}")
    # regiões: ciclos do complemento de Kreweras; o canto i fica entre i e i+1
    kreweras = compose(inverse(_partition_perm(blocks, n)), cyclic_shift(n))
    regions = sorted(tuple(sorted(c)) for c in cycles(kreweras))
    block_of = {x: k for k, b in enumerate(blocks) for x in b}
    region_of = {x: k for k, r in enumerate(regions) for x in r}
    tree = nx.Graph()
    tree.add_nodes_from(("x", k) for k in range(len(blocks)))
    tree.add_nodes_from(("o", k) for k in range(len(regions)))
    for i in range(n):
        tree.add_edge(("x", block_of[i]), ("o", region_of[i]))
        tree.add_edge(("x", block_of[(i + 1) % n]), ("o", region_of[i]))
    if not nx.is_tree(tree):
        raise EnumapError(f"the two-type tree of {sigma} is not a tree")
    return SIFTree(sigma, blocks, regions, tree)


def factorized_meander_set(sigma: Sequence[int]) -> int:
    """Π_∘ Cat_{deg(∘)} · Π_× |M_{bloco}|"""
    t = sif_decompose(sigma)
    value = 1
    for deg in t.white_degrees():
        value *= catalan(deg)
    for block in t.block_perms():
        value *= meander_set(block)
    return value


def sif_factorization_check(sigma: Sequence[int]) -> bool:
    return factorized_meander_set(sigma) == meander_set(sigma)


def count_sif(n: int) -> int:
    if n < 1:
        return 1 if n == 0 else 0
    return sum(1 for sigma in permutations(range(n)) if is_sif(sigma))


def sif_series_check(T: int, counts: Optional[Sequence[int]] = None) -> bool:
    """Σ n! t^n = I(t S(t)) até t^T, com I_0 = 1"""
    R = make_ring(("x",))
    if counts is None:
        counts = [count_sif(k) for k in range(T + 1)]
    S = TSeries.from_coeffs(R, T, [factorial(k) for k in range(T + 1)])
    I = TSeries.from_coeffs(R, T, list(counts))
    return S == series_compose(I, S.shift(1))


def sif_meander_counts(n: int) -> Dict[str, int]:
    """Σ_{σ SIF} |M_σ| ao lado do número de sistemas 2-irredutíveis"""
    from meanders.systems import count_irreducible
    total = sum(meander_set(sigma) for sigma in permutations(range(n)) if is_sif(sigma))
    return {"sif_meanders": total, "irreducible": count_irreducible(n)}
