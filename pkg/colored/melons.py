# colored/melons.py
"""Inserções melônicas e o teste de melonicidade por remoção gulosa de dipolos."""
from random import Random
from typing import List, Optional, Tuple

from colored.graph import ColoredGraph, two_vertex_graph
from utils.errors import UsageError
from utils.logger import app_logger


def insert_dipole(G: ColoredGraph, c: int, w: int) -> ColoredGraph:
    """Insere um d-dipolo na aresta de cor c do branco w.

    O novo par (branco n, preto n) fica ligado por todas as cores menos c;
    w passa a ir ao novo preto e o novo branco herda o antigo vizinho σ_c(w).
    """
    if not 0 <= w < G.n:
        raise UsageError(f"white vertex {w} outside 0..{G.n - 1}")
    if c not in G.colors:
        raise UsageError(f"color {c} outside {G.first}..{G.d}")
    n = G.n
    perms = []
    for color, p in zip(G.colors, G.perms):
        p = list(p) + [n]
        if color == c:
            p[n], p[w] = p[w], n
        perms.append(tuple(p))
    return type(G)(tuple(perms), G.first)


def random_melonic(d: int, n: int, rng: Random) -> ColoredGraph:
    """Grafo melônico fechado com n brancos, a partir do grafo de dois vértices"""
    if n < 1:
        raise UsageError(f"a melonic graph needs n >= 1, got {n}")
    G = two_vertex_graph(d)
    while G.n < n:
        G = insert_dipole(G, rng.randrange(d + 1), rng.randrange(G.n))
    return G


def find_dipole(G: ColoredGraph) -> Optional[Tuple[int, int, int]]:
    """(branco, preto, cor que falta) de um par ligado por todas as cores menos uma"""
    k = len(G.perms)
    for w in range(G.n):
        counts = {}
        for p in G.perms:
            counts[p[w]] = counts.get(p[w], 0) + 1
        for b, m in counts.items():
            if m == k - 1:
                missing = next(c for c, p in zip(G.colors, G.perms) if p[w] != b)
                return w, b, missing
    return None


def remove_dipole(G: ColoredGraph, w: int, b: int, c: int) -> ColoredGraph:
    """Apaga o par (w, b) e religa pela cor c o vizinho do preto b ao vizinho do branco w"""
    sig = G.sigma(c)
    partner = next(v for v in range(G.n) if sig[v] == b)
    target = sig[w]
    whites = [v for v in range(G.n) if v != w]
    blacks = [j for j in range(G.n) if j != b]
    bpos = {j: i for i, j in enumerate(blacks)}
    perms: List[Tuple[int, ...]] = []
    for color, p in zip(G.colors, G.perms):
        image = dict((v, p[v]) for v in whites)
        if color == c:
            image[partner] = target
        perms.append(tuple(bpos[image[v]] for v in whites))
    return type(G)(tuple(perms), G.first)


def is_melonic(G: ColoredGraph) -> bool:
    """Conexo e redutível ao grafo de dois vértices (n = 1) removendo dipolos"""
    if not G.is_connected():
        return False
    steps = 0
    while G.n > 1:
        dipole = find_dipole(G)
        if dipole is None:
            app_logger.debug(f"no dipole left after {steps} removals, n = {G.n}")
            return False
        G = remove_dipole(G, *dipole)
        steps += 1
    return True
