# colored/boundary.py
"""Bolhas de bordo e a expansão de Schwinger-Dyson.

Um subgrafo de bolhas é uma bolha (possivelmente desconexa) mais algumas
arestas de cor 0. Contrair todas elas dá a bolha de bordo; os vértices que
sobram são os que não tinham aresta de cor 0, e uma aresta de cor c liga dois
deles quando há um caminho de cores {0, c} entre os dois.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from colored.graph import Bubble, canonical_form, disjoint_union
from utils.errors import UsageError
from utils.logger import app_logger

Edge = Tuple[int, int]


@dataclass(frozen=True)
class BubbleSubgraph:
    """Bolha com arestas de cor 0 parciais (branco, preto)"""

    bubble: Bubble
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        edges = tuple((int(w), int(b)) for w, b in self.edges)
        whites = [w for w, _ in edges]
        blacks = [b for _, b in edges]
        n = self.bubble.n
        if any(not 0 <= x < n for x in whites + blacks):
            raise UsageError(f"color-0 edge endpoint outside 0..{n - 1}")
        if len(set(whites)) != len(whites) or len(set(blacks)) != len(blacks):
            raise UsageError("color-0 edges must form a partial matching")
        object.__setattr__(self, "edges", edges)


def contract(sig: List[Dict[int, int]], inv: List[Dict[int, int]], edge: Edge):
    """Contrai uma aresta de cor 0 no lugar; ciclos {0, c} fechados somem"""
    w, b = edge
    for s, r in zip(sig, inv):
        w1, b1 = r[b], s[w]
        if w1 != w:
            s[w1] = b1
            r[b1] = w1
        del s[w]
        del r[b]


def boundary_bubble(H: BubbleSubgraph, order: Optional[Sequence[Edge]] = None) -> Bubble:
    """Contrai as arestas de cor 0 na ordem dada; os sobreviventes mantêm a ordem dos rótulos"""
    edges = list(H.edges) if order is None else [tuple(e) for e in order]
    if sorted(edges) != sorted(H.edges):
        raise UsageError("the contraction order must list every color-0 edge once")
    sig = [dict(enumerate(p)) for p in H.bubble.perms]
    inv = [{b: w for w, b in s.items()} for s in sig]
    for e in edges:
        contract(sig, inv, e)
    whites = sorted(sig[0])
    blacks = sorted(inv[0])
    bpos = {b: i for i, b in enumerate(blacks)}
    return Bubble(tuple(tuple(bpos[s[w]] for w in whites) for s in sig))


def bubble_multiset(B: Bubble) -> Counter:
    """Componentes conexas como multiconjunto de formas canônicas"""
    return Counter(canonical_form(C) for C in B.split())


@dataclass(frozen=True)
class SDTerm:
    """Um termo da equação: x^exponent ⟨bubble⟩, com a origem (tipo, índice, preto)"""

    exponent: int
    bubble: Bubble
    source: Tuple


def self_contraction(B: Bubble, black: int, root: int = 0) -> Bubble:
    return boundary_bubble(BubbleSubgraph(B, ((root, black),)))


def bridge_contraction(B: Bubble, other: Bubble, black: int, root: int = 0) -> Bubble:
    """B_v * B_{i, v̄}: a aresta de cor 0 vai da raiz de B ao preto v̄ da outra bolha"""
    if not 0 <= black < other.n:
        raise UsageError(f"black vertex {black} outside 0..{other.n - 1}")
    union = disjoint_union([B, other])
    return boundary_bubble(BubbleSubgraph(union, ((root, B.n + black),)))


def sd_expand(B: Bubble, available: Iterable[Bubble], root: int = 0) -> List[SDTerm]:
    """Lado direito da equação de Schwinger-Dyson para a bolha enraizada no branco root.

    Autocontrações: uma por preto v̄ de B, com expoente C(v, v̄) (cores entre v e v̄).
    Contrações-ponte: uma por preto de cada bolha disponível, com expoente 0.
    """
    if not 0 <= root < B.n:
        raise UsageError(f"root {root} outside 0..{B.n - 1}")
    terms = []
    for black in range(B.n):
        exponent = sum(1 for p in B.perms if p[root] == black)
        terms.append(SDTerm(exponent, self_contraction(B, black, root), ("self", black)))
    for i, other in enumerate(available):
        if other.d != B.d:
            raise UsageError(f"bubble {i} has d = {other.d}, expected {B.d}")
        for black in range(other.n):
            terms.append(SDTerm(0, bridge_contraction(B, other, black, root), ("bridge", i, black)))
    app_logger.debug(f"Schwinger-Dyson expansion of a {B.n}-white bubble: {len(terms)} terms")
    return terms
