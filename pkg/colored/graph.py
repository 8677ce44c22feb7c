# colored/graph.py
"""Grafos coloridos bipartidos guardados como vetores de permutações.

Uma aresta de cor c liga o branco v ao preto σ_c(v). Num grafo fechado as
cores são 0..d; numa bolha só aparecem as cores 1..d.
"""
from dataclasses import dataclass
from pathlib import Path
from random import Random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from oracle.permutations import Perm, compose, identity, inverse, num_cycles, orbits
from utils.errors import UsageError

FORMAT_HEADER = "# enumap colored graph v1"


def _check_perm(p: Sequence[int], n: int) -> Perm:
    p = tuple(int(x) for x in p)
    if len(p) != n or sorted(p) != list(range(n)):
        raise UsageError(f"{p} is not a permutation of {n} vertices")
    return p


@dataclass(frozen=True)
class ColoredGraph:
    """perms[i] é σ_{first + i}; first = 0 para grafos fechados"""

    perms: Tuple[Perm, ...]
    first: int = 0

    def __post_init__(self):
        if self.first not in (0, 1):
            raise UsageError(f"colors start at 0 or 1, got {self.first}")
        if self.d < 2:
            raise UsageError(f"colored graphs need d >= 2, got d = {self.d}")
        n = len(self.perms[0])
        object.__setattr__(self, "perms", tuple(_check_perm(p, n) for p in self.perms))

    @property
    def d(self) -> int:
        return self.first + len(self.perms) - 1

    @property
    def n(self) -> int:
        return len(self.perms[0])

    @property
    def colors(self) -> range:
        return range(self.first, self.d + 1)

    @property
    def is_closed(self) -> bool:
        return self.first == 0

    def sigma(self, c: int) -> Perm:
        if c not in self.colors:
            raise UsageError(f"color {c} outside {self.first}..{self.d}")
        return self.perms[c - self.first]

    def bicolored_cycles(self, a: int, b: int) -> int:
        return bicolored_cycles(self, a, b)

    def total_cycles(self) -> int:
        """Δ_{d-2}: ciclos bicoloridos somados sobre todos os pares de cores"""
        cs = list(self.colors)
        return sum(bicolored_cycles(self, a, b) for i, a in enumerate(cs) for b in cs[i + 1:])

    # --- conexidade ---

    def _white_moves(self) -> List[Perm]:
        ref = inverse(self.perms[0])
        return [compose(ref, p) for p in self.perms[1:]]

    def components(self) -> List[List[int]]:
        """Brancos de cada componente conexa, ordenados pelo menor rótulo"""
        if self.n == 0:
            return []
        return sorted(sorted(s) for s in orbits(self._white_moves(), self.n))

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def restrict(self, whites: Iterable[int]) -> "ColoredGraph":
        """Subgrafo sobre uma união de componentes, reindexado pelos rótulos em ordem"""
        whites = sorted(whites)
        blacks = sorted(self.perms[0][w] for w in whites)
        bpos = {b: i for i, b in enumerate(blacks)}
        perms = []
        for p in self.perms:
            try:
                perms.append(tuple(bpos[p[w]] for w in whites))
            except KeyError:
                raise UsageError("restriction must be a union of connected components") from None
        return type(self)(tuple(perms), self.first)

    def split(self) -> List["ColoredGraph"]:
        return [self.restrict(c) for c in self.components()]

    def relabel(self, whites: Sequence[int], blacks: Sequence[int]) -> "ColoredGraph":
        """Branco v vira whites[v], preto j vira blacks[j]"""
        n = self.n
        _check_perm(whites, n)
        _check_perm(blacks, n)
        w_inv = inverse(whites)
        return type(self)(tuple(tuple(blacks[p[w_inv[v]]] for v in range(n)) for p in self.perms), self.first)

    # --- operações com a cor 0 ---

    def bubble(self) -> "Bubble":
        """Apaga as arestas de cor 0"""
        if not self.is_closed:
            raise UsageError("the graph has no color 0")
        return Bubble(self.perms[1:])

    def with_color_zero(self, pairing: Sequence[int]) -> "ColoredGraph":
        if not self.is_closed:
            raise UsageError("the graph has no color 0")
        return ColoredGraph((_check_perm(pairing, self.n),) + self.perms[1:])


@dataclass(frozen=True)
class Bubble(ColoredGraph):
    """Cores 1..d; fechar com um emparelhamento π põe σ_0 = π"""

    first: int = 1

    def close(self, pairing: Sequence[int]) -> ColoredGraph:
        return ColoredGraph((_check_perm(pairing, self.n),) + self.perms)


def bicolored_cycles(G: ColoredGraph, a: int, b: int) -> int:
    """Número de ciclos de σ_a^{-1} σ_b"""
    if a == b:
        raise UsageError(f"bicolored cycles need two distinct colors, got {a} twice")
    return num_cycles(compose(inverse(G.sigma(a)), G.sigma(b)))


def C0(G: ColoredGraph) -> int:
    """Ciclos bicoloridos que contêm a cor 0"""
    if not G.is_closed:
        raise UsageError("C_0 is defined for closed graphs")
    return sum(bicolored_cycles(G, 0, c) for c in range(1, G.d + 1))


def disjoint_union(graphs: Sequence[ColoredGraph]) -> ColoredGraph:
    if not graphs:
        raise UsageError("nothing to join")
    first, d = graphs[0].first, graphs[0].d
    if any(g.first != first or g.d != d for g in graphs):
        raise UsageError("disjoint union needs graphs with the same colors")
    perms: List[List[int]] = [[] for _ in graphs[0].perms]
    offset = 0
    for g in graphs:
        for i, p in enumerate(g.perms):
            perms[i].extend(x + offset for x in p)
        offset += g.n
    return type(graphs[0])(tuple(tuple(p) for p in perms), first)


# --- formas canônicas ---

def _labeling(G: ColoredGraph, root: int) -> Optional[Tuple[Perm, ...]]:
    """Rotulagem por busca em largura a partir do branco root (grafo conexo)"""
    inverses = [inverse(p) for p in G.perms]
    wlabel = {root: 0}
    blabel: Dict[int, int] = {}
    queue = [root]
    while queue:
        w = queue.pop(0)
        for p in G.perms:
            b = p[w]
            if b not in blabel:
                blabel[b] = len(blabel)
                for r in inverses:
                    v = r[b]
                    if v not in wlabel:
                        wlabel[v] = len(wlabel)
                        queue.append(v)
    if len(wlabel) != G.n:
        return None
    return tuple(tuple(blabel[p[v]] for v in sorted(wlabel, key=wlabel.get)) for p in G.perms)


def canonical_form(G: ColoredGraph) -> Tuple:
    """Invariante completo sob reetiquetagem de brancos e pretos"""
    parts = []
    for comp in G.components():
        H = G.restrict(comp)
        parts.append(min(_labeling(H, r) for r in range(H.n)))
    return (G.first, G.d, tuple(sorted(parts)))


def automorphism_count(G: ColoredGraph) -> int:
    """Automorfismos coloridos de um grafo conexo"""
    if not G.is_connected():
        raise UsageError("automorphisms are counted for connected graphs")
    if G.n == 0:
        return 1
    ref = _labeling(G, 0)
    return sum(1 for r in range(G.n) if _labeling(G, r) == ref)


# --- construção ---

def two_vertex_graph(d: int) -> ColoredGraph:
    return ColoredGraph(tuple(identity(1) for _ in range(d + 1)))


def random_colored_graph(d: int, n: int, rng: Random) -> ColoredGraph:
    if n < 1:
        raise UsageError(f"a colored graph needs at least one white vertex, got {n}")
    perms = []
    for _ in range(d + 1):
        p = list(range(n))
        rng.shuffle(p)
        perms.append(tuple(p))
    return ColoredGraph(tuple(perms))


# --- formato texto ---

def format_graph(G: ColoredGraph) -> str:
    """Cabeçalho, "d n" e uma linha por cor com as imagens em base 1"""
    lines = [FORMAT_HEADER, f"{G.d} {G.n}"]
    for p in G.perms:
        lines.append(" ".join(str(x + 1) for x in p))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> ColoredGraph:
    """d linhas de permutação dão uma bolha; d + 1 dão um grafo fechado"""
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise UsageError("expected a 'd n' header line")
    try:
        d, n = int(rows[0][0]), int(rows[0][1])
        perms = tuple(tuple(int(x) - 1 for x in row) for row in rows[1:])
    except ValueError as exc:
        raise UsageError(f"malformed colored graph: {exc}") from None
    if any(len(p) != n for p in perms):
        raise UsageError(f"every permutation line must list {n} images")
    if len(perms) == d:
        return Bubble(perms)
    if len(perms) == d + 1:
        return ColoredGraph(perms)
    raise UsageError(f"expected {d} or {d + 1} permutation lines, got {len(perms)}")


def read_graph(path: Union[str, Path]) -> ColoredGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read colored graph {path}: {exc}") from None
    return parse_graph(text)


def write_graph(G: ColoredGraph, path: Union[str, Path]):
    Path(path).write_text(format_graph(G), encoding="utf-8")
