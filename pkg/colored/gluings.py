# colored/gluings.py
"""Emparelhamentos maximais, colagens exaustivas e o modelo quártico.

Uma colagem de bolhas é fechada por σ_0; o número de ciclos bicoloridos
C_0 = Σ_c #ciclos(σ_0^{-1} σ_c) é o que se maximiza. As buscas percorrem
todo S_n com o ramo mais externo dado pela imagem do branco 0.
"""
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind
from sympy.polys.domains import QQ

from algebra.series import TSeries, gen, make_ring, series_pow
from colored.bubbles import quartic_bubble
from colored.graph import Bubble, ColoredGraph, automorphism_count, disjoint_union
from config.settings import settings
from oracle.base_enumerator import BaseEnumerator
from oracle.maps import DartMap
from oracle.permutations import Perm, compose, cycles, inverse, num_cycles
from utils.errors import UsageError
from utils.logger import app_logger

Pairing = Perm


def pairing_cycles(pairing: Sequence[int], perms: Sequence[Perm]) -> int:
    """C_0 do grafo fechado por σ_0 = pairing"""
    inv = inverse(pairing)
    return sum(num_cycles(compose(inv, p)) for p in perms)


def _pairings(n: int, first: int) -> Iterable[Pairing]:
    rest = [b for b in range(n) if b != first]
    for tail in permutations(rest):
        yield (first,) + tail


@dataclass
class _Branch:
    best: int = -1
    maximizers: List[Pairing] = field(default_factory=list)
    histogram: Counter = field(default_factory=Counter)
    classified: Counter = field(default_factory=Counter)

    def add(self, pairing: Pairing, value: int):
        self.histogram[value] += 1
        if value > self.best:
            self.best, self.maximizers = value, [pairing]
        elif value == self.best:
            self.maximizers.append(pairing)


def _merge(branches: Iterable[_Branch]) -> _Branch:
    out = _Branch()
    for part in branches:
        out.histogram.update(part.histogram)
        out.classified.update(part.classified)
        if part.best > out.best:
            out.best, out.maximizers = part.best, list(part.maximizers)
        elif part.best == out.best:
            out.maximizers.extend(part.maximizers)
    return out


# --- G^max de uma bolha ---

class PairingEnumerator(BaseEnumerator):
    """Todos os emparelhamentos π de uma bolha e os que maximizam C_0"""

    def __init__(self, threads: Optional[int] = None):
        super().__init__("bubble pairings", settings.MAX_GMAX_VERTICES, threads)

    def enumerate(self, B: Bubble) -> Tuple[int, List[Pairing]]:
        if B.is_closed:
            raise UsageError("pairings are searched on bubbles (colors 1..d)")
        self._check_size(B.n)

        def branch(first: int) -> _Branch:
            part = _Branch()
            for pi in _pairings(B.n, first):
                part.add(pi, pairing_cycles(pi, B.perms))
            return part

        result = _merge(self._split(branch, range(B.n)))
        self.logger.debug(f"gmax over {B.n} whites: C = {result.best}, {len(result.maximizers)} maximizers")
        return result.best, sorted(result.maximizers)


@lru_cache(maxsize=256)
def _gmax_cached(B: Bubble) -> Tuple[int, Tuple[Pairing, ...]]:
    value, maximizers = PairingEnumerator().enumerate(B)
    return value, tuple(maximizers)


def gmax(B: Bubble, threads: Optional[int] = None) -> Tuple[int, List[Pairing]]:
    """(C(B), emparelhamentos maximizantes em ordem lexicográfica)"""
    if threads is not None:
        return PairingEnumerator(threads).enumerate(B)
    value, maximizers = _gmax_cached(B)
    return value, list(maximizers)


# --- colagens conexas ---

@dataclass
class GluingCensus:
    """Resultado de uma busca exaustiva de colagens conexas"""

    bubbles: Tuple[Tuple[Bubble, int], ...]
    union: Bubble
    c_max: int
    maximizers: List[Pairing]
    histogram: Dict[int, int]
    classified: Dict[Tuple[int, bool], int]

    @property
    def labeled(self) -> int:
        return len(self.maximizers)

    @property
    def rooted(self) -> int:
        """rotuladas · W / Π n_i! |Aut B_i|^{n_i}, com W brancos no total"""
        symmetry = 1
        for B, count in self.bubbles:
            symmetry *= factorial(count) * automorphism_count(B) ** count
        value = QQ(self.labeled * self.union.n, symmetry)
        if value.denominator != 1:
            raise UsageError(f"rooted count {value} is not an integer")
        return int(value.numerator)

    def graph(self, pairing: Sequence[int]) -> ColoredGraph:
        return self.union.close(pairing)


class GluingEnumerator(BaseEnumerator):
    """Colagens conexas de cópias rotuladas das bolhas dadas"""

    def __init__(self, threads: Optional[int] = None):
        super().__init__("bubble gluings", settings.MAX_GMAX_VERTICES, threads)

    def enumerate(self, bubbles: Sequence[Tuple[Bubble, int]],
                  classify: Optional[Callable[[Pairing], bool]] = None) -> GluingCensus:
        bubbles = tuple((B, int(count)) for B, count in bubbles)
        if not bubbles or any(count < 0 for _, count in bubbles):
            raise UsageError("gluings need bubbles with non-negative multiplicities")
        if any(not B.is_connected() or B.is_closed for B, _ in bubbles):
            raise UsageError("gluings are built from connected bubbles")
        copies = [B for B, count in bubbles for _ in range(count)]
        if not copies:
            raise UsageError("at least one bubble copy is needed")
        union = disjoint_union(copies)
        W = union.n
        self._check_size(W)
        owner = []
        for k, B in enumerate(copies):
            owner.extend([k] * B.n)

        def connected(pi: Pairing) -> bool:
            uf = UnionFind(range(len(copies)))
            for w, b in enumerate(pi):
                uf.union(owner[w], owner[b])
            return len(list(uf.to_sets())) == 1

        def branch(first: int) -> _Branch:
            part = _Branch()
            for pi in _pairings(W, first):
                if not connected(pi):
                    continue
                value = pairing_cycles(pi, union.perms)
                part.add(pi, value)
                if classify is not None:
                    part.classified[(value, bool(classify(pi)))] += 1
            return part

        result = _merge(self._split(branch, range(W)))
        census = GluingCensus(bubbles, union, result.best, sorted(result.maximizers),
                              dict(result.histogram), dict(result.classified))
        self.logger.info(f"Gluing census over {W} whites: C_max = {census.c_max}, "
                         f"{census.labeled} labeled maximizers")
        return census


def gluing_census(bubbles: Sequence[Tuple[Bubble, int]], threads: Optional[int] = None) -> GluingCensus:
    return GluingEnumerator(threads).enumerate(bubbles)


# --- propriedade do 2-corte maximal ---

def max2cut_check(G: ColoredGraph, whites: Iterable[int]) -> bool:
    """A bolha de G sobre estes brancos tem um maximizante cujos pares estão
    ligados por cor 0 ou presos a uma 2-ligação de cor 0."""
    if not G.is_closed:
        raise UsageError("the maximal 2-cut property is checked on closed graphs")
    whites = sorted(whites)
    local = G.bubble().restrict(whites)
    blacks = sorted(G.sigma(1)[w] for w in whites)
    inside_w, inside_b = set(whites), set(blacks)
    s0 = G.sigma(0)
    s0_inv = inverse(s0)

    rest = nx.Graph()
    rest.add_nodes_from(("w", w) for w in range(G.n) if w not in inside_w)
    rest.add_nodes_from(("b", b) for b in range(G.n) if b not in inside_b)
    for p in G.perms:
        rest.add_edges_from((("w", w), ("b", p[w])) for w in range(G.n)
                            if w not in inside_w and p[w] not in inside_b)
    component = {}
    for k, nodes in enumerate(nx.connected_components(rest)):
        for node in nodes:
            component[node] = k
    bonds = Counter()
    for w in whites:
        if s0[w] not in inside_b:
            bonds[component[("b", s0[w])]] += 1
    for b in blacks:
        if s0_inv[b] not in inside_w:
            bonds[component[("w", s0_inv[b])]] += 1

    def attached(v: int, target: int) -> bool:
        if s0[v] == target:
            return True
        out, back = s0[v], s0_inv[target]
        if out in inside_b or back in inside_w:
            return False
        k = component[("b", out)]
        return k == component[("w", back)] and bonds[k] == 2

    _, maximizers = gmax(local)
    for pi in maximizers:
        if all(attached(whites[v], blacks[pi[v]]) for v in range(len(whites))):
            return True
    return False


# --- 2-ligações ---

def flip_two_bond(G: ColoredGraph, w1: int, w2: int) -> Tuple[ColoredGraph, ColoredGraph]:
    """Troca σ_0(w1) e σ_0(w2); se isso desconecta G, devolve (G_L ∋ w1, G_R ∋ w2)"""
    if w1 == w2:
        raise UsageError("a 2-bond needs two distinct color-0 edges")
    s0 = list(G.sigma(0))
    s0[w1], s0[w2] = s0[w2], s0[w1]
    H = G.with_color_zero(s0)
    parts = H.components()
    if len(parts) != 2 or not G.is_connected():
        raise UsageError(f"color-0 edges at whites {w1} and {w2} are not a 2-bond")
    left = next(c for c in parts if w1 in c)
    right = next(c for c in parts if w2 in c)
    if left is right:
        raise UsageError(f"color-0 edges at whites {w1} and {w2} are not a 2-bond")
    return H.restrict(left), H.restrict(right)


def two_bonds(G: ColoredGraph) -> List[Tuple[int, int]]:
    """Pares de brancos cujas arestas de cor 0 formam um corte de duas arestas"""
    out = []
    for w1 in range(G.n):
        for w2 in range(w1 + 1, G.n):
            s0 = list(G.sigma(0))
            s0[w1], s0[w2] = s0[w2], s0[w1]
            if len(G.with_color_zero(s0).components()) == 2:
                out.append((w1, w2))
    return out


def join_by_two_bond(left: ColoredGraph, right: ColoredGraph, w_left: int, w_right: int) -> ColoredGraph:
    """Operação inversa do flip: cruza σ_0 nos brancos dados de cada lado"""
    union = disjoint_union([left, right])
    s0 = list(union.sigma(0))
    a, b = w_left, left.n + w_right
    s0[a], s0[b] = s0[b], s0[a]
    return union.with_color_zero(s0)


# --- série das árvores ---

@dataclass(frozen=True)
class TreeBubble:
    """Bolha vista pela série K: nome da variável, |G^max| e número de vértices"""

    name: str
    maximizers: int
    vertices: int

    @classmethod
    def from_bubble(cls, name: str, B: Bubble) -> "TreeBubble":
        _, maximizers = gmax(B)
        return cls(name, len(maximizers), 2 * B.n)


def tree_series_K(bubbles: Sequence[TreeBubble], T: int) -> TSeries:
    """K = 1 + t Σ_i p_i |G^max(B_i)| K^{v_i/2}; o grau em t é o número de bolhas"""
    if not bubbles:
        raise UsageError("the tree series needs at least one bubble")
    for b in bubbles:
        if b.vertices % 2:
            raise UsageError(f"bubble {b.name} has an odd number of vertices {b.vertices}")
    R = make_ring(tuple(b.name for b in bubbles))
    one = TSeries.one(R, T)
    K = one
    for _ in range(T + 1):
        step = TSeries.zero(R, T)
        for b in bubbles:
            step = step + series_pow(K, b.vertices // 2).scale(gen(R, b.name) * b.maximizers)
        K = one + step.shift(1)
    return K


def tree_critical_point(maximizers: int, half_vertices: int):
    """Singularidade de K = 1 + g p K^k: p_c = (k-1)^{k-1} / (g k^k)"""
    k = half_vertices
    if k < 2 or maximizers < 1:
        raise UsageError(f"need k >= 2 and g >= 1, got k = {k}, g = {maximizers}")
    return QQ((k - 1) ** (k - 1), maximizers * k ** k)


# --- modelo quártico ---

def gurau_bound(cset: Iterable[int], d: int) -> int:
    """Cota α(Q(c)) <= |c|(d - |c|) vinda do grau de Gurau"""
    c = len(set(cset))
    return c * (d - c)


def quartic_scaling(cset: Iterable[int], d: int) -> int:
    """Valor exato α(Q(c)) = d - |c| = C(Q(c)) - d"""
    return d - len(set(cset))


def quartic_union(color_sets: Sequence[Iterable[int]], counts: Sequence[int], d: int) -> Tuple[Bubble, List[frozenset]]:
    """Cópias de Q(c_i); a bolha k ocupa os brancos 2k e 2k+1"""
    if len(color_sets) != len(counts):
        raise UsageError("one multiplicity per color set is needed")
    labels: List[frozenset] = []
    copies = []
    for cset, count in zip(color_sets, counts):
        for _ in range(count):
            copies.append(quartic_bubble(cset, d))
            labels.append(frozenset(cset))
    if not copies:
        raise UsageError("at least one quartic bubble is needed")
    return disjoint_union(copies), labels


def quartic_map(G: ColoredGraph, labels: Sequence[frozenset]) -> DartMap:
    """J(G): dardos nos brancos, uma aresta por bolha, vértices nos ciclos de σ_0^{-1}·parceiro"""
    if G.n != 2 * len(labels):
        raise UsageError(f"expected {2 * len(labels)} whites, got {G.n}")
    partner = []
    for w in range(G.n):
        c = min(set(G.colors) - {0} - labels[w // 2])
        partner.append(G.sigma(c)[w])
    sigma = compose(inverse(G.sigma(0)), tuple(partner))
    alpha = tuple(w ^ 1 for w in range(G.n))
    return DartMap(sigma, alpha)


def submap_faces(m: DartMap, edges: Iterable[int]) -> int:
    """Faces do submapa com as arestas dadas e todos os vértices (isolados contam uma face)"""
    keep = set()
    for e in edges:
        keep.update((2 * e, 2 * e + 1))
    owner = {}
    rotation = {}
    for k, cyc in enumerate(cycles(m.sigma)):
        kept = [x for x in cyc if x in keep]
        for x in cyc:
            owner[x] = k
        for i, x in enumerate(kept):
            rotation[x] = kept[(i + 1) % len(kept)]
    isolated = len({owner[x] for x in owner}) - len({owner[x] for x in keep})
    seen, faces = set(), 0
    for x in keep:
        if x in seen:
            continue
        faces += 1
        y = x
        while y not in seen:
            seen.add(y)
            y = rotation[m.alpha[y]]
    return faces + isolated


def colored_faces(m: DartMap, labels: Sequence[frozenset], d: int) -> int:
    """Σ_c F(m_c), m_c com as arestas cujo conjunto de cores contém c"""
    return sum(submap_faces(m, [e for e, c in enumerate(labels) if color in c]) for color in range(1, d + 1))


def is_melono_planar(m: DartMap, labels: Sequence[frozenset], d: int) -> bool:
    """Planar, arestas com |c| < d/2 são pontes e blocos distintos só se tocam em vértices de corte"""
    if m.two_genus != 0 or not m.is_connected():
        return False
    owner = {}
    for k, cyc in enumerate(cycles(m.sigma)):
        for x in cyc:
            owner[x] = k
    ends = [(owner[2 * e], owner[2 * e + 1]) for e in range(len(labels))]
    simple = nx.Graph()
    simple.add_nodes_from(set(owner.values()))
    multiplicity = Counter()
    for u, v in ends:
        if u != v:
            simple.add_edge(u, v)
            multiplicity[frozenset((u, v))] += 1
    bridges = {frozenset(e) for e in nx.bridges(simple)}
    for (u, v), cset in zip(ends, labels):
        if 2 * len(cset) < d:
            key = frozenset((u, v))
            if u == v or multiplicity[key] != 1 or key not in bridges:
                return False
    for block in nx.biconnected_components(simple):
        colors = {cset for (u, v), cset in zip(ends, labels) if u != v and u in block and v in block}
        if len(colors) > 1:
            return False
    return True


@dataclass
class QuarticReport:
    d: int
    color_sets: Tuple[frozenset, ...]
    counts: Tuple[int, ...]
    c_max: int
    expected: int
    census: GluingCensus

    @property
    def agrees(self) -> bool:
        """Maximais ⇔ estrutura de mapa planar colorido"""
        return all(flag == (value == self.c_max) for (value, flag) in self.census.classified)

    @property
    def ok(self) -> bool:
        return self.c_max == self.expected and self.agrees


def quartic_model_check(color_sets: Sequence[Iterable[int]], counts: Sequence[int], d: int,
                        threads: Optional[int] = None) -> QuarticReport:
    """C_max = d + Σ (d - |c_i|) n_i e a caracterização dos maximizantes via J"""
    color_sets = tuple(frozenset(c) for c in color_sets)
    counts = tuple(int(n) for n in counts)
    union, labels = quartic_union(color_sets, counts, d)

    def classify(pi: Pairing) -> bool:
        return is_melono_planar(quartic_map(union.close(pi), labels), labels, d)

    bubbles = [(quartic_bubble(c, d), n) for c, n in zip(color_sets, counts) if n]
    census = GluingEnumerator(threads).enumerate(bubbles, classify)
    expected = d + sum((d - len(c)) * n for c, n in zip(color_sets, counts))
    report = QuarticReport(d, color_sets, counts, census.c_max, expected, census)
    if not report.ok:
        app_logger.error(f"quartic model check failed: C_max {census.c_max} vs {expected}, "
                         f"classes {sorted(census.classified.items())}")
    return report
