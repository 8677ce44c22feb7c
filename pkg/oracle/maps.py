# oracle/maps.py
"""Mapas enraizados por força bruta.

Modelo orientável: 2n dardos, σ (rotação nos vértices) e α (arestas), faces
nos ciclos de σα. Modelo não orientado: 4n meio-lados e três emparelhamentos
(aresta, lado, canto); vértices nas órbitas de <canto, aresta> e faces nas
órbitas de <lado, canto>.
"""
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Optional, Sequence, Tuple

import networkx as nx
from sympy.polys.domains import QQ

from algebra.series import gen, make_ring
from config.settings import settings
from oracle.base_enumerator import BaseEnumerator
from oracle.permutations import (Perm, compose, cycles, is_fixed_point_free_involution, is_transitive, num_cycles,
                                 standard_involution)
from partitions.partition import Partition
from recurrences.table import GenusTable
from utils.errors import EnumapError, ResourceError, UsageError

CONSTRAINTS = ("none", "all_faces_deg_3", "bipartite", "one_face")
MARKS = ("genus", "vertices", "faces")


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def _check_marks(marks: Iterable[str]) -> Tuple[str, ...]:
    marks = tuple(marks)
    unknown = [m for m in marks if m not in MARKS]
    if unknown:
        raise UsageError(f"unknown marks {unknown}; expected a subset of {MARKS}")
    return marks


@dataclass(frozen=True)
class DartMap:
    """Mapa orientável rotulado: σ nos vértices, α involução sem pontos fixos"""

    sigma: Perm
    alpha: Perm

    def __post_init__(self):
        size = len(self.sigma)
        if len(self.alpha) != size or size % 2:
            raise UsageError("σ and α must act on the same even number of darts")
        if sorted(self.sigma) != list(range(size)):
            raise UsageError(f"σ is not a permutation: {self.sigma}")
        if not is_fixed_point_free_involution(self.alpha):
            raise UsageError(f"α is not a fixed-point-free involution: {self.alpha}")

    @property
    def n(self) -> int:
        return len(self.sigma) // 2

    @property
    def phi(self) -> Perm:
        return compose(self.sigma, self.alpha)

    @property
    def vertices(self) -> int:
        return num_cycles(self.sigma)

    @property
    def faces(self) -> int:
        return num_cycles(self.phi)

    @property
    def euler_characteristic(self) -> int:
        return self.vertices - self.n + self.faces

    @property
    def two_genus(self) -> int:
        return 2 - self.euler_characteristic

    def is_connected(self) -> bool:
        return is_transitive([self.sigma, self.alpha], len(self.sigma))

    def face_degrees(self) -> Partition:
        return Partition.from_parts(len(c) for c in cycles(self.phi))

    def vertex_colors(self) -> Optional[Tuple[int, int]]:
        """Tamanhos das duas classes de cor, ou None se o grafo não é bipartido"""
        owner = {}
        for k, cycle in enumerate(cycles(self.sigma)):
            for d in cycle:
                owner[d] = k
        G = nx.Graph()
        G.add_nodes_from(set(owner.values()))
        G.add_edges_from((owner[d], owner[self.alpha[d]]) for d in range(len(self.alpha)) if d < self.alpha[d])
        if not nx.is_bipartite(G):
            return None
        colors = nx.bipartite.color(G)
        white = sum(1 for c in colors.values() if c == 0)
        return white, len(colors) - white


@dataclass(frozen=True)
class MatchingTriple:
    """Três emparelhamentos perfeitos dos 4n meio-lados"""

    edge: Perm
    side: Perm
    corner: Perm

    def __post_init__(self):
        size = len(self.edge)
        if size % 4 or len(self.side) != size or len(self.corner) != size:
            raise UsageError("the three matchings must act on the same 4n half-sides")
        for name in ("edge", "side", "corner"):
            if not is_fixed_point_free_involution(getattr(self, name)):
                raise UsageError(f"the {name} matching is not a fixed-point-free involution")

    @classmethod
    def standard(cls, corner: Sequence[int]) -> "MatchingTriple":
        """lado = (4e, 4e+1)(4e+2, 4e+3), aresta = (4e, 4e+2)(4e+1, 4e+3)"""
        size = len(corner)
        return cls(tuple(i ^ 2 for i in range(size)), tuple(i ^ 1 for i in range(size)), tuple(corner))

    @property
    def n(self) -> int:
        return len(self.edge) // 4

    # cada órbita de duas involuções sem ponto fixo carrega dois ciclos do produto
    @property
    def vertices(self) -> int:
        return num_cycles(compose(self.corner, self.edge)) // 2

    @property
    def faces(self) -> int:
        return num_cycles(compose(self.side, self.corner)) // 2

    @property
    def two_genus(self) -> int:
        return 2 - (self.vertices - self.n + self.faces)

    def is_connected(self) -> bool:
        return is_transitive([self.edge, self.side, self.corner], len(self.edge))

    def is_orientable(self) -> bool:
        """O grafo dos três emparelhamentos é bipartido"""
        G = nx.Graph()
        G.add_nodes_from(range(len(self.edge)))
        for m in (self.edge, self.side, self.corner):
            G.add_edges_from((i, x) for i, x in enumerate(m) if i < x)
        return nx.is_bipartite(G)


def _marker_ring(names: Tuple[str, ...]):
    return make_ring(names) if names else None


class MapEnumerator(BaseEnumerator):
    """Mapas orientáveis enraizados, contados por gênero"""

    _pinned = False

    def __init__(self, threads: Optional[int] = None):
        super().__init__("rooted maps", settings.MAX_MAP_EDGES, threads)

    def check_normalization(self):
        """Um mapa com uma aresta: o laço e a aresta simples"""
        if MapEnumerator._pinned:
            return
        total = self.enumerate(1).total(1)
        if total != 2:
            self.logger.error(f"rooted map normalization broken: n=1 gives {total}")
            raise EnumapError(f"rooted map normalization gives {total} maps with one edge, expected 2")
        MapEnumerator._pinned = True

    def enumerate(self, n: int, constraints: str = "none", marks: Iterable[str] = ("genus",)) -> GenusTable:
        if constraints not in CONSTRAINTS:
            raise UsageError(f"unknown constraint {constraints!r}; expected one of {CONSTRAINTS}")
        if n < 1:
            raise UsageError(f"the number of edges must be positive, got {n}")
        marks = _check_marks(marks)
        names: Tuple[str, ...] = ()
        if "vertices" in marks:
            names += ("u", "v") if constraints == "bipartite" else ("u",)
        if "faces" in marks:
            names += ("z",)
        table = GenusTable(f"maps:{constraints}", _marker_ring(names), params={"n": n, "marks": marks})
        size = 2 * n

        if constraints == "one_face":
            self._check_size(n, settings.MAX_ONE_FACE_EDGES)
            phi = tuple((d + 1) % size for d in range(size))
            weight = QQ(1)
            items, objects = range(1, size), lambda partner: _with_faces(phi, partner)
        elif constraints == "all_faces_deg_3":
            if n % 3:
                return table
            faces = 2 * n // 3
            self._check_size(faces, settings.MAX_TRIANGULATION_FACES)
            phi = _triangles(faces)
            # permutações de faces do tipo 3^{2k}, divididas pelas (2n-1)! rotulagens
            weight = QQ(factorial(size), 3 ** faces * factorial(faces) * factorial(size - 1))
            items, objects = range(1, size), lambda partner: _with_faces(phi, partner)
        else:
            self._check_size(n)
            if n > 1:
                self.check_normalization()
            alpha = standard_involution(size)
            weight = QQ(_double_factorial(size - 1), factorial(size - 1))
            items, objects = range(size), lambda first: _with_edges(alpha, first)

        def record(part: GenusTable, m: DartMap):
            value = self._marker_value(part, m, constraints, marks)
            if value is not None:
                part.add(n, m.two_genus, value * weight)

        self._tally(table, items, objects, record)
        self.logger.info(f"Enumerated rooted maps n={n} ({constraints}): {len(table)} genus entries")
        return table

    @staticmethod
    def _marker_value(table: GenusTable, m: DartMap, constraints: str, marks: Tuple[str, ...]):
        R = table.ring
        value = R.one if R is not None else QQ(1)
        if constraints == "bipartite":
            colors = m.vertex_colors()
            if colors is None:
                return None
            if "vertices" in marks:
                # as duas colorações, cada uma com peso 1/2
                u, v = gen(R, "u"), gen(R, "v")
                a, b = colors
                value = (u ** a * v ** b + u ** b * v ** a) * QQ(1, 2)
        elif "vertices" in marks:
            value *= gen(R, "u") ** m.vertices
        if "faces" in marks:
            value *= gen(R, "z") ** m.faces
        return value


def _with_edges(alpha: Perm, first: int) -> Iterator[DartMap]:
    """σ conexas com σ(0) = first e α = (0 1)(2 3)⋯ fixada"""
    size = len(alpha)
    rest = [d for d in range(size) if d != first]
    for tail in permutations(rest):
        sigma = (first,) + tail
        if is_transitive([sigma, alpha], size):
            yield DartMap(sigma, alpha)


def _with_faces(phi: Perm, partner: int) -> Iterator[DartMap]:
    """φ fixada, α contém (0, partner); σ = φα"""
    for alpha in BaseEnumerator.matchings_through(len(phi), partner):
        if is_transitive([phi, alpha], len(phi)):
            yield DartMap(compose(phi, alpha), alpha)


def _triangles(faces: int) -> Perm:
    """(0 1 2)(3 4 5)⋯"""
    return tuple(3 * (d // 3) + (d + 1) % 3 for d in range(3 * faces))


def triangulation_maps(k: int) -> Iterator[DartMap]:
    """Triangulações rotuladas conexas com 2k faces e φ = (0 1 2)(3 4 5)⋯ fixada"""
    if k < 1:
        raise UsageError(f"a triangulation needs at least one pair of faces, got k = {k}")
    if 2 * k > settings.MAX_TRIANGULATION_FACES:
        raise ResourceError(f"triangulations are limited to {settings.MAX_TRIANGULATION_FACES} faces")
    phi = _triangles(2 * k)
    for partner in range(1, 6 * k):
        yield from _with_faces(phi, partner)


class NonOrientedMapEnumerator(BaseEnumerator):
    """Mapas enraizados em superfícies quaisquer pelo modelo de emparelhamentos"""

    _pinned = False

    def __init__(self, threads: Optional[int] = None):
        super().__init__("rooted non-oriented maps", settings.MAX_NONORIENTED_EDGES, threads)

    def check_normalization(self):
        """Uma aresta: laço e aresta na esfera, laço torcido no plano projetivo"""
        if NonOrientedMapEnumerator._pinned:
            return
        table = self.enumerate(1)
        if table.get(1, 0) != 2 or table.get(1, 1) != 1:
            self.logger.error(f"non-oriented normalization broken: {table.as_text()}")
            raise EnumapError("non-oriented rooting does not reproduce the one-edge counts 2 and 1")
        NonOrientedMapEnumerator._pinned = True

    def enumerate(self, n: int, marks: Iterable[str] = ("genus",), orientable_only: bool = False) -> GenusTable:
        if n < 1:
            raise UsageError(f"the number of edges must be positive, got {n}")
        marks = _check_marks(marks)
        self._check_size(n)
        if n > 1:
            self.check_normalization()
        names: Tuple[str, ...] = ()
        if "vertices" in marks:
            names += ("u",)
        if "faces" in marks:
            names += ("z",)
        table = GenusTable("nonoriented_maps", _marker_ring(names), orientable=orientable_only,
                           params={"n": n, "marks": marks})
        # enraizar = escolher um dos 4n meio-lados, módulo as (n-1)! 4^{n-1} rotulagens
        weight = QQ(1, factorial(n - 1) * 4 ** (n - 1))

        def objects(partner: int) -> Iterator[MatchingTriple]:
            for corner in self.matchings_through(4 * n, partner):
                triple = MatchingTriple.standard(corner)
                if triple.is_connected() and (not orientable_only or triple.is_orientable()):
                    yield triple

        def record(part: GenusTable, triple: MatchingTriple):
            R = part.ring
            value = R.one if R is not None else QQ(1)
            if "vertices" in marks:
                value *= gen(R, "u") ** triple.vertices
            if "faces" in marks:
                value *= gen(R, "z") ** triple.faces
            part.add(n, triple.two_genus, value * weight)

        self._tally(table, range(1, 4 * n), objects, record)
        self.logger.info(f"Enumerated rooted non-oriented maps n={n}: {len(table)} genus entries")
        return table


def count_rooted_maps(n: int, constraints: str = "none", marks: Iterable[str] = ("genus",),
                      threads: Optional[int] = None) -> GenusTable:
    return MapEnumerator(threads).enumerate(n, constraints, marks)


def count_rooted_nonoriented_maps(n: int, marks: Iterable[str] = ("genus",), orientable_only: bool = False,
                                  threads: Optional[int] = None) -> GenusTable:
    return NonOrientedMapEnumerator(threads).enumerate(n, marks, orientable_only)
