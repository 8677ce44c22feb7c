# oracle/permutations.py
"""Permutações em notação de palavra: a tupla (x(0), ..., x(n-1)).

O produto segue a composição de funções: ``compose(a, b)`` aplica b e depois a,
de modo que σ_0 σ_1 ⋯ σ_m é ``product([σ_0, ..., σ_m])``.
"""
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from networkx.utils import UnionFind

from partitions.partition import Partition

Perm = Tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(a: Sequence[int], b: Sequence[int]) -> Perm:
    return tuple(a[i] for i in b)


def product(perms: Sequence[Sequence[int]], n: int) -> Perm:
    out = identity(n)
    for p in perms:
        out = compose(out, p)
    return out


def inverse(p: Sequence[int]) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def transposition(n: int, a: int, b: int) -> Perm:
    out = list(range(n))
    out[a], out[b] = b, a
    return tuple(out)


def cyclic_shift(n: int, k: int = 1) -> Perm:
    """Δ_k: i -> i + k mod n"""
    return tuple((i + k) % n for i in range(n))


def cycles(p: Sequence[int]) -> List[Tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = p[i]
        out.append(tuple(cycle))
    return out


def num_cycles(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    count = 0
    for start in range(len(p)):
        if not seen[start]:
            count += 1
            i = start
            while not seen[i]:
                seen[i] = True
                i = p[i]
    return count


def cycle_type(p: Sequence[int]) -> Partition:
    return Partition.from_parts(len(c) for c in cycles(p))


def is_fixed_point_free_involution(p: Sequence[int]) -> bool:
    return all(p[i] != i and p[p[i]] == i for i in range(len(p)))


@lru_cache(maxsize=None)
def by_cycle_type(n: int) -> Dict[Partition, Tuple[Perm, ...]]:
    """S_n agrupado por classe de conjugação"""
    groups: Dict[Partition, List[Perm]] = {}
    for p in permutations(range(n)):
        groups.setdefault(cycle_type(p), []).append(p)
    return {lam: tuple(ps) for lam, ps in groups.items()}


def permutations_of_type(lam: Partition) -> Tuple[Perm, ...]:
    return by_cycle_type(lam.size).get(Partition(lam), ())


def representative(lam: Partition) -> Perm:
    """Ciclos consecutivos (0 ... λ_1-1)(λ_1 ... ) do tipo λ"""
    out = list(range(lam.size))
    start = 0
    for part in lam:
        for k in range(part):
            out[start + k] = start + (k + 1) % part
        start += part
    return tuple(out)


def perfect_matchings(points: Sequence[int]) -> Iterator[List[Tuple[int, int]]]:
    """Emparelhamentos perfeitos de uma lista de tamanho par, o primeiro ponto fixado antes"""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for pos, partner in enumerate(rest):
        for tail in perfect_matchings(rest[:pos] + rest[pos + 1:]):
            yield [(first, partner)] + tail


def involution(pairs: Iterable[Tuple[int, int]], size: int) -> Perm:
    out = list(range(size))
    for a, b in pairs:
        out[a], out[b] = b, a
    return tuple(out)


def standard_involution(size: int) -> Perm:
    """(0 1)(2 3)⋯"""
    return tuple(i ^ 1 for i in range(size))


def orbits(perms: Iterable[Sequence[int]], size: int, pairs: Iterable[Tuple[int, int]] = ()) -> List[set]:
    """Órbitas do grupo gerado, com pares extras já sabidos na mesma órbita"""
    uf = UnionFind(range(size))
    for p in perms:
        for i, x in enumerate(p):
            if i != x:
                uf.union(i, x)
    for a, b in pairs:
        uf.union(a, b)
    return [set(s) for s in uf.to_sets()]


def is_transitive(perms: Iterable[Sequence[int]], size: int, pairs: Iterable[Tuple[int, int]] = ()) -> bool:
    return size <= 1 or len(orbits(perms, size, pairs)) == 1
