# oracle/factorizations.py
"""Contagem exaustiva de fatorações da identidade em S_n.

Fatorações simples σ_0 σ_1 ⋯ σ_m = 1 com classes prescritas, e fatorações
σ_{-2} σ_{-1} ρ_0 ⋯ ρ_{s-1} = 1 em que os ρ_r são corridas de transposições,
monótonas ou livres.
"""
from collections import Counter
from functools import lru_cache
from itertools import product as cartesian
from typing import List, Optional, Sequence, Tuple

from config.settings import settings
from oracle.base_enumerator import BaseEnumerator
from oracle.permutations import (Perm, compose, identity, inverse, is_transitive, permutations_of_type,
                                 product, representative, transposition)
from partitions.partition import Partition, class_size
from utils.errors import UsageError, require


def _as_partitions(classes: Sequence) -> List[Partition]:
    out = [c if isinstance(c, Partition) else Partition.from_parts(c) for c in classes]
    require(bool(out), "at least one conjugacy class is required")
    n = out[0].size
    require(all(c.size == n for c in out), f"all classes must have size {n}: {out}")
    return out


def _merge(blocks: Tuple[int, ...], a: int, b: int) -> Tuple[int, ...]:
    """Blocos rotulados pelo menor elemento; une os blocos de a e b"""
    x, y = blocks[a], blocks[b]
    if x == y:
        return blocks
    lo, hi = min(x, y), max(x, y)
    return tuple(lo if k == hi else k for k in blocks)


def _block_pairs(blocks: Tuple[int, ...]) -> List[Tuple[int, int]]:
    return [(i, k) for i, k in enumerate(blocks) if i != k]


class FactorizationEnumerator(BaseEnumerator):
    """Busca em profundidade sobre S_n com poda pelo tipo de ciclo"""

    def __init__(self, threads: Optional[int] = None):
        super().__init__("factorizations", settings.MAX_FACTORIZATION_N, threads)

    def enumerate(self, classes: Sequence, transitive: bool = False) -> int:
        classes = _as_partitions(classes)
        n = classes[0].size
        self._check_size(n)
        if len(classes) == 1:
            trivial = classes[0] == Partition([1] * n)
            return int(trivial and (not transitive or n <= 1))
        # o problema é central: fixa σ_0 num representante e multiplica por |C_0|
        first = representative(classes[0])
        last = classes[-1]
        middle = classes[1:-1]

        def closes(perms: List[Perm]) -> int:
            closing = inverse(compose(first, product(perms, n)))
            if closing not in _type_set(last):
                return 0
            if transitive and not is_transitive([first, closing] + perms, n):
                return 0
            return 1

        if not middle:
            count = closes([])
        else:
            def branch(sigma1: Perm) -> int:
                rest = [permutations_of_type(c) for c in middle[1:]]
                return sum(closes([sigma1] + list(tail)) for tail in cartesian(*rest))

            count = sum(self._split(branch, permutations_of_type(middle[0])))
        total = count * class_size(classes[0])
        self.logger.debug(f"factorizations {[tuple(c) for c in classes]}: {total}")
        return total


class RunEnumerator(BaseEnumerator):
    """σ_{-2} σ_{-1} ρ_0 ⋯ ρ_{s-1} = 1 com corridas de transposições"""

    def __init__(self, monotone: bool, threads: Optional[int] = None):
        cap = settings.MAX_MONOTONE_N if monotone else settings.MAX_FACTORIZATION_N
        super().__init__("monotone runs" if monotone else "transposition runs", cap, threads)
        self.monotone = monotone

    def runs(self, n: int, length: int) -> Counter:
        """Distribuição de (produto, blocos) sobre as corridas de comprimento dado"""
        # estado: (produto, blocos, maior b usado)
        states = Counter({(identity(n), identity(n), 0): 1})
        for _ in range(length):
            nxt: Counter = Counter()
            for (prod, blocks, last_b), mult in states.items():
                for b in range(last_b if self.monotone else 1, n):
                    for a in range(b):
                        key = (compose(prod, transposition(n, a, b)), _merge(blocks, a, b),
                               b if self.monotone else 0)
                        nxt[key] += mult
            states = nxt
        out: Counter = Counter()
        for (prod, blocks, _), mult in states.items():
            out[(prod, blocks)] += mult
        return out

    def _combined(self, n: int, lengths: Sequence[int]) -> Counter:
        total = Counter({(identity(n), identity(n)): 1})
        for length in lengths:
            step = self.runs(n, length)
            nxt: Counter = Counter()
            for (p1, b1), m1 in total.items():
                for (p2, b2), m2 in step.items():
                    blocks = b1
                    for i, k in _block_pairs(b2):
                        blocks = _merge(blocks, i, k)
                    nxt[(compose(p1, p2), blocks)] += m1 * m2
            total = nxt
        return total

    def enumerate(self, lam, mu, lengths: Sequence[int], transitive: bool = False) -> int:
        lam, mu = _as_partitions([lam, mu])
        n = lam.size
        self._check_size(n)
        require(all(k >= 0 for k in lengths), f"run lengths must be non-negative: {lengths}")
        runs = self._combined(n, lengths)
        targets = _type_set(lam)

        def branch(sigma: Perm) -> int:
            count = 0
            for (prod, blocks), mult in runs.items():
                closing = inverse(compose(sigma, prod))
                if closing not in targets:
                    continue
                if transitive and not is_transitive([closing, sigma], n, _block_pairs(blocks)):
                    continue
                count += mult
            return count

        total = sum(self._split(branch, permutations_of_type(mu)))
        self.logger.debug(f"{self.name} λ={tuple(lam)} μ={tuple(mu)} runs={list(lengths)}: {total}")
        return total


@lru_cache(maxsize=None)
def _type_set(lam: Partition) -> frozenset:
    return frozenset(permutations_of_type(lam))


def count_factorizations(classes: Sequence, transitive: bool = False, threads: Optional[int] = None) -> int:
    """Número de (σ_0, ..., σ_m) com σ_i ∈ C_{λ_i} e σ_0 ⋯ σ_m = 1"""
    return FactorizationEnumerator(threads).enumerate(classes, transitive)


def count_monotone(lam, mu, run_lengths: Sequence[int], transitive: bool = False,
                   threads: Optional[int] = None) -> int:
    """Fatorações σ_{-2} σ_{-1} ρ_0 ⋯ = 1 com ρ_r corridas monótonas (b_1 ≤ b_2 ≤ ⋯), sem o sinal"""
    return RunEnumerator(True, threads).enumerate(lam, mu, run_lengths, transitive)


def count_simple_hurwitz(lam, mu, j: int, transitive: bool = False, threads: Optional[int] = None) -> int:
    """Fatorações σ_{-2} σ_{-1} τ = 1 com τ produto de j transposições quaisquer"""
    if j < 0:
        raise UsageError(f"number of transpositions must be non-negative, got {j}")
    return RunEnumerator(False, threads).enumerate(lam, mu, [j], transitive)
