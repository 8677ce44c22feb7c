# partitions/partition.py
"""Partições de inteiros: iteração, ganchos, conteúdos e z_lambda."""
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterator, List, Tuple

from sympy.polys.domains import QQ

from algebra.series import to_qq
from utils.errors import UsageError


class Partition(tuple):
    """Sequência fracamente decrescente de inteiros positivos"""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise UsageError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise UsageError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Aceita partes em qualquer ordem (zeros descartados)"""
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def double(self) -> "Partition":
        """2λ = (2λ_1, 2λ_2, ...)"""
        return Partition(2 * p for p in self)

    def cells(self) -> Iterator[Tuple[int, int]]:
        """Células (x, y): x = coluna a partir de 1, y = linha a partir de 1"""
        for y, row in enumerate(self, start=1):
            for x in range(1, row + 1):
                yield x, y

    def multiplicities(self) -> Counter:
        return Counter(self)

    def union(self, other: "Partition") -> "Partition":
        return Partition.from_parts(list(self) + list(other))

    def dominates(self, other: "Partition") -> bool:
        if self.size != other.size:
            return False
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a < b:
                return False
        return True


def iterate_partitions(n: int) -> Iterator[Partition]:
    """Todas as partições de n em ordem lexicográfica reversa: (n), (n-1,1), ..."""
    if n < 0:
        raise UsageError(f"cannot partition a negative integer: {n}")
    if n == 0:
        yield Partition()
        return

    def rec(remaining: int, largest: int) -> Iterator[List[int]]:
        if remaining == 0:
            yield []
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield [first] + rest

    for parts in rec(n, n):
        yield Partition(parts)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    return tuple(iterate_partitions(n))


def partitions_up_to(n: int, max_part: int = None) -> Iterator[Partition]:
    for k in range(n + 1):
        for lam in partitions_of(k):
            if max_part is None or not lam or lam[0] <= max_part:
                yield lam


def hook_lengths(lam: Partition) -> List[int]:
    conj = lam.conjugate()
    return [(lam[y - 1] - x) + (conj[x - 1] - y) + 1 for x, y in lam.cells()]


def hook_product(lam: Partition) -> int:
    result = 1
    for h in hook_lengths(lam):
        result *= h
    return result


def contents(lam: Partition, b=0) -> List:
    """c_b(x, y) = x - y + b(x - 1) para cada célula"""
    b = to_qq(b)
    return [QQ(x - y) + b * (x - 1) for x, y in lam.cells()]


def z_lambda(lam: Partition) -> int:
    result = 1
    for part, mult in lam.multiplicities().items():
        result *= part ** mult * factorial(mult)
    return result


def class_size(lam: Partition) -> int:
    """Tamanho da classe de conjugação C_λ em S_n"""
    return factorial(lam.size) // z_lambda(lam)
