# hierarchy/pfaffian.py
"""Pfaffianos exatos e os coeficientes de Schur da série monótona não orientada."""
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from algebra.series import TSeries, make_ring, power_sums, to_qq
from partitions.characters import schur_in_p, to_poly
from partitions.orthogonal import orthogonal_dim
from partitions.partition import Partition, hook_product, partitions_of
from utils.errors import UsageError
from utils.logger import app_logger

Entry = Callable[[int, int], object]


@dataclass(frozen=True)
class SkewMatrix:
    """Matriz antissimétrica k x k com entradas racionais ou polinomiais"""

    rows: Tuple[Tuple[object, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        k = len(rows)
        for i, r in enumerate(rows):
            if len(r) != k:
                raise UsageError(f"row {i} has {len(r)} entries, expected {k}")
        for i in range(k):
            if rows[i][i] != 0:
                raise UsageError(f"diagonal entry ({i}, {i}) is not zero")
            for j in range(i + 1, k):
                if rows[i][j] != -rows[j][i]:
                    raise UsageError(f"entries ({i}, {j}) and ({j}, {i}) are not opposite")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_entries(cls, k: int, entry: Entry) -> "SkewMatrix":
        return cls(tuple(tuple(entry(i, j) for j in range(k)) for i in range(k)))

    @property
    def size(self) -> int:
        return len(self.rows)


def pfaffian(A: SkewMatrix):
    """Expansão recursiva pela primeira linha"""
    if A.size % 2:
        raise UsageError(f"the Pfaffian needs an even dimension, got {A.size}")
    rows = A.rows

    @lru_cache(maxsize=None)
    def pf(indices: Tuple[int, ...]):
        if not indices:
            return QQ(1)
        first, rest = indices[0], indices[1:]
        total = QQ(0)
        for pos, j in enumerate(rest):
            a = rows[first][j]
            if a:
                minor = rest[:pos] + rest[pos + 1:]
                term = a * pf(minor)
                total = total + term if pos % 2 == 0 else total - term
        return total

    return pf(tuple(range(A.size)))


def schur_pfaffian_matrix(xs: Sequence) -> SkewMatrix:
    """(x_i - x_j)/(x_i + x_j), completando com x_{n+1} = 0 quando n é ímpar"""
    xs = [to_qq(x) for x in xs]
    if len(xs) % 2:
        xs.append(QQ(0))

    def entry(i, j):
        if i == j:
            return QQ(0)
        if xs[i] == 0 and xs[j] == 0:
            return QQ(1) if i < j else QQ(-1)
        return (xs[i] - xs[j]) / (xs[i] + xs[j])

    return SkewMatrix.from_entries(len(xs), entry)


def monotone_entry(i: int, j: int):
    """a_{i,j} da série monótona, para i, j ≥ -1"""
    if i >= 1 and j >= 1:
        return QQ(i - j, 4 * (i + j) * factorial(i) ** 2 * factorial(j) ** 2)
    if i >= 1:
        return QQ(1, 2 * factorial(i) ** 2)
    if j >= 1:
        return QQ(-1, 2 * factorial(j) ** 2)
    if i == j:
        return QQ(0)
    return QQ(1) if (i, j) == (0, -1) else QQ(-1)


def pfaffian_minor(entry: Entry, lam: Partition, n: int):
    """Pf(B_{λ_i+n-i, λ_j+n-j}), de tamanho n (n par) ou n+1 com λ_{n+1} = 0 (n ímpar)"""
    if len(lam) > n:
        raise UsageError(f"ℓ(λ) = {len(lam)} exceeds n = {n}")
    size = n if n % 2 == 0 else n + 1
    shifted = [(lam[i - 1] if i <= len(lam) else 0) + n - i for i in range(1, size + 1)]
    return pfaffian(SkewMatrix.from_entries(size, lambda i, j: entry(shifted[i], shifted[j])))


def double_factorial_product(n: int) -> int:
    """Π_{k=1}^{n-1} (2k)!"""
    out = 1
    for k in range(1, n):
        out *= factorial(2 * k)
    return out


def monotone_pfaffian_coefficient(lam: Partition, n: int, entry: Entry = monotone_entry):
    return double_factorial_product(n) * pfaffian_minor(entry, lam, n)


def monotone_schur_coefficient(lam: Partition, n: int):
    """a_λ(n) = 1/(hook(λ)² o_λ(1^{2n}))"""
    return QQ(1) / (QQ(hook_product(lam) ** 2) * orthogonal_dim(lam, 2 * n))


def verify_monotone_pfaffian(lam: Partition, n: int, entry: Entry = monotone_entry) -> bool:
    lam = Partition(lam)
    if len(lam) > n:
        raise UsageError(f"ℓ(λ) = {len(lam)} exceeds n = {n}")
    ok = monotone_schur_coefficient(lam, n) == monotone_pfaffian_coefficient(lam, n, entry)
    if not ok:
        app_logger.debug(f"Pfaffian coefficient mismatch for λ={tuple(lam)}, n={n}")
    return ok


def pfaffian_schur_series(N: int, T: int, D: Optional[int] = None, entry: Entry = monotone_entry) -> TSeries:
    """Σ_{ℓ(λ) ≤ N} t^{|λ|} s_λ(p) Π(2k)! Pf(...), a série montada só com menores pfaffianos"""
    D = D or max(T, 1)
    R = make_ring(power_sums("p", D))
    coeffs = []
    for size in range(T + 1):
        acc = R.zero
        for lam in partitions_of(size):
            if len(lam) > N:
                continue
            acc += to_poly(schur_in_p(lam), R, "p", max_part=D) * monotone_pfaffian_coefficient(lam, N, entry)
        coeffs.append(acc)
    return TSeries(R, tuple(coeffs))
