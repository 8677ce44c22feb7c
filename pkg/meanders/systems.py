# meanders/systems.py
"""Sistemas de meandros: um emparelhamento planar em cima e outro embaixo.

As componentes (curvas fechadas) são os ciclos de π_baixo^{-1} ∘ π_cima. O
conjunto M_σ reúne os π planares com σ_•^{-1} ∘ π ∘ σ_∘ também planar; pelo
lado dos grafos coloridos é G^max da bolha 2-cíclica B_{σ_∘, σ_•}.
"""
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from algebra.series import TSeries, make_ring, series_compose, series_mul
from config.settings import settings
from meanders.arches import ArchConfig, catalan, is_planar, motzkin_path, partner_positions, planar_pairings
from oracle.base_enumerator import BaseEnumerator
from oracle.permutations import Perm, compose, cyclic_shift, inverse, num_cycles
from utils.errors import ResourceError, UsageError

CLASSES = ("1-reducible", "2-reducible", "2-irreducible")


@dataclass(frozen=True)
class MeanderSystem:
    upper: ArchConfig
    lower: ArchConfig

    def __post_init__(self):
        if self.upper.n != self.lower.n:
            raise UsageError("upper and lower arches must sit on the same vertices")
        if not (self.upper.planar and self.lower.planar):
            raise UsageError("both arch configurations of a meander system must be planar")

    @classmethod
    def of(cls, upper: Sequence[int], lower: Sequence[int]) -> "MeanderSystem":
        return cls(ArchConfig(tuple(upper), "upper"), ArchConfig(tuple(lower), "lower"))

    @property
    def n(self) -> int:
        return self.upper.n

    def components(self) -> int:
        return num_cycles(compose(inverse(self.lower.pairing), self.upper.pairing))


def lower_pairing(pairing: Sequence[int], sigma: Sequence[int], sigma_white: Optional[Sequence[int]] = None) -> Perm:
    """σ_•^{-1} ∘ π ∘ σ_∘"""
    if len(sigma) != len(pairing):
        raise UsageError(f"σ acts on {len(sigma)} points, the pairing on {len(pairing)}")
    if sigma_white is not None and len(sigma_white) != len(pairing):
        raise UsageError(f"σ_∘ acts on {len(sigma_white)} points, the pairing on {len(pairing)}")
    inner = tuple(pairing) if sigma_white is None else compose(pairing, sigma_white)
    return compose(inverse(sigma), inner)


def meander_pairings(sigma: Sequence[int], sigma_white: Optional[Sequence[int]] = None) -> List[Perm]:
    """Os π de M_σ, em ordem"""
    if sigma_white is not None and len(sigma_white) != len(sigma):
        raise UsageError(f"σ_∘ and σ_• act on {len(sigma_white)} and {len(sigma)} points")
    return [pi for pi in planar_pairings(len(sigma)) if is_planar(lower_pairing(pi, sigma, sigma_white))]


def meander_set(sigma: Sequence[int], sigma_white: Optional[Sequence[int]] = None) -> int:
    return len(meander_pairings(sigma, sigma_white))


def meander_systems(n: int) -> Iterator[MeanderSystem]:
    pairings = planar_pairings(n)
    for upper in pairings:
        for lower in pairings:
            yield MeanderSystem.of(upper, lower)


# --- irredutibilidade ---

def closed_intervals(ms: MeanderSystem) -> List[Tuple[int, int]]:
    """Intervalos [a, b) de posições, próprios e não vazios, fechados pelos dois lados"""
    up, low = partner_positions(ms.upper.pairing), partner_positions(ms.lower.pairing)
    size = 2 * ms.n
    out = []
    for a in range(size):
        for b in range(a + 2, size + 1, 2):
            if b - a == size:
                continue
            if all(a <= up[x] < b and a <= low[x] < b for x in range(a, b)):
                out.append((a, b))
    return out


def irreducibility(ms: MeanderSystem) -> str:
    """1-redutível: um corte separa; 2-redutível: dois cortes; senão 2-irredutível"""
    intervals = closed_intervals(ms)
    size = 2 * ms.n
    if any(a == 0 or b == size for a, b in intervals):
        return "1-reducible"
    if intervals:
        return "2-reducible"
    return "2-irreducible"


def concatenate(left: MeanderSystem, right: MeanderSystem) -> MeanderSystem:
    k = left.n
    up = left.upper.pairing + tuple(x + k for x in right.upper.pairing)
    low = left.lower.pairing + tuple(x + k for x in right.lower.pairing)
    return MeanderSystem.of(up, low)


class MeanderEnumerator(BaseEnumerator):
    """Força bruta sobre os Cat_n² sistemas, dividida pelo arco de cima"""

    def __init__(self, threads: Optional[int] = None):
        super().__init__("meander systems", settings.MAX_MEANDER_N, threads)

    def enumerate(self, n: int, statistic: str = "components") -> Dict:
        if n < 1:
            raise UsageError(f"meander systems need n >= 1, got {n}")
        if statistic not in ("components", "irreducibility"):
            raise UsageError(f"unknown statistic {statistic!r}")
        self._check_size(n)
        pairings = planar_pairings(n)

        def branch(upper: Perm) -> Counter:
            part = Counter()
            for lower in pairings:
                ms = MeanderSystem.of(upper, lower)
                part[ms.components() if statistic == "components" else irreducibility(ms)] += 1
            return part

        total = Counter()
        for part in self._split(branch, pairings):
            total.update(part)
        self.logger.info(f"Meander systems of order {n}: {sum(total.values())} by {statistic}")
        return dict(sorted(total.items()))


def meander_components_table(n: int, threads: Optional[int] = None) -> Dict[int, int]:
    """k -> M_n^{(k)}"""
    return MeanderEnumerator(threads).enumerate(n, "components")


def components_by_cycles(n: int) -> Dict[int, int]:
    """k -> Σ_{σ com k ciclos} meander_set(σ), lado direito da identidade refinada"""
    if n > settings.MAX_MEANDER_N:
        raise ResourceError(f"meander searches are limited to n = {settings.MAX_MEANDER_N}, got {n}")
    out: Counter = Counter()
    for sigma in permutations(range(n)):
        out[num_cycles(sigma)] += meander_set(sigma)
    return dict(sorted(out.items()))


def count_irreducible(n: int, threads: Optional[int] = None) -> int:
    return MeanderEnumerator(threads).enumerate(n, "irreducibility").get("2-irreducible", 0)


def irreducible_series_check(T: int, counts: Optional[Sequence[int]] = None) -> bool:
    """m(t) = I(t m(t)²) até t^T, m = Σ Cat_n² t^n e I_0 = 1"""
    R = make_ring(("x",))
    if counts is None:
        counts = [1] + [count_irreducible(k) for k in range(1, T + 1)]
    m = TSeries.from_coeffs(R, T, [catalan(k) ** 2 for k in range(T + 1)])
    I = TSeries.from_coeffs(R, T, list(counts))
    return m == series_compose(I, series_mul(m, m).shift(1))


# --- caso Δ_{-1} ---

def dyck_pattern_exclusion(n: int) -> bool:
    """Em M_{Δ_{-1}} nenhum par (j_•, j_∘) do arco de cima tem o padrão desce-sobe"""
    return all(motzkin_path(pi) is not None for pi in meander_pairings(cyclic_shift(n, -1)))
