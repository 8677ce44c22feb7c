# oracle/constellations.py
"""m-constelações rotuladas de tamanho n como tuplas (σ_1, ..., σ_m) transitivas.

Os ciclos de σ_c são os vértices de cor c e os de σ_1 ⋯ σ_m as faces brancas;
enraizar divide a contagem rotulada por (n-1)!.
"""
from itertools import permutations
from itertools import product as cartesian
from math import factorial
from typing import Iterable, Iterator, Optional, Tuple

from sympy.polys.domains import QQ

from algebra.series import gen, make_ring, power_sums
from config.settings import settings
from oracle.base_enumerator import BaseEnumerator
from oracle.permutations import Perm, cycle_type, is_transitive, num_cycles, product, representative
from partitions.partition import Partition, class_size, partitions_of
from recurrences.table import GenusTable
from utils.errors import UsageError

CONSTELLATION_MARKS = ("genus", "face_degrees", "vertex_colors")


class ConstellationEnumerator(BaseEnumerator):
    """σ_1 fixada no representante da sua classe, com peso |C_λ|"""

    def __init__(self, threads: Optional[int] = None):
        super().__init__("constellations", settings.MAX_CONSTELLATION_N, threads)

    def enumerate(self, m: int, n: int, marks: Iterable[str] = ("genus",)) -> GenusTable:
        if m < 1 or n < 1:
            raise UsageError(f"constellations need m >= 1 and n >= 1, got m={m}, n={n}")
        marks = tuple(marks)
        unknown = [x for x in marks if x not in CONSTELLATION_MARKS]
        if unknown:
            raise UsageError(f"unknown marks {unknown}; expected a subset of {CONSTELLATION_MARKS}")
        self._check_size(n)
        names: Tuple[str, ...] = ()
        if "vertex_colors" in marks:
            names += tuple(f"u{c}" for c in range(m))
        if "face_degrees" in marks:
            names += power_sums("p", n)
        table = GenusTable(f"constellations:{m}", make_ring(names) if names else None,
                           params={"m": m, "n": n, "marks": marks})
        perms_n = tuple(permutations(range(n)))

        def objects(lam: Partition) -> Iterator[Tuple[Partition, Tuple[Perm, ...]]]:
            first = representative(lam)
            for rest in cartesian(*[perms_n] * (m - 1)):
                perms = (first,) + rest
                if is_transitive(perms, n):
                    yield lam, perms

        def record(part: GenusTable, item):
            lam, perms = item
            R = part.ring
            faces = cycle_type(product(perms, n))
            two_g = 2 + (m - 1) * n - len(faces) - sum(num_cycles(p) for p in perms)
            value = R.one if R is not None else QQ(1)
            if "vertex_colors" in marks:
                for c, p in enumerate(perms):
                    value *= gen(R, f"u{c}") ** num_cycles(p)
            if "face_degrees" in marks:
                for k in faces:
                    value *= gen(R, f"p{k}")
            part.add(n, two_g, value * QQ(class_size(lam), factorial(n - 1)))

        self._tally(table, partitions_of(n), objects, record)
        self.logger.info(f"Enumerated {m}-constellations of size {n}: {len(table)} genus entries")
        return table


def count_constellations(m: int, n: int, marks: Iterable[str] = ("genus",),
                         threads: Optional[int] = None) -> GenusTable:
    """Constelações enraizadas por gênero, com marcadores de cor e de grau de face opcionais"""
    return ConstellationEnumerator(threads).enumerate(m, n, marks)
