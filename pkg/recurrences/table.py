# recurrences/table.py
"""Tabela (n, 2g) -> valor exato, saída comum de recorrências e oráculos."""
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from algebra.rational import format_value
from algebra.series import gen, make_ring, to_qq, var_names
from utils.errors import UsageError

Key = Tuple[int, int]


@dataclass
class GenusTable:
    """Entradas ausentes valem zero; 2g guarda o gênero (meio-inteiro nos não orientáveis)"""

    family: str
    ring: Optional[PolyRing] = None
    orientable: bool = True
    entries: Dict[Key, object] = field(default_factory=dict)
    params: Dict[str, object] = field(default_factory=dict)

    def zero(self):
        return self.ring.zero if self.ring is not None else QQ(0)

    def _coerce(self, value):
        if self.ring is None:
            if isinstance(value, PolyElement):
                if not value.is_ground:
                    raise UsageError(f"table {self.family} holds numbers, got {value}")
                return value.LC if value else QQ(0)
            return to_qq(value)
        if isinstance(value, PolyElement) and value.ring != self.ring:
            raise UsageError(f"value lives in {var_names(value.ring)}, table uses {var_names(self.ring)}")
        return self.ring(value) if isinstance(value, PolyElement) else self.ring(to_qq(value))

    def _check_key(self, n: int, two_g: int):
        if two_g < 0:
            raise UsageError(f"negative twice-genus {two_g}")
        if self.orientable and two_g % 2:
            raise UsageError(f"orientable table {self.family} cannot hold 2g = {two_g}")

    def set(self, n: int, two_g: int, value):
        self._check_key(n, two_g)
        value = self._coerce(value)
        if value:
            self.entries[(n, two_g)] = value
        else:
            self.entries.pop((n, two_g), None)

    def add(self, n: int, two_g: int, value):
        self.set(n, two_g, self.get(n, two_g) + self._coerce(value))

    def get(self, n: int, two_g: int):
        return self.entries.get((n, two_g), self.zero())

    def __getitem__(self, key: Key):
        return self.get(*key)

    def __len__(self) -> int:
        return len(self.entries)

    def items(self) -> Iterator[Tuple[Key, object]]:
        for key in sorted(self.entries):
            yield key, self.entries[key]

    def genera(self, n: int) -> List[int]:
        return sorted(g for (m, g) in self.entries if m == n)

    def sizes(self) -> List[int]:
        return sorted({n for n, _ in self.entries})

    def total(self, n: int):
        return sum((v for (m, _), v in self.entries.items() if m == n), self.zero())

    def like(self, ring=None) -> "GenusTable":
        """Tabela vazia com a mesma família e parâmetros"""
        return GenusTable(self.family, self.ring if ring is None else ring, self.orientable, params=dict(self.params))

    def merge(self, other: "GenusTable") -> "GenusTable":
        for (n, two_g), v in other.items():
            self.add(n, two_g, v)
        return self

    def restrict(self, nmax: int) -> "GenusTable":
        out = self.like()
        out.entries = {k: v for k, v in self.entries.items() if k[0] <= nmax}
        return out

    def evaluate(self, values: Mapping[str, object]) -> "GenusTable":
        """Substitui marcadores por racionais; sem variáveis restantes a tabela vira numérica"""
        if self.ring is None:
            raise UsageError(f"table {self.family} has no markers to evaluate")
        pairs = [(gen(self.ring, name), to_qq(v)) for name, v in values.items()]
        remaining = tuple(x for x in var_names(self.ring) if x not in values)
        ring = make_ring(remaining) if remaining else None
        out = GenusTable(self.family, ring, self.orientable, params=dict(self.params))
        for (n, two_g), v in self.items():
            v = v.subs(pairs) if pairs else v
            if ring is None:
                out.set(n, two_g, v)
            else:
                out.set(n, two_g, ring.from_dict({tuple(e for x, e in zip(var_names(self.ring), m) if x in remaining): c
                                                  for m, c in v.items()}))
        return out

    def relabel(self, names: Mapping[str, str]) -> "GenusTable":
        """Renomeia marcadores mantendo a ordem das variáveis"""
        if self.ring is None:
            return self
        ring = make_ring(tuple(names.get(x, x) for x in var_names(self.ring)))
        out = GenusTable(self.family, ring, self.orientable, params=dict(self.params))
        out.entries = {k: ring.from_dict(dict(v.items())) for k, v in self.entries.items()}
        return out

    def as_text(self) -> Dict[Key, str]:
        return {k: format_value(v) for k, v in self.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenusTable):
            return NotImplemented
        return self.as_text() == other.as_text()

    def __repr__(self) -> str:
        return f"GenusTable({self.family}, {len(self.entries)} entries)"
