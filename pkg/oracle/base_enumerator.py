from abc import ABC, abstractmethod
from typing import Any, Callable, Iterable, Iterator, List, Optional

from oracle.permutations import Perm, involution, perfect_matchings
from recurrences.table import GenusTable
from utils.errors import ResourceError
from utils.logger import app_logger
from utils.parallel import parallel_map


class BaseEnumerator(ABC):
    """Classe base abstrata para todas as buscas exaustivas"""

    def __init__(self, name: str, cap: int, threads: Optional[int] = None):
        self.name = name
        self.logger = app_logger
        self.cap = cap
        self.threads = threads

    @abstractmethod
    def enumerate(self, *args, **kwargs) -> Any:
        """Método principal da busca - deve ser implementado pelas subclasses"""
        pass

    def _check_size(self, n: int, cap: Optional[int] = None):
        """Recusa buscas acima do limite configurado"""
        cap = self.cap if cap is None else cap
        if n > cap:
            self.logger.error(f"{self.name}: size {n} exceeds the configured cap {cap}")
            raise ResourceError(f"{self.name} is limited to size {cap}, got {n}")

    def _split(self, fn: Callable[[Any], Any], items: Iterable[Any]) -> List[Any]:
        """Divide pela escolha mais externa; os resultados voltam na ordem de entrada"""
        items = list(items)
        self.logger.debug(f"{self.name}: {len(items)} outer branches")
        return parallel_map(fn, items, self.threads)

    def _tally(self, template: GenusTable, items: Iterable[Any], objects: Callable[[Any], Iterable[Any]],
               record: Callable[[GenusTable, Any], None]) -> GenusTable:
        """Cada ramo acumula numa tabela própria; as somas exatas são juntadas no fim"""
        def branch(item) -> GenusTable:
            part = template.like()
            for obj in objects(item):
                record(part, obj)
            return part

        for part in self._split(branch, items):
            template.merge(part)
        return template

    @staticmethod
    def matchings_through(size: int, partner: int) -> Iterator[Perm]:
        """Involuções sem ponto fixo em range(size) que contêm o par (0, partner)"""
        rest = [d for d in range(1, size) if d != partner]
        for tail in perfect_matchings(rest):
            yield involution([(0, partner)] + tail, size)

    def validate_table(self, table: GenusTable) -> bool:
        """Contagens devem ter coeficientes não negativos"""
        for key, value in table.items():
            coeffs = value.values() if hasattr(value, "values") else [value]
            if any(c < 0 for c in coeffs):
                self.logger.error(f"{self.name}: negative count at {key}")
                return False
        return True
