# recurrences/golden.py
"""Leitura do arquivo de condições iniciais e conferência das linhas vindas do oráculo."""
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from algebra.rational import parse_poly, parse_rat
from config.settings import settings
from oracle.constellations import count_constellations
from oracle.maps import count_rooted_maps
from recurrences.table import GenusTable, Key
from utils.errors import UsageError
from utils.logger import app_logger

GOLDEN_FILE = settings.GOLDEN_DIR / "initial_conditions.txt"

Row = Tuple[int, int, str]


@lru_cache(maxsize=None)
def _read(path: str) -> Dict[str, Tuple[Row, ...]]:
    rows: Dict[str, List[Row]] = {}
    file = Path(path)
    if not file.exists():
        app_logger.error(f"Golden file not found: {file}")
        raise UsageError(f"golden file {file} does not exist")
    for number, line in enumerate(file.read_text(encoding="utf-8").splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 3)
        if len(parts) != 4:
            raise UsageError(f"{file}:{number}: expected 'family n 2g value', got {line!r}")
        family, n, two_g, value = parts
        try:
            rows.setdefault(family, []).append((int(n), int(two_g), value))
        except ValueError as e:
            raise UsageError(f"{file}:{number}: n and 2g must be integers") from e
    return {family: tuple(r) for family, r in rows.items()}


def golden_families(path: Optional[Path] = None) -> Tuple[str, ...]:
    return tuple(_read(str(path or GOLDEN_FILE)))


def load_initial_conditions(family: str, ring=None, path: Optional[Path] = None) -> Dict[Key, object]:
    """(n, 2g) -> valor exato; índices negativos são sementes virtuais"""
    rows = _read(str(path or GOLDEN_FILE))
    if family not in rows:
        raise UsageError(f"no initial conditions for {family!r} in the golden file")
    out = {}
    for n, two_g, text in rows[family]:
        out[(n, two_g)] = parse_rat(text) if ring is None else parse_poly(text, ring)
    app_logger.debug(f"Loaded {len(out)} initial conditions for {family}")
    return out


def golden_table(family: str, ring=None, orientable: bool = True, path: Optional[Path] = None) -> GenusTable:
    """As linhas com n >= 1 como tabela"""
    table = GenusTable(family, ring, orientable)
    for (n, two_g), value in load_initial_conditions(family, ring, path).items():
        if n >= 1:
            table.set(n, two_g, value)
    return table


def oracle_conditions(family: str, m: int = 2) -> GenusTable:
    """Recalcula pelo oráculo as linhas do arquivo que vieram dele"""
    if family == "gj_triangulations":
        counts = count_rooted_maps(3, "all_faces_deg_3")
        table = GenusTable(family)
        for (_, two_g), value in counts.items():
            table.set(1, two_g, value)
        return table
    if family == "cc_maps":
        return count_rooted_maps(1, marks=("genus", "vertices"))
    if family == "kz_bipartite":
        return count_rooted_maps(1, "bipartite", ("genus", "vertices"))
    if family == "louf_constellations":
        return count_constellations(m, 1)
    raise UsageError(f"{family!r} has no oracle-derived initial conditions")
