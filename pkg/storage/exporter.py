# storage/exporter.py
"""Saída das tabelas: JSON (lista de registros n, two_g, value), CSV espelho e texto."""
from pathlib import Path
from typing import Optional

import pandas as pd

from recurrences.table import GenusTable
from utils.errors import UsageError
from utils.logger import app_logger

FORMATS = ("json", "csv", "text")
COLUMNS = ["n", "two_g", "value"]


def table_frame(table: GenusTable) -> pd.DataFrame:
    """Linhas em ordem (n, 2g); valores como texto exato"""
    rows = [{"n": n, "two_g": two_g, "value": text} for (n, two_g), text in table.as_text().items()]
    return pd.DataFrame(rows, columns=COLUMNS)


def render(frame: pd.DataFrame, fmt: str = "json") -> str:
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    if fmt == "json":
        return frame.to_json(orient="records", force_ascii=False) + "\n"
    if fmt == "csv":
        return frame.to_csv(index=False, lineterminator="\n")
    if frame.empty:
        return "\n"
    return frame.to_string(index=False) + "\n"


def export_table(table: GenusTable, fmt: str = "json", output: Optional[Path] = None) -> str:
    """Texto da tabela; grava em output quando dado"""
    text = render(table_frame(table), fmt)
    if output is not None:
        write_output(text, output)
    return text


def write_output(text: str, output: Path):
    path = Path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    app_logger.info(f"Wrote {len(text)} bytes to {path}")
