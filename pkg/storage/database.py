# storage/database.py
"""Cache das tabelas de gênero em SQL (SQLite por padrão, qualquer URL do SQLAlchemy)."""
import json
from datetime import datetime
from typing import Dict, List, Optional

import pandas as pd
from sqlalchemy import Boolean, Column, DateTime, Integer, String, UniqueConstraint, create_engine
from sqlalchemy.orm import declarative_base, sessionmaker

from algebra.rational import format_value, parse_poly, parse_rat
from algebra.series import make_ring, var_names
from config.settings import settings
from recurrences.table import GenusTable
from utils.logger import app_logger

Base = declarative_base()


class GenusEntry(Base):
    __tablename__ = 'genus_entries'
    __table_args__ = (UniqueConstraint('family', 'params', 'n', 'two_g', name='uq_genus_entry'),)

    id = Column(Integer, primary_key=True)
    family = Column(String, nullable=False, index=True)
    params = Column(String, nullable=False)
    ring = Column(String, nullable=False, default="")
    orientable = Column(Boolean, nullable=False, default=True)
    n = Column(Integer, nullable=False)
    two_g = Column(Integer, nullable=False)
    value = Column(String, nullable=False)
    created_at = Column(DateTime, default=datetime.utcnow)

    def __repr__(self):
        return f"<GenusEntry(family='{self.family}', n={self.n}, two_g={self.two_g}, value='{self.value}')>"


def params_key(params: Dict[str, object]) -> str:
    """Chave canônica dos parâmetros (JSON com chaves ordenadas)"""
    return json.dumps({k: str(v) for k, v in params.items()}, sort_keys=True)


class TableStore:
    """Guarda e recupera GenusTable por (família, parâmetros)"""

    def __init__(self, url: Optional[str] = None):
        self.url = url or settings.DATABASE_URL
        self.engine = create_engine(self.url)
        Base.metadata.create_all(self.engine)
        self.Session = sessionmaker(bind=self.engine)
        self.logger = app_logger
        self.logger.debug(f"Table store at {self.url}")

    def save_table(self, table: GenusTable, params: Optional[Dict[str, object]] = None) -> int:
        """Substitui as entradas da mesma família e parâmetros; devolve quantas foram gravadas"""
        key = params_key(table.params if params is None else params)
        ring = ",".join(var_names(table.ring)) if table.ring is not None else ""
        session = self.Session()
        try:
            session.query(GenusEntry).filter_by(family=table.family, params=key).delete()
            for (n, two_g), value in table.items():
                session.add(GenusEntry(family=table.family, params=key, ring=ring,
                                       orientable=table.orientable, n=n, two_g=two_g,
                                       value=format_value(value)))
            session.commit()
            self.logger.info(f"Saved {len(table)} entries for {table.family} {key}")
            return len(table)
        except Exception as e:
            session.rollback()
            self.logger.error(f"Error saving table {table.family}: {e}")
            raise
        finally:
            session.close()

    def load_table(self, family: str, params: Dict[str, object]) -> Optional[GenusTable]:
        """None quando a tabela não está no cache"""
        key = params_key(params)
        session = self.Session()
        try:
            rows: List[GenusEntry] = (session.query(GenusEntry)
                                      .filter_by(family=family, params=key)
                                      .order_by(GenusEntry.n, GenusEntry.two_g)
                                      .all())
            if not rows:
                self.logger.debug(f"Cache miss for {family} {key}")
                return None
            ring = make_ring(tuple(rows[0].ring.split(","))) if rows[0].ring else None
            table = GenusTable(family, ring, rows[0].orientable, params=dict(params))
            for row in rows:
                value = parse_rat(row.value) if ring is None else parse_poly(row.value, ring)
                table.set(row.n, row.two_g, value)
            self.logger.info(f"Loaded {len(table)} cached entries for {family} {key}")
            return table
        finally:
            session.close()

    def get_table_df(self, family: str) -> pd.DataFrame:
        """Todas as entradas de uma família, para inspeção"""
        query = GenusEntry.__table__.select().where(GenusEntry.family == family)
        with self.engine.connect() as conn:
            df = pd.read_sql(query, conn)
        if not df.empty:
            df = df.sort_values(["params", "n", "two_g"]).reset_index(drop=True)
        return df
