from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from config.settings import settings
from utils.logger import app_logger

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """Aplica fn a cada item; o resultado segue a ordem de entrada (determinístico)"""
    items = list(items)
    workers = threads or settings.ENUMAP_THREADS
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    app_logger.debug(f"parallel_map: {len(items)} tasks on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
