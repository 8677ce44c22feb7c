import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

class Settings:
    BASE_DIR = Path(__file__).parent.parent
    DATA_DIR = BASE_DIR / "data"
    LOGS_DIR = BASE_DIR / "logs"
    GOLDEN_DIR = DATA_DIR / "golden"
    EXPORT_DIR = DATA_DIR / "exports"

    # Banco de dados (cache de tabelas)
    DATABASE_URL = os.getenv("DATABASE_URL", f"sqlite:///{DATA_DIR / 'enumap.db'}")

    # Ordens de truncamento
    DEFAULT_ORDER = int(os.getenv("DEFAULT_ORDER", "6"))
    KP_ORDER = int(os.getenv("KP_ORDER", "6"))
    BKP_ORDER = int(os.getenv("BKP_ORDER", "5"))
    VIRASORO_ORDER = int(os.getenv("VIRASORO_ORDER", "5"))
    SPECTRAL_ORDER = int(os.getenv("SPECTRAL_ORDER", "4"))
    UNIVERSALITY_ORDER = int(os.getenv("UNIVERSALITY_ORDER", "20"))
    EXPONENT_ORDER = int(os.getenv("EXPONENT_ORDER", "400"))

    # Limites das buscas exaustivas
    MAX_FACTORIZATION_N = int(os.getenv("MAX_FACTORIZATION_N", "8"))
    MAX_MONOTONE_N = int(os.getenv("MAX_MONOTONE_N", "7"))
    MAX_MAP_EDGES = int(os.getenv("MAX_MAP_EDGES", "5"))
    MAX_ONE_FACE_EDGES = int(os.getenv("MAX_ONE_FACE_EDGES", "7"))
    MAX_TRIANGULATION_FACES = int(os.getenv("MAX_TRIANGULATION_FACES", "4"))
    MAX_NONORIENTED_EDGES = int(os.getenv("MAX_NONORIENTED_EDGES", "4"))
    MAX_CONSTELLATION_N = int(os.getenv("MAX_CONSTELLATION_N", "6"))
    MAX_GMAX_VERTICES = int(os.getenv("MAX_GMAX_VERTICES", "8"))
    MAX_MEANDER_N = int(os.getenv("MAX_MEANDER_N", "8"))

    # Paralelismo
    ENUMAP_THREADS = max(1, int(os.getenv("ENUMAP_THREADS", "1")))

    # Logs
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
    DEBUG = os.getenv("DEBUG", "False").lower() == "true"

    @classmethod
    def create_directories(cls):
        cls.DATA_DIR.mkdir(exist_ok=True)
        cls.LOGS_DIR.mkdir(exist_ok=True)
        cls.GOLDEN_DIR.mkdir(exist_ok=True)
        cls.EXPORT_DIR.mkdir(exist_ok=True)

settings = Settings()
