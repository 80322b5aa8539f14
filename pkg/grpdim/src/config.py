import os
from dotenv import load_dotenv

# Загрузка настроек из .env файла
load_dotenv()

# Максимальное число вершин для перебора подмножеств
ORACLE_CAP = int(os.getenv("GRPDIM_ORACLE_CAP", "16"))

# Ограничения точных решателей
VERTEX_COVER_CAP = int(os.getenv("GRPDIM_VERTEX_COVER_CAP", "128"))
CLIQUE_CAP = int(os.getenv("GRPDIM_CLIQUE_CAP", "128"))
NODE_BUDGET = int(os.getenv("GRPDIM_NODE_BUDGET", "5000000"))

# Symmetric groups larger than S6 are rejected
MAX_SYMMETRIC_DEGREE = 6
# Наибольший порядок группы для дескрипторов и каталога
MAX_ORDER = 720

# Каталог для отчётов verify
REPORT_DIR = os.getenv("GRPDIM_REPORT_DIR", "reports")

WORKERS = int(os.getenv("GRPDIM_WORKERS", "1"))
LOG_LEVEL = os.getenv("GRPDIM_LOG_LEVEL", "INFO")


def oracle_cap() -> int:
    """Текущий лимит перебора; GRPDIM_ORACLE_CAP читается при каждом вызове."""
    return int(os.getenv("GRPDIM_ORACLE_CAP", str(ORACLE_CAP)))
