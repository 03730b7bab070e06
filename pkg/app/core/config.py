# core/config.py
import os
from dotenv import load_dotenv

load_dotenv()  # loads .env from project root


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() in ("1", "true", "yes")


class Settings:
    API_HOST: str = os.getenv("API_HOST", "0.0.0.0")
    API_PORT: int = int(os.getenv("API_PORT", "8000"))
    DEBUG: bool = _flag("DEBUG", "False")
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO").upper()

    # verification harness
    SIMSUN_NMAX: int = int(os.getenv("SIMSUN_NMAX", "9"))
    SIMSUN_NMAX_LIMIT: int = int(os.getenv("SIMSUN_NMAX_LIMIT", "10"))
    SIMSUN_WORKERS: int = int(os.getenv("SIMSUN_WORKERS", "1"))
    SIMSUN_REPORT_DIR: str = os.path.expanduser(os.getenv("SIMSUN_REPORT_DIR", "reports"))
    SIMSUN_MAX_ENUMERATE: int = int(os.getenv("SIMSUN_MAX_ENUMERATE", "100000"))


settings = Settings()
