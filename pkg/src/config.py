"""
ToughCycles - Configuration
"""
import os

__version__ = "0.1.0"


def _env_int(name: str, default: int) -> int:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be an integer, got {raw!r}")


def _env_float(name: str, default: float) -> float:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    try:
        return float(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be a number, got {raw!r}")


# Numerics
DEFAULT_TOL = _env_float("TOUGHCYCLES_TOL", 1e-9)
POWER_MAX_ITER = _env_int("TOUGHCYCLES_POWER_MAX_ITER", 200_000)

# Size guards for the exponential searches
TOUGHNESS_MAX_N = _env_int("TOUGHCYCLES_TOUGHNESS_MAX_N", 24)
ENUMERATION_MAX_N = _env_int("TOUGHCYCLES_ENUMERATION_MAX_N", 10)
SWEEP_MAX_N = _env_int("TOUGHCYCLES_SWEEP_MAX_N", 7)

# Pipelines
DEFAULT_WORKERS = _env_int("TOUGHCYCLES_WORKERS", 1)
DEFAULT_SEED = _env_int("TOUGHCYCLES_SEED", 20240917)
DEFAULT_SAMPLES = _env_int("TOUGHCYCLES_SAMPLES", 100)
SCAN_PROGRESS_EVERY = _env_int("TOUGHCYCLES_SCAN_PROGRESS_EVERY", 10_000)

LOG_LEVEL = (os.getenv("TOUGHCYCLES_LOG_LEVEL") or "INFO").strip().upper()

# HTTP API
API_MAX_N = _env_int("TOUGHCYCLES_API_MAX_N", 20)
ALLOWED_ORIGINS = os.getenv(
    "CORS_ORIGINS", "http://localhost:3000,http://localhost:8420"
).split(",")

# Report archive
IS_PROD = bool(os.getenv("RAILWAY_ENVIRONMENT"))


def _archive_url() -> str:
    url = (os.getenv("DATABASE_URL") or "").strip()
    if not url:
        if IS_PROD:
            raise RuntimeError("DATABASE_URL is required when RAILWAY_ENVIRONMENT is set; reports would land in sqlite")
        return "sqlite:///./toughcycles.db"
    # SQLAlchemy only accepts the postgresql:// scheme
    if url.startswith("postgres://"):
        return url.replace("postgres://", "postgresql://", 1)
    return url


ARCHIVE_URL = _archive_url()
