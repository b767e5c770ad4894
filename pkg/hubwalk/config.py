import logging
import os
from dotenv import load_dotenv

# Load environment variables from .env.local
load_dotenv(dotenv_path=os.path.join(os.path.dirname(__file__), '../.env.local'))


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return float(raw)
    except ValueError:
        logging.getLogger("Hubwalk").warning("Ignoring malformed %s=%r, using %s", name, raw, default)
        return default


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        logging.getLogger("Hubwalk").warning("Ignoring malformed %s=%r, using %s", name, raw, default)
        return default


class Config:
    DEFAULT_ALPHA = _env_float('HUBWALK_ALPHA', 0.85)
    DEGENERACY_REL_TOL = _env_float('HUBWALK_DEGENERACY_TOL', 1e-8)
    ITER_TOL = _env_float('HUBWALK_ITER_TOL', 1e-12)
    MAX_ITER = _env_int('HUBWALK_MAX_ITER', 100_000)
    TIE_TOL = _env_float('HUBWALK_TIE_TOL', 1e-8)
    TOP_K = _env_int('HUBWALK_TOP_K', 10)
    MAX_WORKERS = _env_int('HUBWALK_MAX_WORKERS', 4)
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')
    LOG_DIR = os.environ.get('HUBWALK_LOG_DIR')
