import logging
import os

from dotenv import load_dotenv

# --- Load environment variables ---
load_dotenv()

# --- Defaults ---
DEFAULT_LAMBDA = 1.0
DEFAULT_REPLICATIONS = 10_000
DEFAULT_SEED = 0

IC_EDGE_CAP = 20          # uncertain arcs enumerated by the exact oracle (2**cap terms)
LT_CHOICE_CAP = 2 ** 20   # product of per-node in-edge choices for the LT oracle
SUBSET_CAP = 10 ** 5      # k-subsets scanned by exhaustive search

LT_TOLERANCE = 1e-9
HELDOUT_SEED_OFFSET = 1
GAIN_DIGITS = 12

_logging_configured = False


def get_thread_count() -> int:
    """Worker threads for the Monte Carlo estimator (ICM_THREADS, default 1)."""
    raw = os.environ.get("ICM_THREADS", "1")
    try:
        threads = int(raw)
    except ValueError:
        raise ValueError(f"ICM_THREADS must be an integer, got {raw!r}")
    return max(1, threads)


def configure_logging(level: str | None = None):
    """Set up stderr logging once; level from ICM_LOG_LEVEL unless given."""
    global _logging_configured
    if _logging_configured:
        return
    level_name = (level or os.environ.get("ICM_LOG_LEVEL", "WARNING")).upper()
    logging.basicConfig(
        level=getattr(logging, level_name, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    _logging_configured = True
