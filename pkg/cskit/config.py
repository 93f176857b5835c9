import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

CACHE_DIR = os.getenv("CSKIT_CACHE_DIR")
GROUP_CAP = int(os.getenv("CSKIT_GROUP_CAP", 40320))
BRUHAT_MATRIX_CAP = int(os.getenv("CSKIT_BRUHAT_MATRIX_CAP", 5040))
REDUCED_WORD_GUARD = int(os.getenv("CSKIT_REDUCED_WORD_GUARD", 16))
WORKERS = int(os.getenv("CSKIT_WORKERS", 1))
LOG_LEVEL = os.getenv("CSKIT_LOG_LEVEL", "INFO")

SCHEMA_VERSION = 1
# Bump when the cached payload layout changes.
CACHE_FORMAT_VERSION = 1


def cache_dir() -> Path | None:
    """Cache directory, re-read so tests can point it elsewhere."""
    value = os.getenv("CSKIT_CACHE_DIR", CACHE_DIR)
    return Path(value) if value else None
