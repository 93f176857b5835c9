from functools import lru_cache
from pathlib import Path

from sqlalchemy import create_engine
from sqlalchemy.orm import Session, sessionmaker

DB_FILENAME = "cskit.db"


@lru_cache(maxsize=None)
def get_engine(cache_dir: Path):
    # Create cache directory if it doesn't exist
    cache_dir.mkdir(parents=True, exist_ok=True)
    return create_engine(
        f"sqlite:///{cache_dir / DB_FILENAME}",
        connect_args={
            "check_same_thread": False,  # worker threads share the engine
            "timeout": 30,
        },
        echo=False,
    )


def session_factory(cache_dir: Path) -> sessionmaker:
    return sessionmaker(bind=get_engine(cache_dir))


def open_session(cache_dir: Path) -> Session:
    return session_factory(cache_dir)()
