"""
Cache database initialization and maintenance.
"""
import logging
from pathlib import Path

from cskit.db.models import Base, GroupCache
from cskit.db.session import get_engine, open_session

logger = logging.getLogger(__name__)


def create_cache_tables(cache_dir: Path) -> None:
    """Create the SQLite cache file and all tables."""
    engine = get_engine(cache_dir)
    Base.metadata.create_all(bind=engine)
    logger.debug(f"Cache tables ready at: {engine.url}")


def cache_status(cache_dir: Path) -> list[dict]:
    """Describe every cached group."""
    create_cache_tables(cache_dir)
    db = open_session(cache_dir)
    try:
        rows = db.query(GroupCache).order_by(GroupCache.kind, GroupCache.rank).all()
        return [
            {
                "type": f"{row.kind}{row.rank}",
                "format_version": row.format_version,
                "elements": row.element_count,
                "bytes": len(row.payload),
                "created_at": row.created_at.isoformat() if row.created_at else None,
            }
            for row in rows
        ]
    finally:
        db.close()


def clear_cache(cache_dir: Path) -> int:
    """Delete every cached group; returns the number of rows removed."""
    create_cache_tables(cache_dir)
    db = open_session(cache_dir)
    try:
        removed = db.query(GroupCache).delete()
        db.commit()
        logger.info(f"Removed {removed} cached groups from {cache_dir}")
        return removed
    except Exception:
        db.rollback()
        raise
    finally:
        db.close()
