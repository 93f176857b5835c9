from sqlalchemy import Column, DateTime, Integer, LargeBinary, String, UniqueConstraint, func
from sqlalchemy.orm import declarative_base

Base = declarative_base()


class GroupCache(Base):
    __tablename__ = "group_cache"
    __table_args__ = (UniqueConstraint("kind", "rank", "format_version", name="uq_group_key"),)

    id = Column(Integer, primary_key=True, index=True)
    kind = Column(String(1), nullable=False)
    rank = Column(Integer, nullable=False)
    format_version = Column(Integer, nullable=False)
    element_count = Column(Integer, nullable=False)
    payload = Column(LargeBinary, nullable=False)
    created_at = Column(DateTime, server_default=func.now())
