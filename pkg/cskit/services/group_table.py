"""Enumerated Weyl groups with multiplication tables and Bruhat rows.

Elements are indexed in breadth-first order from the identity, so indices
are sorted by length. Lower intervals follow the lifting rule
[e, s w] = [e, w] u s[e, w] whenever s w > w.
"""
import io
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import factorial
from pathlib import Path

import numpy as np
from sqlalchemy.exc import SQLAlchemyError

from cskit import config
from cskit.db.init_db import create_cache_tables
from cskit.db.models import GroupCache
from cskit.db.session import open_session
from cskit.errors import GroupTooLarge
from cskit.services.rootsys import RootSystem
from cskit.services.weyl import WeylElt, enumerate_group, from_matrix, inverse, left_multiply, right_multiply

logger = logging.getLogger(__name__)

# |W| for every type we can be asked about, so oversized requests fail fast
_ORDER_BY_TYPE = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}


def group_order(rs: RootSystem) -> int:
    n = rs.rank
    if rs.kind.value == "A":
        return factorial(n + 1)
    if rs.kind.value in ("B", "C"):
        return 2**n * factorial(n)
    if rs.kind.value == "D":
        return 2 ** (n - 1) * factorial(n)
    return _ORDER_BY_TYPE[rs.name]


def check_cap(rs: RootSystem, cap: int | None = None) -> int:
    cap = config.GROUP_CAP if cap is None else cap
    order = group_order(rs)
    if order > cap:
        raise GroupTooLarge(f"|W({rs.name})| = {order} exceeds the configured cap {cap}")
    return order


@dataclass
class GroupTable:
    rs: RootSystem
    elements: list[WeylElt]
    right_mult: np.ndarray
    left_mult: np.ndarray
    lengths: np.ndarray
    bruhat: np.ndarray | None = None
    index: dict[WeylElt, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.index:
            self.index = {w: k for k, w in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    @classmethod
    def compute(cls, rs: RootSystem, matrix_cap: int | None = None) -> "GroupTable":
        matrix_cap = config.BRUHAT_MATRIX_CAP if matrix_cap is None else matrix_cap
        elements = enumerate_group(rs)
        index = {w: k for k, w in enumerate(elements)}
        n = rs.rank
        right_mult = np.empty((len(elements), n), dtype=np.int32)
        left_mult = np.empty((len(elements), n), dtype=np.int32)
        for k, w in enumerate(elements):
            for i in rs.generators:
                right_mult[k, i - 1] = index[right_multiply(w, i)]
                left_mult[k, i - 1] = index[left_multiply(i, w)]
        lengths = np.array([w.length for w in elements], dtype=np.int32)

        table = cls(rs, elements, right_mult, left_mult, lengths, index=index)
        if len(elements) <= matrix_cap:
            table.bruhat = table._bruhat_matrix()
        logger.info(f"Enumerated {rs.name}: {len(elements)} elements, Bruhat matrix stored: {table.bruhat is not None}")
        return table

    def first_left_descent(self, x: int) -> int | None:
        for i in range(self.rs.rank):
            if self.lengths[self.left_mult[x, i]] < self.lengths[x]:
                return i
        return None

    def _bruhat_matrix(self) -> np.ndarray:
        N = len(self.elements)
        B = np.zeros((N, N), dtype=bool)
        B[0, 0] = True
        for x in range(1, N):
            i = self.first_left_descent(x)
            y = self.left_mult[x, i]
            B[x] = B[y] | B[y][self.left_mult[:, i]]
        return B

    def bruhat_row(self, x: int) -> np.ndarray:
        """Membership mask of the lower interval [e, w_x]."""
        if self.bruhat is not None:
            return self.bruhat[x]
        chain = []
        while x != 0:
            i = self.first_left_descent(x)
            chain.append(i)
            x = self.left_mult[x, i]
        row = np.zeros(len(self.elements), dtype=bool)
        row[0] = True
        for i in reversed(chain):
            row = row | row[self.left_mult[:, i]]
        return row

    def interval(self, x: int) -> np.ndarray:
        return np.flatnonzero(self.bruhat_row(x))

    def leq(self, a: int, b: int) -> bool:
        if self.bruhat is not None:
            return bool(self.bruhat[b, a])
        return bool(self.bruhat_row(b)[a])

    def inverse_index(self, x: int) -> int:
        return self.index[inverse(self.elements[x])]

    @cached_property
    def cayley_distance(self) -> np.ndarray:
        """Word length by breadth-first search in the Cayley graph."""
        dist = np.full(len(self.elements), -1, dtype=np.int32)
        dist[0] = 0
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in self.right_mult[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def to_payload(self) -> bytes:
        buf = io.BytesIO()
        arrays = {
            "matrices": np.stack([w.matrix for w in self.elements]).astype(np.int8),
            "right_mult": self.right_mult,
            "left_mult": self.left_mult,
            "lengths": self.lengths,
        }
        if self.bruhat is not None:
            arrays["bruhat"] = np.packbits(self.bruhat, axis=1)
        np.savez_compressed(buf, **arrays)
        return buf.getvalue()

    @classmethod
    def from_payload(cls, rs: RootSystem, payload: bytes) -> "GroupTable":
        data = np.load(io.BytesIO(payload))
        elements = [from_matrix(rs, m.astype(np.int64)) for m in data["matrices"]]
        bruhat = None
        if "bruhat" in data.files:
            bruhat = np.unpackbits(data["bruhat"], axis=1, count=len(elements)).astype(bool)
        return cls(
            rs,
            elements,
            data["right_mult"],
            data["left_mult"],
            data["lengths"],
            bruhat=bruhat,
        )


def _load_cached(rs: RootSystem, cache_dir: Path) -> GroupTable | None:
    create_cache_tables(cache_dir)
    db = open_session(cache_dir)
    try:
        row = (
            db.query(GroupCache)
            .filter(
                GroupCache.kind == rs.kind.value,
                GroupCache.rank == rs.rank,
                GroupCache.format_version == config.CACHE_FORMAT_VERSION,
            )
            .first()
        )
        if row is None:
            return None
        try:
            table = GroupTable.from_payload(rs, row.payload)
        except (ValueError, KeyError, OSError) as e:
            logger.warning(f"Discarding unreadable cache entry for {rs.name}: {str(e)}")
            db.delete(row)
            db.commit()
            return None
        if len(table) != row.element_count:
            logger.warning(f"Discarding inconsistent cache entry for {rs.name}")
            db.delete(row)
            db.commit()
            return None
        return table
    finally:
        db.close()


def _store_cached(table: GroupTable, cache_dir: Path) -> None:
    rs = table.rs
    db = open_session(cache_dir)
    try:
        db.add(
            GroupCache(
                kind=rs.kind.value,
                rank=rs.rank,
                format_version=config.CACHE_FORMAT_VERSION,
                element_count=len(table),
                payload=table.to_payload(),
            )
        )
        db.commit()
        logger.info(f"Cached {rs.name} in {cache_dir}")
    except SQLAlchemyError as e:
        db.rollback()
        logger.error(f"Could not cache {rs.name}: {str(e)}")
    finally:
        db.close()


@lru_cache(maxsize=8)
def _memory_table(rs: RootSystem, cache_dir: Path | None) -> GroupTable:
    if cache_dir is not None:
        try:
            table = _load_cached(rs, cache_dir)
        except SQLAlchemyError as e:
            logger.error(f"Cache lookup failed for {rs.name}: {str(e)}")
            table = None
        if table is not None:
            logger.info(f"Cache hit for {rs.name} ({len(table)} elements)")
            return table
        logger.info(f"Cache miss for {rs.name}")

    table = GroupTable.compute(rs)
    if cache_dir is not None:
        _store_cached(table, cache_dir)
    return table


def load_group_table(rs: RootSystem, use_cache: bool = True, cap: int | None = None) -> GroupTable:
    """Enumerate W(rs), reusing the in-memory and on-disk caches."""
    check_cap(rs, cap)
    cache_dir = config.cache_dir() if use_cache else None
    return _memory_table(rs, cache_dir)
