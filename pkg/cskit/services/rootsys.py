"""Finite crystallographic root systems in the simple-root basis.

Roots are integer vectors of simple-root coordinates. Cartan matrices use
Bourbaki numbering with a_ij = <alpha_i^vee, alpha_j>, so the simple
reflection s_i acts by v -> v - (A[i] . v) alpha_i.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from cskit.errors import IndexOutOfRange, InvalidType, NotPositiveRoot

logger = logging.getLogger(__name__)

RootVector = tuple[int, ...]
# 1-based generator indices.
SimpleSubset = frozenset[int]


class CartanType(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"


SIMPLY_LACED = {CartanType.A, CartanType.D, CartanType.E}


def _chain(A: np.ndarray, length: int) -> None:
    idx = np.arange(length - 1)
    A[idx, idx + 1] = -1
    A[idx + 1, idx] = -1


def dynkin_to_cartan(kind: CartanType, rank: int) -> np.ndarray:
    """Cartan matrix of the given finite type, Bourbaki numbering."""
    A = 2 * np.eye(rank, dtype=np.int64)
    if kind == CartanType.A:
        _chain(A, rank)
    elif kind == CartanType.B:
        _chain(A, rank)
        # alpha_n is short
        A[-1, -2] = -2
    elif kind == CartanType.C:
        _chain(A, rank)
        # alpha_n is long
        A[-2, -1] = -2
    elif kind == CartanType.D:
        _chain(A, rank - 1)
        A[-3, -1] = -1
        A[-1, -3] = -1
    elif kind == CartanType.E:
        # 1 - 3 - 4 - 5 - ... - n, with 2 hanging off 4
        chain = [0] + list(range(2, rank))
        for a, b in zip(chain, chain[1:]):
            A[a, b] = -1
            A[b, a] = -1
        A[1, 3] = -1
        A[3, 1] = -1
    elif kind == CartanType.F:
        _chain(A, rank)
        A[2, 1] = -2
    elif kind == CartanType.G:
        A[0, 1] = -3
        A[1, 0] = -1
    return A


def validate_type(kind: CartanType | str, rank: int) -> CartanType:
    try:
        kind = CartanType(str(kind).upper())
    except ValueError:
        raise InvalidType(f"Unknown Cartan type: {kind}")

    valid = {
        CartanType.A: rank >= 1,
        CartanType.B: rank >= 2,
        CartanType.C: rank >= 2,
        CartanType.D: rank >= 3,
        CartanType.E: rank in (6, 7, 8),
        CartanType.F: rank == 4,
        CartanType.G: rank == 2,
    }[kind]
    if not valid:
        raise InvalidType(f"Unsupported finite type: {kind.value}{rank}")
    return kind


@dataclass(frozen=True, eq=False)
class RootSystem:
    kind: CartanType
    rank: int
    cartan: np.ndarray
    positive_roots: tuple[RootVector, ...]
    simple_indices: tuple[int, ...]
    root_index: dict[RootVector, int] = field(repr=False)
    # n x |R+|, one positive root per column
    root_matrix: np.ndarray = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.kind.value}{self.rank}"

    @property
    def generators(self) -> range:
        return range(1, self.rank + 1)

    @property
    def simply_laced(self) -> bool:
        return self.kind in SIMPLY_LACED

    @property
    def full_subset(self) -> SimpleSubset:
        return frozenset(self.generators)

    def check_generator(self, i: int) -> int:
        if not isinstance(i, (int, np.integer)) or not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"Generator index {i} outside 1..{self.rank} for {self.name}")
        return int(i)

    def simple_root(self, i: int) -> RootVector:
        i = self.check_generator(i)
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def reflection_matrix(self, i: int) -> np.ndarray:
        i = self.check_generator(i)
        M = np.eye(self.rank, dtype=np.int64)
        M[i - 1, :] -= self.cartan[i - 1, :]
        return M

    def commute(self, i: int, j: int) -> bool:
        return i == j or self.cartan[i - 1, j - 1] == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootSystem):
            return NotImplemented
        return (self.kind, self.rank) == (other.kind, other.rank)

    def __hash__(self) -> int:
        return hash((self.kind, self.rank))

    def __repr__(self) -> str:
        return f"RootSystem({self.name}, |R+|={len(self.positive_roots)})"

    def __reduce__(self):
        return (build, (self.kind, self.rank))


def _reflect(cartan: np.ndarray, i: int, v: Sequence[int]) -> RootVector:
    pairing = int(cartan[i - 1].dot(v))
    out = list(v)
    out[i - 1] -= pairing
    return tuple(out)


def _root_order_key(v: RootVector):
    # height first, then alpha_1-heavy vectors first
    return (sum(v), tuple(-c for c in v))


@lru_cache(maxsize=None)
def build(kind: CartanType | str, rank: int) -> RootSystem:
    """Build the root system of type (kind, rank).

    Positive roots are the closure of the simple roots under the simple
    reflections, intersected with the nonnegative cone.
    """
    kind = validate_type(kind, rank)
    cartan = dynkin_to_cartan(kind, rank)

    simple = [tuple(int(x) for x in row) for row in np.eye(rank, dtype=np.int64)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        next_frontier = []
        for root in frontier:
            for i in range(1, rank + 1):
                image = _reflect(cartan, i, root)
                if min(image) >= 0 and image not in found:
                    found.add(image)
                    next_frontier.append(image)
        frontier = next_frontier

    positive_roots = tuple(sorted(found, key=_root_order_key))
    root_index = {r: k for k, r in enumerate(positive_roots)}
    root_matrix = np.array(positive_roots, dtype=np.int64).T
    cartan.setflags(write=False)
    root_matrix.setflags(write=False)

    rs = RootSystem(
        kind=kind,
        rank=rank,
        cartan=cartan,
        positive_roots=positive_roots,
        simple_indices=tuple(root_index[r] + 1 for r in simple),
        root_index=root_index,
        root_matrix=root_matrix,
    )
    logger.debug(f"Built root system {rs.name} with {len(positive_roots)} positive roots")
    return rs


def apply_simple_reflection(rs: RootSystem, i: int, v: Sequence[int]) -> RootVector:
    """Image of the root vector v under s_i."""
    i = rs.check_generator(i)
    if len(v) != rs.rank:
        raise IndexOutOfRange(f"Root vector of length {len(v)} does not fit {rs.name}")
    return _reflect(rs.cartan, i, [int(x) for x in v])


def support(rs: RootSystem, v: Sequence[int]) -> SimpleSubset:
    """Indices of the simple roots occurring in the positive root v."""
    if len(v) != rs.rank:
        raise IndexOutOfRange(f"Root vector of length {len(v)} does not fit {rs.name}")
    if min(v) < 0 or max(v) <= 0:
        raise NotPositiveRoot(f"{tuple(v)} is not a positive root vector")
    return frozenset(k + 1 for k, c in enumerate(v) if c > 0)


def parabolic_roots(rs: RootSystem, J: Iterable[int]) -> list[RootVector]:
    """Positive roots supported in J, i.e. ZJ intersected with R+."""
    J = frozenset(J)
    return [r for r in rs.positive_roots if all(c == 0 or k + 1 in J for k, c in enumerate(r))]


def subsets(J: Iterable[int]) -> Iterator[SimpleSubset]:
    """All subsets of J, by size and then lexicographically."""
    items = sorted(J)
    for size in range(len(items) + 1):
        for combo in combinations(items, size):
            yield frozenset(combo)


def format_subset(J: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(J)) + "}"
