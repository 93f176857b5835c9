"""Weyl group elements as integer matrices acting on the simple-root basis.

Column j of an element's matrix is the image of alpha_j. Products of
generators are read left to right, so from_word(rs, [i1, ..., ik]) is
s_i1 s_i2 ... s_ik.
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from cskit import config
from cskit.errors import IndexOutOfRange, ParseError, TooLong, TypeMismatch
from cskit.services.rootsys import CartanType, RootSystem, RootVector, SimpleSubset, support

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class WeylElt:
    rs: RootSystem
    matrix: np.ndarray

    @cached_property
    def key(self) -> bytes:
        return self.matrix.tobytes()

    @cached_property
    def inverse_matrix(self) -> np.ndarray:
        inv = np.rint(np.linalg.inv(self.matrix)).astype(np.int64)
        inv.setflags(write=False)
        return inv

    @cached_property
    def inversion_mask(self) -> np.ndarray:
        """Mask over rs.positive_roots of the roots beta with w^-1(beta) < 0."""
        images = self.inverse_matrix @ self.rs.root_matrix
        return (images < 0).any(axis=0)

    @cached_property
    def length(self) -> int:
        return int(self.inversion_mask.sum())

    @cached_property
    def left_descents(self) -> SimpleSubset:
        negative = (self.inverse_matrix < 0).any(axis=0)
        return frozenset(int(j) + 1 for j in np.flatnonzero(negative))

    @cached_property
    def right_descents(self) -> SimpleSubset:
        negative = (self.matrix < 0).any(axis=0)
        return frozenset(int(j) + 1 for j in np.flatnonzero(negative))

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElt):
            return NotImplemented
        return self.rs == other.rs and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.rs.kind, self.rs.rank, self.key))

    def __repr__(self) -> str:
        word = ",".join(str(i) for i in canonical_word(self)) or "e"
        return f"WeylElt({self.rs.name}: {word})"


def _element(rs: RootSystem, matrix: np.ndarray) -> WeylElt:
    matrix = np.asarray(matrix, dtype=np.int64)
    matrix.setflags(write=False)
    return WeylElt(rs=rs, matrix=matrix)


def from_matrix(rs: RootSystem, matrix: np.ndarray) -> WeylElt:
    if np.shape(matrix) != (rs.rank, rs.rank):
        raise ParseError(f"Matrix of shape {np.shape(matrix)} does not fit {rs.name}")
    return _element(rs, matrix)


@lru_cache(maxsize=None)
def identity(rs: RootSystem) -> WeylElt:
    return _element(rs, np.eye(rs.rank, dtype=np.int64))


@lru_cache(maxsize=None)
def simple_reflection(rs: RootSystem, i: int) -> WeylElt:
    return _element(rs, rs.reflection_matrix(i))


def multiply(a: WeylElt, b: WeylElt) -> WeylElt:
    if a.rs != b.rs:
        raise TypeMismatch(f"Cannot multiply elements of {a.rs.name} and {b.rs.name}")
    return _element(a.rs, a.matrix @ b.matrix)


def inverse(a: WeylElt) -> WeylElt:
    return _element(a.rs, a.inverse_matrix)


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElt:
    """Product of the generators of word, multiplied left to right."""
    matrix = np.eye(rs.rank, dtype=np.int64)
    for i in word:
        matrix = matrix @ simple_reflection(rs, i).matrix
    return _element(rs, matrix)


def left_multiply(i: int, w: WeylElt) -> WeylElt:
    return multiply(simple_reflection(w.rs, i), w)


def right_multiply(w: WeylElt, i: int) -> WeylElt:
    return multiply(w, simple_reflection(w.rs, i))


def length(w: WeylElt) -> int:
    return w.length


def inversion_set(w: WeylElt) -> frozenset[RootVector]:
    """R+(w^-1): the positive roots sent negative by w^-1."""
    roots = w.rs.positive_roots
    return frozenset(roots[k] for k in np.flatnonzero(w.inversion_mask))


def left_descents(w: WeylElt) -> SimpleSubset:
    return w.left_descents


def right_descents(w: WeylElt) -> SimpleSubset:
    return w.right_descents


def element_support(w: WeylElt) -> SimpleSubset:
    """Generators occurring in a (any) reduced word of w."""
    found: set[int] = set()
    for root in inversion_set(w):
        found |= support(w.rs, root)
    return frozenset(found)


def longest_element(rs: RootSystem, J: Iterable[int]) -> WeylElt:
    """w_{0,J}: grow by right multiplication until no generator of J ascends."""
    J = sorted(rs.check_generator(i) for i in set(J))
    w = identity(rs)
    while True:
        ascent = next((i for i in J if i not in w.right_descents), None)
        if ascent is None:
            return w
        w = right_multiply(w, ascent)


def bruhat_leq(v: WeylElt, w: WeylElt) -> bool:
    """v <= w in Bruhat order, by the descent recursion."""
    if v.rs != w.rs:
        raise TypeMismatch(f"Cannot compare elements of {v.rs.name} and {w.rs.name}")
    return _bruhat_leq(v, w)


@lru_cache(maxsize=1 << 20)
def _bruhat_leq(v: WeylElt, w: WeylElt) -> bool:
    if v.length > w.length:
        return False
    if v.length == w.length:
        return v == w
    if v.length == 0:
        return True
    s = min(w.left_descents)
    sw = left_multiply(s, w)
    if s in v.left_descents:
        return _bruhat_leq(left_multiply(s, v), sw)
    return _bruhat_leq(v, sw)


def lower_interval(w: WeylElt) -> list[WeylElt]:
    """[e, w] sorted by (length, canonical word).

    Built letter by letter from the right of a reduced word with
    [e, s x] = [e, x] u s[e, x] for s x > x.
    """
    found = {identity(w.rs)}
    for i in reversed(canonical_word(w)):
        found |= {left_multiply(i, x) for x in found}
    return sorted(found, key=lambda x: (x.length, canonical_word(x)))


def min_coset_rep(w: WeylElt, I: Iterable[int]) -> WeylElt:
    """Minimal-length representative of the coset w W_I."""
    I = frozenset(I)
    while True:
        descents = w.right_descents & I
        if not descents:
            return w
        w = right_multiply(w, min(descents))


def is_min_rep(w: WeylElt, I: Iterable[int]) -> bool:
    return not (w.right_descents & frozenset(I))


def is_distinct_product(w: WeylElt) -> bool:
    return w.length == len(element_support(w))


def is_coxeter(w: WeylElt) -> bool:
    return is_distinct_product(w) and element_support(w) == w.rs.full_subset


def canonical_word(w: WeylElt) -> Word:
    """Lexicographically first reduced word of w."""
    word = []
    while w.length:
        i = min(w.left_descents)
        word.append(i)
        w = left_multiply(i, w)
    return tuple(word)


def reduced_words(w: WeylElt, guard: int | None = None) -> list[Word]:
    """All reduced words of w in lexicographic order."""
    guard = config.REDUCED_WORD_GUARD if guard is None else guard
    if w.length > guard:
        raise TooLong(f"Refusing to enumerate reduced words of an element of length {w.length} > {guard}")

    memo: dict[WeylElt, list[Word]] = {}

    def words(x: WeylElt) -> list[Word]:
        if x.length == 0:
            return [()]
        if x not in memo:
            memo[x] = [
                (i,) + rest
                for i in sorted(x.left_descents)
                for rest in words(left_multiply(i, x))
            ]
        return memo[x]

    return words(w)


def is_reduced_word(rs: RootSystem, word: Sequence[int]) -> bool:
    return from_word(rs, word).length == len(word)


def enumerate_group(rs: RootSystem, J: Iterable[int] | None = None) -> list[WeylElt]:
    """Elements of W (or of W_J), breadth first from the identity.

    Neighbours are visited in generator-index order by right multiplication.
    """
    gens = sorted(rs.generators if J is None else set(J))
    start = identity(rs)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in gens:
            x = right_multiply(w, i)
            if x not in seen:
                seen.add(x)
                order.append(x)
                queue.append(x)
    logger.debug(f"Enumerated {len(order)} elements of {rs.name} over generators {gens}")
    return order


def parabolic_subgroup(rs: RootSystem, J: Iterable[int]) -> list[WeylElt]:
    return enumerate_group(rs, J=J)


def _require_type_a(rs: RootSystem) -> None:
    if rs.kind != CartanType.A:
        raise TypeMismatch(f"One-line notation is only defined for type A, not {rs.name}")


def to_one_line(w: WeylElt) -> tuple[int, ...]:
    """Permutation [w(1), ..., w(n+1)] of a type A element."""
    _require_type_a(w.rs)
    perm = list(range(1, w.rs.rank + 2))
    for i in canonical_word(w):
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def from_one_line(rs: RootSystem, perm: Sequence[int]) -> WeylElt:
    _require_type_a(rs)
    perm = [int(x) for x in perm]
    if sorted(perm) != list(range(1, rs.rank + 2)):
        raise ParseError(f"{perm} is not a permutation of 1..{rs.rank + 1}")

    # bubble sort; each swap is a right multiplication that lowers length
    letters = []
    work = list(perm)
    while True:
        i = next((k for k in range(1, len(work)) if work[k - 1] > work[k]), None)
        if i is None:
            break
        work[i - 1], work[i] = work[i], work[i - 1]
        letters.append(i)
    return from_word(rs, reversed(letters))


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(i) for i in word) if word else "e"


def format_one_line(perm: Sequence[int]) -> str:
    sep = "" if len(perm) <= 9 else ","
    return sep.join(str(x) for x in perm)


def check_word(rs: RootSystem, word: Iterable[int]) -> Word:
    word = tuple(int(i) for i in word)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise IndexOutOfRange(f"Generator index {i} outside 1..{rs.rank} for {rs.name}")
    return word
