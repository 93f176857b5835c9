"""Schubert-variety invariants read off Bruhat data."""
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from cskit.errors import NotMinimalRep, ParseError, TypeMismatch
from cskit.services.rootsys import CartanType, RootSystem
from cskit.services.weyl import (
    WeylElt,
    is_distinct_product,
    is_min_rep,
    lower_interval,
    reduced_words,
    to_one_line,
)

logger = logging.getLogger(__name__)

SMOOTHNESS_PATTERNS = ((3, 4, 1, 2), (4, 2, 3, 1))
_INT64_HEADROOM = 2**62


class Tristate(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, value: bool) -> "Tristate":
        return cls.TRUE if value else cls.FALSE

    @property
    def decided(self) -> bool:
        return self is not Tristate.UNKNOWN

    def as_bool(self) -> bool | None:
        return {Tristate.TRUE: True, Tristate.FALSE: False}.get(self)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in q with nonnegative integer coefficients, low degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        if any(c < 0 for c in coeffs):
            raise ValueError(f"Negative coefficient in {coeffs}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "Polynomial":
        lengths = np.fromiter(lengths, dtype=np.int64)
        if lengths.size == 0:
            return cls(())
        return cls(tuple(np.bincount(lengths).tolist()))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q: int) -> int:
        return sum(c * q**k for k, c in enumerate(self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial(())
        if self(1) * other(1) >= _INT64_HEADROOM:
            raise OverflowError(f"Product of {self} and {other} overflows int64")
        a = np.array(self.coeffs, dtype=np.int64)
        b = np.array(other.coeffs, dtype=np.int64)
        return Polynomial(tuple(np.convolve(a, b).tolist()))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not power:
                terms.append(str(c))
            else:
                terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms)


def poincare(w: WeylElt) -> Polynomial:
    """Sum of q^l(v) over the lower interval [e, w]."""
    return Polynomial.from_lengths(v.length for v in lower_interval(w))


def parabolic_poincare(w: WeylElt, I: Iterable[int]) -> Polynomial:
    """Sum of q^l(v) over minimal representatives v in W^I with v <= w."""
    I = frozenset(I)
    if not is_min_rep(w, I):
        raise NotMinimalRep(f"{w} is not a minimal representative for W_I with I = {sorted(I)}")
    return Polynomial.from_lengths(v.length for v in lower_interval(w) if is_min_rep(v, I))


def is_palindromic(p: Polynomial) -> bool:
    return p.coeffs == p.coeffs[::-1]


def rationally_smooth(w: WeylElt) -> bool:
    return is_palindromic(poincare(w))


def is_toric(w: WeylElt) -> bool:
    return is_distinct_product(w)


def _standardize(values: Sequence[int]) -> tuple[int, ...]:
    order = sorted(values)
    return tuple(order.index(v) + 1 for v in values)


def _as_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(int(x) for x in perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ParseError(f"{perm} is not a permutation in one-line notation")
    return perm


def contains_pattern(w: WeylElt | Sequence[int], p: Sequence[int]) -> bool:
    """True iff some subsequence of w's one-line word is order-isomorphic to p."""
    word = to_one_line(w) if isinstance(w, WeylElt) else _as_permutation(w)
    p = _as_permutation(p)
    if len(p) > len(word):
        return False
    return any(_standardize([word[k] for k in positions]) == p for positions in combinations(range(len(word)), len(p)))


def smoothness_from_palindromic(rs: RootSystem, palindromic: bool) -> Tristate:
    """Rational smoothness decides smoothness only in simply-laced types."""
    if rs.simply_laced:
        return Tristate.of(palindromic)
    return Tristate.UNKNOWN if palindromic else Tristate.FALSE


def is_smooth(w: WeylElt) -> Tristate:
    """Smoothness of X_wB.

    Type A uses pattern avoidance of 3412 and 4231. Elsewhere a palindromic
    Poincare polynomial leaves B, C, F, G unknown.
    """
    if w.rs.kind == CartanType.A:
        return Tristate.of(not any(contains_pattern(w, p) for p in SMOOTHNESS_PATTERNS))
    return smoothness_from_palindromic(w.rs, rationally_smooth(w))


def has_lmp_shape(w: WeylElt, guard: int | None = None) -> int | None:
    """Witness j of a reduced word containing s_{j+1} s_j s_{j+2} s_{j+1}.

    Outside the segment no letter repeats and s_{j+1} occurs only there.
    """
    if w.rs.kind != CartanType.A:
        raise TypeMismatch(f"The segment shape test is only defined for type A, not {w.rs.name}")
    for word in reduced_words(w, guard=guard):
        counts = Counter(word)
        for k in range(len(word) - 3):
            a, j, c, d = word[k : k + 4]
            if a != j + 1 or c != j + 2 or d != j + 1:
                continue
            if counts[j + 1] == 2 and all(n == 1 for letter, n in counts.items() if letter != j + 1):
                return j
    return None
