"""Sphericality tests for Schubert, BSDH, G-Schubert and G-BSDH varieties.

All tests are combinatorial: a Schubert variety X_wB is a spherical
L_J-variety with dim B_J = dim X_wB exactly when w = w_{0,J} c with lengths
adding and c a Coxeter element. The relaxed form asks only that c be a
product of distinct simple reflections.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from cskit.errors import NotDescentSubset, NotReduced
from cskit.schemas.records import SphericalVerdictOut
from cskit.services.rootsys import RootSystem, RootVector, SimpleSubset, format_subset, subsets, support
from cskit.services.schubert import Tristate, is_toric
from cskit.services.weyl import (
    WeylElt,
    Word,
    canonical_word,
    check_word,
    from_word,
    inversion_set,
    is_coxeter,
    is_distinct_product,
    left_multiply,
    longest_element,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SphericalVerdict:
    holds: bool
    # c = w_{0,J} w, kept only when the test holds
    coxeter_part: WeylElt | None
    # (l(w), l(w_{0,J}), l(c))
    lengths: tuple[int, int, int]
    dim_condition: bool
    J: SimpleSubset = frozenset()
    relaxed: bool = False


@dataclass(frozen=True)
class BsdhWord:
    """A word in the simple reflections, not necessarily reduced."""

    rs: RootSystem
    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", check_word(self.rs, self.word))

    @cached_property
    def element(self) -> WeylElt:
        return from_word(self.rs, self.word)

    @property
    def reduced(self) -> bool:
        return self.element.length == len(self.word)

    def __len__(self) -> int:
        return len(self.word)


def _require_descents(w: WeylElt, J: Iterable[int]) -> SimpleSubset:
    J = frozenset(J)
    if not J <= w.left_descents:
        raise NotDescentSubset(f"{format_subset(J)} is not contained in J(w) = {format_subset(w.left_descents)}")
    return J


def _require_reduced(word: BsdhWord) -> None:
    if not word.reduced:
        raise NotReduced(f"Word {list(word.word)} is not reduced (length of product is {word.element.length})")


def r1_r2_partition(w: WeylElt, J: Iterable[int]) -> tuple[frozenset[RootVector], frozenset[RootVector]]:
    """Split R+(w^-1) into roots supported in J and the rest."""
    J = _require_descents(w, J)
    inside, outside = set(), set()
    for root in inversion_set(w):
        (inside if support(w.rs, root) <= J else outside).add(root)
    return frozenset(inside), frozenset(outside)


def _factorization_test(w: WeylElt, J: Iterable[int], relaxed: bool) -> SphericalVerdict:
    J = _require_descents(w, J)
    w0J = longest_element(w.rs, J)
    c = w0J * w
    additive = c.length == w.length - w0J.length
    factor_ok = is_distinct_product(c) if relaxed else is_coxeter(c)
    holds = additive and factor_ok
    return SphericalVerdict(
        holds=holds,
        coxeter_part=c if holds else None,
        lengths=(w.length, w0J.length, c.length),
        dim_condition=c.length == w.rs.rank,
        J=J,
        relaxed=relaxed,
    )


def spherical_levi_test(w: WeylElt, J: Iterable[int]) -> SphericalVerdict:
    """X_wB is L_J-spherical with dim B_J = dim X_wB."""
    return _factorization_test(w, J, relaxed=False)


def spherical_relaxed_test(w: WeylElt, J: Iterable[int]) -> SphericalVerdict:
    """X_wB is L_J-spherical, without the dimension condition."""
    return _factorization_test(w, J, relaxed=True)


def verdict_to_json(verdict: SphericalVerdict) -> SphericalVerdictOut:
    l_w, l_w0J, l_c = verdict.lengths
    part = verdict.coxeter_part
    return SphericalVerdictOut(
        J=sorted(verdict.J),
        holds=verdict.holds,
        relaxed=verdict.relaxed,
        coxeter_part_word=list(canonical_word(part)) if part is not None else None,
        l_w=l_w,
        l_w0J=l_w0J,
        l_c=l_c,
        dim_condition=verdict.dim_condition,
    )


def spherical_levis(w: WeylElt, relaxed: bool = False) -> list[SimpleSubset]:
    """Every J inside J(w) for which the (relaxed) test holds."""
    test = spherical_relaxed_test if relaxed else spherical_levi_test
    return [J for J in subsets(w.left_descents) if test(w, J).holds]


def bsdh_descent_set(word: BsdhWord) -> SimpleSubset:
    """J of a word: letters commuting with every letter up to their position."""
    rs = word.rs
    found = set()
    for pos, i in enumerate(word.word):
        if all(rs.commute(i, k) for k in word.word[: pos + 1]):
            found.add(i)
    return frozenset(found)


def bsdh_spherical_test(word: BsdhWord, relaxed: bool = False) -> SphericalVerdict:
    """Sphericality of X_w for its own Levi L(w), via w_{0,J(w)} w."""
    _require_reduced(word)
    test = spherical_relaxed_test if relaxed else spherical_levi_test
    return test(word.element, bsdh_descent_set(word))


def bsdh_first_letter_test(word: BsdhWord) -> bool:
    """X_w is L(s_i1)-spherical iff s_i1 w is a product of distinct simple reflections."""
    _require_reduced(word)
    if not word.word:
        return True
    return is_distinct_product(left_multiply(word.word[0], word.element))


def gschubert_spherical(w: WeylElt) -> bool:
    return is_toric(w)


def gbsdh_spherical(word: BsdhWord) -> bool:
    _require_reduced(word)
    w = word.element
    # dimension obstruction: no open B-orbit once l(w) > |S|
    if w.length > word.rs.rank:
        return False
    return is_toric(w)


def gbsdh_wonderful(word: BsdhWord) -> bool:
    """G x_B X_w is wonderful iff X_w is toric: reduced with distinct letters."""
    return len(word) == word.element.length and is_distinct_product(word.element)


def gbsdh_dimension(word: BsdhWord) -> int:
    """dim G x_B X_w = dim U^- + dim X_w."""
    return len(word.rs.positive_roots) + len(word)


def deletion_subwords(word: BsdhWord) -> list[BsdhWord]:
    """The words obtained by suppressing one letter, in position order."""
    return [BsdhWord(word.rs, word.word[:j] + word.word[j + 1 :]) for j in range(len(word))]


def b_orbit_finiteness(word: BsdhWord) -> Tristate:
    """Whether B has finitely many orbits on X_w (equivalently modality 0 of G x_B X_w).

    Toric words have finitely many orbits; words longer than dim B cannot.
    A reduced word has finitely many orbits iff every deletion subword does;
    a non-reduced branch leaves the answer unknown.
    """
    return _b_orbit_finiteness(word.rs, word.word)


@lru_cache(maxsize=None)
def _b_orbit_finiteness(rs: RootSystem, letters: Word) -> Tristate:
    word = BsdhWord(rs, letters)
    if gbsdh_wonderful(word):
        return Tristate.TRUE
    if len(word) > len(rs.positive_roots) + rs.rank:
        return Tristate.FALSE
    if not word.reduced:
        return Tristate.UNKNOWN
    branches = {_b_orbit_finiteness(rs, sub.word) for sub in deletion_subwords(word)}
    if Tristate.FALSE in branches:
        return Tristate.FALSE
    if branches == {Tristate.TRUE}:
        return Tristate.TRUE
    return Tristate.UNKNOWN