"""Brute-force oracles built on words rather than on root data.

They recompute Bruhat order, length and the factorization test by other
means, for cross-checking in verification suites.
"""
from typing import Iterable

from cskit.services.group_table import GroupTable
from cskit.services.rootsys import parabolic_roots
from cskit.services.weyl import WeylElt, canonical_word, identity, reduced_words, right_multiply


def reduced_subword_products(w: WeylElt) -> set[WeylElt]:
    """Products of the reduced subwords of the canonical word of w."""
    found = set()

    def walk(pos: int, prefix: WeylElt, letters: int) -> None:
        if prefix.length != letters:
            return
        if pos == len(word):
            found.add(prefix)
            return
        walk(pos + 1, prefix, letters)
        walk(pos + 1, right_multiply(prefix, word[pos]), letters + 1)

    word = canonical_word(w)
    walk(0, identity(w.rs), 0)
    return found


def subword_leq(v: WeylElt, w: WeylElt, below: set[WeylElt] | None = None) -> bool:
    """v <= w iff a reduced word of w contains a reduced word of v."""
    below = reduced_subword_products(w) if below is None else below
    return v in below


def cayley_length(table: GroupTable, w: WeylElt) -> int:
    """Word length of w as its distance from e in the Cayley graph."""
    return int(table.cayley_distance[table.index[w]])


def coxeter_factor_oracle(w: WeylElt, J: Iterable[int]) -> bool:
    """Some reduced word of w is a word in J of length l(w_{0,J}) followed by a Coxeter word."""
    J = frozenset(J)
    m = len(parabolic_roots(w.rs, J))
    generators = list(w.rs.generators)
    for word in reduced_words(w):
        if set(word[:m]) <= J and sorted(word[m:]) == generators:
            return True
    return False
