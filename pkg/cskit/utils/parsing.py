import re
from typing import Sequence

from cskit.errors import ParseError
from cskit.services.rootsys import CartanType, RootSystem, build, validate_type
from cskit.services.weyl import WeylElt, Word, check_word, from_one_line, from_word


def parse_type(text: str) -> tuple[CartanType, int]:
    """Parse "A3", "b2", "E6" into a validated (kind, rank)."""
    match = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text or "")
    if not match:
        raise ParseError(f"Cannot parse type {text!r}; expected e.g. A3 or D4")
    rank = int(match.group(2))
    return validate_type(match.group(1), rank), rank


def parse_root_system(text: str) -> RootSystem:
    kind, rank = parse_type(text)
    return build(kind, rank)


def parse_indices(text: str) -> list[int]:
    """Comma-separated integers; the empty string is the empty list."""
    text = (text or "").strip()
    if not text or text.lower() == "e":
        return []
    parts = [p.strip() for p in re.split(r"[,\s]+", text) if p.strip()]
    if not all(re.fullmatch(r"\d+", p) for p in parts):
        raise ParseError(f"Cannot parse index list {text!r}")
    return [int(p) for p in parts]


def parse_word(rs: RootSystem, text: str) -> Word:
    return check_word(rs, parse_indices(text))


def parse_one_line(text: str) -> list[int]:
    """One-line permutation, either digits ("4231") or comma separated."""
    text = (text or "").strip()
    if "," in text or " " in text:
        return parse_indices(text)
    if not re.fullmatch(r"\d+", text):
        raise ParseError(f"Cannot parse one-line permutation {text!r}")
    return [int(c) for c in text]


def parse_subset(text: str) -> frozenset[int]:
    """"{1,3}", "1,3" or "" into a simple subset."""
    return frozenset(parse_indices((text or "").strip().strip("{}")))


def parse_element(rs: RootSystem, word: str | None = None, one_line: str | None = None) -> tuple[WeylElt, Sequence[int] | None]:
    """Element given by exactly one of a word or a one-line permutation.

    Returns the element and the word it was given by, if any.
    """
    if (word is None) == (one_line is None):
        raise ParseError("Give exactly one of a word or a one-line permutation")
    if word is not None:
        letters = parse_word(rs, word)
        return from_word(rs, letters), letters
    return from_one_line(rs, parse_one_line(one_line)), None
