"""Bruhat intervals as posets.

The poset of B-orbit closures in a BSDH or Schubert variety X_w, and so the
poset of G-orbit closures in G x_B X_w, is the lower interval [e, w]. Every
question about those orbit posets is asked here of the interval.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable

import networkx as nx

from cskit.errors import NotMinimalRep, NotWonderful
from cskit.schemas.records import IntervalNode, IntervalOut
from cskit.services.rootsys import SimpleSubset, format_subset
from cskit.services.spherical import BsdhWord, gbsdh_wonderful
from cskit.services.weyl import (
    WeylElt,
    bruhat_leq,
    canonical_word,
    element_support,
    format_word,
    is_distinct_product,
    is_min_rep,
    lower_interval,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntervalPoset:
    top: WeylElt
    # sorted by (length, canonical word); elements[0] is e
    elements: tuple[WeylElt, ...]
    # (lower, upper) index pairs of covering relations
    covers: tuple[tuple[int, int], ...]
    I: SimpleSubset = frozenset()

    def rank_fn(self, k: int) -> int:
        return self.elements[k].length

    @property
    def rank(self) -> int:
        return self.top.length

    @cached_property
    def graph(self) -> nx.DiGraph:
        """Cover digraph, edges pointing upwards, nodes labelled by canonical word."""
        g = nx.DiGraph()
        for k, v in enumerate(self.elements):
            g.add_node(k, word=format_word(canonical_word(v)), length=v.length)
        g.add_edges_from(self.covers)
        return g

    def rank_sizes(self) -> list[int]:
        sizes = [0] * (self.rank + 1)
        for v in self.elements:
            sizes[v.length] += 1
        return sizes

    def __len__(self) -> int:
        return len(self.elements)


def bruhat_interval(w: WeylElt, I: Iterable[int] | None = None) -> IntervalPoset:
    """[e, w], or its parabolic version {v in W^I : v <= w} when I is given."""
    I = frozenset(I or ())
    if not is_min_rep(w, I):
        raise NotMinimalRep(f"{w} is not a minimal representative for W_I with I = {format_subset(I)}")
    elements = [v for v in lower_interval(w) if is_min_rep(v, I)]
    by_length: dict[int, list[int]] = {}
    for k, v in enumerate(elements):
        by_length.setdefault(v.length, []).append(k)

    covers = []
    for k, v in enumerate(elements):
        for m in by_length.get(v.length + 1, []):
            if bruhat_leq(v, elements[m]):
                covers.append((k, m))
    logger.debug(f"Interval below {w}: {len(elements)} elements, {len(covers)} covers")
    return IntervalPoset(top=w, elements=tuple(elements), covers=tuple(covers), I=I)


def boolean_lattice_graph(n: int) -> nx.DiGraph:
    """Cover digraph of the subsets of an n-element set, bitmask nodes."""
    g = nx.DiGraph()
    g.add_nodes_from(range(1 << n))
    g.add_edges_from((m, m | (1 << b)) for m in range(1 << n) for b in range(n) if not m & (1 << b))
    return g


def _support_labelling_is_boolean(p: IntervalPoset) -> bool:
    # distinct subwords of a distinct-product word have distinct supports
    top = element_support(p.top)
    labels = [element_support(v) for v in p.elements]
    if len(set(labels)) != len(labels) or any(not label <= top for label in labels):
        return False
    expected = {
        (a, b)
        for a, lower in enumerate(labels)
        for b, upper in enumerate(labels)
        if lower < upper and len(upper) == len(lower) + 1
    }
    return expected == set(p.covers)


def is_boolean(p: IntervalPoset) -> bool:
    """Whether p is isomorphic to the lattice of subsets of a rank(p)-element set."""
    n = p.rank
    if len(p) != 2**n or p.rank_sizes() != [comb(n, k) for k in range(n + 1)]:
        return False
    if not p.I and is_distinct_product(p.top):
        return _support_labelling_is_boolean(p)
    return nx.is_isomorphic(p.graph, boolean_lattice_graph(n))


def coatom_count(p: IntervalPoset) -> int:
    """Number of elements covered by the top of p."""
    return p.graph.in_degree(p.elements.index(p.top))


def wonderful_rank(word: BsdhWord) -> int:
    """Spherical rank of the wonderful variety G x_B X_w: the length of the word."""
    if not gbsdh_wonderful(word):
        raise NotWonderful(f"G x_B X_w is not wonderful for word {format_word(word.word)}")
    return len(word)


def interval_to_json(p: IntervalPoset) -> IntervalOut:
    return IntervalOut(
        type=p.top.rs.name,
        top=list(canonical_word(p.top)),
        parabolic=sorted(p.I),
        nodes=[
            IntervalNode(id=k, word=list(canonical_word(v)), length=v.length)
            for k, v in enumerate(p.elements)
        ],
        edges=list(p.covers),
    )


def interval_to_dot(p: IntervalPoset) -> str:
    lines = [f'digraph "{p.top.rs.name}:{format_word(canonical_word(p.top))}" {{', "  rankdir=BT;"]
    for k, data in p.graph.nodes(data=True):
        lines.append(f'  n{k} [label="{data["word"]}"];')
    for a, b in p.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
