import networkx as nx
import pytest

from cskit.errors import NotMinimalRep, NotWonderful
from cskit.services.posets import (
    boolean_lattice_graph,
    bruhat_interval,
    coatom_count,
    interval_to_dot,
    interval_to_json,
    is_boolean,
    wonderful_rank,
)
from cskit.services.rootsys import build
from cskit.services.schubert import is_toric
from cskit.services.spherical import BsdhWord
from cskit.services.weyl import (
    bruhat_leq,
    canonical_word,
    enumerate_group,
    from_one_line,
    from_word,
    identity,
    longest_element,
)


def test_identity_interval(a3):
    p = bruhat_interval(identity(a3))
    assert len(p) == 1
    assert p.covers == ()
    assert coatom_count(p) == 0
    assert is_boolean(p)


def test_diamond(a2):
    p = bruhat_interval(from_word(a2, [1, 2]))
    assert len(p) == 4
    assert len(p.covers) == 4
    assert is_boolean(p)
    assert coatom_count(p) == 2


def test_longest_element_of_a2(a2):
    p = bruhat_interval(longest_element(a2, {1, 2}))
    assert len(p) == 6
    assert len(p.covers) == 8
    assert not is_boolean(p)
    assert p.rank_sizes() == [1, 2, 2, 1]


@pytest.mark.parametrize("word, size, coatoms", [((1, 3), 4, 2), ((1, 2, 3), 8, 3)])
def test_toric_intervals_are_boolean(a3, word, size, coatoms):
    p = bruhat_interval(from_word(a3, word))
    assert len(p) == size
    assert is_boolean(p)
    assert coatom_count(p) == coatoms == wonderful_rank(BsdhWord(a3, word))


def test_generic_isomorphism_agrees_with_support_labelling(a3):
    p = bruhat_interval(from_word(a3, [1, 3]))
    assert nx.is_isomorphic(p.graph, boolean_lattice_graph(2))
    assert not nx.is_isomorphic(bruhat_interval(from_word(a3, [1, 2, 1])).graph, boolean_lattice_graph(3))


def test_wonderful_rank_requires_toric_word(a3):
    assert wonderful_rank(BsdhWord(a3, ())) == 0
    with pytest.raises(NotWonderful):
        wonderful_rank(BsdhWord(a3, (1, 2, 1)))


@pytest.mark.parametrize("kind, rank", [("A", 3), ("A", 4), ("B", 3)])
def test_every_toric_interval_is_boolean(kind, rank):
    for w in enumerate_group(build(kind, rank)):
        if is_toric(w):
            p = bruhat_interval(w)
            assert is_boolean(p), w
            assert coatom_count(p) == w.length


def test_coatoms_match_brute_force(a3):
    group = enumerate_group(a3)
    for w in group:
        covered = [v for v in group if v.length == w.length - 1 and bruhat_leq(v, w)]
        assert coatom_count(bruhat_interval(w)) == len(covered)


@pytest.mark.parametrize("kind, rank", [("A", 3), ("B", 2), ("G", 2)])
def test_intervals_are_graded_with_unique_ends(kind, rank):
    for w in enumerate_group(build(kind, rank)):
        p = bruhat_interval(w)
        g = p.graph
        assert [k for k in g if g.in_degree(k) == 0] == [0]
        assert [k for k in g if g.out_degree(k) == 0] == [p.elements.index(w)]
        assert all(p.rank_fn(b) == p.rank_fn(a) + 1 for a, b in p.covers)


def test_parabolic_interval(a3):
    p = bruhat_interval(from_one_line(a3, [2, 4, 1, 3]), {1, 3})
    assert len(p) == 5
    assert p.rank_sizes() == [1, 1, 2, 1]
    assert not is_boolean(p)
    with pytest.raises(NotMinimalRep):
        bruhat_interval(from_one_line(a3, [4, 2, 3, 1]), {1, 3})


def test_emitters(a2):
    p = bruhat_interval(from_word(a2, [1, 2]))
    out = interval_to_json(p).to_json_dict()
    assert out["schema"] == 1
    assert out["type"] == "A2"
    assert out["top"] == list(canonical_word(p.top))
    assert len(out["nodes"]) == 4
    assert out["nodes"][0] == {"id": 0, "word": [], "length": 0}
    assert len(out["edges"]) == 4

    dot = interval_to_dot(p)
    assert dot.startswith('digraph "A2:1,2" {')
    assert 'n0 [label="e"];' in dot
    assert "n0 -> n1;" in dot
