import pytest

from vmkit import (
    Dow,
    SimpleGraph,
    alternance_graph,
    alternances,
    canonicalize,
    induced_subword,
    local_complement,
    delete_vertex,
    induced_subgraph,
    mirror,
    multigraph_from_word,
    word_delete,
    word_local_complement,
)
from corpus_helpers import all_dow_classes, worked_graph


X0 = Dow.from_text("adcbaebced")


def test_dow_validation():
    with pytest.raises(ValueError):
        Dow(("a", "b", "a"))
    with pytest.raises(ValueError):
        Dow(("a", "a", "b", "b", "b", "b"))
    assert Dow.from_text("a b a b").letters == ("a", "b", "a", "b")
    assert Dow.from_text("abab").letters == ("a", "b", "a", "b")


def test_worked_example_alternances():
    # the five alternances of adcbaebced
    want = {
        frozenset("ab"),
        frozenset("ac"),
        frozenset("ad"),
        frozenset("be"),
        frozenset("ce"),
    }
    assert alternances(X0) == want
    assert alternance_graph(X0) == worked_graph()


def test_alternance_invariance_under_rotation_and_mirror():
    for w in all_dow_classes(4):
        base = alternances(w)
        rot = Dow(w.letters[3:] + w.letters[:3])
        assert alternances(rot) == base
        assert alternances(mirror(w)) == base


def test_canonicalize_is_class_invariant():
    w = X0
    cls = canonicalize(w)
    for r in range(len(w.letters)):
        rot = Dow(w.letters[r:] + w.letters[:r])
        assert canonicalize(rot) == cls
        assert canonicalize(mirror(rot)) == cls
    assert canonicalize(Dow.from_text("abab")) != canonicalize(Dow.from_text("aabb"))


def test_word_local_complement_matches_graph_op():
    for w in all_dow_classes(3) + all_dow_classes(4):
        G = alternance_graph(w)
        for v in sorted({*w.letters}):
            assert alternance_graph(word_local_complement(w, v)) == local_complement(G, v)


def test_word_delete_matches_graph_op():
    for w in all_dow_classes(3) + all_dow_classes(4):
        G = alternance_graph(w)
        for v in sorted({*w.letters}):
            assert alternance_graph(word_delete(w, v)) == delete_vertex(G, v)


def test_induced_subword_matches_induced_subgraph():
    w = X0
    G = alternance_graph(w)
    assert alternance_graph(induced_subword(w, set("abd"))) == induced_subgraph(G, "abd")
    sub = induced_subword(w, set("abcd"))
    assert sub.letters == tuple("adcbabcd")


def test_multigraph_from_word_fixture():
    F = multigraph_from_word(X0)
    assert F.edges == (
        ("a", "d"), ("c", "d"), ("b", "c"), ("a", "b"), ("a", "e"),
        ("b", "e"), ("b", "c"), ("c", "e"), ("d", "e"), ("a", "d"),
    )
    # every vertex occurs twice in the word, so the multigraph is 4-regular
    assert all(F.degree(v) == 4 for v in F.vertices)


def test_multigraph_from_word_rotation_gives_same_multiset():
    w2 = Dow.from_text("abcdaebced")
    F1 = multigraph_from_word(X0)
    F2 = multigraph_from_word(w2)
    assert sorted(F1.edges) == sorted(F2.edges)


def test_word_ops_reject_missing_letter():
    with pytest.raises(ValueError):
        word_local_complement(X0, "z")
    with pytest.raises(ValueError):
        word_delete(X0, "z")
