import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lazytour.multidegrees import double_factorial
from lazytour.trees import (A, B, C, LabeledTree, ResourceLimitError, branches_at,
                            enumerate_trees, forget, insert_leaf, parse_tree, prefixes,
                            extend_roots, relabel, star_tree)

from oracles import brute_trees
from strategies import random_trees


@pytest.mark.parametrize("n", range(0, 8))
def test_counts_are_double_factorials(n):
    all_trees = list(enumerate_trees(n))
    adjacent = list(enumerate_trees(n, require_ab_adjacent=True))
    assert len(all_trees) == double_factorial(2 * n + 1)
    assert len(adjacent) == double_factorial(2 * n - 1)
    if n <= 6:
        assert len(set(all_trees)) == len(all_trees)


@pytest.mark.parametrize("n", range(0, 5))
def test_enumeration_matches_partition_oracle(n):
    assert set(enumerate_trees(n)) == brute_trees(n)
    assert set(enumerate_trees(n, True)) == brute_trees(n, ab_adjacent=True)


def test_every_tree_has_trivalent_shape():
    for t in enumerate_trees(4):
        adj = t.adjacency()
        leaves = [v for v in adj if type(v) is not tuple]
        assert sorted(leaves) == sorted(t.labels)
        assert all(len(adj[v]) == 1 for v in leaves)
        assert all(len(nb) == 3 for v, nb in adj.items() if type(v) is tuple)
        assert len(adj) - len(leaves) == t.n + 1


def test_prefix_partition_reproduces_the_stream():
    for flag in (False, True):
        joined = [r for p in prefixes(6, flag) for r in extend_roots(p, 6, flag)]
        assert joined == [t.root for t in enumerate_trees(6, flag)]


def test_enumeration_is_deterministic():
    assert list(enumerate_trees(4)) == list(enumerate_trees(4))


def test_star_tree():
    t = star_tree()
    assert t.n == 0
    assert t.to_text() == "(a,b,c)"
    assert t.is_ab_adjacent()


@given(random_trees(max_n=7), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_canonical_form_ignores_encoding(t, rnd):
    edges, labels = t.to_edges()
    ids = list({v for e in edges for v in e})
    shuffled = ids[:]
    rnd.shuffle(shuffled)
    ren = dict(zip(ids, shuffled))
    new_edges = [(ren[v], ren[u]) if rnd.random() < 0.5 else (ren[u], ren[v]) for u, v in edges]
    rnd.shuffle(new_edges)
    new_labels = {ren[v]: lab for v, lab in labels.items()}
    assert LabeledTree.from_edges(new_edges, new_labels) == t


@given(random_trees(max_n=7))
@settings(max_examples=150, deadline=None)
def test_text_roundtrip(t):
    assert parse_tree(t.to_text()) == t


def test_parse_accepts_any_child_order():
    one = parse_tree("(a,b,(((2,3),4),(c,1)))")
    two = parse_tree("(b,a,((1,c),(4,(3,2))))")
    assert one == two
    assert one.to_text() == "(a,b,((c,1),((2,3),4)))"


@pytest.mark.parametrize("text", [
    "(a,b)",
    "(a,b,c,1)",
    "(a,b,(c))",
    "(a,b,(c,1,2))",
    "(a,b,(c,c))",
    "(b,c,1)",
    "(a,b,(c,1)",
    "(a,b,(c,x))",
    "(a,b,(c,2))",
    "",
])
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_tree(text)


def test_from_edges_rejects_non_trees():
    with pytest.raises(ValueError):
        LabeledTree.from_edges([(0, 1), (1, 2), (2, 0), (3, 4)], {3: A, 4: B})
    with pytest.raises(ValueError):
        LabeledTree.from_edges([(0, 1), (0, 2)], {1: A, 2: B})
    with pytest.raises(ValueError):
        LabeledTree.from_edges([(0, 1), (0, 2), (0, 3)], {1: A, 2: B, 3: B})


@pytest.mark.parametrize("n", range(0, 5))
def test_insertions_are_distinct_and_forget_undoes_them(n):
    for t in enumerate_trees(n):
        grown = [insert_leaf(t, e, n + 1) for e in t.edges()]
        assert len(grown) == 2 * n + 3
        assert len(set(grown)) == len(grown)
        assert all(forget(g, n + 1) == t for g in grown)


def test_insertion_rejects_bad_input():
    t = star_tree()
    with pytest.raises(ValueError):
        insert_leaf(t, A, C)
    with pytest.raises(ValueError):
        insert_leaf(t, 7, 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_forgetting_b_hits_every_smaller_tree_once(n):
    images = [forget(t, B) for t in enumerate_trees(n, True)]
    assert len(set(images)) == len(images)
    # relabel b -> c and c..n-1 -> c+1.. to land in the standard label set
    shift = lambda l: B if l == C else (l - 1 if l >= 1 else l)
    assert {relabel(t, shift) for t in images} == set(enumerate_trees(n - 1))


def test_forget_example():
    t = parse_tree("(a,b,((c,2),1))")
    assert forget(t, 2) == parse_tree("(a,b,(c,1))")
    with pytest.raises(ValueError):
        forget(t, A)
    with pytest.raises(ValueError):
        forget(t, 5)
    with pytest.raises(ValueError):
        forget(star_tree(), B)


def test_branches():
    t = parse_tree("(a,b,((1,3),(5,((2,4),c))))")
    view = branches_at(t, 5)
    assert view.branches[0] == {5}
    assert {frozenset(b) for b in view.branches[1:]} == {
        frozenset({A, B, 1, 3}), frozenset({2, 4, C})}
    assert view.same_branch(A, 3)
    assert not view.same_branch(A, 4)
    top = branches_at(t, A)
    assert top.at_vertex == t.root
    assert top.branch_of(B) == {B}


@given(random_trees(min_n=1, max_n=7), st.data())
@settings(max_examples=100, deadline=None)
def test_branches_partition_the_leaves(t, data):
    leaf = data.draw(st.sampled_from(sorted(t.labels)))
    view = branches_at(t, leaf)
    parts = view.branches
    assert len(parts) == 3
    assert frozenset().union(*parts) == t.labels
    assert sum(len(p) for p in parts) == len(t.labels)


def test_resource_cap(monkeypatch):
    monkeypatch.setenv("LAZYTOUR_MAX_N", "3")
    with pytest.raises(ResourceLimitError):
        next(enumerate_trees(4))
    assert len(list(enumerate_trees(3))) == 105


def test_relabel_must_fix_a():
    with pytest.raises(ValueError):
        relabel(star_tree(), lambda l: B if l == A else l)


def test_random_order_of_insertions_gives_same_set():
    # inserting labels in a different order still covers every tree
    rnd = random.Random(7)
    found = set()
    for _ in range(3000):
        t = star_tree()
        for label in (2, 1):
            t = insert_leaf(t, rnd.choice(t.edges()), label)
        found.add(t)
    assert found == set(enumerate_trees(2))
