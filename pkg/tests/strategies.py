from hypothesis import strategies as st

from lazytour.trees import insert_leaf, star_tree


@st.composite
def random_trees(draw, min_n=0, max_n=6, ab_adjacent=False):
    """A uniformly grown random tree: insert 1..n on random edges."""
    n = draw(st.integers(min_n, max_n))
    t = star_tree()
    for label in range(1, n + 1):
        edges = t.edges()
        if ab_adjacent:
            edges = edges[2:]  # skip the a and b edges
        t = insert_leaf(t, edges[draw(st.integers(0, len(edges) - 1))], label)
    return t
