"""Leaf-labeled trivalent trees.

Labels are plain ints ordered a < b < c < 1 < 2 < ...; the three lettered
leaves are ``A = -2``, ``B = -1`` and ``C = 0``, numbered leaf ``i`` is ``i``.

A tree is stored rooted at the internal vertex adjacent to leaf ``a``.  Every
other internal vertex is a tuple ``(x, y)`` holding its two children, ordered
by smallest leaf label; leaves are bare ints.  ``LabeledTree.root`` is the pair
of non-``a`` subtrees hanging off the root vertex, so two trees are equal
exactly when their roots are.  An edge is named by its endpoint away from the
root vertex, which is ``A`` for the leaf edge of ``a``.
"""

import os
import re

A, B, C = -2, -1, 0

DEFAULT_MAX_N = 10
MAX_N_ENV = "LAZYTOUR_MAX_N"

_NAMES = {A: "a", B: "b", C: "c"}
_CODES = {"a": A, "b": B, "c": C}


class ResourceLimitError(RuntimeError):
    """Raised when an exhaustive enumeration exceeds the configured size cap."""


def label_str(label):
    if label in _NAMES:
        return _NAMES[label]
    return str(label)


def parse_label(text):
    text = text.strip()
    if text in _CODES:
        return _CODES[text]
    if text.isdigit() and int(text) >= 1:
        return int(text)
    raise ValueError(f"not a leaf label: {text!r}")


def max_enumeration_size():
    """Largest n accepted by exhaustive enumeration (env ``LAZYTOUR_MAX_N``)."""
    value = os.environ.get(MAX_N_ENV)
    return int(value) if value else DEFAULT_MAX_N


def check_size(n):
    cap = max_enumeration_size()
    if n > cap:
        raise ResourceLimitError(
            f"n={n} exceeds the enumeration cap {cap} (set {MAX_N_ENV} to raise it)")


def _low(node):
    while type(node) is tuple:
        node = node[0]
    return node


def _pair(x, y):
    return (x, y) if _low(x) < _low(y) else (y, x)


def leaves(node):
    """Leaf labels below ``node``, left to right."""
    stack = [node]
    out = []
    while stack:
        v = stack.pop()
        if type(v) is tuple:
            stack.append(v[1])
            stack.append(v[0])
        else:
            out.append(v)
    return out


def _preorder(node):
    stack = [node]
    while stack:
        v = stack.pop()
        yield v
        if type(v) is tuple:
            stack.append(v[1])
            stack.append(v[0])


def _text(node):
    if type(node) is tuple:
        return "(" + _text(node[0]) + "," + _text(node[1]) + ")"
    return label_str(node)


class LabeledTree:
    """An immutable trivalent tree with labeled leaves, in canonical form.

    Build one with :func:`star_tree`, :func:`parse_tree`,
    :meth:`from_edges` or the enumeration helpers rather than by hand.
    """

    __slots__ = ("root", "_labels")

    def __init__(self, root):
        if type(root) is not tuple or len(root) != 2:
            raise ValueError("root must be a pair of subtrees")
        self.root = root
        self._labels = None

    @property
    def labels(self):
        if self._labels is None:
            self._labels = frozenset(leaves(self.root)) | {A}
        return self._labels

    @property
    def n(self):
        return len(self.labels) - 3

    def __eq__(self, other):
        return isinstance(other, LabeledTree) and self.root == other.root

    def __hash__(self):
        return hash(self.root)

    def __repr__(self):
        return f"LabeledTree({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self):
        x, y = self.root
        return "(a," + _text(x) + "," + _text(y) + ")"

    def edges(self):
        """Edge identifiers in canonical order (preorder, ``A`` first)."""
        out = [A]
        out.extend(_preorder(self.root[0]))
        out.extend(_preorder(self.root[1]))
        return out

    def internal_vertices(self):
        out = [self.root]
        for child in self.root:
            out.extend(v for v in _preorder(child) if type(v) is tuple)
        return out

    def is_ab_adjacent(self):
        return self.root[0] == B

    def adjacency(self):
        """Map every vertex (leaf label or internal node) to its neighbours."""
        adj = {self.root: [A], A: [self.root]}
        stack = [(self.root[0], self.root), (self.root[1], self.root)]
        while stack:
            node, parent = stack.pop()
            adj[parent].append(node)
            adj[node] = [parent]
            if type(node) is tuple:
                stack.append((node[1], node))
                stack.append((node[0], node))
        return adj

    def to_edges(self):
        """Integer encoding ``(edge_list, leaf_labels)`` of the underlying graph."""
        adj = self.adjacency()
        index = {v: k for k, v in enumerate(adj)}
        edges = []
        for v, nbrs in adj.items():
            for w in nbrs:
                if index[v] < index[w]:
                    edges.append((index[v], index[w]))
        labels = {index[v]: v for v in adj if type(v) is not tuple}
        return edges, labels

    @classmethod
    def from_edges(cls, edges, labels):
        """Canonicalise an arbitrary graph encoding.

        ``edges`` is an iterable of vertex pairs and ``labels`` maps every
        leaf vertex to its label.  Raises ``ValueError`` unless the graph is a
        trivalent tree whose leaves carry distinct labels including ``a``.
        """
        adj = {}
        n_edges = 0
        for u, v in edges:
            if u == v:
                raise ValueError("loop edge")
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
            n_edges += 1
        if not adj or n_edges != len(adj) - 1:
            raise ValueError("graph is not a tree")
        start = next(iter(adj))
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(adj):
            raise ValueError("graph is not connected")
        leaf_vertices = [v for v, nb in adj.items() if len(nb) == 1]
        if any(len(nb) not in (1, 3) for nb in adj.values()):
            raise ValueError("every vertex must have degree 1 or 3")
        if set(leaf_vertices) != set(labels):
            raise ValueError("labels must be given for exactly the leaves")
        if len(set(labels.values())) != len(labels):
            raise ValueError("duplicate leaf label")
        if len(leaf_vertices) < 3:
            raise ValueError("need at least three leaves")
        owner = {lab: v for v, lab in labels.items()}
        if A not in owner:
            raise ValueError("leaf a is missing")

        def build(v, parent):
            if v in labels:
                return labels[v]
            x, y = (build(w, v) for w in adj[v] if w != parent)
            return _pair(x, y)

        a_leaf = owner[A]
        top = adj[a_leaf][0]
        kids = [build(w, top) for w in adj[top] if w != a_leaf]
        return cls(_pair(*kids))


_TOKEN = re.compile(r"\s*(\(|\)|,|[A-Za-z0-9]+)")


def parse_tree(text):
    """Parse the nested-parenthesis format, e.g. ``(a,b,(((2,3),4),(c,1)))``.

    The outer group is an internal vertex with three branches, every inner
    group a vertex with two.  Children may appear in any order.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse tree near {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()

    edges = []
    labels = {}
    counter = iter(range(1 << 30))

    def node(k, outer):
        if k >= len(tokens):
            raise ValueError("unexpected end of tree text")
        tok = tokens[k]
        if tok == "(":
            me = next(counter)
            k += 1
            arity = 0
            while True:
                child, k = node(k, False)
                edges.append((me, child))
                arity += 1
                if k >= len(tokens):
                    raise ValueError("unbalanced parentheses")
                if tokens[k] == ")":
                    k += 1
                    break
                if tokens[k] != ",":
                    raise ValueError(f"expected ',' got {tokens[k]!r}")
                k += 1
            if arity != (3 if outer else 2):
                raise ValueError("group has wrong number of children")
            return me, k
        if tok in "(),":
            raise ValueError(f"unexpected {tok!r}")
        me = next(counter)
        labels[me] = parse_label(tok)
        return me, k + 1

    _, end = node(0, True)
    if end != len(tokens):
        raise ValueError("trailing text after tree")
    t = LabeledTree.from_edges(edges, labels)
    if t.labels != frozenset((A, B, C)) | frozenset(range(1, t.n + 1)):
        raise ValueError("leaf labels must be a, b, c, 1, ..., n")
    return t


def star_tree():
    """The unique tree T0 on leaves a, b, c."""
    return LabeledTree((B, C))


def _replace(node, target, new):
    if node == target:
        return new
    if type(node) is tuple:
        x, y = node
        nx = _replace(x, target, new)
        if nx is not x:
            return _pair(nx, y)
        ny = _replace(y, target, new)
        if ny is not y:
            return _pair(x, ny)
    return node


def insert_leaf(t, edge, new_label):
    """Subdivide ``edge`` and hang a new leaf ``new_label`` off the new vertex."""
    if new_label in t.labels:
        raise ValueError(f"label {label_str(new_label)} already present")
    if edge not in set(t.edges()):
        raise ValueError(f"unknown edge {edge!r}")
    if edge == A:
        return LabeledTree(_pair(t.root, new_label))
    x, y = t.root
    nx = _replace(x, edge, _pair(edge, new_label))
    if nx is not x:
        return LabeledTree(_pair(nx, y))
    return LabeledTree(_pair(x, _replace(y, edge, _pair(edge, new_label))))


def _drop(node, label):
    if type(node) is not tuple:
        return node
    x, y = node
    if x == label:
        return y
    if y == label:
        return x
    nx = _drop(x, label)
    if nx is not x:
        return _pair(nx, y)
    ny = _drop(y, label)
    if ny is not y:
        return _pair(x, ny)
    return node


def forget(t, label):
    """Delete a leaf and suppress the degree-2 vertex left behind.

    Labels are not renumbered.  Leaf ``a`` anchors the canonical form and
    cannot be forgotten.
    """
    if label == A:
        raise ValueError("leaf a cannot be forgotten")
    if label not in t.labels:
        raise ValueError(f"label {label_str(label)} not in tree")
    if len(t.labels) < 4:
        raise ValueError("need at least four leaves to forget one")
    x, y = t.root
    if x == label:
        return LabeledTree(y)
    if y == label:
        return LabeledTree(x)
    nx = _drop(x, label)
    if nx is not x:
        return LabeledTree(_pair(nx, y))
    return LabeledTree(_pair(x, _drop(y, label)))


def relabel(t, mapping):
    """Apply ``mapping`` (a callable on labels) to every leaf and re-canonicalise."""

    def walk(node):
        if type(node) is tuple:
            return _pair(walk(node[0]), walk(node[1]))
        return mapping(node)

    if mapping(A) != A:
        raise ValueError("relabelling must fix a")
    return LabeledTree(_pair(walk(t.root[0]), walk(t.root[1])))


class BranchView:
    """The three branches at an internal vertex, as leaf-label sets."""

    __slots__ = ("at_vertex", "branches")

    def __init__(self, at_vertex, branches):
        self.at_vertex = at_vertex
        self.branches = tuple(branches)

    def branch_of(self, label):
        for br in self.branches:
            if label in br:
                return br
        raise KeyError(label)

    def same_branch(self, x, y):
        return y in self.branch_of(x)

    def __repr__(self):
        parts = ["{" + ",".join(label_str(l) for l in sorted(br)) + "}" for br in self.branches]
        return "BranchView(" + " | ".join(parts) + ")"


def branches_at_vertex(t, vertex):
    """Branches at an internal vertex, sorted by smallest label."""
    everything = t.labels
    if vertex == t.root:
        parts = [frozenset([A]), frozenset(leaves(vertex[0])), frozenset(leaves(vertex[1]))]
    else:
        if type(vertex) is not tuple:
            raise ValueError("not an internal vertex")
        left = frozenset(leaves(vertex[0]))
        right = frozenset(leaves(vertex[1]))
        parts = [left, right, everything - left - right]
    return BranchView(vertex, sorted(parts, key=min))


def _parent(node, label):
    if type(node) is not tuple:
        return None
    if node[0] == label or node[1] == label:
        return node
    return _parent(node[0], label) or _parent(node[1], label)


def branches_at(t, leaf_label):
    """Branches at the internal vertex next to ``leaf_label``; the leaf's own first."""
    if leaf_label not in t.labels:
        raise ValueError(f"label {label_str(leaf_label)} not in tree")
    if leaf_label == A or leaf_label in t.root:
        vertex = t.root
    else:
        vertex = _parent(t.root[0], leaf_label) or _parent(t.root[1], leaf_label)
    view = branches_at_vertex(t, vertex)
    own = frozenset([leaf_label])
    rest = [br for br in view.branches if br != own]
    return BranchView(vertex, [own] + rest)


# --- enumeration -----------------------------------------------------------
#
# Trees are grown by inserting 1, 2, ..., n in turn.  The inserted label is
# always the largest present, so hanging it off a node never changes the
# ordering of any pair above it and no re-sorting is needed.


def _graft(node, label):
    yield (node, label)
    if type(node) is tuple:
        x, y = node
        for g in _graft(x, label):
            yield (g, y)
        for g in _graft(y, label):
            yield (x, g)


def _grow(root, label, ab_adjacent):
    x, y = root
    if not ab_adjacent:
        yield (root, label)
        for g in _graft(x, label):
            yield (g, y)
    for g in _graft(y, label):
        yield (x, g)


def _extend(root, size, n, ab_adjacent):
    if size == n:
        yield root
        return
    nxt = size + 1
    if nxt == n:
        yield from _grow(root, nxt, ab_adjacent)
        return
    for child in _grow(root, nxt, ab_adjacent):
        yield from _extend(child, nxt, n, ab_adjacent)


def prefixes(n, require_ab_adjacent=False, depth=3):
    """Partition roots: all trees of size ``min(depth, n)`` in enumeration order.

    Enumerating :func:`extend_roots` over these in order reproduces
    :func:`enumerate_trees` exactly, which lets workers split the stream.
    """
    depth = min(depth, n)
    return list(_extend(star_tree().root, 0, depth, require_ab_adjacent))


def extend_roots(prefix_root, n, require_ab_adjacent=False):
    size = len(leaves(prefix_root)) - 2
    return _extend(prefix_root, size, n, require_ab_adjacent)


def enumerate_roots(n, require_ab_adjacent=False):
    """Like :func:`enumerate_trees` but yields bare canonical roots."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_size(n)
    return _extend(star_tree().root, 0, n, require_ab_adjacent)


def enumerate_trees(n, require_ab_adjacent=False):
    """Every trivalent tree on {a, b, c, 1..n} exactly once.

    There are (2n+1)!! of them, or (2n-1)!! when ``require_ab_adjacent``
    keeps only those whose leaf edges a and b share a vertex.
    """
    for root in enumerate_roots(n, require_ab_adjacent):
        yield LabeledTree(root)
