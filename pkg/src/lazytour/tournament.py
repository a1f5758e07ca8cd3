"""Lazy tournaments on trivalent trees and the pi_lazy bijection."""

import json
from dataclasses import dataclass

from .multidegrees import ktilde, rightmost_zero, validate_composition
from .trees import (A, C, LabeledTree, _pair, enumerate_roots, label_str,
                    relabel)


class TournamentError(RuntimeError):
    """The tournament reached a state the rules say cannot happen."""


@dataclass(frozen=True)
class Round:
    index: int
    loser: int
    winner: int
    advancer: int
    lazy: bool
    labeled_edge: object

    def as_dict(self):
        return {
            "loser": label_str(self.loser),
            "winner": label_str(self.winner),
            "advancer": label_str(self.advancer),
            "lazy": self.lazy,
        }


@dataclass(frozen=True)
class TournamentTranscript:
    tree: LabeledTree
    rounds: tuple
    win_counts: tuple

    def wins_by(self, label):
        return sum(1 for r in self.rounds if r.winner == label)

    def as_dict(self):
        return {
            "tree": self.tree.to_text(),
            "rounds": [r.as_dict() for r in self.rounds],
            "win_counts": list(self.win_counts),
        }

    def to_json(self):
        return json.dumps(self.as_dict())


def _layout(root):
    """Flatten a canonical root into edge arrays.

    Internal vertex 0 is the root; a leaf endpoint is -1.  Returns edge ids,
    edge labels (None when unlabeled), edge endpoints and per-vertex incident
    edges.
    """
    ids = [A]
    labels = [A]
    ends = [(0, -1)]
    inc = [[0]]
    stack = [(root[1], 0), (root[0], 0)]
    while stack:
        node, p = stack.pop()
        e = len(ids)
        ids.append(node)
        inc[p].append(e)
        if type(node) is tuple:
            v = len(inc)
            inc.append([e])
            ends.append((p, v))
            labels.append(None)
            stack.append((node[1], v))
            stack.append((node[0], v))
        else:
            ends.append((p, -1))
            labels.append(node)
    return ids, labels, ends, inc


def _ready_pair(labels, es):
    e0, e1, e2 = es
    l0, l1, l2 = labels[e0], labels[e1], labels[e2]
    if l0 is None:
        x, y, free = l1, l2, e0
    elif l1 is None:
        x, y, free = l0, l2, e1
    else:
        x, y, free = l0, l1, e2
    return (x, y, free) if x < y else (y, x, free)


def _play(root):
    """Run the tournament; returns (ids, [(loser, winner, advancer, edge), ...])."""
    ids, labels, ends, inc = _layout(root)
    count = []
    ready = {}
    for v, es in enumerate(inc):
        c = (labels[es[0]] is not None) + (labels[es[1]] is not None) + (labels[es[2]] is not None)
        count.append(c)
        if c == 2:
            ready[v] = _ready_pair(labels, es)
    rounds = []
    while ready:
        best_v = -1
        best_i = None
        tie = False
        for v, pr in ready.items():
            if best_i is None or pr[0] > best_i:
                best_v, best_i, tie = v, pr[0], False
            elif pr[0] == best_i:
                tie = True
        if tie:
            raise TournamentError(f"two eligible pairs share the loser {label_str(best_i)}")
        i, j, e = ready.pop(best_v)
        p, q = ends[e]
        w = q if p == best_v else p
        lazy = False
        for f in inc[w]:
            if f != e:
                u = labels[f]
                if u is not None and u > i and u != j:
                    lazy = True
        adv = i if lazy else j
        labels[e] = adv
        rounds.append((i, j, adv, e))
        count[w] += 1
        if count[w] == 2:
            ready[w] = _ready_pair(labels, inc[w])
        elif count[w] == 3:
            ready.pop(w, None)
    n_internal = len(inc) - 1
    if len(rounds) != n_internal:
        raise TournamentError(f"only {len(rounds)} of {n_internal} rounds completed")
    return ids, rounds


def _counts(rounds, n):
    k = [0] * n
    for _, j, _, _ in rounds:
        if j >= 1:
            k[j - 1] += 1
    return tuple(k)


def run_tournament(t):
    """The full lazy tournament of ``t`` with one :class:`Round` per internal edge."""
    ids, raw = _play(t.root)
    rounds = tuple(
        Round(index=m, loser=i, winner=j, advancer=adv, lazy=adv == i, labeled_edge=ids[e])
        for m, (i, j, adv, e) in enumerate(raw, 1))
    return TournamentTranscript(tree=t, rounds=rounds, win_counts=_counts(raw, t.n))


def win_counts_of_root(root, n):
    return _counts(_play(root)[1], n)


def classify(t):
    """The composition k with t in Tour(k)."""
    if not t.is_ab_adjacent():
        raise ValueError("leaf edges a and b must share a vertex")
    return win_counts_of_root(t.root, t.n)


def tour_set(k):
    """Trees of Tour(k), in enumeration order."""
    k = validate_composition(k)
    n = len(k)
    for root in enumerate_roots(n, require_ab_adjacent=True):
        if win_counts_of_root(root, n) == k:
            yield LabeledTree(root)


def tour_counts(n):
    """|Tour(k)| for every k reached by some tree of size n."""
    out = {}
    for root in enumerate_roots(n, require_ab_adjacent=True):
        k = win_counts_of_root(root, n)
        out[k] = out.get(k, 0) + 1
    return out


def _swap_cherry(node, i, j, repl):
    if type(node) is not tuple:
        return node
    x, y = node
    if (x == i and y == j) or (x == j and y == i):
        return repl
    nx = _swap_cherry(x, i, j, repl)
    if nx is not x:
        return _pair(nx, y)
    ny = _swap_cherry(y, i, j, repl)
    if ny is not y:
        return _pair(x, ny)
    return node


def _split_leaf(node, leaf, other):
    if node == leaf:
        return _pair(leaf, other)
    if type(node) is tuple:
        x, y = node
        nx = _split_leaf(x, leaf, other)
        if nx is not x:
            return _pair(nx, y)
        ny = _split_leaf(y, leaf, other)
        if ny is not y:
            return _pair(x, ny)
    return node


def pi_lazy(t):
    """Collapse the first match of the tournament.

    Returns ``(tree, j)`` where ``j`` won the first match.  The cherry
    ``(i, j)`` becomes a single leaf, labelled ``j`` when j has further wins
    (then labels above i shift down) and ``i`` when this was j's only win
    (then labels above j shift down).  The result lies in Tour(ktilde(k, j)).
    """
    k = classify(t)
    if t.n == 0:
        raise ValueError("T0 has no first match")
    first = _play(t.root)[1][0]
    i, j = first[0], first[1]
    keep, gone = (j, i) if k[j - 1] > 1 else (i, j)
    x, y = t.root
    root = _pair(_swap_cherry(x, i, j, keep), _swap_cherry(y, i, j, keep))
    collapsed = LabeledTree(root)
    return relabel(collapsed, lambda l: l - 1 if l > gone else l), j


def pi_lazy_inverse(t_prime, j, k):
    """The unique tree T in Tour(k) with ``pi_lazy(T) == (t_prime, j)``."""
    k = validate_composition(k)
    n = len(k)
    i = rightmost_zero(k)
    if not (i < j <= n):
        raise ValueError(f"winner {j} must satisfy {i} < j <= {n}")
    if t_prime.n != n - 1 or not t_prime.is_ab_adjacent():
        raise ValueError("t_prime has the wrong size or is not ab-adjacent")
    if classify(t_prime) != ktilde(k, j):
        raise ValueError(f"t_prime is not in Tour{ktilde(k, j)}")
    if k[j - 1] > 1:
        # non-lazy: j's leaf sits where the cherry was, every label >= i moved down
        shifted = relabel(t_prime, lambda l: l + 1 if l >= i else l)
        split, new = j, i
    else:
        # lazy: i's leaf sits where the cherry was, every label >= j moved down
        shifted = relabel(t_prime, lambda l: l + 1 if l >= j else l)
        split, new = i, j
    x, y = shifted.root
    return LabeledTree(_pair(_split_leaf(x, split, new), _split_leaf(y, split, new)))
