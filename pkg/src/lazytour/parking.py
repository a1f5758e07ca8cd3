"""Column-restricted parking functions and the tau bijection to tournament trees.

Parking functions are drawn with up/left Dyck paths: column ``i`` (1-based,
left to right) holds ``k_i`` cars and the path is valid when every suffix of
column heights sums to at least its length.  Columns are stored as sorted
tuples, so the top car of a column is its maximum.
"""

import json
from dataclasses import dataclass
from itertools import combinations

from .multidegrees import compositions, is_support
from .tournament import run_tournament
from .trees import B, C, LabeledTree, _pair


class NotColumnRestrictedError(ValueError):
    pass


@dataclass(frozen=True)
class ParkingFunction:
    columns: tuple

    def __post_init__(self):
        cols = tuple(tuple(sorted(c)) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        n = len(cols)
        cars = sorted(x for c in cols for x in c)
        if cars != list(range(1, n + 1)):
            raise ValueError(f"cars must be 1..{n} exactly once: {cols}")
        if not is_support(self.heights):
            raise ValueError(f"column heights {self.heights} do not lie under a Dyck path")

    @property
    def n(self):
        return len(self.columns)

    @property
    def heights(self):
        return tuple(len(c) for c in self.columns)

    def column_of(self, car):
        for pos, col in enumerate(self.columns, 1):
            if car in col:
                return pos
        raise KeyError(car)

    def to_text(self):
        return ";".join(",".join(map(str, c)) if c else "-" for c in self.columns)

    def __str__(self):
        return self.to_text()

    def to_json(self):
        return json.dumps([list(c) for c in self.columns])

    @classmethod
    def from_text(cls, text):
        text = text.strip()
        if not text:
            return cls(())
        cols = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if chunk == "-":
                cols.append(())
            else:
                cols.append(tuple(int(x) for x in chunk.split(",")))
        return cls(tuple(cols))


def dominance(p):
    """``{car: d_car}``: columns right of the car holding nothing larger."""
    tops = [max(c) if c else 0 for c in p.columns]
    out = {}
    for pos, col in enumerate(p.columns):
        right = tops[pos + 1:]
        for x in col:
            out[x] = sum(1 for t in right if t < x)
    return out


def is_column_restricted(p):
    return all(x > d for x, d in dominance(p).items())


def _fill(k, cars):
    if not k:
        yield ()
        return
    for chosen in combinations(cars, k[0]):
        rest = [x for x in cars if x not in chosen]
        for tail in _fill(k[1:], rest):
            yield (chosen,) + tail


def parking_functions_with_heights(k):
    k = tuple(k)
    if sum(k) != len(k) or not is_support(k):
        return
    for cols in _fill(k, list(range(1, len(k) + 1))):
        yield ParkingFunction(cols)


def parking_functions(n):
    for k in compositions(n):
        yield from parking_functions_with_heights(k)


def cpf_set(k):
    """CPF(k) in deterministic order; empty when k is off the Dyck support."""
    for p in parking_functions_with_heights(k):
        if is_column_restricted(p):
            yield p


def r_map(p):
    """Drop car 1's row, decrement every car, delete the rightmost empty column."""
    if p.n == 0:
        raise ValueError("r is undefined on the empty parking function")
    cols = [[x - 1 for x in c if x != 1] for c in p.columns]
    for pos in range(len(cols) - 1, -1, -1):
        if not cols[pos]:
            del cols[pos]
            break
    return ParkingFunction(tuple(tuple(c) for c in cols))


def tau(t):
    """Car m goes in column j exactly when j wins round m."""
    if not t.is_ab_adjacent():
        raise ValueError("leaf edges a and b must share a vertex")
    cols = [[] for _ in range(t.n)]
    for r in run_tournament(t).rounds:
        cols[r.winner - 1].append(r.index)
    return ParkingFunction(tuple(tuple(c) for c in cols))


def tau_inverse(p):
    """Rebuild the tournament tree of a column-restricted parking function.

    Each label starts as its own one-edge tree.  Car m in column j merges the
    tree of the largest loser still at a root with the tree of j; the new root
    edge carries the loser when m is j's last car and m < n (laziness), else j.
    Finally a and b hang off the surviving root.
    """
    if not is_column_restricted(p):
        raise NotColumnRestrictedError(f"{p} is not column-restricted")
    n = p.n
    losers = {C} | {pos for pos, col in enumerate(p.columns, 1) if not col}
    forest = {lab: lab for lab in range(C, n + 1)}
    for m in range(1, n + 1):
        j = p.column_of(m)
        free = [lab for lab in forest if lab in losers]
        if not free or j not in forest:
            raise NotColumnRestrictedError(f"{p} jams at car {m}")
        i = max(free)
        merged = _pair(forest.pop(i), forest.pop(j))
        lazy = m == max(p.columns[j - 1]) and m != n
        forest[i if lazy else j] = merged
    if len(forest) != 1:
        raise NotColumnRestrictedError(f"{p} leaves {len(forest)} trees unmerged")
    (top,) = forest.values()
    return LabeledTree((B, top))
