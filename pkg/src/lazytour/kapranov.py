"""Exact coordinates of points under the iterated Kapranov embedding.

Factor ``r`` of the embedding lives in P^r with coordinates indexed by
``(b, c, 1, ..., r-1)``.  Coordinates are ``Fraction`` values scaled so the
first nonzero entry is 1.
"""

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .multidegrees import validate_composition
from .tournament import tour_set
from .trees import A, B, C, branches_at, forget, label_str, parse_label

INF = math.inf


def coordinate_labels(r):
    return (B, C) + tuple(range(1, r))


def projective_normalize(values):
    values = [Fraction(v) for v in values]
    for v in values:
        if v:
            return tuple(x / v for x in values)
    raise ValueError("all projective coordinates are zero")


@dataclass(frozen=True)
class FactorCoordinates:
    r: int
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.r + 1:
            raise ValueError(f"factor {self.r} needs {self.r + 1} coordinates")
        object.__setattr__(self, "coords", projective_normalize(self.coords))

    def __getitem__(self, label):
        return self.coords[coordinate_labels(self.r).index(label)]

    def __str__(self):
        return "[" + ":".join(str(x) for x in self.coords) + "]"

    def as_strings(self):
        return [str(x) for x in self.coords]


@dataclass(frozen=True)
class EmbeddingCoordinates:
    factors: tuple

    def __str__(self):
        return "x".join(str(f) for f in self.factors)

    def to_json(self):
        return json.dumps([f.as_strings() for f in self.factors])

    def to_csv(self):
        head, row = [], []
        for f in self.factors:
            for lab, x in zip(coordinate_labels(f.r), f.coords):
                head.append(f"{f.r}:{label_str(lab)}")
                row.append(str(x))
        return ",".join(head) + "\n" + ",".join(row)


def forget_above(t, r):
    """Forget the numbered leaves n, n-1, ..., r+1 (no renumbering needed)."""
    for label in range(t.n, r, -1):
        t = forget(t, label)
    return t


def boundary_factor_coords(t, r):
    """z_x = 0 when x shares a's branch at leaf r after forgetting labels above r."""
    if not 1 <= r <= t.n:
        raise ValueError(f"factor index {r} outside 1..{t.n}")
    view = branches_at(forget_above(t, r), r)
    home = view.branch_of(A)
    return FactorCoordinates(r, tuple(0 if x in home else 1 for x in coordinate_labels(r)))


def embed_boundary(t):
    return EmbeddingCoordinates(tuple(boundary_factor_coords(t, r) for r in range(1, t.n + 1)))


# --- interior points -------------------------------------------------------
#
# A marked point is a Fraction or INF; internally points are homogeneous
# pairs so one formula covers infinity.


def _hom(p):
    return (Fraction(1), Fraction(0)) if p == INF else (Fraction(p), Fraction(1))


def _det(p, q):
    return p[0] * q[1] - p[1] * q[0]


def _check_config(cfg):
    values = list(cfg.values())
    if sum(1 for v in values if v == INF) > 1:
        raise ValueError("at most one marked point may be infinite")
    finite = [Fraction(v) for v in values if v != INF]
    if len(set(finite)) != len(finite):
        raise ValueError("marked points must be distinct")


def to_standard_chart(cfg, r):
    """Move a configuration by the Mobius map a -> 0, r -> inf, b -> 1.

    Returns ``{label: value}`` for every label other than ``r``.
    """
    _check_config(cfg)
    pa, pb, pr = _hom(cfg[A]), _hom(cfg[B]), _hom(cfg[r])
    scale = _det(pb, pr) / _det(pb, pa)
    out = {}
    for label, p in cfg.items():
        if label == r:
            continue
        z = _hom(p)
        out[label] = _det(z, pa) * scale / _det(z, pr)
    return out


def embed_interior(cfg, r):
    """Factor ``r`` of a smooth curve given by its marked points ``cfg``.

    Points labelled above ``r`` are ignored, as the forgetting maps demand.
    In the standard chart the factor is simply ``[p_b : p_c : p_1 : ... ]``.
    """
    used = {lab: cfg[lab] for lab in (A, B, C) + tuple(range(1, r + 1))}
    chart = to_standard_chart(used, r)
    return FactorCoordinates(r, tuple(chart[x] for x in coordinate_labels(r)))


def embed_interior_all(cfg):
    n = max(lab for lab in cfg)
    return EmbeddingCoordinates(tuple(embed_interior(cfg, r) for r in range(1, n + 1)))


def parse_configuration(text):
    """``"a=0,b=1,c=2,1=1/2,2=inf"`` -> ``{label: Fraction | INF}``."""
    cfg = {}
    for item in text.split(","):
        name, _, value = item.partition("=")
        value = value.strip()
        cfg[parse_label(name)] = INF if value in ("inf", "oo") else Fraction(value)
    return cfg


# --- hyperplane containment ------------------------------------------------


@dataclass
class HyperplaneReport:
    composition: tuple
    passed: bool
    checked: int
    counterexample: object = None
    factor: int = None


def verify_hyperplanes(k, trees=None):
    """Check that every point of Tour(k) has its first k_r coordinates zero in P^r.

    Those are the hyperplanes z_b, z_c, z_1, ..., z_{k_r - 2}.  ``trees``
    may supply Tour(k) when the caller already has it.
    """
    k = validate_composition(k)
    checked = 0
    for t in (tour_set(k) if trees is None else trees):
        for r, kr in enumerate(k, 1):
            if kr == 0:
                continue
            if kr > r + 1:
                return HyperplaneReport(k, False, checked, t, r)
            coords = boundary_factor_coords(t, r).coords
            if any(coords[:kr]):
                return HyperplaneReport(k, False, checked, t, r)
        checked += 1
    return HyperplaneReport(k, True, checked)
