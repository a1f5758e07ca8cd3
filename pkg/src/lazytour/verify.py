"""Exhaustive property suites over all trees up to a given size.

Each suite returns a list of :class:`Check` records; :func:`run_suite` wraps
them into a JSON-ready report.  ``count_classes`` splits the enumeration
stream over worker processes by insertion prefix and merges in prefix order.
"""

from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool

from . import kapranov, multidegrees as md, parking, tournament, trees
from .trees import A, LabeledTree

SUITES = ("counts", "bijection", "hyperplanes", "lemmas")


@dataclass
class Check:
    name: str
    n: int
    passed: bool
    detail: dict = field(default_factory=dict)
    counterexample: str = None

    def as_dict(self):
        out = {"name": self.name, "n": self.n, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


# --- parallel classification -----------------------------------------------


def _classify_prefix(args):
    root, n = args
    counts = Counter()
    for r in trees.extend_roots(root, n, require_ab_adjacent=True):
        counts[tournament.win_counts_of_root(r, n)] += 1
    return counts


def count_classes(n, jobs=1):
    """``{k: |Tour(k)|}`` over all ab-adjacent trees of size n."""
    trees.check_size(n)
    work = [(p, n) for p in trees.prefixes(n, require_ab_adjacent=True, depth=3)]
    total = Counter()
    if jobs <= 1:
        for item in work:
            total.update(_classify_prefix(item))
    else:
        with Pool(jobs) as pool:
            for part in pool.imap(_classify_prefix, work):
                total.update(part)
    return dict(total)


# --- shared per-size data --------------------------------------------------


class _Level:
    def __init__(self, n):
        self.n = n
        self.trees = list(trees.enumerate_trees(n, require_ab_adjacent=True))
        self.transcripts = [tournament.run_tournament(t) for t in self.trees]
        self.by_class = {}
        for t, tr in zip(self.trees, self.transcripts):
            self.by_class.setdefault(tr.win_counts, []).append(t)


def _levels(n_max):
    return {n: _Level(n) for n in range(0, n_max + 1)}


def _first_failure(items, predicate):
    for item in items:
        if not predicate(item):
            return item
    return None


def _check(name, n, bad, detail=None, show=str):
    return Check(name, n, bad is None, detail or {}, None if bad is None else show(bad))


# --- suites ----------------------------------------------------------------


def check_counts(n_max, jobs=1, levels=None):
    out = []
    for n in range(1, n_max + 1):
        expected = md.double_factorial(2 * n - 1)
        tours = count_classes(n, jobs)
        cpfs = {k: sum(1 for _ in parking.cpf_set(k)) for k in md.compositions(n)}
        degrees = md.multidegree_table(n)
        totals = {
            "multidegree": sum(degrees.values()),
            "trees": sum(tours.values()),
            "cpf": sum(cpfs.values()),
            "expected": expected,
        }
        ok = totals["multidegree"] == totals["trees"] == totals["cpf"] == expected
        out.append(Check("total_degree", n, ok, totals))
        bad = _first_failure(
            degrees, lambda k: tours.get(k, 0) == cpfs[k] == degrees[k])
        out.append(_check("triple_agreement", n, bad, show=md.format_composition))
    return out


def check_bijections(n_max, levels=None):
    levels = levels or _levels(n_max)
    out = []
    for n in range(1, n_max + 1):
        lv = levels[n]
        images = {}
        bad_tau = bad_inv = bad_pi = bad_square = None
        for t, tr in zip(lv.trees, lv.transcripts):
            k = tr.win_counts
            p = parking.tau(t)
            if bad_tau is None and not (p.heights == k and parking.is_column_restricted(p)):
                bad_tau = t
            if bad_inv is None and parking.tau_inverse(p) != t:
                bad_inv = t
            images[p] = t
            small, j = tournament.pi_lazy(t)
            if bad_pi is None and (tournament.classify(small) != md.ktilde(k, j)
                                   or tournament.pi_lazy_inverse(small, j, k) != t):
                bad_pi = t
            if bad_square is None and parking.r_map(p) != parking.tau(small):
                bad_square = t
        out.append(_check("tau_lands_in_cpf", n, bad_tau))
        out.append(_check("tau_inverse_roundtrip", n, bad_inv))
        out.append(_check("pi_lazy_roundtrip", n, bad_pi))
        out.append(_check("commuting_square", n, bad_square))

        all_cpf = {p for k in md.compositions(n) for p in parking.cpf_set(k)}
        out.append(Check("tau_bijective", n,
                         len(images) == len(lv.trees) and set(images) == all_cpf,
                         {"trees": len(lv.trees), "images": len(images), "cpf": len(all_cpf)}))

        below = levels[n - 1]
        bad = None
        for k in md.compositions(n):
            i = md.rightmost_zero(k)
            for j in range(i + 1, n + 1):
                for small in below.by_class.get(md.ktilde(k, j), ()):
                    big = tournament.pi_lazy_inverse(small, j, k)
                    if tournament.pi_lazy(big) != (small, j) or tournament.classify(big) != k:
                        bad = small
        out.append(_check("pi_lazy_inverse_roundtrip", n, bad))

        bad = None
        for p in parking.parking_functions(n):
            if parking.dominance(p)[1] == 0:
                if parking.is_column_restricted(p) != parking.is_column_restricted(parking.r_map(p)):
                    bad = p
                    break
        out.append(_check("r_preserves_restriction", n, bad))
    return out


def check_hyperplanes(n_max, levels=None):
    levels = levels or _levels(n_max)
    out = []
    for n in range(1, n_max + 1):
        lv = levels[n]
        failed = None
        for k in md.compositions(n):
            rep = kapranov.verify_hyperplanes(k, lv.by_class.get(k, ()))
            if not rep.passed:
                failed = rep
                break
        out.append(Check("hyperplane_containment", n, failed is None, {},
                         None if failed is None else
                         f"{failed.counterexample} factor {failed.factor}"))

        def shape_ok(t):
            for r in range(1, n + 1):
                f = kapranov.boundary_factor_coords(t, r)
                if len(f.coords) != r + 1 or any(x not in (0, 1) for x in f.coords):
                    return False
                if r < n and f != kapranov.boundary_factor_coords(trees.forget(t, n), r):
                    return False
            return True

        out.append(_check("factor_shape_and_forgetting", n, _first_failure(lv.trees, shape_ok)))
        if n <= 5:
            seen = {}
            dup = None
            for t in trees.enumerate_trees(n):
                e = kapranov.embed_boundary(t)
                if e in seen:
                    dup = t
                    break
                seen[e] = t
            out.append(_check("embedding_injective", n, dup))
    return out


def _losers_decrease(tr):
    losers = [r.loser for r in tr.rounds]
    return all(x >= y for x, y in zip(losers, losers[1:]))


def _winners_losers(tr):
    winners = {r.winner for r in tr.rounds}
    losers = {r.loser for r in tr.rounds}
    return not (winners & losers)


def _first_result_sticks(tr):
    first = {}
    for r in tr.rounds:
        for lab, won in ((r.winner, True), (r.loser, False)):
            if first.setdefault(lab, won) != won:
                return False
    return True


def _participation(tr):
    seen = {x for r in tr.rounds for x in (r.loser, r.winner)}
    return seen == tr.tree.labels - {A, trees.B}


def _first_round(tr):
    k = tr.win_counts
    n = len(k)
    first = tr.rounds[0]
    if first.loser != md.rightmost_zero(k):
        return False
    return first.lazy == (k[first.winner - 1] == 1 and n >= 2)


def _rooted_parents(t):
    adj = t.adjacency()
    parent = {t.root: None}
    stack = [t.root]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                stack.append(w)
    return adj, parent


def separation_lemma_holds(t, transcript):
    """A winner r separating l from a after forgetting labels above r still does."""
    for r in {x.winner for x in transcript.rounds}:
        small = kapranov.forget_above(t, r)
        view_small = trees.branches_at(small, r)
        view = trees.branches_at(t, r)
        for lab in small.labels - {r}:
            if not view_small.same_branch(A, lab) and view.same_branch(A, lab):
                return False
    return True


def branch_path_lemma_holds(t, transcript):
    """When the smallest label m of an a-free branch B at v first plays, all of
    B off the path from m to v is labelled and none of the path is; m then
    plays at every path vertex before v, advancing from all but the last."""
    adj, parent = _rooted_parents(t)

    def edge_id(u, w):
        return w if parent.get(w) == u else u

    labeled_at = {e: (0 if type(e) is not tuple else None) for e in t.edges()}
    for r in transcript.rounds:
        labeled_at[r.labeled_edge] = r
    first_play = {}
    for r in transcript.rounds:
        first_play.setdefault(r.loser, r.index)
        first_play.setdefault(r.winner, r.index)

    def when(e):
        x = labeled_at[e]
        return x if x in (0, None) else x.index

    for v in t.internal_vertices():
        for nb in adj[v]:
            # collect branch B through nb, with parent pointers toward v
            back = {nb: v}
            stack = [nb]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in back and w != v:
                        back[w] = u
                        stack.append(w)
            labels = [u for u in back if type(u) is not tuple]
            if A in labels or len(labels) == 1:
                continue
            m = min(labels)
            path = [m]
            while path[-1] != v:
                path.append(back[path[-1]])
            path_edges = {edge_id(path[q], path[q + 1]) for q in range(len(path) - 1)}
            start = first_play[m]
            for u, w in back.items():
                e = edge_id(u, w)
                at = when(e)
                if e in path_edges:
                    if e != m and at is not None and at < start:
                        return False
                elif at is None or at >= start:
                    return False
            # path = m, w_1, ..., w_{s-1}, v
            for q in range(1, len(path) - 1):
                rnd = labeled_at[edge_id(path[q], path[q + 1])]
                if rnd in (0, None) or m not in (rnd.loser, rnd.winner):
                    return False
                if q < len(path) - 2 and rnd.advancer != m:
                    return False
    return True


def check_lemmas(n_max, levels=None):
    levels = levels or _levels(n_max)
    out = []
    for n in range(1, n_max + 1):
        lv = levels[n]
        everything = [tournament.run_tournament(t) for t in trees.enumerate_trees(n)]
        show = lambda tr: tr.tree.to_text()
        for name, pred, pool in (
            ("losers_decrease", _losers_decrease, everything),
            ("winners_losers_disjoint", _winners_losers, everything),
            ("first_result_sticks", _first_result_sticks, everything),
            ("round_count", lambda tr: len(tr.rounds) == tr.tree.n, everything),
            ("participation", _participation, lv.transcripts),
            ("first_round", _first_round, lv.transcripts),
            ("separation", lambda tr: separation_lemma_holds(tr.tree, tr), lv.transcripts),
            ("branch_path", lambda tr: branch_path_lemma_holds(tr.tree, tr), lv.transcripts),
        ):
            out.append(_check(name, n, _first_failure(pool, pred), {"trees": len(pool)}, show))

        sizes = {k: len(v) for k, v in lv.by_class.items()}
        below = {k: len(v) for k, v in levels[n - 1].by_class.items()}

        def recursion_ok(k):
            i = md.rightmost_zero(k)
            return sizes.get(k, 0) == sum(below.get(md.ktilde(k, j), 0) for j in range(i + 1, n + 1))

        out.append(_check("string_recursion", n,
                          _first_failure(md.compositions(n), recursion_ok), show=md.format_composition))
        out.append(_check("support_criterion", n,
                          _first_failure(md.compositions(n),
                                         lambda k: md.is_support(k) == (md.multidegree(k) > 0)),
                          show=md.format_composition))
    return out


def run_suite(suite, n_max, jobs=1):
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    trees.check_size(n_max)
    chosen = SUITES if suite == "all" else (suite,)
    levels = None if chosen == ("counts",) else _levels(n_max)
    checks = []
    for name in chosen:
        if name == "counts":
            checks += check_counts(n_max, jobs)
        elif name == "bijection":
            checks += check_bijections(n_max, levels)
        elif name == "hyperplanes":
            checks += check_hyperplanes(n_max, levels)
        else:
            checks += check_lemmas(n_max, levels)
    report = {
        "suite": suite,
        "n_max": n_max,
        "passed": all(c.passed for c in checks),
        "checks": [c.as_dict() for c in checks],
    }
    if "counts" in chosen:
        report["totals"] = [c.detail["trees"] for c in checks if c.name == "total_degree"]
    return report
