"""Acceptance criteria, one test each.

Every test prints a ``criterion N: PASS|FAIL ...`` line straight to the
terminal (output capture is bypassed), so a plain ``pytest`` run shows the
scorecard.  All tolerances are exact except the wall-clock budgets of 8.
"""

import json
import subprocess
import sys
import time

import pytest

from lazytour.kapranov import boundary_factor_coords, embed_boundary, verify_hyperplanes
from lazytour.multidegrees import (compositions, double_factorial, is_support, ktilde,
                                   multidegree, rightmost_zero)
from lazytour.parking import cpf_set, r_map, tau, tau_inverse
from lazytour.tournament import classify, pi_lazy, pi_lazy_inverse, run_tournament, tour_counts
from lazytour.trees import A, B, C, enumerate_trees, parse_tree
from lazytour.verify import count_classes

N = 6


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail=""):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
        assert ok, detail
    return emit


def _classes(n):
    out = {}
    for t in enumerate_trees(n, True):
        out.setdefault(classify(t), []).append(t)
    return out


def test_1_total_degree(report):
    rows = []
    for n in range(1, N + 1):
        degrees = sum(multidegree(k) for k in compositions(n))
        trees = sum(1 for _ in enumerate_trees(n, True))
        cpfs = sum(1 for k in compositions(n) for _ in cpf_set(k))
        rows.append((degrees, trees, cpfs, double_factorial(2 * n - 1)))
    ok = all(len(set(r)) == 1 for r in rows) and [r[0] for r in rows] == [1, 3, 15, 105, 945, 10395]
    report(1, ok, f"totals {[r[0] for r in rows]}")


def test_2_triple_agreement(report):
    bad = []
    checked = 0
    for n in range(1, N + 1):
        tours = tour_counts(n)
        for k in compositions(n):
            checked += 1
            triple = (tours.get(k, 0), sum(1 for _ in cpf_set(k)), multidegree(k))
            if len(set(triple)) != 1:
                bad.append((k, triple))
    report(2, not bad, f"{checked} compositions" + (f", first mismatch {bad[0]}" if bad else ""))


def test_3_pinned_values(report):
    example = parse_tree("(a,b,(((2,3),4),(c,1)))")
    split_tree = parse_tree("(a,b,((1,3),(5,((2,4),c))))")
    checks = {
        "deg(1,1)=2": multidegree((1, 1)) == 2,
        "deg(0,2)=1": multidegree((0, 2)) == 1,
        "deg(2,0)=0": multidegree((2, 0)) == 0,
        "tau(example)": tau(example).to_text() == "3;-;1;2,4",
        "tour11 first": str(embed_boundary(parse_tree("(a,b,((c,2),1))"))) == "[0:1]x[0:1:0]",
        "tour11 second": str(embed_boundary(parse_tree("(a,b,((c,1),2))"))) == "[0:1]x[0:1:1]",
        "factor 5": str(boundary_factor_coords(split_tree, 5)) == "[0:1:0:1:0:1]",
    }
    failed = [name for name, ok in checks.items() if not ok]
    report(3, not failed, f"{len(checks)} values" + (f", failed {failed}" if failed else ""))


def test_4_bijection_roundtrips(report):
    bad = []
    count = 0
    for n in range(1, N + 1):
        for t in enumerate_trees(n, True):
            count += 1
            k = classify(t)
            p = tau(t)
            small, j = pi_lazy(t)
            if tau_inverse(p) != t:
                bad.append(("tau", t))
            if pi_lazy_inverse(small, j, k) != t:
                bad.append(("pi_lazy", t))
            if r_map(p) != tau(small):
                bad.append(("square", t))
    report(4, not bad, f"{count} trees" + (f", first failure {bad[0]}" if bad else ""))


def test_5_structural_lemmas(report):
    failures = []
    for n in range(1, N + 1):
        for t in enumerate_trees(n, True):
            tr = run_tournament(t)
            k = tr.win_counts
            losers = [r.loser for r in tr.rounds]
            winners = {r.winner for r in tr.rounds}
            played = set(losers) | winners
            first = tr.rounds[0]
            if losers != sorted(losers, reverse=True):
                failures.append(("losers decrease", t))
            if winners & set(losers):
                failures.append(("disjoint", t))
            if played != t.labels - {A, B}:
                failures.append(("participation", t))
            if first.loser != rightmost_zero(k):
                failures.append(("first loser", t))
            if n >= 2 and first.lazy != (k[first.winner - 1] == 1):
                failures.append(("first laziness", t))
        sizes = tour_counts(n)
        below = tour_counts(n - 1)
        for k in compositions(n):
            i = rightmost_zero(k)
            if sizes.get(k, 0) != sum(below.get(ktilde(k, j), 0) for j in range(i + 1, n + 1)):
                failures.append(("recursion", k))
    report(5, not failures, f"first failure {failures[0]}" if failures else "n <= 6")


def test_6_hyperplanes(report):
    bad = []
    checked = 0
    for n in range(1, N + 1):
        classes = _classes(n)
        for k in compositions(n):
            rep = verify_hyperplanes(k, classes.get(k, ()))
            checked += rep.checked
            if not rep.passed:
                bad.append(rep)
    report(6, not bad, f"{checked} tree points" + (f", first failure {bad[0]}" if bad else ""))


def test_7_support(report):
    bad = [k for n in range(0, 8) for k in compositions(n) if is_support(k) != (multidegree(k) > 0)]
    report(7, not bad, "n <= 7" + (f", mismatch at {bad[0]}" if bad else ""))


def test_8_performance(report):
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "lazytour", "verify", "--n-max", "6",
                           "--suite", "all"], capture_output=True, text=True)
    verify_time = time.perf_counter() - start
    verified = proc.returncode == 0 and json.loads(proc.stdout)["passed"]

    start = time.perf_counter()
    counts = count_classes(8, jobs=4)
    enum_time = time.perf_counter() - start
    enumerated = sum(counts.values()) == 2027025 and all(
        counts.get(k, 0) == multidegree(k) for k in compositions(8))

    ok = verified and verify_time < 30 * 60 and enumerated and enum_time < 10 * 60
    report(8, ok, f"verify {verify_time:.0f}s (budget 1800s), "
                  f"n=8 classification {enum_time:.0f}s (budget 600s)")
