"""One test per acceptance criterion; a summary line per criterion is printed at the end."""

import random
import time
from itertools import combinations

from conftest import ACCEPTANCE
from hypercolor.bounds import edge_bound, gundert_iterated_bound, lll_color_count
from hypercolor.chromatic import (
    find_weak_coloring,
    is_valid_coloring,
    moser_tardos_weak_coloring,
    planar_weak_2_coloring,
    strong_chromatic_number,
    weak_chromatic_number,
)
from hypercolor.constructions import (
    construct_complete_embedded,
    construct_F,
    construct_F_prime,
    construct_H,
    construct_H_d,
)
from hypercolor.geometry import edge_pair_is_proper, verify_embedding
from hypercolor.hypercore import Coloring, Hypergraph, complete_hypergraph, cone
from hypercolor.momentcurve import MomentOrder, PairStatus, certify_order, pair_safe, realize_on_curve


def record(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    assert ok, detail


def random_hypergraph(rng, k, n, edges):
    verts = [f"x{i}" for i in range(n)]
    pool = list(combinations(verts, k))
    return Hypergraph.from_edges(k, verts, rng.sample(pool, min(edges, len(pool))))


def test_criterion_1_strong_family_values():
    cases = [(construct_F(m), 2 * m + 1) for m in (1, 2, 3, 4)]
    cases += [(construct_F_prime(m), 2 * m) for m in (2, 3)]
    worst, ok, got = 0.0, True, []
    for fam, expected in cases:
        t0 = time.monotonic()
        value = strong_chromatic_number(fam.hypergraph).value
        worst = max(worst, time.monotonic() - t0)
        got.append(value)
        ok &= value == expected
    record(1, ok and worst < 10, f"strong values {got}, slowest {worst:.2f}s (limit 10s)")


def test_criterion_2_certificates():
    fams = [construct_F(m) for m in range(1, 6)] + [construct_F_prime(m) for m in range(2, 5)]
    fams += [construct_H(3), construct_H(4), construct_H_d(3, 4), construct_H_d(3, 5)]
    fams += [construct_complete_embedded(n, k) for k in (1, 2, 3) for n in range(k, 7)]
    t0 = time.monotonic()
    failed = []
    for fam in fams:
        order_ok = certify_order(fam.hypergraph, fam.certificate).valid
        geo_ok = verify_embedding(fam.hypergraph, fam.coordinates).valid
        if not (order_ok and geo_ok):
            failed.append((fam.meta["family"], fam.meta["params"]))
    took = time.monotonic() - t0
    record(2, not failed and took < 300, f"{len(fams)} instances, failures {failed}, {took:.1f}s (limit 300s)")


def test_criterion_3_no_false_safe():
    t0 = time.monotonic()
    false_safe, unknown = [], 0
    for d in (3, 4):
        for e in combinations(range(1, 7), 3):
            pattern = "".join("e" if i in e else "f" for i in range(1, 7))
            status = pair_safe(pattern, 3, d)
            if status is PairStatus.UNKNOWN:
                unknown += 1
                continue
            pts = realize_on_curve(MomentOrder({str(i): i for i in range(1, 7)}, d)).points
            f = tuple(str(i) for i in range(1, 7) if i not in e)
            if not edge_pair_is_proper(tuple(map(str, e)), f, pts):
                false_safe.append((d, pattern))
    took = time.monotonic() - t0
    record(3, not false_safe and took < 60,
           f"40 patterns, {unknown} inconclusive, false-safe {false_safe}, {took:.2f}s")


def test_criterion_4_weak_family_values():
    t0 = time.monotonic()
    v2 = weak_chromatic_number(construct_H(2).hypergraph).value
    v3 = weak_chromatic_number(construct_H(3).hypergraph).value
    small = time.monotonic() - t0
    h4 = construct_H(4).hypergraph
    t1 = time.monotonic()
    col, finished = find_weak_coloring(h4, 3, deadline=3600)
    refute = time.monotonic() - t1
    ok = v2 == 2 and v3 == 3 and small < 60 and (h4.n, len(h4.edges)) == (76, 144) and col is None and finished
    record(4, ok, f"H2={v2}, H3={v3} ({small:.2f}s); H4 3-coloring refuted={finished and col is None} "
                  f"in {refute:.2f}s (budget 3600s)")


def test_criterion_5_complete_weak():
    t0 = time.monotonic()
    bad = []
    for n in range(2, 9):
        for k in range(2, n + 1):
            if weak_chromatic_number(complete_hypergraph(n, k)).value != -(-n // (k - 1)):
                bad.append((n, k))
    took = time.monotonic() - t0
    record(5, not bad and took < 60, f"28 pairs (n,k), mismatches {bad}, {took:.2f}s")


def test_criterion_6_cone_identity():
    rng = random.Random(6)
    t0 = time.monotonic()
    bad = 0
    for _ in range(50):
        k = rng.randint(2, 3)
        n = rng.randint(k, 7)
        h = random_hypergraph(rng, k, n, rng.randint(1, 8))
        if strong_chromatic_number(cone(h)).value != strong_chromatic_number(h).value + 1:
            bad += 1
    took = time.monotonic() - t0
    record(6, bad == 0 and took < 60, f"50 random hypergraphs, {bad} failures, {took:.2f}s")


def test_criterion_7_parity_collapse():
    rng = random.Random(7)
    t0 = time.monotonic()
    valid = tried = 0
    while tried < 100:
        n = rng.randint(3, 10)
        h = random_hypergraph(rng, 3, n, rng.randint(1, 2 * n))
        res = strong_chromatic_number(h)
        if res.value > 4:
            continue
        tried += 1
        four = Coloring(dict(res.witness.assignment), 4)
        valid += is_valid_coloring(h, planar_weak_2_coloring(h, four), "weak")
    took = time.monotonic() - t0
    record(7, valid == 100 and took < 60, f"{valid}/100 weak-valid, {took:.2f}s")


def test_criterion_8_edge_bounds():
    checks, bad = 0, []
    fams = [construct_F(m) for m in range(1, 31)] + [construct_F_prime(m) for m in range(2, 31)]
    fams += [construct_H(m) for m in (2, 3, 4)]
    for fam in fams:
        h = fam.hypergraph
        checks += 1
        if not len(h.edges) <= edge_bound(3, h.n):
            bad.append(fam.meta["params"])
    for m, d in [(2, 4), (3, 4), (2, 5), (3, 5), (4, 4)]:
        h = construct_H_d(m, d).hypergraph
        checks += 1
        # k = d uniform in R^(2d-3), i.e. l = 3
        if not gundert_iterated_bound(d, 3, h.n) > len(h.edges):
            bad.append(("Hd", m, d))
    record(8, not bad, f"{checks} family instances within their edge bounds, violations {bad}")


def test_criterion_9_moser_tardos():
    t0 = time.monotonic()
    failures = []
    for h in (construct_H(3).hypergraph, complete_hypergraph(8, 3)):
        c = lll_color_count(3, h.n)
        for seed in range(20):
            col = moser_tardos_weak_coloring(h, c, seed)
            if not is_valid_coloring(h, col) or col != moser_tardos_weak_coloring(h, c, seed):
                failures.append((h.n, seed))
    took = time.monotonic() - t0
    record(9, not failures and took < 60,
           f"c={lll_color_count(3, 12)} on H3, c={lll_color_count(3, 8)} on K_8^(3), 40 runs, "
           f"failures {failures}, {took:.2f}s")


def test_criterion_10_asymptotics_are_property_checked():
    ACCEPTANCE[10] = "criterion 10: COVERED  asymptotic table entries are not measured; see criteria 1-9"
