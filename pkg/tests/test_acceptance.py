"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line with its measured runtime;
the lines are repeated in the pytest terminal summary.  Caches are cleared
before each criterion so runtimes are measured cold.  Also runnable as a
script: ``python3 tests/test_acceptance.py``.
"""

import os
import subprocess
import sys
import time

import weyl_catalan.affine_weyl as affine_weyl
import weyl_catalan.core_roots as core_roots
import weyl_catalan.shi as shi
import weyl_catalan.type_a as type_a
from weyl_catalan.affine_weyl import compute_w_p, enumerate_p_stable, simple_affine_reflections
from weyl_catalan.core_roots import build_root_system
from weyl_catalan.shi import dominant_count, geometric_chains, is_m_shi_alcove
from weyl_catalan.type_a import (
    AffinePermutation,
    VertLabelledPath,
    anderson_gmv,
    ap_invert,
    ap_is_p_stable,
    bridge_from_uniform,
    drw,
    gmv_tau,
    labelled_to_pf,
    levels,
    min_gap,
    path_from_area,
    type_a_system,
    valleys,
    verify_gmv,
    verify_zeta_equivalence,
    w_p_inverse_window,
    zeta_haglund,
    zeta_hl,
)
from weyl_catalan.verify import passed, verify_minimal, verify_stab

RESULTS = []
HERE = os.path.dirname(os.path.abspath(__file__))


def cold():
    for mod in (core_roots, affine_weyl, shi, type_a):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


def report(n, ok, detail, elapsed, limit=None):
    timed_ok = limit is None or elapsed < limit
    status = "PASS" if ok and timed_ok else "FAIL"
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    line = f"{status} criterion {n}: {detail} [{elapsed:.2f} s{budget}]"
    RESULTS.append(line)
    print(line)
    return ok and timed_ok


def test_criterion_1_stable_counts():
    cold()
    cases = {
        "A2": {2: 4, 4: 16, 5: 25, 7: 49},
        "B2": {3: 9, 5: 25},
        "G2": {5: 25, 7: 49},
        "A3": {3: 27, 5: 125, 7: 343},
    }
    t = time.perf_counter()
    found = {}
    for name, by_p in cases.items():
        rs = build_root_system(name)
        for p in by_p:
            found[(name, p)] = len(enumerate_p_stable(rs, p))
    elapsed = time.perf_counter() - t
    bad = [(k, v) for k, v in found.items() if v != cases[k[0]][k[1]]]
    detail = f"|W^p| = p^r on {len(found)} (type, p) pairs" + (f", mismatches {bad}" if bad else "")
    assert report(1, not bad, detail, elapsed, 30)


def test_criterion_2_shi_counts():
    cold()
    t = time.perf_counter()
    a2, b2 = build_root_system("A2"), build_root_system("B2")
    got = {
        "A2 m=1 regions": len(shi.m_shi_alcoves(a2, 1)),
        "A2 m=1 dominant": dominant_count(a2, 1),
        "A2 m=1 chains": len(geometric_chains(a2, 1)),
        "A2 m=2 minimal alcoves": len(shi.m_shi_alcoves(a2, 2)),
        "B2 m=1 regions": len(shi.m_shi_alcoves(b2, 1)),
    }
    # the same counts found geometrically among alcoves of a bounded address box
    box = affine_weyl.alcoves_in_box(a2, 5)
    got["A2 m=1 in box"] = sum(is_m_shi_alcove(x, 1) for x in box)
    got["A2 m=2 in box"] = sum(is_m_shi_alcove(x, 2) for x in box)
    elapsed = time.perf_counter() - t
    want = {
        "A2 m=1 regions": 16,
        "A2 m=1 dominant": 5,
        "A2 m=1 chains": 5,
        "A2 m=2 minimal alcoves": 49,
        "B2 m=1 regions": 25,
        "A2 m=1 in box": 16,
        "A2 m=2 in box": 49,
    }
    ok = got == want
    detail = "Shi counts 16 / 5 / 49 / 25 = (mh+1)^r" + ("" if ok else f", got {got}")
    assert report(2, ok, detail, elapsed)


def test_criterion_3_gmv_diagram():
    cold()
    t = time.perf_counter()
    reps = [verify_gmv(n, p) for n, p in [(3, 4), (3, 5), (4, 5), (4, 7)]]
    elapsed = time.perf_counter() - t
    totals = [r["total"] for r in reps]
    bad = sum(len(r["mismatches"]) for r in reps)
    ok = totals == [16, 25, 125, 343] and bad == 0
    assert report(3, ok, f"chi o A = A_GMV on {totals} cases, {bad} mismatches", elapsed, 60)


def test_criterion_4_zeta_equivalence():
    cold()
    t = time.perf_counter()
    reps = [verify_zeta_equivalence(n) for n in (3, 4, 5)]
    elapsed = time.perf_counter() - t
    totals = [r["total"] for r in reps]
    bad = sum(len(r["mismatches"]) for r in reps)
    ok = totals == [16, 125, 1296] and bad == 0
    assert report(4, ok, f"zeta_HL = eps o zeta o chi^-1 = delta o A_GMV^-1 on {totals} cases, {bad} mismatches", elapsed, 60)


def _golden_checks():
    a = AffinePermutation((-3, 10, 4, -1))
    v = anderson_gmv(a, 9)
    b = AffinePermutation((0, 7, -2, 6, 4))
    checks = {
        "inverse window": ap_invert(a).window == (5, -6, 8, 3),
        "levels": levels(a) == (1, -2, 0, 1),
        "M": min_gap(a) == -6,
        "9-stable": ap_is_p_stable(a, 9),
        "area": v.area == (0, 2, 3, 2),
        "sigma 2431": v.sigma == (2, 4, 3, 1),
        "PF (4,0,1,0)": labelled_to_pf(v) == (4, 0, 1, 0),
        "tau 53142": gmv_tau(5, 8) == (5, 3, 1, 4, 2),
        "M = -3": min_gap(b) == -3,
        "PF (6,0,1,0,3)": labelled_to_pf(anderson_gmv(b, 8)) == (6, 0, 1, 0, 3),
    }
    wp_ok = True
    for n, p in [(2, 3), (3, 2), (3, 4), (3, 5), (4, 3), (4, 5), (4, 7), (5, 4), (5, 8)]:
        wp = bridge_from_uniform(compute_w_p(type_a_system(n), p))
        c = (p - 1) * (n + 1) // 2
        wp_ok &= ap_invert(wp).window == tuple(i * p - c for i in range(1, n + 1)) == w_p_inverse_window(n, p)
        wp_ok &= labelled_to_pf(anderson_gmv(wp, p)) == (0,) * n
    checks["w_p window and A_GMV(w_p) = 0"] = wp_ok and w_p_inverse_window(3, 4) == (-2, 2, 6)
    checks["zeta_H of area (0,1,2,1,1)"] = zeta_haglund(path_from_area((0, 1, 2, 1, 1), 6)) == (0, 1, 1, 1, 2)
    za = zeta_hl(VertLabelledPath(6, (0, 0, 0, 2, 3), (1, 2, 4, 3, 5)))
    checks["zeta_HL first example"] = za.w == (1, 2, 3, 5, 4) and valleys(za.path) == {(1, 2), (2, 5)}
    v2 = VertLabelledPath(6, (0, 0, 0, 2, 2), (2, 4, 5, 1, 3))
    z2 = zeta_hl(v2)
    checks["zeta_HL 24153"] = drw(v2) == z2.w == (2, 4, 1, 5, 3) and valleys(z2.path) == {(1, 2), (2, 4), (3, 5)}
    a2 = build_root_system("A2")
    checks["A2 w_2 = s_theta^1"] = compute_w_p(a2, 2) == simple_affine_reflections(a2)[0]
    return checks


def test_criterion_5_golden_values():
    cold()
    t = time.perf_counter()
    checks = _golden_checks()
    elapsed = time.perf_counter() - t
    bad = [k for k, v in checks.items() if not v]
    detail = f"{len(checks) - len(bad)}/{len(checks)} golden values match" + (f", failing {bad}" if bad else "")
    assert report(5, not bad, detail, elapsed)


def test_criterion_6_stabilizers():
    cold()
    t = time.perf_counter()
    reps = [verify_stab(build_root_system(n), p) for n, p in [("A2", 4), ("A2", 7), ("B2", 5)]]
    elapsed = time.perf_counter() - t
    totals = [r["total"] for r in reps]
    ok = all(passed(r) for r in reps) and totals == [16, 49, 25]
    assert report(6, ok, f"generated subgroup = brute-force stabilizer on {totals} elements", elapsed, 30)


def test_criterion_7_minimal_alcoves():
    cold()
    t = time.perf_counter()
    a2 = build_root_system("A2")
    reps = [verify_minimal(a2, m, bound=3) for m in (1, 2)]
    elapsed = time.perf_counter() - t
    totals = [r["total"] for r in reps]
    bad = sum(len(r["mismatches"]) for r in reps)
    assert report(7, bad == 0 and min(totals) > 0, f"minimal alcoves in the |k| <= 3 box of A2, m = 1, 2: {totals} alcoves, {bad} mismatches", elapsed)


def test_criterion_8_property_suites():
    t = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-m", "property", "-p", "no:cacheprovider", HERE],
        capture_output=True,
        text=True,
        check=False,
    )
    elapsed = time.perf_counter() - t
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr.strip()[-200:]
    assert report(8, proc.returncode == 0, f"property suites standalone: {tail}", elapsed, 120), proc.stdout[-3000:]


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
