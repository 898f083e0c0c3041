"""Exhaustive verification suites shared by the CLI and the test-suite.

Each suite returns a report dict with keys ``suite``, ``params``, ``total`` and
``mismatches``; a suite passes iff ``mismatches`` is empty.
"""

from __future__ import annotations

from .affine_weyl import (
    alcove_address,
    alcoves_in_box,
    anderson,
    enumerate_p_stable,
    is_p_stable,
    stabilizer_generators,
    torus_stabilizer,
)
from .core_roots import RootSystem, build_root_system, generated_subgroup, reflection
from .shi import (
    dominant_count,
    enumerate_park,
    geometric_chains,
    is_m_shi_alcove,
    minimal_alcove_of_region,
    signature,
)
from .type_a import verify_gmv, verify_zeta_equivalence


def _report(suite: str, params: dict, total: int, mismatches: list) -> dict:
    return {"suite": suite, "params": params, "total": total, "mismatches": mismatches}


def passed(report: dict) -> bool:
    return not report["mismatches"]


def verify_counts(rs: RootSystem, p: int | None = None, m: int | None = None) -> dict:
    """|W^p| = p^r, and for m: Shi alcoves, Park classes and dominant regions."""
    checks = []
    if p is not None:
        checks.append(("stable", len(enumerate_p_stable(rs, p)), p**rs.rank))
    if m is not None:
        q = m * rs.h + 1
        checks.append(("shi_alcoves", len(enumerate_p_stable(rs, q)), q**rs.rank))
        checks.append(("park", len(enumerate_park(rs, m)), q**rs.rank))
        checks.append(("dominant", dominant_count(rs, m), len(geometric_chains(rs, m))))
    mismatches = [{"check": name, "found": got, "expected": want} for name, got, want in checks if got != want]
    params = {"type": rs.name, "p": p, "m": m}
    rep = _report("counts", params, len(checks), mismatches)
    rep["counts"] = {name: got for name, got, _ in checks}
    return rep


def verify_stab(rs: RootSystem, p: int) -> dict:
    """Reflections in w(Phi~_p) generate the stabilizer of A(w), for every p-stable w."""
    mismatches = []
    els = enumerate_p_stable(rs, p)
    for w in els:
        gens = stabilizer_generators(w, p)
        group = generated_subgroup(rs, [reflection(rs, b) for b in sorted(gens)])
        brute = torus_stabilizer(anderson(w, p))
        if group != brute:
            mismatches.append({"element": w.to_json(), "generated": len(group), "stabilizer": len(brute)})
    return _report("stab", {"type": rs.name, "p": p}, len(els), mismatches)


def verify_minimal(rs: RootSystem, m: int, bound: int = 3) -> dict:
    """minimal_alcove_of_region against brute force over an address box."""
    box = alcoves_in_box(rs, bound)
    by_sig: dict = {}
    for a in box:
        by_sig.setdefault(signature(a, m), []).append(alcove_address(a))
    mismatches = []
    for a in box:
        r = minimal_alcove_of_region(a, m)
        sig = signature(a, m)
        rk = alcove_address(r)
        ok = (
            signature(r, m) == sig
            and is_m_shi_alcove(r, m)
            and is_p_stable(r, m * rs.h + 1)
            and all(all(abs(x) <= abs(y) for x, y in zip(rk, other)) for other in by_sig[sig])
        )
        if not ok:
            mismatches.append({"address": list(alcove_address(a)), "result": list(rk)})
    return _report("minimal", {"type": rs.name, "m": m, "bound": bound}, len(box), mismatches)


def verify_all() -> list[dict]:
    a2, b2 = build_root_system("A2"), build_root_system("B2")
    return [
        verify_gmv(4, 5),
        verify_zeta_equivalence(4),
        verify_counts(a2, p=7, m=1),
        verify_counts(a2, m=2),
        verify_counts(b2, p=5, m=1),
        verify_stab(a2, 7),
        verify_stab(b2, 5),
        verify_minimal(a2, 1),
        verify_minimal(a2, 2),
    ]


__all__ = [
    "passed",
    "verify_all",
    "verify_counts",
    "verify_gmv",
    "verify_minimal",
    "verify_stab",
    "verify_zeta_equivalence",
]
