"""Affine permutations, abaci and the combinatorial Anderson map to parking functions.

Run: python3 demos/04_affine_permutations_and_gmv.py
"""

from weyl_catalan.affine_weyl import anderson
from weyl_catalan.type_a import (
    AffinePermutation,
    anderson_gmv,
    ap_invert,
    ap_is_p_stable,
    bridge_to_uniform,
    chi,
    coroot_to_ambient,
    enumerate_pfs,
    labelled_to_pf,
    levels,
    min_gap,
    normalized_levels,
    rational_catalan,
    weyl_to_perm,
    verify_gmv,
)

a = AffinePermutation((-3, 10, 4, -1))
e = bridge_to_uniform(a)
print("window", a, "inverse", ap_invert(a))
print("finite part", weyl_to_perm(e.w), "translation (ambient)", coroot_to_ambient(e.mu))
print("abacus levels", levels(a), "M =", min_gap(a), "normalized", normalized_levels(a))

p = 9
print(f"{p}-stable:", ap_is_p_stable(a, p))
v = anderson_gmv(a, p)
print("path", v.steps, "area", v.area, "labels", v.sigma, "parking function", labelled_to_pf(v))
print("uniform route gives the same:", chi(anderson(e, p)) == labelled_to_pf(v))

for n, q in [(3, 4), (3, 5), (4, 5), (5, 6)]:
    print(f"n={n}, p={q}: {len(enumerate_pfs(n, q))} parking functions, {rational_catalan(n, q)} Dyck paths")

rep = verify_gmv(4, 7)
print("diagram check on", rep["total"], "elements:", len(rep["mismatches"]), "mismatches")
