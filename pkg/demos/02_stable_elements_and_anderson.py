"""p-stable affine Weyl elements, the element w_p and the Anderson map to the torus.

Run: python3 demos/02_stable_elements_and_anderson.py
"""

from collections import Counter

from weyl_catalan.affine_weyl import (
    alcove_address,
    anderson,
    anderson_inverse,
    compute_w_p,
    enumerate_p_stable,
    orbit_representatives,
    stabilizer_generators,
    torus_enumerate,
)
from weyl_catalan.core_roots import build_root_system

rs = build_root_system("A2")
p = 7

els = enumerate_p_stable(rs, p)
print(f"{len(els)} elements of {rs.name} are {p}-stable (p^r = {p ** rs.rank})")

wp = compute_w_p(rs, p)
print("w_p =", wp, "with address", alcove_address(wp))
print("A(w_p) =", anderson(wp, p).coords)

# The Anderson map hits every torus point exactly once.
images = {anderson(x, p) for x in els}
print("torus size", len(torus_enumerate(rs, p)), "image size", len(images))

t = sorted(images, key=lambda t: t.coords)[10]
print("preimage of", t.coords, "is", anderson_inverse(t))

# Stabilizers of torus points are generated by reflections read off the stable element.
sizes = Counter(len(stabilizer_generators(x, p)) for x in els)
print("number of stabilizer generators -> how many elements:", dict(sorted(sizes.items())))
print("W-orbit representatives on the torus:", orbit_representatives(rs, p))
