"""Haglund's zeta map and its uniform counterpart agree on parking functions.

Run: python3 demos/05_zeta_maps.py
"""

from weyl_catalan.type_a import (
    VertLabelledPath,
    chi_inverse,
    drw,
    epsilon,
    pf_to_labelled,
    valleys,
    verify_zeta_equivalence,
    zeta_haglund,
    zeta_hl,
)
from weyl_catalan.shi import zeta

v = VertLabelledPath(6, (0, 0, 0, 2, 2), (2, 4, 5, 1, 3))
d = zeta_hl(v)
print("labels by diagonal", drw(v), "new path", d.path, "valleys", sorted(valleys(d.path)))
print("rises", sorted(v.rises()), "become valley labels", sorted(d.valley_labels()))

f = (0, 2, 0, 1)
print("pf", f, "-> combinatorial", zeta_hl(pf_to_labelled(f, 5)).to_json())
print("pf", f, "-> uniform     ", epsilon(zeta(chi_inverse(f, 5), 1)).to_json())

print("area (0,1,2,1,1) path maps to", zeta_haglund((0, 0, 0, 2, 3)))
for n in (3, 4, 5):
    rep = verify_zeta_equivalence(n)
    print(f"n={n}: {rep['total']} parking functions, {len(rep['mismatches'])} mismatches")
