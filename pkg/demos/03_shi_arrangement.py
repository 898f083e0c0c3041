"""The m-Shi arrangement: chains of filters, minimal alcoves and parking classes.

Run: python3 demos/03_shi_arrangement.py
"""

from weyl_catalan.affine_weyl import alcove_address, anderson, is_dominant
from weyl_catalan.core_roots import build_root_system, from_word
from weyl_catalan.shi import (
    chain_to_minimal_alcove,
    enumerate_park,
    gamma,
    geometric_chains,
    ind,
    m_shi_alcoves,
    park_act,
    roots_of_mask,
    theta_map,
    zeta,
)

rs = build_root_system("A2")
for m in (1, 2):
    alcoves = m_shi_alcoves(rs, m)
    dom = [x for x in alcoves if is_dominant(x)]
    print(f"m={m}: {len(alcoves)} regions, {len(dom)} dominant, {len(geometric_chains(rs, m))} geometric chains")

# Each dominant region comes from a chain of filters; its minimal alcove has address k_alpha.
for chain in geometric_chains(rs, 1):
    x = chain_to_minimal_alcove(chain)
    print("J =", roots_of_mask(rs, chain.filters[0]), "address", alcove_address(x), "ind", sorted(ind(chain)))

# Parking classes [w, J] map to stable elements and on to the torus.
park = enumerate_park(rs, 1)
cls = park[7]
u = from_word(rs, [0])
print("class", cls.to_json(), "-> element", theta_map(cls), "-> torus", gamma(cls).coords)
print("s_1 acting first:", gamma(park_act(u, cls)).coords, "; zeta undoes gamma:", zeta(gamma(cls), 1) == cls)
print("Gamma agrees with A o Theta:", all(gamma(c) == anderson(theta_map(c), rs.h + 1) for c in park))
