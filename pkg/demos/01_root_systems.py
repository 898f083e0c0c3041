"""Root systems, Weyl groups and the numbers that drive everything else.

Run: python3 demos/01_root_systems.py
"""

from weyl_catalan.core_roots import build_root_system, prime_factors, weyl_enumerate

for name in ["A2", "B2", "G2", "A3", "F4", "E8"]:
    rs = build_root_system(name)
    print(f"{name}: rank {rs.rank}, {len(rs.roots)} roots, h = {rs.h}, theta = {rs.theta}, f = {rs.f}, |W| = {rs.w_count}")

# Coefficients of theta and the index of connection only involve primes dividing h,
# which is why p coprime to h behaves well later on.
for name in ["B3", "G2", "E6", "E8"]:
    rs = build_root_system(name)
    primes = set().union(*(prime_factors(c) for c in list(rs.theta) + [rs.f]))
    print(f"{name}: primes in theta and f = {sorted(primes)}, primes of h = {sorted(prime_factors(rs.h))}")

# The Weyl group of A2 is S_3, listed by reduced words (1-based).
a2 = build_root_system("A2")
for w in weyl_enumerate(a2):
    print("word", [i + 1 for i in w.word], "sends alpha_1 to", w.act_root((1, 0)))
