"""
The partial group algebra of a small group.

S(G) is the semigroup generated by symbols [g] subject to the partial
representation laws. Its elements are pairs (E, g) with 1 and g in E, so
|S(G)| = (n + 1) 2^(n - 2). A Knuth-Bendix completion of the defining
relations gives the same count independently. K_par(G) is then the crossed
product of the commutative algebra spanned by the idempotents.
"""

from pact.exactfield import QQ
from pact.groups import cyclic, klein_four
from pact.preps import PartialSemigroup, semigroup_size, kpar_iso, rewriting_oracle

for G, name in [(cyclic(2), "Z/2"), (cyclic(3), "Z/3"), (cyclic(4), "Z/4"), (klein_four(), "Z/2 x Z/2")]:
    S = PartialSemigroup(G)
    oracle = rewriting_oracle(G)
    iso = kpar_iso(G, QQ)
    print(f"{name:10} |S| = {len(S):3} formula {semigroup_size(G.order):3} rewriting {oracle.size:3}"
          f"  K_par ~ A x G: {iso.ok}")

S = PartialSemigroup(cyclic(3))
print("elements of S(Z/3):", ", ".join(S.label(i) for i in range(len(S))))
