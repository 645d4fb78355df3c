"""
Upper triangular matrices: small sizes behave, from n = 3 on they do not.

For T(2) every ideal is (L,R)-associative, which is what makes all partial
actions on it give associative crossed products. For T(n), n >= 3, there is
a single partial isomorphism between two-dimensional ideals that already
breaks the local associativity condition.
"""

from pact.algebra import enumerate_ideals, upper_triangular
from pact.exactfield import GF, QQ
from pact.multiplier import is_lr_associative, multiplier_algebra
from pact.paction import condition_x_check, triangular_slice

T2 = upper_triangular(GF(2), 2)
for I in enumerate_ideals(T2):
    if I.dim:
        names = [T2.format(b) for b in I.space.basis]
        print(f"ideal {names}: dim M = {multiplier_algebra(I).dim}, (L,R)-assoc = {bool(is_lr_associative(I))}")

for n in (3, 4, 5):
    s = triangular_slice(QQ, n)
    v = condition_x_check(s)
    print(f"T({n}): condition (X) holds = {bool(v)}; witness {v.witness}, sides {v.detail}")
