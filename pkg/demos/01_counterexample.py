"""
A partial action whose crossed product is not associative.

The base is the four-dimensional commutative algebra spanned by 1, t, u, v
with tv = vt = u and every other product of t, u, v zero. The ideal
D = span{u, v} has zero multiplication, and Z/2 acts on it by swapping u
and v. That swap respects the (zero) product on D, so it is a partial
action, yet the crossed product fails associativity.
"""

from pact.crossed import CrossedProduct, associativity_via_condition_x
from pact.envelope import has_enveloping
from pact.multiplier import is_lr_associative, multiplier_algebra
from pact.algebra import Ideal, counterexample_algebra
from pact.exactfield import QQ
from pact.groups import cyclic
from pact.paction import PartialAction

A = counterexample_algebra(QQ)
G = cyclic(2)
D = Ideal.span(A, [A.e("u"), A.e("v")])
alpha = PartialAction.from_ambient(G, A, {"g": D}, {"g": lambda x: (x[0], x[1], x[3], x[2])})
print("partial action axioms hold:", alpha.report().ok)

cp = CrossedProduct(alpha)
print("crossed product basis:", ", ".join(cp.names))
v = cp.is_associative()
print("associative:", bool(v), "first failing basis triple:", v.witness)

# One element is enough to see it: x = t d_1 + u d_g.
x = cp.combination([("1", A.e("t")), ("g", A.e("u"))])
xx = cp.mul(x, x)
print("(xx)x =", cp.describe(cp.mul(xx, x)))
print("x(xx) =", cp.describe(cp.mul(x, xx)))

# The local test on the generator finds the same obstruction.
w = associativity_via_condition_x(alpha)
print("condition (X) at each g:", bool(w), "witness:", w.witness)

# D has no unit, so there is no enveloping action, and its multipliers
# do not commute in the required way.
print("has enveloping action:", has_enveloping(alpha))
print("dim M(D) =", multiplier_algebra(D).dim, " (L,R)-associative:", bool(is_lr_associative(D)))
