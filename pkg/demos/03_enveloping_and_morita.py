"""
Restricting a global action and getting it back.

Z/2 swaps the first two coordinates of K^3. Restricting to the ideal
I spanned by e1 and e3 gives a partial action on I whose domain for g is
I intersected with its image under the swap. Every domain has a unit, so
an enveloping action exists. It is rebuilt here from the partial data
alone and compared with the swap we started from.
"""

from pact.algebra import AlgebraMorphism, Ideal, product_field, verify_isomorphism
from pact.envelope import (EnvelopingAction, build_enveloping, compare_envelopings, embed_crossed,
                           morita_context, verify_enveloping)
from pact.exactfield import QQ
from pact.groups import cyclic
from pact.paction import GlobalAction, restrict_global

beta = GlobalAction.permuting(cyclic(2), product_field(QQ, 3), {"g": [1, 0, 2]})
B = beta.algebra
r = restrict_global(beta, Ideal.span(B, [B.e(0), B.e(2)]))
alpha = r.action
print("domains:", [[alpha.base.format(b) for b in D.space.basis] for D in alpha.domains])

E = build_enveloping(alpha)
print("rebuilt enveloping algebra has dim", E.algebra.dim, "; checks:", verify_enveloping(alpha, E.beta, E.phi).ok)

original = EnvelopingAction(alpha, beta, AlgebraMorphism(alpha.base, B, r.inclusion))
f = compare_envelopings(alpha, E, original)
print("rebuilt and original are isomorphic:", bool(verify_isomorphism(f)))

emb = embed_crossed(alpha, E)
print(f"A x G embeds in B x G: dim {emb.source.dim} -> image of dim {emb.image.dim} in dim {emb.target.dim}")

mc = morita_context(alpha, E)
print("Morita context dims:", mc.dims)
print("all identities hold:", mc.ok)
