"""
Enveloping actions and the Morita context between A x G and B x G.

The canonical enveloping action lives in the function algebra F(G, A):

    beta_g(f)(h) = f(g^-1 h),      phi(a)(g) = alpha_{g^-1}(a 1_g),

and B is the subalgebra generated by the translates beta_g(phi(A)).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    Algebra,
    AlgebraError,
    AlgebraMorphism,
    Verdict,
    function_algebra,
    is_subalgebra,
    products_span,
    restrict,
    subalgebra_generated,
    unit_of_ideal,
    verify_isomorphism,
    verify_morphism,
)
from .crossed import CrossedProduct, build_crossed
from .exactfield import LinearMap, Subspace
from .paction import ActionError, GlobalAction, PartialAction


class ConsistencyError(AssertionError):
    """A computation the theory guarantees to succeed did not."""


@dataclass
class EnvelopingAction:
    action: PartialAction
    beta: GlobalAction
    phi: AlgebraMorphism

    @property
    def algebra(self) -> Algebra:
        return self.beta.algebra


def _require_unital(pa: PartialAction):
    if not pa.base.is_unital:
        raise ActionError("enveloping actions are only built for unital algebras")


def has_enveloping(pa: PartialAction) -> bool:
    """True iff every D_g has a unit (for a unital base algebra)."""
    _require_unital(pa)
    pa.require_valid()
    return all(unit_of_ideal(D) is not None for D in pa.domains)


def build_enveloping(pa: PartialAction) -> EnvelopingAction:
    _require_unital(pa)
    pa.require_valid()
    G, A = pa.group, pa.base
    units = [unit_of_ideal(D) for D in pa.domains]
    missing = [G.label(g) for g in G if units[g] is None]
    if missing:
        raise ActionError(f"no enveloping action: D_g has no unit for g in {missing}", witness=missing)
    F, d, n = A.field, A.dim, G.order
    FA = function_algebra(A, G)

    def phi_full(a):
        out = []
        for g in G:
            out.extend(pa.alpha(G.inv(g), A.mul(a, units[g])))
        return tuple(out)

    def shift(g):
        # beta_g(f) at h is f(g^-1 h): output block h reads input block g^-1 h
        cols = []
        for k in range(n * d):
            src_block, r = divmod(k, d)
            h = G.mul(g, src_block)
            cols.append(F.unit_vector(n * d, h * d + r))
        return LinearMap(F, n * d, n * d, cols)

    shifts = [shift(g) for g in G]
    phiA = [phi_full(a) for a in A.basis()]
    gens = [shifts[g](v) for g in G for v in phiA]
    space = subalgebra_generated(FA, gens)
    B = restrict(FA, space, [f"b{i + 1}" for i in range(space.dim)])
    maps = []
    for g in G:
        cols = []
        for v in space.basis:
            w = shifts[g](v)
            if w not in space:
                raise ConsistencyError("B is not invariant under the shift action")
            cols.append(space.coords(w))
        maps.append(LinearMap(F, B.dim, B.dim, cols))
    beta = GlobalAction(G, B, maps)
    phi = AlgebraMorphism(A, B, LinearMap(F, d, B.dim, [space.coords(v) for v in phiA]))
    E = EnvelopingAction(pa, beta, phi)

    rep = verify_enveloping(pa, beta, phi)
    if not rep.ok:
        raise ConsistencyError(f"canonical enveloping action fails verification: {rep.witness}")
    w = _ideal_identity_violation(E, units)
    if w is not None:
        raise ConsistencyError(f"beta_g(phi(a)) phi(b) = phi(alpha_g(a 1_g^-1) b) fails at {w}")
    w = unit_shift_violation(pa, units)
    if w is not None:
        raise ConsistencyError(f"the compatibility of alpha with the units fails at {w}")
    return E


def _ideal_identity_violation(E: EnvelopingAction, units):
    pa, B = E.action, E.algebra
    G, A = pa.group, pa.base
    for g in G:
        for a in A.basis():
            left = E.beta.beta(g, E.phi(a))
            ag = pa.alpha(g, A.mul(a, units[G.inv(g)]))
            for b in A.basis():
                if B.mul(left, E.phi(b)) != E.phi(A.mul(ag, b)):
                    return (G.label(g), A.format(a), A.format(b))
    return None


def unit_shift_violation(pa: PartialAction, units=None):
    """
    First (g, h, a) breaking
    alpha_{h^-1 g}(a 1_{g^-1 h}) = alpha_{h^-1}(alpha_g(a) 1_h), a in D_{g^-1}.
    """
    G, A = pa.group, pa.base
    if units is None:
        units = [unit_of_ideal(D) for D in pa.domains]
    for g in G:
        for h in G:
            hi = G.inv(h)
            for a in pa.domains[G.inv(g)].space.basis:
                lhs = pa.alpha(G.mul(hi, g), A.mul(a, units[G.mul(G.inv(g), h)]))
                rhs = pa.alpha(hi, A.mul(pa.alpha(g, a), units[h]))
                if lhs != rhs:
                    return (G.label(g), G.label(h), A.format(a))
    return None


@dataclass
class EnvelopingReport:
    global_ok: bool = True
    phi_ok: bool = True
    ideal_ok: bool = True
    domains_ok: bool = True       # phi(D_g) = phi(A) cap beta_g(phi(A))
    intertwines_ok: bool = True   # phi alpha_g = beta_g phi on D_{g^-1}
    generates_ok: bool = True     # the beta_g(phi(A)) generate B
    witness: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all((self.global_ok, self.phi_ok, self.ideal_ok, self.domains_ok,
                    self.intertwines_ok, self.generates_ok))

    def __bool__(self):
        return self.ok


def verify_enveloping(pa: PartialAction, beta: GlobalAction, phi: AlgebraMorphism) -> EnvelopingReport:
    G, A, B = pa.group, pa.base, beta.algebra
    F = A.field
    rep = EnvelopingReport()
    v = beta.verify()
    if not v:
        rep.global_ok = False
        rep.witness.append(("global", v.witness))
    v = verify_morphism(phi)
    if not v or not phi.map.is_injective():
        rep.phi_ok = False
        rep.witness.append(("phi", v.witness if not v else "not injective"))
    phiA = phi.map.image()
    for b in B.basis():
        for x in phiA.basis:
            if B.mul(b, x) not in phiA or B.mul(x, b) not in phiA:
                rep.ideal_ok = False
                rep.witness.append(("ideal", B.format(b), B.format(x)))
                break
        if not rep.ideal_ok:
            break
    translates = [Subspace(F, B.dim, [beta.maps[g](x) for x in phiA.basis]) for g in G]
    for g in G:
        img = Subspace(F, B.dim, [phi(x) for x in pa.domains[g].space.basis])
        if img != (phiA & translates[g]):
            rep.domains_ok = False
            rep.witness.append(("domain", G.label(g)))
    for g in G:
        for x in pa.domains[G.inv(g)].space.basis:
            if phi(pa.alpha(g, x)) != beta.beta(g, phi(x)):
                rep.intertwines_ok = False
                rep.witness.append(("intertwine", G.label(g), A.format(x)))
                break
    gens = [v for T in translates for v in T.basis]
    if subalgebra_generated(B, gens).dim != B.dim:
        rep.generates_ok = False
        rep.witness.append(("generation",))
    return rep


def compare_envelopings(pa: PartialAction, E1: EnvelopingAction, E2: EnvelopingAction) -> AlgebraMorphism:
    """
    The isomorphism B1 -> B2 sending beta1_g(phi1(a)) to beta2_g(phi2(a)).
    The translates of phi(A) span B linearly, so the map is pinned down by
    these values; any inconsistency contradicts uniqueness and is raised.
    """
    for E in (E1, E2):
        if not verify_enveloping(pa, E.beta, E.phi):
            raise ActionError("compare_envelopings needs verified enveloping actions")
    G, A = pa.group, pa.base
    B1, B2 = E1.algebra, E2.algebra
    F = A.field
    pairs = [(E1.beta.beta(g, E1.phi(a)), E2.beta.beta(g, E2.phi(a))) for g in G for a in A.basis()]
    chosen, span = [], Subspace(F, B1.dim)
    for s, t in pairs:
        if s not in span:
            chosen.append((s, t))
            span = span + Subspace(F, B1.dim, [s])
    if span.dim != B1.dim or len(chosen) != B1.dim:
        raise ConsistencyError("translates of phi(A) do not span B")
    S = LinearMap(F, B1.dim, B1.dim, [s for s, _ in chosen])
    T = LinearMap(F, B1.dim, B2.dim, [t for _, t in chosen])
    X = T @ S.inverse()
    for s, t in pairs:
        if X(s) != t:
            raise ConsistencyError("beta_g(phi(a)) -> beta'_g(phi'(a)) is not well defined")
    f = AlgebraMorphism(B1, B2, X)
    v = verify_isomorphism(f)
    if not v:
        raise ConsistencyError(f"comparison map is not an isomorphism: {v.witness}")
    for g in G:
        if E2.beta.maps[g] @ X != X @ E1.beta.maps[g]:
            raise ConsistencyError(f"comparison map is not equivariant at {G.label(g)}")
    return f


@dataclass
class CrossedEmbedding:
    source: CrossedProduct
    target: CrossedProduct
    morphism: AlgebraMorphism

    @property
    def image(self) -> Subspace:
        return self.morphism.map.image()


def embed_crossed(pa: PartialAction, E: EnvelopingAction) -> CrossedEmbedding:
    """a_g delta_g -> phi(a_g) delta_g, checked injective and multiplicative."""
    cpA = build_crossed(pa)
    cpB = build_crossed(E.beta.as_partial())
    cols = []
    for g, i in cpA.index_pairs:
        a = pa.domains[g].space.basis[i]
        cols.append(cpB.delta(g, E.phi(a)))
    f = AlgebraMorphism(cpA, cpB, LinearMap(pa.field, cpA.dim, cpB.dim, cols))
    v = verify_morphism(f)
    if not v:
        raise ConsistencyError(f"crossed embedding is not multiplicative at {v.witness}")
    if not f.map.is_injective():
        raise ConsistencyError("crossed embedding is not injective")
    if not cpB.is_associative():
        raise ConsistencyError("B x G of a global action is not associative")
    return CrossedEmbedding(cpA, cpB, f)


@dataclass
class MoritaContext:
    R: Subspace          # the image of A x G inside B x G
    ring: CrossedProduct  # B x G
    M: Subspace
    N: Subspace
    checks: dict[str, bool]
    dims: dict[str, int]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _closed(P: CrossedProduct, X: Subspace, Y: Subspace, Z: Subspace) -> bool:
    return all(P.mul(x, y) in Z for x in X.basis for y in Y.basis)


def _compatible(P: CrossedProduct, X: Subspace, Y: Subspace) -> bool:
    # (x y) z = x (y z) for x, z in X and y in Y
    for x in X.basis:
        for y in Y.basis:
            xy = P.mul(x, y)
            for z in X.basis:
                if P.mul(xy, z) != P.mul(x, P.mul(y, z)):
                    return False
    return True


def morita_context(pa: PartialAction, E: EnvelopingAction) -> MoritaContext:
    """
    M = sum of phi(A) delta_g and N = sum of beta_g(phi(A)) delta_g inside
    B x G, with the pairings given by multiplication.
    """
    _require_unital(pa)
    if not E.algebra.is_unital:
        raise ActionError("the enveloping algebra has no unit")
    emb = embed_crossed(pa, E)
    P = emb.target
    G, A = pa.group, pa.base
    F = A.field
    phiA = [E.phi(a) for a in A.basis()]
    M = Subspace(F, P.dim, [P.delta(g, x) for g in G for x in phiA])
    N = Subspace(F, P.dim, [P.delta(g, E.beta.beta(g, x)) for g in G for x in phiA])
    R = emb.image
    full = Subspace.full(F, P.dim)
    MN = products_span(P, M, N)
    NM = products_span(P, N, M)
    one = P.delta(0, E.phi(A.unit))
    c_in_MN = all(
        P.delta(h, E.phi(c)) in N and P.mul(one, P.delta(h, E.phi(c))) == P.delta(h, E.phi(c))
        for h in G for c in pa.domains[h].space.basis)
    checks = {
        "M_right_ideal": _closed(P, M, full, M),
        "N_left_ideal": _closed(P, full, N, N),
        "RM_in_M": _closed(P, R, M, M),
        "NR_in_N": _closed(P, N, R, N),
        "MN_eq_AxG": MN == R,
        "NM_eq_BxG": NM == full,
        "tau_compatible": _compatible(P, M, N),
        "tau_prime_compatible": _compatible(P, N, M),
        "unit_times_c": c_in_MN,
    }
    dims = {"AxG": R.dim, "BxG": P.dim, "M": M.dim, "N": N.dim, "MN": MN.dim, "NM": NM.dim}
    return MoritaContext(R, P, M, N, checks, dims)
