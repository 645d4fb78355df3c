"""
Partial representations and the crossed products they produce.

A partial representation pi: G -> B (B unital) satisfies pi(1) = 1,
pi(g) pi(h) pi(h^-1) = pi(gh) pi(h^-1) and pi(g^-1) pi(g) pi(h) = pi(g^-1) pi(gh).
Its idempotents eps_g = pi(g) pi(g^-1) generate a commutative subalgebra on
which G acts partially by conjugation.

This module also holds the universal semigroup S(G) in the pair model, the
partial group algebra K_par(G) = K S(G), and the elementary partial representations
G -> M_n(KH) built from a subset A containing 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import (
    Algebra,
    AlgebraError,
    AlgebraMorphism,
    Ideal,
    Verdict,
    annihilators,
    matrix_algebra,
    matrix_unit_index,
    restrict,
    subalgebra_generated,
    verify_isomorphism,
    verify_morphism,
)
from .crossed import CrossedProduct, build_crossed
from .envelope import ConsistencyError
from .exactfield import Field, LinearMap, Subspace
from .groups import Group, GroupError, TranslateOrbit, translate_orbit
from .paction import ActionError, PartialAction, unit_family, verify_equivalence
from .rewriting import enumerate_monoid, knuth_bendix


class RepError(AlgebraError):
    pass


# -- partial representations -------------------------------------------------

@dataclass
class PartialRep:
    group: Group
    target: Algebra
    images: tuple
    crossed: CrossedProduct | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.images = tuple(tuple(self.target.field(c) for c in v) for v in self.images)
        if len(self.images) != self.group.order:
            raise RepError("need one image per group element")
        if not self.target.is_unital:
            raise RepError("partial representations take values in a unital algebra")

    def __call__(self, g) -> tuple:
        return self.images[self.group.index(g) if isinstance(g, str) else g]


def verify_partial_rep(pi: PartialRep) -> Verdict:
    """Both laws on every pair; the witness is (law, g, h)."""
    G, B = pi.group, pi.target
    if pi(0) != B.unit:
        return Verdict(False, ("unit", G.label(0), None))
    m = B.mul
    for g in G:
        for h in G:
            hi, gi, gh = G.inv(h), G.inv(g), G.mul(g, h)
            if m(m(pi(g), pi(h)), pi(hi)) != m(pi(gh), pi(hi)):
                return Verdict(False, ("right", G.label(g), G.label(h)))
            if m(m(pi(gi), pi(g)), pi(h)) != m(pi(gi), pi(gh)):
                return Verdict(False, ("left", G.label(g), G.label(h)))
    return Verdict(True)


@dataclass
class EpsilonFamily:
    eps: tuple
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def epsilon_family(pi: PartialRep) -> EpsilonFamily:
    """eps_g = pi(g) pi(g^-1), checked idempotent, commuting, and pi(g) eps_h = eps_gh pi(g)."""
    G, B = pi.group, pi.target
    m = B.mul
    eps = tuple(m(pi(g), pi(G.inv(g))) for g in G)
    checks = {
        "idempotent": all(m(e, e) == e for e in eps),
        "commuting": all(m(a, b) == m(b, a) for a in eps for b in eps),
        "shift_left": all(m(pi(g), eps[h]) == m(eps[G.mul(g, h)], pi(g)) for g in G for h in G),
        "shift_right": all(m(eps[h], pi(g)) == m(pi(g), eps[G.mul(G.inv(g), h)]) for g in G for h in G),
    }
    return EpsilonFamily(eps, checks)


@dataclass
class InducedAction:
    rep: PartialRep
    space: Subspace          # the subalgebra generated by the eps_g, inside the target
    action: PartialAction    # on restrict(target, space)
    eps: tuple

    @property
    def base(self) -> Algebra:
        return self.action.base

    def lift(self, a) -> tuple:
        """Base coordinates -> target vector."""
        return self.space.vector(a)


def induced_action(pi: PartialRep, names: Sequence[str] | None = None) -> InducedAction:
    """alpha_g(a) = pi(g) a pi(g^-1) on D_g = eps_g A, A generated by the eps_g."""
    v = verify_partial_rep(pi)
    if not v:
        raise RepError(f"not a partial representation: {v.witness}", witness=v.witness)
    G, B = pi.group, pi.target
    F = B.field
    fam = epsilon_family(pi)
    if not fam.ok:
        raise ConsistencyError(f"epsilon identities fail: {fam.checks}")
    S = subalgebra_generated(B, fam.eps)
    A = restrict(B, S, names)
    doms = []
    for g in G:
        doms.append(Ideal(A, Subspace(F, A.dim, [S.coords(B.mul(fam.eps[g], b)) for b in S.basis])))
    maps = []
    for g in G:
        src, dst = doms[G.inv(g)].space, doms[g].space
        cols = []
        for c in src.basis:
            x = B.mul(B.mul(pi(g), S.vector(c)), pi(G.inv(g)))
            cols.append(dst.coords(S.coords(x)))
        maps.append(LinearMap(F, src.dim, dst.dim, cols))
    pa = PartialAction(G, A, doms, maps)
    r = pa.report()
    if not r.ok:
        raise ConsistencyError(f"induced partial action fails: {r.violations[:3]}")
    return InducedAction(pi, S, pa, fam.eps)


def pi_alpha(pa: PartialAction) -> PartialRep:
    """g -> 1_g delta_g into the (associative) crossed product."""
    fam = unit_family(pa)
    if fam.missing:
        raise RepError(f"D_g has no unit for g in {fam.missing}", witness=fam.missing)
    cp = build_crossed(pa)
    v = cp.is_associative()
    if not v:
        raise RepError(f"the crossed product is not associative at {v.witness}", witness=v.witness)
    R = cp.as_algebra()
    images = [cp.delta(g, fam.units[g]) for g in pa.group]
    pi = PartialRep(pa.group, R, images, crossed=cp)
    v = verify_partial_rep(pi)
    if not v:
        raise ConsistencyError(f"pi_alpha is not a partial representation: {v.witness}")
    return pi


@dataclass
class PhiAlpha:
    induced: InducedAction
    morphism: AlgebraMorphism   # A' -> A
    intertwines: bool
    generated_by_units: bool
    equivalent: bool | None


def phi_alpha_map(pa: PartialAction) -> PhiAlpha:
    """
    A' (generated by the 1_g delta_1) -> A, a delta_1 -> a, checked to be a
    monomorphism intertwining the induced action with alpha; when the 1_g
    generate A it is an equivalence of partial actions.
    """
    pi = pi_alpha(pa)
    cp: CrossedProduct = pi.crossed
    ind = induced_action(pi)
    A, A1 = pa.base, ind.base
    F = A.field
    cols = []
    for v in ind.space.basis:
        tail = v[cp.offsets[1]:] if pa.group.order > 1 else ()
        if any(tail):
            raise ConsistencyError("A' is not inside A delta_1")
        cols.append(cp.component(v, 0))
    f = AlgebraMorphism(A1, A, LinearMap(F, A1.dim, A.dim, cols))
    if not verify_morphism(f) or not f.map.is_injective():
        raise ConsistencyError("phi_alpha is not a monomorphism")
    G = pa.group
    inter = True
    for g in G:
        for x in ind.action.domains[G.inv(g)].space.basis:
            y = f(x)
            if y not in pa.domains[G.inv(g)].space or f(ind.action.alpha(g, x)) != pa.alpha(g, y):
                inter = False
    gen = f.map.is_surjective()
    eq = bool(verify_equivalence(ind.action, pa, f)) if gen else None
    return PhiAlpha(ind, f, inter, gen, eq)


@dataclass
class PhiPi:
    induced: InducedAction
    crossed: CrossedProduct
    morphism: AlgebraMorphism   # A x G -> B
    composition_ok: bool

    @property
    def bijective(self) -> bool:
        return self.morphism.map.is_invertible()


def phi_pi(pi: PartialRep, names: Sequence[str] | None = None) -> PhiPi:
    """sum a_g delta_g -> sum a_g pi(g), checked multiplicative, with phi_pi(1_g delta_g) = pi(g)."""
    ind = induced_action(pi, names)
    cp = build_crossed(ind.action)
    B, G = pi.target, pi.group
    cols = []
    for g, i in cp.index_pairs:
        a = ind.action.domains[g].space.basis[i]
        cols.append(B.mul(ind.lift(a), pi(g)))
    f = AlgebraMorphism(cp, B, LinearMap(B.field, cp.dim, B.dim, cols))
    v = verify_morphism(f)
    if not v:
        raise ConsistencyError(f"phi_pi is not multiplicative at {v.witness}")
    comp = True
    for g in G:
        one_g = ind.space.coords(ind.eps[g])
        if f(cp.delta(g, one_g)) != pi(g):
            comp = False
    return PhiPi(ind, cp, f, comp)


@dataclass
class ExpectationVerdict:
    applicable: bool
    injective: bool | None
    reasons: list[str] = field(default_factory=list)


def expectation_injectivity(phi: AlgebraMorphism, E: LinearMap) -> ExpectationVerdict:
    """
    If phi: A x G -> B is injective on A delta_1, every D_g has zero
    annihilator {a in D_g : a D_g = 0}, and E fixes phi(A delta_1) while
    killing phi(a delta_g) for g != 1, then phi is injective. The verdict is
    cross-checked by rank.
    """
    cp = phi.source
    if not isinstance(cp, CrossedProduct):
        raise RepError("the source must be a crossed product")
    pa = cp.action
    reasons = []
    base_part = [k for k, (g, _) in enumerate(cp.index_pairs) if g == 0]
    if LinearMap(phi.map.field, len(base_part), phi.target.dim,
                 [phi.map.columns[k] for k in base_part]).rank != len(base_part):
        reasons.append("phi is not injective on A delta_1")
    for g in pa.group:
        if annihilators(pa.domains[g]).left.dim:
            reasons.append(f"D_{pa.group.label(g)} has a nonzero annihilator")
    for k, (g, _) in enumerate(cp.index_pairs):
        y = phi.map.columns[k]
        want = y if g == 0 else tuple(phi.map.field.zeros(phi.target.dim))
        if E(y) != want:
            reasons.append(f"E does not {'fix' if g == 0 else 'kill'} phi({cp.names[k]})")
            break
    if reasons:
        return ExpectationVerdict(False, None, reasons)
    inj = phi.map.is_injective()
    if not inj:
        raise ConsistencyError("expectation criterion applies but phi has a kernel")
    return ExpectationVerdict(True, True)


# -- the universal semigroup S(G) and the partial group algebra --------------

class PartialSemigroup:
    """
    S(G) as pairs (E, g) with {1, g} in E, (E, g)(F, h) = (E u gF, gh), and
    [g] = ({1, g}, g).
    """

    MAX_ORDER = 6

    def __init__(self, group: Group):
        if group.order > self.MAX_ORDER:
            raise GroupError(f"S(G) is only built for |G| <= {self.MAX_ORDER}")
        self.group = group
        G = group
        elems = []
        others = list(range(1, G.order))
        for g in G:
            rest = [x for x in others if x != g]
            for r in range(len(rest) + 1):
                for extra in itertools.combinations(rest, r):
                    E = frozenset({0, g, *extra})
                    elems.append((E, g))
        elems.sort(key=lambda p: (p[1], len(p[0]), sorted(p[0])))
        self.elements = elems
        self.index = {p: i for i, p in enumerate(elems)}
        self.table = [[self.index[self._mul(a, b)] for b in elems] for a in elems]
        self.identity = self.index[(frozenset({0}), 0)]

    def _mul(self, a, b):
        (E, g), (F, h) = a, b
        G = self.group
        return (E | frozenset(G.mul(g, x) for x in F), G.mul(g, h))

    def __len__(self):
        return len(self.elements)

    def gen(self, g) -> int:
        return self.index[(frozenset({0, g}), g)]

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def label(self, i: int) -> str:
        E, g = self.elements[i]
        return f"({self.group.format_subset(E)},{self.group.label(g)})"

    def check(self) -> dict[str, bool]:
        G, n, t = self.group, len(self), self.table
        gen = self.gen
        return {
            "associative": all(t[t[a][b]][c] == t[a][t[b][c]]
                               for a in range(n) for b in range(n) for c in range(n)),
            "relation_a": all(t[t[gen(G.inv(g))][gen(g)]][gen(h)] == t[gen(G.inv(g))][gen(G.mul(g, h))]
                              for g in G for h in G),
            "relation_b": all(t[t[gen(g)][gen(h)]][gen(G.inv(h))] == t[gen(G.mul(g, h))][gen(G.inv(h))]
                              for g in G for h in G),
            "relation_c": gen(0) == self.identity,
            "generated": len(_closure(self, [gen(g) for g in G])) == n,
        }

    def algebra(self, field: Field) -> Algebra:
        """K_par(G) = K S(G)."""
        n = len(self)
        consts = {(a, b): [1 if k == self.table[a][b] else 0 for k in range(n)]
                  for a in range(n) for b in range(n)}
        unit = [1 if k == self.identity else 0 for k in range(n)]
        names = [self.label(i) for i in range(n)]
        # associativity is inherited from the semigroup, checked in check()
        return Algebra(field, n, consts, names, unit=unit, check=False)


def _closure(S: PartialSemigroup, gens: list[int]) -> set[int]:
    seen = {S.identity}
    frontier = [S.identity]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = S.mul(x, s)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def semigroup_size(order: int) -> int:
    """(n + 1) 2^(n - 2), the number of elements of S(G) for |G| = n >= 2."""
    if order == 1:
        return 1
    return (order + 1) * 2 ** (order - 2)


@dataclass
class OracleReport:
    size: int
    bijective: bool
    multiplicative: bool
    generators_match: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.multiplicative and self.generators_match


def rewriting_oracle(group: Group) -> OracleReport:
    """
    Present S(G) by generators [g], g != 1, and relations a), b) with [1] = 1,
    complete by Knuth-Bendix, enumerate normal forms and compare with the
    pair model through w -> product of the [g] in w.
    """
    G = group
    sym = {g: g - 1 for g in G if g != 0}

    def word(*gs):
        return tuple(sym[g] for g in gs if g != 0)

    eqs = []
    for g in G:
        for h in G:
            gi, hi = G.inv(g), G.inv(h)
            eqs.append((word(gi, g, h), word(gi, G.mul(g, h))))
            eqs.append((word(g, h, hi), word(G.mul(g, h), hi)))
    rs = knuth_bendix(eqs)
    forms = enumerate_monoid(rs, list(sym.values()))
    S = PartialSemigroup(G)

    def image(w):
        x = S.identity
        for s in w:
            x = S.mul(x, S.gen(s + 1))
        return x

    imgs = [image(w) for w in forms]
    bij = len(set(imgs)) == len(forms) == len(S)
    pos = {w: i for i, w in enumerate(forms)}
    mult = all(imgs[pos[rs.reduce(u + v)]] == S.mul(imgs[pos[u]], imgs[pos[v]])
               for u in forms for v in forms)
    gens = all(image(word(g)) == S.gen(g) for g in G)
    return OracleReport(len(forms), bij, mult, gens)


@dataclass
class Kpar:
    semigroup: PartialSemigroup
    algebra: Algebra
    rep: PartialRep

    @property
    def dim(self) -> int:
        return self.algebra.dim


def partial_semigroup(group: Group, field: Field) -> Kpar:
    S = PartialSemigroup(group)
    bad = [k for k, v in S.check().items() if not v]
    if bad:
        raise ConsistencyError(f"pair model fails: {bad}")
    K = S.algebra(field)
    rep = PartialRep(group, K, [field.unit_vector(len(S), S.gen(g)) for g in group])
    return Kpar(S, K, rep)


@dataclass
class KparIso:
    kpar: Kpar
    phi: PhiPi
    psi: AlgebraMorphism          # K_par(G) -> A x G
    psi_phi_identity: bool
    phi_psi_identity: bool
    telescoping_ok: bool

    @property
    def ok(self) -> bool:
        return self.psi_phi_identity and self.phi_psi_identity and self.telescoping_ok and self.phi.bijective


def kpar_iso(group: Group, field: Field) -> KparIso:
    """
    phi: A x G -> K_par(G) from the universal partial representation, and
    psi([g]) = eps_g delta_g, so that psi((E, g)) is the product of the
    psi([e]) psi([e^-1]) over e in E followed by psi([g]).
    """
    kp = partial_semigroup(group, field)
    S, K, G = kp.semigroup, kp.algebra, group
    pp = phi_pi(kp.rep)
    cp = pp.crossed
    R = cp.as_algebra()
    ind = pp.induced
    psi_gen = [cp.delta(g, ind.space.coords(ind.eps[g])) for g in G]
    cols, telescoping = [], True
    for E, g in S.elements:
        x = R.unit
        for e in sorted(E - {0}):
            x = R.mul(x, R.mul(psi_gen[e], psi_gen[G.inv(e)]))
        x = R.mul(x, psi_gen[g])
        # the same element read off directly: eps_E delta_g
        eps_E = ind.space.coords(field.unit_vector(len(S), S.index[(E, 0)]))
        if x != cp.delta(g, eps_E):
            telescoping = False
        cols.append(x)
    psi = AlgebraMorphism(K, R, LinearMap(field, K.dim, cp.dim, cols))
    if not verify_morphism(psi):
        raise ConsistencyError("psi is not multiplicative")
    phi = pp.morphism.map
    ident_cp = LinearMap.identity(field, cp.dim)
    ident_k = LinearMap.identity(field, K.dim)
    return KparIso(kp, pp, psi, psi.map @ phi == ident_cp, phi @ psi.map == ident_k, telescoping)


# -- elementary partial representations --------------------------------------

def subgroup(group: Group, elements: Sequence[int]) -> Group:
    els = sorted(elements)
    pos = {x: i for i, x in enumerate(els)}
    table = tuple(tuple(pos[group.mul(a, b)] for b in els) for a in els)
    return Group(tuple(group.label(x) for x in els), table)


@dataclass
class ElementaryRepData:
    group: Group
    subset: frozenset
    orbit: TranslateOrbit
    H: Group                       # St(A), as its own group
    h_elements: tuple              # indices of H inside G
    gamma: tuple                   # morphisms (i, g): g^-1 in A_i, 0-based i
    groupoid_algebra: Algebra
    tau: AlgebraMorphism
    lam: PartialRep
    pi: PartialRep
    target: Algebra

    @property
    def n(self) -> int:
        return self.orbit.n

    @property
    def representatives(self) -> tuple:
        return self.orbit.representatives

    def target_name(self) -> str:
        return f"M_{self.n}(K)" if self.H.order == 1 else f"M_{self.n}(KH)"

    def matrix_unit(self, i: int, j: int, h: int = 0) -> tuple:
        """e_{i,j}(h) with 1-based i, j and h a G-index in H."""
        k = matrix_unit_index(self.n, i, j, self.h_elements.index(h), self.H.order)
        return self.target.field.unit_vector(self.target.dim, k)


def elementary_rep(group: Group, subset, field: Field) -> ElementaryRepData:
    G = group
    A = frozenset(G.index(x) if isinstance(x, str) else x for x in subset)
    orb = translate_orbit(G, A)
    n = orb.n
    h_els = tuple(sorted(orb.stabilizer))
    H = subgroup(G, h_els)
    M = matrix_algebra(field, n, H if H.order > 1 else None)
    reps = orb.representatives

    gamma = tuple((i, g) for i in range(n) for g in G if G.inv(g) in orb.translates[i])

    def target_of(i, g):
        return orb.position(G.translate(g, orb.translates[i]))

    gpos = {m: k for k, m in enumerate(gamma)}
    d = len(gamma)
    consts = {}
    for p, (i, g) in enumerate(gamma):
        for q, (j, g2) in enumerate(gamma):
            # (A_i, g) o (A_j, g') exists iff g' A_j = A_i, and is (A_j, g g')
            if target_of(j, g2) == i:
                v = [0] * d
                v[gpos[(j, G.mul(g, g2))]] = 1
                consts[(p, q)] = v
    unit = [1 if g == 0 else 0 for (_, g) in gamma]
    names = [f"(A{i + 1},{G.label(g)})" for i, g in gamma]
    KG = Algebra(field, d, consts, names, unit=unit)

    cols = []
    for i, g in gamma:
        j = target_of(i, g)
        h = G.mul(G.inv(reps[j]), g, reps[i])
        cols.append(field.unit_vector(M.dim, matrix_unit_index(n, j + 1, i + 1, h_els.index(h), H.order)))
    tau = AlgebraMorphism(KG, M, LinearMap(field, d, M.dim, cols))
    v = verify_isomorphism(tau)
    if not v:
        raise ConsistencyError(f"tau is not an isomorphism: {v.witness}")

    lam_images = []
    for g in G:
        v = [0] * d
        for i in range(n):
            if G.inv(g) in orb.translates[i]:
                v[gpos[(i, g)]] = 1
        lam_images.append(v)
    lam = PartialRep(G, KG, lam_images)
    pi = PartialRep(G, M, [tau(x) for x in lam.images])
    for rep, name in ((lam, "lambda"), (pi, "pi")):
        v = verify_partial_rep(rep)
        if not v:
            raise ConsistencyError(f"{name} is not a partial representation: {v.witness}")
    erd = ElementaryRepData(G, A, orb, H, h_els, gamma, KG, tau, lam, pi, M)
    eps = epsilon_family(pi).eps
    for g in G:
        want = [field.zero] * M.dim
        for i in range(n):
            if g in orb.translates[i]:
                want = [a + b for a, b in zip(want, erd.matrix_unit(i + 1, i + 1))]
        if tuple(want) != eps[g]:
            raise ConsistencyError(f"eps_{G.label(g)} is not the sum of the e_ii over A_i containing it")
    return erd


def _diag_names(erd: ElementaryRepData) -> list[str]:
    return [f"e{i + 1}" for i in range(erd.n)]


def diagonal_expectation(erd: ElementaryRepData) -> LinearMap:
    """(x_ij) -> (tr x_11, ..., tr x_nn), tr reading the coefficient of 1 in KH."""
    M, n, F = erd.target, erd.n, erd.target.field
    cols = []
    for k in range(M.dim):
        ij, h = divmod(k, erd.H.order)
        i, j = divmod(ij, n)
        cols.append(M.field.unit_vector(M.dim, k) if i == j and h == 0 else F.zeros(M.dim))
    return LinearMap(F, M.dim, M.dim, cols)


@dataclass
class IsoBis:
    erd: ElementaryRepData
    phi: PhiPi
    surjective: bool
    expectation: ExpectationVerdict

    @property
    def iso(self) -> bool:
        return self.surjective and self.expectation.applicable and bool(self.expectation.injective) \
            and self.phi.bijective


def iso_bis(erd: ElementaryRepData) -> IsoBis:
    """phi_pi: K^n x G -> M_n(KH), onto by hitting every e_ij(h), one-to-one by the expectation criterion."""
    G = erd.group
    pp = phi_pi(erd.pi, _diag_names(erd))
    ind, cp = pp.induced, pp.crossed
    reps = erd.representatives
    surj = True
    for i in range(1, erd.n + 1):
        eii = ind.space.coords(erd.matrix_unit(i, i))
        for j in range(1, erd.n + 1):
            for h in erd.h_elements:
                g = G.mul(reps[i - 1], h, G.inv(reps[j - 1]))
                if eii not in ind.action.domains[g].space:
                    surj = False
                    continue
                if pp.morphism(cp.delta(g, eii)) != erd.matrix_unit(i, j, h):
                    surj = False
    ev = expectation_injectivity(pp.morphism, diagonal_expectation(erd))
    return IsoBis(erd, pp, surj, ev)


def transitivity_witness(erd: ElementaryRepData, i: int, j: int, induced: InducedAction | None = None) -> str:
    """The first g (group order) with alpha_g(e_ii) = e_jj, i and j 1-based."""
    ind = induced or induced_action(erd.pi, _diag_names(erd))
    pa = ind.action
    G = erd.group
    ei = ind.space.coords(erd.matrix_unit(i, i))
    ej = ind.space.coords(erd.matrix_unit(j, j))
    for g in G:
        if ei in pa.domains[G.inv(g)].space and ej in pa.domains[g].space and pa.alpha(g, ei) == ej:
            return G.label(g)
    raise ConsistencyError(f"no g moves e{i}{i} to e{j}{j}")


@dataclass
class Grading:
    degrees: dict[str, str]
    homogeneous_images: bool
    multiplicative: bool

    @property
    def ok(self) -> bool:
        return self.homogeneous_images and self.multiplicative


def elementary_grading(erd: ElementaryRepData, iso: IsoBis | None = None) -> Grading:
    """
    deg e_ij(h) = g_i h g_j^-1 for the representatives g_i A = A_i; with
    g'_i = g_i^-1 (so A is the union of the H g'_i) this is g'_i^-1 h g'_j.
    """
    G, M, n = erd.group, erd.target, erd.n
    reps = erd.representatives
    hc = erd.H.order
    deg = []
    for k in range(M.dim):
        ij, hk = divmod(k, hc)
        i, j = divmod(ij, n)
        deg.append(G.mul(reps[i], erd.h_elements[hk], G.inv(reps[j])))
    iso = iso or iso_bis(erd)
    cp, f = iso.phi.crossed, iso.phi.morphism
    homog = True
    for k, (g, _) in enumerate(cp.index_pairs):
        y = f.map.columns[k]
        if any(deg[c] != g for c, x in enumerate(y) if x):
            homog = False
    mult = True
    for a in range(M.dim):
        for b in range(M.dim):
            prod = M.structure_constants(a, b)
            if any(prod) and any(deg[c] != G.mul(deg[a], deg[b]) for c, x in enumerate(prod) if x):
                mult = False
    return Grading({M.names[k]: G.label(deg[k]) for k in range(M.dim)}, homog, mult)


# -- from partial actions on K^n back to elementary representations ----------

@dataclass
class Correspondence:
    action: PartialAction
    a_sets: tuple                  # A_i(alpha) for each coordinate i
    erd: ElementaryRepData         # pi' built from A_1(alpha)
    coordinate_map: AlgebraMorphism  # diag of M_n(KH) -> base, e_kk -> e_sigma(k)
    f_s: dict                      # S -> f_S for every S containing 1
    support_ok: bool
    translate_ok: bool
    f_ai_ok: bool
    same_action: bool              # alpha^{pi'} = alpha after relabelling coordinates
    rep_equivalence: AlgebraMorphism  # base x G -> M_n(KH), pi_alpha(g) -> pi'(g)
    reps_equivalent: bool

    @property
    def ok(self) -> bool:
        return all((self.support_ok, self.translate_ok, self.f_ai_ok, self.same_action, self.reps_equivalent))


def _is_orthogonal_idempotent_basis(A: Algebra) -> bool:
    for i, x in enumerate(A.basis()):
        for j, y in enumerate(A.basis()):
            if A.mul(x, y) != (x if i == j else A.zero):
                return False
    return True


def action_to_elementary(pa: PartialAction) -> Correspondence:
    """
    For a partial action on K^n (basis of orthogonal idempotents) whose set
    A_1(alpha) has stabilizer H of index n, build the elementary
    representation of A_1(alpha) and check that it induces alpha back.
    """
    pa.require_valid()
    A, G = pa.base, pa.group
    F = A.field
    if not _is_orthogonal_idempotent_basis(A):
        raise RepError("the base must be K^n with its idempotent basis")
    fam = unit_family(pa)
    if not fam.ok:
        raise RepError("every D_g needs a unit")
    units = fam.units
    n = A.dim
    a_sets = tuple(frozenset(g for g in G if units[g][i]) for i in range(n))
    orb = translate_orbit(G, a_sets[0])
    if orb.n != n:
        raise RepError(f"A_1 has {orb.n} translates under its stabilizer, expected {n}")
    one = A.unit

    def f_of(S):
        x = one
        for g in G:
            x = A.mul(x, units[g] if g in S else tuple(a - b for a, b in zip(one, units[g])))
        return x

    subsets = [frozenset({0, *c}) for r in range(G.order) for c in itertools.combinations(range(1, G.order), r)]
    f_s = {S: f_of(S) for S in subsets}
    support = all(bool(any(f_s[S])) == (S in a_sets) for S in subsets)
    f_ai = all(f_s[a_sets[i]] == A.e(i) for i in range(n))
    translate = True
    for S in subsets:
        for g in G:
            if G.inv(g) in S:
                gS = G.translate(g, S)
                target = f_s[gS] if gS in f_s else f_of(gS)
                if f_s[S] not in pa.domains[G.inv(g)].space or pa.alpha(g, f_s[S]) != target:
                    translate = False

    erd = elementary_rep(G, a_sets[0], F)
    ind = induced_action(erd.pi, _diag_names(erd))
    # translate k of the orbit is A_sigma(k) among the coordinates
    sigma = [a_sets.index(orb.translates[k]) for k in range(n)]
    cols = [F.unit_vector(n, sigma[k]) for k in range(n)]
    phi = AlgebraMorphism(ind.base, A, LinearMap(F, n, n, cols))
    same = bool(verify_equivalence(ind.action, pa, phi))

    # pi_alpha and pi' agree through  a delta_g -> phi^-1(a) pi'(g)
    pi_a = pi_alpha(pa)
    cp = pi_a.crossed
    inv = phi.map.inverse()
    M = erd.target
    ecols = []
    for g, i in cp.index_pairs:
        a = pa.domains[g].space.basis[i]
        ecols.append(M.mul(ind.lift(inv(a)), erd.pi(g)))
    Phi = AlgebraMorphism(pi_a.target, M, LinearMap(F, cp.dim, M.dim, ecols))
    eqv = bool(verify_isomorphism(Phi)) and all(Phi(pi_a(g)) == erd.pi(g) for g in G)
    return Correspondence(pa, a_sets, erd, phi, f_s, support, translate, f_ai, same, Phi, eqv)
