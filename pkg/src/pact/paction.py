"""
Partial actions of finite groups on algebras.

A partial action stores, for every group element g, an ideal D_g of the
base algebra and a linear map alpha_g from D_{g^-1} to D_g. Maps are kept
in the echelon coordinates of the two ideals; ``alpha(g, x)`` works on
ambient vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .algebra import (
    Algebra,
    AlgebraError,
    AlgebraMorphism,
    Ideal,
    Verdict,
    subalgebra_generated,
    unit_of_ideal,
    upper_triangular,
    verify_isomorphism,
)
from .exactfield import DimensionError, Field, LinearMap, Subspace
from .groups import Group


class ActionError(AlgebraError):
    pass


def _key(group: Group, g) -> int:
    return group.index(g) if isinstance(g, str) else g


class PartialAction:
    def __init__(self, group: Group, base: Algebra, domains: Sequence[Ideal],
                 maps: Sequence[LinearMap]):
        if len(domains) != group.order or len(maps) != group.order:
            raise DimensionError("need one domain and one map per group element")
        for g in group:
            D = domains[g]
            if D.parent is not base:
                raise ActionError(f"domain of {group.label(g)} is not an ideal of the base algebra")
            m = maps[g]
            src = domains[group.inv(g)]
            if (m.domain_dim, m.codomain_dim) != (src.dim, D.dim):
                raise DimensionError(
                    f"alpha_{group.label(g)} should map dimension {src.dim} to {D.dim}")
        self.group = group
        self.base = base
        self.domains = tuple(domains)
        self.maps = tuple(maps)
        self._report = None

    @classmethod
    def from_ambient(cls, group: Group, base: Algebra, domains: Mapping, maps: Mapping) -> "PartialAction":
        """
        Domains and maps keyed by element (index or label). A missing element
        gets the zero ideal; the identity defaults to the whole algebra with
        the identity map. A map may be a LinearMap on the base algebra or a
        callable on ambient vectors; it is evaluated on the basis of
        D_{g^-1} and its images must land in D_g.
        """
        F = base.field
        doms = [Ideal.zero(base)] * group.order
        doms[0] = Ideal.whole(base)
        for g, D in domains.items():
            g = _key(group, g)
            doms[g] = D if isinstance(D, Ideal) else Ideal(base, D)
        fns: dict[int, Callable] = {0: lambda x: tuple(x)}
        for g, f in maps.items():
            fns[_key(group, g)] = f
        out = []
        for g in group:
            src, dst = doms[group.inv(g)], doms[g]
            f = fns.get(g)
            if f is None:
                if src.dim or dst.dim:
                    raise ActionError(f"no map given for {group.label(g)}")
                out.append(LinearMap.zero(F, 0, 0))
                continue
            cols = []
            for b in src.space.basis:
                y = tuple(f(b))
                if y not in dst.space:
                    raise ActionError(
                        f"alpha_{group.label(g)}({base.format(b)}) = {base.format(y)} is outside D_{group.label(g)}")
                cols.append(dst.space.coords(y))
            out.append(LinearMap(F, src.dim, dst.dim, cols))
        return cls(group, base, doms, out)

    def domain(self, g) -> Ideal:
        return self.domains[_key(self.group, g)]

    def alpha(self, g, x) -> tuple:
        g = _key(self.group, g)
        src = self.domains[self.group.inv(g)].space
        return self.domains[g].space.vector(self.maps[g](src.coords(tuple(x))))

    def morphism(self, g) -> AlgebraMorphism:
        g = _key(self.group, g)
        return AlgebraMorphism(self.domains[self.group.inv(g)].algebra, self.domains[g].algebra,
                               self.maps[g])

    def slice(self, g) -> "LocalActionSlice":
        g = _key(self.group, g)
        return LocalActionSlice(self.base, self.domains[self.group.inv(g)], self.domains[g],
                                self.maps[g])

    @property
    def field(self) -> Field:
        return self.base.field

    def report(self) -> "ActionReport":
        if self._report is None:
            self._report = verify_partial_action(self)
        return self._report

    def require_valid(self) -> None:
        r = self.report()
        if not r.ok:
            raise ActionError(f"not a partial action: {r.violations[0]}", witness=r.violations[0])

    def __repr__(self):
        dims = {self.group.label(g): self.domains[g].dim for g in self.group}
        return f"PartialAction(group order {self.group.order}, base dim {self.base.dim}, domain dims {dims})"


@dataclass(frozen=True)
class Violation:
    condition: str
    g: str
    h: str | None = None
    x: str | None = None

    def __str__(self):
        parts = [f"condition ({self.condition}) at g={self.g}"]
        if self.h is not None:
            parts.append(f"h={self.h}")
        if self.x is not None:
            parts.append(f"x={self.x}")
        return ", ".join(parts)


@dataclass
class ActionReport:
    violations: list[Violation] = field(default_factory=list)
    morphisms_ok: bool = True
    original_ok: bool = True   # (i), (ii), (iii)
    strong_ok: bool = True     # (i), (ii'), (iii')

    @property
    def ok(self) -> bool:
        return self.morphisms_ok and self.original_ok and self.strong_ok

    @property
    def equivalence_consistent(self) -> bool:
        return self.original_ok == self.strong_ok

    def __bool__(self):
        return self.ok


def _first_outside(A: Algebra, S: Subspace, T: Subspace) -> str | None:
    for b in S.basis:
        if b not in T:
            return A.format(b)
    return None


def verify_partial_action(pa: PartialAction) -> ActionReport:
    """
    Check every axiom on every pair (g, h), in both the original form
    (i)-(iii) and the strengthened form (i), (ii'), (iii'). For bijective
    alpha_g the two forms agree; disagreement is an internal error.
    """
    G, A = pa.group, pa.base
    rep = ActionReport()
    lab = G.label

    def fail(cond, g, h=None, x=None, *, original=False, strong=False, morph=False):
        rep.violations.append(Violation(cond, lab(g), None if h is None else lab(h), x))
        if original:
            rep.original_ok = False
        if strong:
            rep.strong_ok = False
        if morph:
            rep.morphisms_ok = False

    for g in G:
        v = verify_isomorphism(pa.morphism(g))
        if not v:
            fail("morphism", g, x=str(v.witness), morph=True)

    D = [d.space for d in pa.domains]
    if D[0].dim != A.dim:
        fail("i", 0, x=_first_outside(A, Subspace.full(A.field, A.dim), D[0]), original=True, strong=True)
    elif pa.maps[0] != LinearMap.identity(A.field, A.dim):
        k = next(k for k, c in enumerate(pa.maps[0].columns) if c != A.field.unit_vector(A.dim, k))
        fail("i", 0, x=A.names[k], original=True, strong=True)

    for g in G:
        gi = G.inv(g)
        for h in G:
            # (ii'): alpha_g(D_{g^-1} cap D_h) = D_g cap D_gh
            src = D[gi] & D[h]
            image = Subspace(A.field, A.dim, [pa.alpha(g, x) for x in src.basis])
            target = D[g] & D[G.mul(g, h)]
            if image != target:
                x = _first_outside(A, image, target) or _first_outside(A, target, image)
                fail("ii'", g, h, x, strong=True)
            # (iii'): alpha_g alpha_h = alpha_gh on D_{h^-1} cap D_{(gh)^-1}
            hi, ghi = G.inv(h), G.inv(G.mul(g, h))
            for x in (D[hi] & D[ghi]).basis:
                y = _safe_alpha(pa, h, x)
                z = _safe_alpha(pa, g, y)
                if z is None or z != _safe_alpha(pa, G.mul(g, h), x):
                    fail("iii'", g, h, A.format(x), strong=True)
                    break
            # (ii): alpha_h^-1(D_h cap D_{g^-1}) inside D_{(gh)^-1}; (iii) on that set
            pre = _preimage(pa, h, D[h] & D[gi])
            x = _first_outside(A, pre, D[ghi])
            if x is not None:
                fail("ii", g, h, x, original=True)
            for x in pre.basis:
                z = _safe_alpha(pa, g, pa.alpha(h, x))
                if z is None or z != _safe_alpha(pa, G.mul(g, h), x):
                    fail("iii", g, h, A.format(x), original=True)
                    break

    if rep.morphisms_ok and not rep.equivalence_consistent:
        raise AssertionError("the original and strengthened axioms disagree on a bijective action")
    return rep


def _safe_alpha(pa: PartialAction, g: int, x) -> tuple | None:
    """alpha_g(x), or None when x is outside D_{g^-1}."""
    if x is None or x not in pa.domains[pa.group.inv(g)].space:
        return None
    return pa.alpha(g, x)


def _preimage(pa: PartialAction, h: int, T: Subspace) -> Subspace:
    G, A = pa.group, pa.base
    src, dst = pa.domains[G.inv(h)].space, pa.domains[h].space
    local = Subspace(A.field, dst.dim, [dst.coords(v) for v in T.basis])
    pre = pa.maps[h].preimage(local)
    return Subspace(A.field, A.dim, [src.vector(c) for c in pre.basis])


# -- global actions and restriction -----------------------------------------

class GlobalAction:
    """A group acting on an algebra by automorphisms beta_g (maps on the whole algebra)."""

    def __init__(self, group: Group, algebra: Algebra, maps: Sequence[LinearMap] | Mapping):
        if isinstance(maps, Mapping):
            full = [LinearMap.identity(algebra.field, algebra.dim)] * group.order
            for g, m in maps.items():
                full[_key(group, g)] = m
            maps = full
        if len(maps) != group.order:
            raise DimensionError("need one automorphism per group element")
        for m in maps:
            if (m.domain_dim, m.codomain_dim) != (algebra.dim, algebra.dim):
                raise DimensionError("automorphism has the wrong shape")
        self.group = group
        self.algebra = algebra
        self.maps = tuple(maps)

    @classmethod
    def permuting(cls, group: Group, algebra: Algebra, perms: Mapping) -> "GlobalAction":
        """beta_g permutes basis vectors: perms[g][i] is the index of beta_g(e_i)."""
        F, n = algebra.field, algebra.dim
        maps = {g: LinearMap(F, n, n, [F.unit_vector(n, p[i]) for i in range(n)])
                for g, p in perms.items()}
        return cls(group, algebra, maps)

    def beta(self, g, x) -> tuple:
        return self.maps[_key(self.group, g)](x)

    def verify(self) -> Verdict:
        G, B = self.group, self.algebra
        if self.maps[0] != LinearMap.identity(B.field, B.dim):
            return Verdict(False, ("identity", G.label(0)))
        for g in G:
            v = verify_isomorphism(AlgebraMorphism(B, B, self.maps[g]))
            if not v:
                return Verdict(False, ("automorphism", G.label(g), v.witness))
        for g in G:
            for h in G:
                if self.maps[g] @ self.maps[h] != self.maps[G.mul(g, h)]:
                    return Verdict(False, ("composition", G.label(g), G.label(h)))
        return Verdict(True)

    def as_partial(self) -> PartialAction:
        B = self.algebra
        whole = Ideal.whole(B)
        return PartialAction(self.group, B, [whole] * self.group.order, self.maps)


@dataclass
class Restriction:
    action: PartialAction
    admissible: bool
    inclusion: LinearMap
    ideal: Ideal


def restrict_global(beta: GlobalAction, ideal: Ideal) -> Restriction:
    """
    D_g = A cap beta_g(A) and alpha_g = beta_g on D_{g^-1}, written in the
    echelon coordinates of A. Admissible when the beta_g(A) generate B.
    """
    G, B = beta.group, beta.algebra
    if ideal.parent is not B:
        raise ActionError("the ideal must belong to the acted-on algebra")
    F = B.field
    A = ideal.algebra
    S = ideal.space
    doms, maps = [], []
    translates = [Subspace(F, B.dim, [beta.maps[g](v) for v in S.basis]) for g in G]
    amb = [S & translates[g] for g in G]
    for g in G:
        doms.append(Ideal(A, Subspace(F, A.dim, [S.coords(v) for v in amb[g].basis])))
    for g in G:
        src, dst = doms[G.inv(g)].space, doms[g].space
        cols = []
        for c in src.basis:
            y = beta.maps[g](S.vector(c))
            cols.append(dst.coords(S.coords(y)))
        maps.append(LinearMap(F, src.dim, dst.dim, cols))
    pa = PartialAction(G, A, doms, maps)
    gens = [v for T in translates for v in T.basis]
    admissible = subalgebra_generated(B, gens).dim == B.dim
    return Restriction(pa, admissible, S.inclusion(), ideal)


def verify_equivalence(pa: PartialAction, pb: PartialAction, phi: AlgebraMorphism) -> Verdict:
    """phi(D_g) = D'_g and alpha'_g phi = phi alpha_g for every g."""
    if pa.group != pb.group:
        return Verdict(False, "different groups")
    if not verify_isomorphism(phi):
        return Verdict(False, "phi is not an isomorphism")
    G, F = pa.group, pa.field
    for g in G:
        img = Subspace(F, pb.base.dim, [phi(b) for b in pa.domains[g].space.basis])
        if img != pb.domains[g].space:
            return Verdict(False, ("domain", G.label(g)))
    for g in G:
        for x in pa.domains[G.inv(g)].space.basis:
            if pb.alpha(g, phi(x)) != phi(pa.alpha(g, x)):
                return Verdict(False, ("map", G.label(g), pa.base.format(x)))
    return Verdict(True)


@dataclass
class UnitFamily:
    units: dict[int, tuple | None]
    missing: list[str]
    units_compatible: bool | None
    witness: object = None

    @property
    def ok(self) -> bool:
        return not self.missing and bool(self.units_compatible)

    def __bool__(self):
        return self.ok


def unit_family(pa: PartialAction) -> UnitFamily:
    """
    The units 1_g of the D_g. When all exist, check
    alpha_g(1_{g^-1} 1_h) = 1_g 1_{gh} for all g, h.
    """
    A, G = pa.base, pa.group
    if not A.is_unital:
        raise ActionError("unit families need a unital base algebra")
    units = {g: unit_of_ideal(pa.domains[g]) for g in G}
    missing = [G.label(g) for g in G if units[g] is None]
    if missing:
        return UnitFamily(units, missing, None)
    for g in G:
        for h in G:
            lhs = pa.alpha(g, A.mul(units[G.inv(g)], units[h]))
            rhs = A.mul(units[g], units[G.mul(g, h)])
            if lhs != rhs:
                return UnitFamily(units, [], False, (G.label(g), G.label(h)))
    return UnitFamily(units, [], True)


# -- the local associativity condition ---------------------------------------

class LocalActionSlice:
    """One element's worth of a partial action: alpha: D_minus -> D_plus."""

    def __init__(self, base: Algebra, d_minus: Ideal, d_plus: Ideal, alpha: LinearMap):
        if d_minus.parent is not base or d_plus.parent is not base:
            raise ActionError("slice ideals must belong to the base algebra")
        f = AlgebraMorphism(d_minus.algebra, d_plus.algebra, alpha)
        v = verify_isomorphism(f)
        if not v:
            raise ActionError(f"alpha is not an isomorphism: {v.witness}", witness=v.witness)
        self.base = base
        self.d_minus = d_minus
        self.d_plus = d_plus
        self.map = alpha
        self._inv = alpha.inverse()

    @classmethod
    def from_ambient(cls, base: Algebra, d_minus: Ideal, d_plus: Ideal, f: Callable) -> "LocalActionSlice":
        cols = [d_plus.space.coords(tuple(f(b))) for b in d_minus.space.basis]
        return cls(base, d_minus, d_plus, LinearMap(base.field, d_minus.dim, d_plus.dim, cols))

    def alpha(self, x) -> tuple:
        return self.d_plus.space.vector(self.map(self.d_minus.space.coords(x)))

    def alpha_inv(self, y) -> tuple:
        return self.d_minus.space.vector(self._inv(self.d_plus.space.coords(y)))


def condition_x_check(s: LocalActionSlice) -> Verdict:
    """
    alpha(alpha^-1(ab) c) = a alpha(alpha^-1(b) c) for basis a, c of the base
    and basis b of D_plus. The witness is (a, b, c) by name, first in
    lexicographic order; the detail holds both sides.
    """
    A = s.base
    basis = A.basis()
    for i, a in enumerate(basis):
        for b in s.d_plus.space.basis:
            ab = A.mul(a, b)
            pre_ab = s.alpha_inv(ab)
            pre_b = s.alpha_inv(b)
            for k, c in enumerate(basis):
                lhs = s.alpha(A.mul(pre_ab, c))
                rhs = A.mul(a, s.alpha(A.mul(pre_b, c)))
                if lhs != rhs:
                    return Verdict(False, (A.names[i], A.format(b), A.names[k]),
                                   detail={"lhs": A.format(lhs), "rhs": A.format(rhs)})
    return Verdict(True)


def triangular_slice(field: Field, n: int) -> LocalActionSlice:
    """
    T(n, K) with D_minus = span{e_{1,n-1}, e_{1,n}}, D_plus = span{e_{1,n}, e_{2,n}}
    and alpha(x e_{1,n-1} + y e_{1,n}) = y e_{1,n} + x e_{2,n}.
    """
    if n < 3:
        raise ValueError("the triangular slice needs n >= 3")
    T = upper_triangular(field, n)
    name = (lambda i, j: f"e{i}{j}") if n < 10 else (lambda i, j: f"e{i},{j}")
    e = lambda i, j: T.e(name(i, j))
    d_minus = Ideal.span(T, [e(1, n - 1), e(1, n)])
    d_plus = Ideal.span(T, [e(1, n), e(2, n)])
    xi, yi = T.index(name(1, n - 1)), T.index(name(1, n))

    def f(v):
        x, y = v[xi], v[yi]
        return tuple(y * p + x * q for p, q in zip(e(1, n), e(2, n)))

    return LocalActionSlice.from_ambient(T, d_minus, d_plus, f)
