"""
The skew group ring A x_alpha G of a partial action: formal sums of a_g delta_g
with a_g in D_g and

    (a delta_g)(b delta_h) = alpha_g(alpha_{g^-1}(a) b) delta_gh.

Its basis is (g, i) for the i-th echelon basis vector of D_g, g in group
order; labels are "(g,i)" with i counted from 1. Nothing here assumes the
product is associative.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .algebra import Algebra, AlgebraError, AlgebraMorphism, Magma, Verdict, verify_morphism
from .exactfield import LinearMap
from .paction import ActionError, PartialAction, condition_x_check


class CrossedProduct(Magma):
    def __init__(self, pa: PartialAction):
        pa.require_valid()
        G, A = pa.group, pa.base
        F = A.field
        self.action = pa
        self.offsets = []
        labels, index = [], []
        for g in G:
            self.offsets.append(len(labels))
            for i in range(pa.domains[g].dim):
                labels.append(f"({G.label(g)},{i + 1})")
                index.append((g, i))
        self.index_pairs = tuple(index)
        n = len(labels)
        consts = {}
        for p, (g, i) in enumerate(index):
            a = pa.domains[g].space.basis[i]
            pre = pa.alpha(G.inv(g), a)
            for q, (h, j) in enumerate(index):
                b = pa.domains[h].space.basis[j]
                prod = A.mul(pre, b)
                if not any(prod):
                    continue
                gh = G.mul(g, h)
                c = pa.domains[gh].space.coords(pa.alpha(g, prod))
                v = [F.zero] * n
                v[self.offsets[gh]: self.offsets[gh] + len(c)] = c
                consts[(p, q)] = v
        super().__init__(F, n, consts, labels)
        self._status: Verdict | None = None

    # -- elements ------------------------------------------------------------

    def delta(self, g, a: Sequence) -> tuple:
        """a delta_g for an ambient vector a in D_g."""
        pa = self.action
        g = pa.group.index(g) if isinstance(g, str) else g
        c = pa.domains[g].space.coords(tuple(a))
        v = [self.field.zero] * self.dim
        v[self.offsets[g]: self.offsets[g] + len(c)] = c
        return tuple(v)

    def combination(self, terms: Iterable[tuple]) -> tuple:
        """Sum of a delta_g over (g, a) pairs."""
        out = [self.field.zero] * self.dim
        for g, a in terms:
            for k, c in enumerate(self.delta(g, a)):
                out[k] += c
        return tuple(out)

    def component(self, x: Sequence, g) -> tuple:
        """The coefficient a_g of delta_g in x, as an ambient vector of the base."""
        pa = self.action
        g = pa.group.index(g) if isinstance(g, str) else g
        D = pa.domains[g]
        return D.space.vector(x[self.offsets[g]: self.offsets[g] + D.dim])

    def describe(self, x: Sequence) -> str:
        pa = self.action
        terms = []
        for g in pa.group:
            a = self.component(x, g)
            if any(a):
                s = pa.base.format(a)
                terms.append(f"({s})d_{pa.group.label(g)}" if " " in s else f"{s}d_{pa.group.label(g)}")
        return " + ".join(terms) if terms else "0"

    # -- associativity -------------------------------------------------------

    def is_associative(self) -> Verdict:
        if self._status is None:
            self._status = Magma.is_associative(self)
        return self._status

    def as_algebra(self) -> Algebra:
        """The same structure constants as a checked (associative) Algebra."""
        v = self.is_associative()
        if not v:
            raise AlgebraError(f"crossed product is not associative at {v.witness}", witness=v.witness)
        unit = None
        if self.action.base.is_unital:
            unit = self.delta(0, self.action.base.unit)
        consts = [[self.structure_constants(i, j) for j in range(self.dim)] for i in range(self.dim)]
        return Algebra(self.field, self.dim, consts, self.names, unit=unit, check=False)


def build_crossed(pa: PartialAction) -> CrossedProduct:
    return CrossedProduct(pa)


def is_associative(cp: CrossedProduct) -> Verdict:
    return cp.is_associative()


def associativity_via_condition_x(pa: PartialAction) -> Verdict:
    """Condition (X) for every group element; the witness is (g, (a, b, c))."""
    pa.require_valid()
    for g in pa.group:
        v = condition_x_check(pa.slice(g))
        if not v:
            return Verdict(False, (pa.group.label(g), v.witness), v.detail)
    return Verdict(True)


def embed_base(cp: CrossedProduct) -> AlgebraMorphism:
    """a -> a delta_1, checked injective and multiplicative."""
    A = cp.action.base
    f = AlgebraMorphism(A, cp, LinearMap(A.field, A.dim, cp.dim, [cp.delta(0, b) for b in A.basis()]))
    v = verify_morphism(f)
    if not v:
        raise ActionError(f"a -> a delta_1 is not multiplicative at {v.witness}")
    if not f.map.is_injective():
        raise ActionError("a -> a delta_1 is not injective")
    return f
