"""
Multiplier algebras M(I): pairs (L, R) of linear maps of I with

    L(ab) = L(a) b,    R(ab) = a R(b),    R(a) b = a L(b),

multiplied by (L, R)(L', R') = (L o L', R' o R).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .algebra import (
    Algebra,
    AlgebraError,
    AlgebraMorphism,
    Ideal,
    Verdict,
    annihilators,
    verify_isomorphism,
    verify_morphism,
)
from .exactfield import LinearMap, Subspace, nullspace


@dataclass(frozen=True)
class Multiplier:
    L: LinearMap
    R: LinearMap

    def __mul__(self, other: "Multiplier") -> "Multiplier":
        return Multiplier(self.L @ other.L, other.R @ self.R)

    def __add__(self, other: "Multiplier") -> "Multiplier":
        return Multiplier(self.L + other.L, self.R + other.R)

    def flatten(self) -> tuple:
        """Unknown vector layout: L[c][a] at c*d + a, then R likewise."""
        d = self.L.domain_dim
        lrows, rrows = self.L.rows(), self.R.rows()
        return tuple(lrows[c][a] for c in range(d) for a in range(d)) + \
            tuple(rrows[c][a] for c in range(d) for a in range(d))


def multiplier_violation(I: Algebra, m: Multiplier):
    """First failing condition among (i)-(iii) on basis pairs, or None."""
    L, R = m.L, m.R
    for a in I.basis():
        for b in I.basis():
            ab = I.mul(a, b)
            if L(ab) != I.mul(L(a), b):
                return ("i", I.format(a), I.format(b))
            if R(ab) != I.mul(a, R(b)):
                return ("ii", I.format(a), I.format(b))
            if I.mul(R(a), b) != I.mul(a, L(b)):
                return ("iii", I.format(a), I.format(b))
    return None


def _unflatten(I: Algebra, v) -> Multiplier:
    d = I.dim
    F = I.field
    L = LinearMap(F, d, d, [[v[c * d + a] for c in range(d)] for a in range(d)])
    R = LinearMap(F, d, d, [[v[d * d + c * d + a] for c in range(d)] for a in range(d)])
    return Multiplier(L, R)


def multiplier_equations(I: Algebra) -> list[list]:
    """Rows of the homogeneous system (i)-(iii) in the 2 d^2 unknowns."""
    d = I.dim
    F = I.field
    c = [[I.structure_constants(a, b) for b in range(d)] for a in range(d)]
    Lx = lambda r, s: r * d + s
    Rx = lambda r, s: d * d + r * d + s
    rows = []
    for a in range(d):
        for b in range(d):
            for out in range(d):
                # (i)  sum_k c_ab^k L[out][k] - sum_m L[m][a] c_mb^out
                row = [F.zero] * (2 * d * d)
                for k in range(d):
                    if c[a][b][k]:
                        row[Lx(out, k)] += c[a][b][k]
                for m in range(d):
                    if c[m][b][out]:
                        row[Lx(m, a)] -= c[m][b][out]
                rows.append(row)
                # (ii) sum_k c_ab^k R[out][k] - sum_m R[m][b] c_am^out
                row = [F.zero] * (2 * d * d)
                for k in range(d):
                    if c[a][b][k]:
                        row[Rx(out, k)] += c[a][b][k]
                for m in range(d):
                    if c[a][m][out]:
                        row[Rx(m, b)] -= c[a][m][out]
                rows.append(row)
                # (iii) sum_m R[m][a] c_mb^out - sum_m L[m][b] c_am^out
                row = [F.zero] * (2 * d * d)
                for m in range(d):
                    if c[m][b][out]:
                        row[Rx(m, a)] += c[m][b][out]
                    if c[a][m][out]:
                        row[Lx(m, b)] -= c[a][m][out]
                rows.append(row)
    return [r for r in rows if any(r)]


class MultiplierAlgebra:
    """M(I) with a basis of multipliers and its structure as an Algebra."""

    def __init__(self, I: Algebra):
        self.ideal = I
        d = I.dim
        n = 2 * d * d
        F = I.field
        rows = multiplier_equations(I)
        if rows:
            sols = nullspace(F, rows, n)
        else:
            sols = [F.unit_vector(n, k) for k in range(n)]
        self.space = Subspace(F, n, sols)
        self.basis = [_unflatten(I, v) for v in self.space.basis]
        for m in self.basis:
            assert multiplier_violation(I, m) is None
        k = len(self.basis)
        consts = [[self.coords(x * y) for y in self.basis] for x in self.basis]
        ident = Multiplier(LinearMap.identity(F, d), LinearMap.identity(F, d))
        names = [f"m{i + 1}" for i in range(k)]
        # the basis-triple associativity check runs here
        self.algebra = Algebra(F, k, consts, names, unit=self.coords(ident))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, m: Multiplier) -> tuple:
        return self.space.coords(m.flatten())

    def multiplier(self, coords) -> Multiplier:
        return _unflatten(self.ideal, self.space.vector(coords))

    def __contains__(self, m: Multiplier) -> bool:
        return m.flatten() in self.space


def _algebra_of(I) -> Algebra:
    return I.algebra if isinstance(I, Ideal) else I


@functools.lru_cache(maxsize=256)
def _cached_multiplier_algebra(I: Algebra) -> MultiplierAlgebra:
    return MultiplierAlgebra(I)


def multiplier_algebra(I) -> MultiplierAlgebra:
    return _cached_multiplier_algebra(_algebra_of(I))


def left_right(I: Algebra, x) -> Multiplier:
    return Multiplier(I.left_mult(x), I.right_mult(x))


@dataclass
class Embedding:
    morphism: AlgebraMorphism
    kernel: Subspace
    image: Subspace

    @property
    def injective(self) -> bool:
        return self.kernel.dim == 0

    @property
    def bijective(self) -> bool:
        return self.injective and self.image.dim == self.morphism.target.dim


def phi_embedding(I) -> Embedding:
    """x -> (L_x, R_x), checked multiplicative, with kernel = Ann(I) and image an ideal of M(I)."""
    B = _algebra_of(I)
    M = multiplier_algebra(B)
    cols = [M.coords(left_right(B, b)) for b in B.basis()]
    f = AlgebraMorphism(B, M.algebra, LinearMap(B.field, B.dim, M.dim, cols))
    v = verify_morphism(f)
    if not v:
        raise AlgebraError(f"phi is not multiplicative at {v.witness}")
    kernel = f.map.kernel()
    assert kernel == annihilators(B).both, "kernel of phi differs from the two-sided annihilator"
    image = f.map.image()
    Ideal(M.algebra, image)  # raises unless phi(I) is an ideal of M(I)
    return Embedding(f, kernel, image)


def psi_from_ambient(A: Algebra, I: Ideal) -> Embedding:
    """a -> (L_a, R_a) restricted to I, from the ambient algebra into M(I)."""
    B = I.algebra
    M = multiplier_algebra(B)
    S = I.space
    cols = []
    for a in A.basis():
        L = LinearMap(A.field, B.dim, B.dim, [S.coords(A.mul(a, b)) for b in S.basis])
        R = LinearMap(A.field, B.dim, B.dim, [S.coords(A.mul(b, a)) for b in S.basis])
        cols.append(M.coords(Multiplier(L, R)))
    f = AlgebraMorphism(A, M.algebra, LinearMap(A.field, A.dim, M.dim, cols))
    v = verify_morphism(f)
    if not v:
        raise AlgebraError(f"psi is not multiplicative at {v.witness}")
    return Embedding(f, f.map.kernel(), f.map.image())


def is_lr_associative(I) -> Verdict:
    """
    R' o L = L o R' for every pair of multipliers. The condition is bilinear
    so basis pairs suffice; the witness names the first failing pair of
    basis multipliers (m_i, m_j) and a basis element of I where they differ.
    """
    B = _algebra_of(I)
    M = multiplier_algebra(B)
    for i, m in enumerate(M.basis):
        for j, m2 in enumerate(M.basis):
            lhs = m2.R @ m.L
            rhs = m.L @ m2.R
            if lhs != rhs:
                k = next(k for k in range(B.dim) if lhs.columns[k] != rhs.columns[k])
                return Verdict(False, (M.algebra.names[i], M.algebra.names[j], B.names[k]),
                               detail={"R'L": B.format(lhs.columns[k]), "LR'": B.format(rhs.columns[k])})
    return Verdict(True)


def transport_multiplier(pi: AlgebraMorphism, m: Multiplier) -> Multiplier:
    """(pi L pi^-1, pi R pi^-1), checked to be a multiplier of the target."""
    if not verify_isomorphism(pi):
        raise AlgebraError("transport needs an algebra isomorphism")
    inv = pi.map.inverse()
    out = Multiplier(pi.map @ m.L @ inv, pi.map @ m.R @ inv)
    w = multiplier_violation(pi.target, out)
    if w is not None:
        raise AlgebraError(f"transported pair violates condition {w}")
    return out


def transport_isomorphism(pi: AlgebraMorphism) -> AlgebraMorphism:
    """The induced M(I) -> M(J), checked to be an algebra isomorphism."""
    MI, MJ = multiplier_algebra(pi.source), multiplier_algebra(pi.target)
    cols = [MJ.coords(transport_multiplier(pi, m)) for m in MI.basis]
    f = AlgebraMorphism(MI.algebra, MJ.algebra, LinearMap(pi.map.field, MI.dim, MJ.dim, cols))
    v = verify_isomorphism(f)
    if not v:
        raise AlgebraError(f"transport is not an isomorphism: {v.witness}")
    return f
