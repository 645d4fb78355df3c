"""
Finite-dimensional algebras given by structure constants.

``Magma`` is the bare bilinear product (used for crossed products, which
need not be associative); ``Algebra`` adds the associativity check and the
unit. Basis orders of the presets:

* ``matrix_algebra(F, n, H)``: e_{i,j}(h) for i, j = 1..n row-major, h in
  the group order of H innermost.
* ``upper_triangular(F, n)``: e_{i,j}, i <= j, row-major.
* ``product_field(F, n)``: e1, ..., en with e_i e_j = delta_ij e_i.
* ``group_algebra(F, G)``: the group elements in group order.
* ``function_algebra(A, G)``: one block of A's basis per group element.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .exactfield import (
    DimensionError,
    Field,
    LinearMap,
    Subspace,
    Vector,
    enumerate_subspaces,
    lincomb,
    nullspace,
    solve_linear,
)
from .groups import Group


class AlgebraError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NonAssociativeError(AlgebraError):
    pass


class NotAnIdealError(AlgebraError):
    pass


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer together with the first counterexample found."""

    ok: bool
    witness: object = None
    detail: object = None

    def __bool__(self):
        return self.ok


class Magma:
    """A vector space with a bilinear product, no laws assumed."""

    def __init__(self, field: Field, dim: int, constants, names: Sequence[str] | None = None):
        self.field = field
        self.dim = dim
        if names is None:
            names = [f"e{i + 1}" for i in range(dim)]
        names = tuple(names)
        if len(names) != dim or len(set(names)) != dim:
            raise DimensionError("need one distinct name per basis vector")
        self.names = names
        self._index = {s: i for i, s in enumerate(names)}
        table = []
        for i in range(dim):
            row = []
            for j in range(dim):
                v = constants[i][j] if not isinstance(constants, Mapping) else constants.get((i, j))
                if v is None:
                    row.append(())
                    continue
                if len(v) != dim:
                    raise DimensionError(f"product e{i + 1}*e{j + 1} has {len(v)} coordinates, expected {dim}")
                row.append(tuple((k, field(c)) for k, c in enumerate(v) if c))
            table.append(tuple(row))
        self._t = tuple(table)

    # -- elements ------------------------------------------------------------

    @property
    def zero(self) -> Vector:
        return self.field.zeros(self.dim)

    def e(self, i: int | str) -> Vector:
        if isinstance(i, str):
            i = self.index(i)
        return self.field.unit_vector(self.dim, i)

    def basis(self) -> list[Vector]:
        return [self.e(i) for i in range(self.dim)]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no basis element named {name!r}") from None

    def element(self, coeffs: Mapping[str, object]) -> Vector:
        out = [self.field.zero] * self.dim
        for name, c in coeffs.items():
            out[self.index(name)] += self.field(c)
        return tuple(out)

    def format(self, v: Sequence) -> str:
        terms = []
        for name, c in zip(self.names, v):
            if not c:
                continue
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append("-" + name)
            else:
                terms.append(f"{c}*{name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    # -- product -------------------------------------------------------------

    def structure_constants(self, i: int, j: int) -> Vector:
        out = [self.field.zero] * self.dim
        for k, c in self._t[i][j]:
            out[k] = c
        return tuple(out)

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        out = [self.field.zero] * self.dim
        ys = [(j, b) for j, b in enumerate(y) if b]
        if not ys:
            return tuple(out)
        t = self._t
        for i, a in enumerate(x):
            if not a:
                continue
            row = t[i]
            for j, b in ys:
                entries = row[j]
                if entries:
                    ab = a * b
                    for k, c in entries:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def product(self, *xs: Sequence) -> Vector:
        """Left-normed product ((x1 x2) x3) ..."""
        out = xs[0]
        for x in xs[1:]:
            out = self.mul(out, x)
        return tuple(out)

    def left_mult(self, x: Sequence) -> LinearMap:
        return LinearMap(self.field, self.dim, self.dim, [self.mul(x, b) for b in self.basis()])

    def right_mult(self, x: Sequence) -> LinearMap:
        return LinearMap(self.field, self.dim, self.dim, [self.mul(b, x) for b in self.basis()])

    def find_associativity_violation(self) -> tuple[int, int, int] | None:
        """First basis triple (i, j, k), lexicographically, with (ij)k != i(jk)."""
        n = self.dim
        t = self._t

        def combine(pairs):
            acc = {}
            for entries, c in pairs:
                for r, d in entries:
                    acc[r] = acc[r] + c * d if r in acc else c * d
            return {r: v for r, v in acc.items() if v}

        for i in range(n):
            for j in range(n):
                ij = t[i][j]
                for k in range(n):
                    lhs = combine((t[m][k], c) for m, c in ij)
                    rhs = combine((t[i][m], c) for m, c in t[j][k])
                    if lhs != rhs:
                        return (i, j, k)
        return None

    def is_associative(self) -> Verdict:
        w = self.find_associativity_violation()
        if w is None:
            return Verdict(True)
        return Verdict(False, tuple(self.names[i] for i in w))

    def same_structure(self, other: "Magma") -> bool:
        return self.field == other.field and self.dim == other.dim and self._t == other._t

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, field={self.field})"


class Algebra(Magma):
    """
    An associative algebra. Associativity is verified on basis triples at
    construction; the unit is verified when given and searched for otherwise.
    """

    def __init__(self, field: Field, dim: int, constants, names: Sequence[str] | None = None,
                 unit: Sequence | None = None, check: bool = True):
        super().__init__(field, dim, constants, names)
        if check:
            w = self.find_associativity_violation()
            if w is not None:
                i, j, k = w
                raise NonAssociativeError(
                    f"({self.names[i]}*{self.names[j]})*{self.names[k]} != "
                    f"{self.names[i]}*({self.names[j]}*{self.names[k]})",
                    witness=(self.names[i], self.names[j], self.names[k]),
                )
        if unit is not None:
            unit = field.vector(unit)
            if len(unit) != dim:
                raise DimensionError("unit has the wrong length")
            for b in self.basis():
                if self.mul(unit, b) != b or self.mul(b, unit) != b:
                    raise AlgebraError(f"given unit does not act as identity on {self.format(b)}",
                                       witness=self.format(b))
            self.unit = unit
        else:
            self.unit = find_unit(self, Subspace.full(field, dim))

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    @classmethod
    def from_magma(cls, m: Magma, **kw) -> "Algebra":
        return cls(m.field, m.dim, [[m.structure_constants(i, j) for j in range(m.dim)]
                                    for i in range(m.dim)], m.names, **kw)


def make_algebra(field: Field, dim: int, structure_constants, unit=None, names=None) -> Algebra:
    return Algebra(field, dim, structure_constants, names=names, unit=unit)


# -- subspaces inside an algebra ---------------------------------------------

def products_span(A: Magma, X: Subspace, Y: Subspace) -> Subspace:
    """span{xy : x in X, y in Y}."""
    return Subspace(A.field, A.dim, [A.mul(x, y) for x in X.basis for y in Y.basis])


def ideal_violation(A: Magma, space: Subspace):
    for b in A.basis():
        for x in space.basis:
            if A.mul(b, x) not in space:
                return ("left", A.format(b), A.format(x))
            if A.mul(x, b) not in space:
                return ("right", A.format(x), A.format(b))
    return None


def is_subalgebra(A: Magma, space: Subspace) -> bool:
    return all(A.mul(x, y) in space for x in space.basis for y in space.basis)


def subalgebra_generated(A: Magma, generators: Iterable[Sequence]) -> Subspace:
    """Smallest subspace containing the generators and closed under products."""
    S = Subspace(A.field, A.dim, list(generators))
    while True:
        T = S + products_span(A, S, S)
        if T == S:
            return S
        S = T


def _names_for(A: Magma, space: Subspace) -> list[str]:
    return [A.format(b) for b in space.basis]


def restrict(A: Algebra, space: Subspace, names: Sequence[str] | None = None) -> Algebra:
    """The subalgebra on ``space`` in the coordinates of its echelon basis."""
    if not is_subalgebra(A, space):
        raise AlgebraError("subspace is not closed under multiplication")
    consts = [[space.coords(A.mul(x, y)) for y in space.basis] for x in space.basis]
    # associativity is inherited from A
    return Algebra(A.field, space.dim, consts, names or _names_for(A, space), check=False)


class Ideal:
    """A two-sided ideal, checked eagerly at construction."""

    def __init__(self, parent: Algebra, space: Subspace):
        if space.ambient_dim != parent.dim or space.field != parent.field:
            raise DimensionError("ideal lives in the wrong ambient space")
        w = ideal_violation(parent, space)
        if w is not None:
            raise NotAnIdealError(f"not an ideal: {w[0]} product {w[1]} * {w[2]} leaves the subspace",
                                  witness=w)
        self.parent = parent
        self.space = space

    @classmethod
    def span(cls, parent: Algebra, vectors: Iterable[Sequence]) -> "Ideal":
        return cls(parent, Subspace(parent.field, parent.dim, list(vectors)))

    @classmethod
    def whole(cls, parent: Algebra) -> "Ideal":
        return cls(parent, Subspace.full(parent.field, parent.dim))

    @classmethod
    def zero(cls, parent: Algebra) -> "Ideal":
        return cls(parent, Subspace.zero(parent.field, parent.dim))

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def field(self) -> Field:
        return self.parent.field

    @functools.cached_property
    def algebra(self) -> Algebra:
        return restrict(self.parent, self.space)

    def as_algebra(self) -> Algebra:
        return self.algebra

    def inclusion(self) -> LinearMap:
        return self.space.inclusion()

    def __contains__(self, v) -> bool:
        return v in self.space

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.parent is other.parent and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"Ideal(dim={self.dim}, basis={[self.parent.format(b) for b in self.space.basis]})"


def ideal_generated(A: Algebra, generators: Iterable[Sequence]) -> Ideal:
    S = Subspace(A.field, A.dim, list(generators))
    full = Subspace.full(A.field, A.dim)
    while True:
        T = S + products_span(A, full, S) + products_span(A, S, full)
        if T == S:
            return Ideal(A, S)
        S = T


def enumerate_ideals(A: Algebra) -> list[Ideal]:
    """Every ideal of an algebra over a finite field, by brute force."""
    return [Ideal(A, S) for S in enumerate_subspaces(A.field, A.dim) if ideal_violation(A, S) is None]


def _as_algebra(I) -> Algebra:
    return I.algebra if isinstance(I, Ideal) else I


# -- annihilators, idempotence, units ----------------------------------------

@dataclass(frozen=True)
class Annihilators:
    """
    ``left`` = {a : aI = 0}, ``right`` = {a : Ia = 0}, both inside I and in
    the coordinates of the input (ambient ones when given an Ideal).
    """

    left: Subspace
    right: Subspace
    both: Subspace

    @property
    def non_degenerate(self) -> bool:
        return self.both.dim == 0

    @property
    def right_non_degenerate(self) -> bool:
        # aI != 0 for every a != 0
        return self.left.dim == 0

    @property
    def left_non_degenerate(self) -> bool:
        return self.right.dim == 0


def annihilators(I) -> Annihilators:
    B = _as_algebra(I)
    F, d = B.field, B.dim
    basis = B.basis()
    # a*b_j = 0 for all j: linear in the coordinates of a
    left_rows = [list(row) for b in basis for row in B.right_mult(b).rows()]
    right_rows = [list(row) for b in basis for row in B.left_mult(b).rows()]
    left = Subspace(F, d, nullspace(F, left_rows, d)) if d else Subspace(F, 0)
    right = Subspace(F, d, nullspace(F, right_rows, d)) if d else Subspace(F, 0)
    both = left & right
    if isinstance(I, Ideal):
        inc = I.inclusion()
        lift = lambda S: Subspace(F, I.parent.dim, [inc(v) for v in S.basis])
        return Annihilators(lift(left), lift(right), lift(both))
    return Annihilators(left, right, both)


def is_idempotent_ideal(I) -> bool:
    B = _as_algebra(I)
    full = Subspace.full(B.field, B.dim)
    return products_span(B, full, full) == full


def find_unit(A: Magma, space: Subspace) -> Vector | None:
    """The e in ``space`` with e*b = b*e = b for all b in ``space``, if any."""
    F = A.field
    k = space.dim
    if k == 0:
        return A.zero
    rows, rhs = [], []
    for b in space.basis:
        lefts = [A.mul(x, b) for x in space.basis]
        rights = [A.mul(b, x) for x in space.basis]
        for c in range(A.dim):
            rows.append([v[c] for v in lefts])
            rhs.append(b[c])
            rows.append([v[c] for v in rights])
            rhs.append(b[c])
    sol = solve_linear(F, rows, rhs)
    if sol is None:
        return None
    return space.vector(sol.particular)


def is_central(A: Magma, x: Sequence) -> bool:
    return all(A.mul(x, b) == A.mul(b, x) for b in A.basis())


def unit_of_ideal(I: Ideal) -> Vector | None:
    """The unit 1_I of the ideal (ambient coordinates), or None."""
    e = find_unit(I.parent, I.space)
    if e is None:
        return None
    A = I.parent
    # a unit of an ideal is automatically a central idempotent of the parent
    assert A.mul(e, e) == e, "unit of ideal is not idempotent"
    assert is_central(A, e), "unit of ideal is not central in the parent"
    return e


def sum_of_unital_ideals_unit(I: Ideal, J: Ideal) -> Vector:
    """1_I + 1_J - 1_I 1_J, checked to be the unit of I + J."""
    if I.parent is not J.parent:
        raise AlgebraError("ideals of different algebras")
    eI, eJ = unit_of_ideal(I), unit_of_ideal(J)
    if eI is None or eJ is None:
        raise AlgebraError("both ideals must be unital")
    A = I.parent
    e = tuple(a + b - c for a, b, c in zip(eI, eJ, A.mul(eI, eJ)))
    S = I.space + J.space
    for b in S.basis:
        assert A.mul(e, b) == b and A.mul(b, e) == b, "1_I + 1_J - 1_I 1_J is not the unit of I + J"
    return e


def is_semiprime(A: Algebra, small_dim_bound: int = 5) -> bool:
    """
    No nonzero nilpotent ideal. In characteristic 0 or p > dim the radical
    is the kernel of the form (x, y) -> trace(L_xy); over a small finite
    field every ideal is enumerated instead.
    """
    if not A.is_unital:
        raise AlgebraError("semiprimeness is only decided for unital algebras")
    p = A.field.characteristic
    if p == 0 or p > A.dim:
        return trace_radical(A).dim == 0
    if A.dim <= small_dim_bound:
        for I in enumerate_ideals(A):
            if I.dim and products_span(A, I.space, I.space).dim == 0:
                return False
        return True
    raise AlgebraError(f"unsupported characteristic/dimension: char {p}, dim {A.dim}")


def trace_radical(A: Algebra) -> Subspace:
    F, d = A.field, A.dim
    traces = []
    for i in range(d):
        Li = A.left_mult(A.e(i))
        traces.append(sum((Li.columns[k][k] for k in range(d)), F.zero))
    gram = [[sum((A.structure_constants(i, j)[k] * traces[k] for k in range(d)), F.zero)
             for j in range(d)] for i in range(d)]
    return Subspace(F, d, nullspace(F, gram, d))


# -- morphisms ---------------------------------------------------------------

@dataclass
class AlgebraMorphism:
    source: Magma
    target: Magma
    map: LinearMap

    def __post_init__(self):
        if self.map.domain_dim != self.source.dim or self.map.codomain_dim != self.target.dim:
            raise DimensionError("map dimensions do not match source/target")

    def __call__(self, v):
        return self.map(v)


def verify_morphism(f: AlgebraMorphism, unital: bool = False) -> Verdict:
    S, T, m = f.source, f.target, f.map
    images = [m(b) for b in S.basis()]
    for i in range(S.dim):
        for j in range(S.dim):
            if m(S.structure_constants(i, j)) != T.mul(images[i], images[j]):
                return Verdict(False, (S.names[i], S.names[j]))
    if unital:
        su, tu = getattr(S, "unit", None), getattr(T, "unit", None)
        if su is None or tu is None or m(su) != tu:
            return Verdict(False, "unit")
    return Verdict(True)


def verify_isomorphism(f: AlgebraMorphism) -> Verdict:
    v = verify_morphism(f)
    if not v:
        return v
    if not f.map.is_invertible():
        return Verdict(False, "not invertible")
    return Verdict(True)


# -- presets -----------------------------------------------------------------

def matrix_algebra(field: Field, n: int, group: Group | None = None) -> Algebra:
    """M_n(K) or, with a group H, M_n(KH)."""
    h_count = group.order if group else 1
    idx = {}
    names = []
    for i in range(n):
        for j in range(n):
            for h in range(h_count):
                idx[(i, j, h)] = len(names)
                base = f"e{i + 1}{j + 1}" if n < 10 else f"e{i + 1},{j + 1}"
                names.append(base if group is None else f"{base}[{group.labels[h]}]")
    d = len(names)
    consts = {}
    for (i, j, h), a in idx.items():
        for (k, l, h2), b in idx.items():
            if j == k:
                v = [0] * d
                v[idx[(i, l, group.mul(h, h2) if group else 0)]] = 1
                consts[(a, b)] = v
    unit = [0] * d
    for i in range(n):
        unit[idx[(i, i, 0)]] = 1
    return Algebra(field, d, consts, names, unit=unit, check=False)


def matrix_unit_index(n: int, i: int, j: int, h: int = 0, h_count: int = 1) -> int:
    """Position of e_{i,j}(h) (1-based i, j) in the matrix_algebra basis."""
    return ((i - 1) * n + (j - 1)) * h_count + h


def upper_triangular(field: Field, n: int) -> Algebra:
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {p: k for k, p in enumerate(pairs)}
    d = len(pairs)
    consts = {}
    for (i, j), a in pos.items():
        for (k, l), b in pos.items():
            if j == k:
                v = [0] * d
                v[pos[(i, l)]] = 1
                consts[(a, b)] = v
    unit = [1 if i == j else 0 for (i, j) in pairs]
    names = [f"e{i + 1}{j + 1}" if n < 10 else f"e{i + 1},{j + 1}" for i, j in pairs]
    return Algebra(field, d, consts, names, unit=unit, check=False)


def product_field(field: Field, n: int) -> Algebra:
    consts = {(i, i): [1 if k == i else 0 for k in range(n)] for i in range(n)}
    return Algebra(field, n, consts, [f"e{i + 1}" for i in range(n)], unit=[1] * n, check=False)


def group_algebra(field: Field, group: Group) -> Algebra:
    n = group.order
    consts = {(a, b): [1 if k == group.mul(a, b) else 0 for k in range(n)]
              for a in range(n) for b in range(n)}
    unit = [1] + [0] * (n - 1)
    return Algebra(field, n, consts, list(group.labels), unit=unit, check=False)


def direct_product(*algebras: Algebra, names: Sequence[str] | None = None) -> Algebra:
    field = algebras[0].field
    offsets, d = [], 0
    for A in algebras:
        offsets.append(d)
        d += A.dim
    consts = {}
    for A, off in zip(algebras, offsets):
        for i in range(A.dim):
            for j in range(A.dim):
                v = A.structure_constants(i, j)
                if any(v):
                    full = [field.zero] * d
                    full[off: off + A.dim] = v
                    consts[(off + i, off + j)] = full
    if names is None:
        names = [f"{s}|{t + 1}" for t, A in enumerate(algebras) for s in A.names]
    unit = None
    if all(A.is_unital for A in algebras):
        unit = [x for A in algebras for x in A.unit]
    return Algebra(field, d, consts, names, unit=unit, check=False)


def function_algebra(A: Algebra, group: Group) -> Algebra:
    """F(G, A): functions G -> A with pointwise operations."""
    names = [f"{s}@{group.labels[g]}" for g in group for s in A.names]
    return direct_product(*([A] * group.order), names=names)


def counterexample_algebra(field: Field) -> Algebra:
    """Basis 1, t, u, v with tv = vt = u and every other product of t, u, v zero."""
    names = ["1", "t", "u", "v"]
    d = 4
    e = lambda k: [1 if i == k else 0 for i in range(d)]
    consts = {}
    for i in range(d):
        consts[(0, i)] = e(i)
        consts[(i, 0)] = e(i)
    consts[(1, 3)] = e(2)
    consts[(3, 1)] = e(2)
    return Algebra(field, d, consts, names, unit=e(0))


def truncated_polynomial(field: Field, coeffs: Sequence[int]) -> Algebra:
    """K[x]/(f) for monic f = x^n + c_{n-1} x^{n-1} + ... + c_0 (coeffs low to high)."""
    n = len(coeffs)
    F = field
    # x^k reduced for k < 2n - 1
    powers = []
    for k in range(2 * n - 1):
        if k < n:
            powers.append([F.one if i == k else F.zero for i in range(n)])
        else:
            prev = powers[k - 1]
            top = prev[n - 1]
            shifted = [F.zero] + prev[: n - 1]
            powers.append([s - top * F(c) for s, c in zip(shifted, coeffs)])
    consts = [[powers[i + j] for j in range(n)] for i in range(n)]
    names = ["1"] + ["x" if k == 1 else f"x^{k}" for k in range(1, n)]
    return Algebra(F, n, consts, names, unit=powers[0], check=False)


def preset(name: str, field: Field, *args) -> Algebra:
    """Dispatch on a preset name: matrix, upper, product, group_algebra, function, counter."""
    if name == "matrix":
        return matrix_algebra(field, *args)
    if name == "upper":
        return upper_triangular(field, *args)
    if name == "product":
        return product_field(field, *args)
    if name == "group_algebra":
        return group_algebra(field, *args)
    if name == "function":
        return function_algebra(*args)
    if name == "counter":
        return counterexample_algebra(field)
    raise AlgebraError(f"unknown preset {name!r}")
