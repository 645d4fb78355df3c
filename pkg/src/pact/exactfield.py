"""
Exact scalars and linear algebra over the rationals and prime fields.

Vectors are plain tuples of scalars. Subspaces are kept in reduced row
echelon form, so two subspaces are equal exactly when their stored bases
are equal, and the coordinates of a member vector can be read off its
pivot entries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Vector = tuple

__all__ = [
    "DimensionError",
    "Field",
    "Residue",
    "QQ",
    "GF",
    "Vector",
    "Subspace",
    "LinearMap",
    "Solution",
    "rref",
    "nullspace",
    "solve_linear",
    "enumerate_subspaces",
]


class DimensionError(ValueError):
    """Operands do not have matching shapes or ambient spaces."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Residue:
    """An element of GF(p), stored as its least non-negative residue."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise DimensionError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.v, self.p)

    def inverse(self) -> "Residue":
        if self.v == 0:
            raise ZeroDivisionError("zero has no inverse")
        return Residue(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Residue({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Field:
    """The rationals (characteristic 0) or a prime field GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0:
            if not _is_prime(p):
                raise ValueError(f"characteristic {p} is not prime")
            if p >= 2**31:
                raise ValueError("prime fields are limited to p < 2^31")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime-field"

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    def __call__(self, x) -> "Fraction | Residue":
        p = self.characteristic
        if p == 0:
            if isinstance(x, Residue):
                raise DimensionError("cannot coerce a residue into QQ")
            return Fraction(x)
        if isinstance(x, Residue):
            if x.p != p:
                raise DimensionError(f"mixing GF({x.p}) and GF({p})")
            return x
        if isinstance(x, Fraction) or isinstance(x, str):
            q = Fraction(x)
            return Residue(q.numerator, p) / q.denominator
        return Residue(int(x), p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def elements(self) -> list:
        if not self.is_finite:
            raise ValueError("QQ is infinite")
        return [Residue(i, self.characteristic) for i in range(self.characteristic)]

    # -- vectors -----------------------------------------------------------

    def vector(self, entries: Iterable) -> Vector:
        return tuple(self(x) for x in entries)

    def zeros(self, n: int) -> Vector:
        z = self.zero
        return (z,) * n

    def unit_vector(self, n: int, i: int) -> Vector:
        z, o = self.zero, self.one
        return tuple(o if k == i else z for k in range(n))

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# -- vector helpers ----------------------------------------------------------

def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def is_zero(v: Vector) -> bool:
    return not any(v)


def lincomb(field: Field, coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    out = [field.zero] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                if x:
                    out[k] = out[k] + c * x
    return tuple(out)


# -- elimination -------------------------------------------------------------

def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    for r in m:
        if len(r) != ncols:
            raise DimensionError(f"row of length {len(r)}, expected {ncols}")
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        row = m[rank]
        inv = 1 / row[col]
        if inv != 1:
            row = [x * inv for x in row]
            m[rank] = row
        for r in range(len(m)):
            if r != rank:
                f = m[r][col]
                if f:
                    other = m[r]
                    m[r] = [a - f * b if b else a for a, b in zip(other, row)]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return m[:rank], pivots


def nullspace(field: Field, rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : rows . x = 0}, returned in reduced echelon form."""
    red, pivots = rref([[field(x) for x in r] for r in rows], ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    red2, _ = rref(basis, ncols)
    return [tuple(r) for r in red2]


@dataclass(frozen=True)
class Solution:
    particular: Vector
    kernel: "Subspace"


def solve_linear(field: Field, coefficients: Sequence[Sequence], rhs: Sequence) -> Solution | None:
    """
    Solve coefficients . x = rhs exactly.

    Returns None when the system is inconsistent.
    """
    m = len(coefficients)
    if len(rhs) != m:
        raise DimensionError(f"{m} equations but {len(rhs)} right-hand sides")
    if m == 0:
        raise DimensionError("cannot infer the number of unknowns of an empty system")
    n = len(coefficients[0])
    aug = [[field(x) for x in row] + [field(b)] for row, b in zip(coefficients, rhs)]
    red, pivots = rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [field.zero] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    kernel = Subspace(field, n, nullspace(field, [r[:n] for r in aug], n))
    return Solution(tuple(x), kernel)


class Subspace:
    """A linear subspace of field^n with its canonical echelon basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vectors = [tuple(field(x) for x in v) for v in vectors]
        red, pivots = rref(vectors, ambient_dim)
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in red)
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n)

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, [field.unit_vector(n, i) for i in range(n)])

    @classmethod
    def coordinate(cls, field: Field, n: int, indices: Iterable[int]) -> "Subspace":
        return cls(field, n, [field.unit_vector(n, i) for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def canonicalize(self) -> "Subspace":
        return self

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise DimensionError("subspaces live in different ambient spaces")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace(self.field, self.ambient_dim)
        # x.U = y.V  <=>  (x, y) in the kernel of the stacked system
        k, l, n = self.dim, other.dim, self.ambient_dim
        rows = [[self.basis[i][c] for i in range(k)] + [-other.basis[j][c] for j in range(l)]
                for c in range(n)]
        sols = nullspace(self.field, rows, k + l)
        vecs = [lincomb(self.field, s[:k], self.basis, n) for s in sols]
        return Subspace(self.field, n, vecs)

    intersect = __and__

    def __contains__(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in dimension {self.ambient_dim}")
        residual = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = residual[p]
            if c:
                residual = [a - c * b if b else a for a, b in zip(residual, row)]
        return not any(residual)

    def contains(self, v: Sequence) -> bool:
        return v in self

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(b in other for b in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def coords(self, v: Sequence) -> Vector:
        """Coordinates of v with respect to the echelon basis."""
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def vector(self, coords: Sequence) -> Vector:
        if len(coords) != self.dim:
            raise DimensionError(f"{len(coords)} coordinates for a {self.dim}-dim subspace")
        return lincomb(self.field, coords, self.basis, self.ambient_dim)

    def inclusion(self) -> "LinearMap":
        return LinearMap(self.field, self.dim, self.ambient_dim, self.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={[list(map(str, b)) for b in self.basis]})"


class LinearMap:
    """
    A linear map field^m -> field^n, stored by the images of the standard
    basis vectors (the columns of its matrix).
    """

    __slots__ = ("field", "domain_dim", "codomain_dim", "columns")

    def __init__(self, field: Field, domain_dim: int, codomain_dim: int, columns: Sequence[Sequence]):
        cols = tuple(tuple(field(x) for x in c) for c in columns)
        if len(cols) != domain_dim:
            raise DimensionError(f"{len(cols)} columns for a domain of dimension {domain_dim}")
        for c in cols:
            if len(c) != codomain_dim:
                raise DimensionError(f"column of length {len(c)}, expected {codomain_dim}")
        self.field = field
        self.domain_dim = domain_dim
        self.codomain_dim = codomain_dim
        self.columns = cols

    @classmethod
    def identity(cls, field: Field, n: int) -> "LinearMap":
        return cls(field, n, n, [field.unit_vector(n, i) for i in range(n)])

    @classmethod
    def zero(cls, field: Field, m: int, n: int) -> "LinearMap":
        return cls(field, m, n, [field.zeros(n)] * m)

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "LinearMap":
        n = len(rows)
        m = len(rows[0]) if rows else 0
        return cls(field, m, n, [[rows[i][j] for i in range(n)] for j in range(m)])

    def rows(self) -> list[list]:
        return [[c[i] for c in self.columns] for i in range(self.codomain_dim)]

    def __call__(self, v: Sequence) -> Vector:
        if len(v) != self.domain_dim:
            raise DimensionError(f"vector of length {len(v)} for domain dimension {self.domain_dim}")
        return lincomb(self.field, v, self.columns, self.codomain_dim)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if other.codomain_dim != self.domain_dim:
            raise DimensionError("cannot compose: dimensions do not match")
        return LinearMap(self.field, other.domain_dim, self.codomain_dim,
                         [self(c) for c in other.columns])

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if (self.domain_dim, self.codomain_dim) != (other.domain_dim, other.codomain_dim):
            raise DimensionError("cannot add maps of different shapes")
        return LinearMap(self.field, self.domain_dim, self.codomain_dim,
                         [vadd(a, b) for a, b in zip(self.columns, other.columns)])

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        if (self.domain_dim, self.codomain_dim) != (other.domain_dim, other.codomain_dim):
            raise DimensionError("cannot subtract maps of different shapes")
        return LinearMap(self.field, self.domain_dim, self.codomain_dim,
                         [vsub(a, b) for a, b in zip(self.columns, other.columns)])

    def scale(self, c) -> "LinearMap":
        return LinearMap(self.field, self.domain_dim, self.codomain_dim,
                         [vscale(c, col) for col in self.columns])

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.domain_dim, self.codomain_dim, self.columns) == \
            (other.domain_dim, other.codomain_dim, other.columns)

    def __hash__(self):
        return hash((self.domain_dim, self.codomain_dim, self.columns))

    def image(self) -> Subspace:
        return Subspace(self.field, self.codomain_dim, self.columns)

    def kernel(self) -> Subspace:
        return Subspace(self.field, self.domain_dim,
                        nullspace(self.field, self.rows(), self.domain_dim))

    @property
    def rank(self) -> int:
        return self.image().dim

    def is_injective(self) -> bool:
        return self.rank == self.domain_dim

    def is_surjective(self) -> bool:
        return self.rank == self.codomain_dim

    def is_invertible(self) -> bool:
        return self.domain_dim == self.codomain_dim and self.is_injective()

    def inverse(self) -> "LinearMap":
        if not self.is_invertible():
            raise ValueError("map is not invertible")
        n = self.domain_dim
        cols = []
        for i in range(n):
            sol = solve_linear(self.field, self.rows(), self.field.unit_vector(n, i))
            cols.append(sol.particular)
        return LinearMap(self.field, n, n, cols)

    def preimage(self, space: Subspace) -> Subspace:
        """{x : self(x) in space}."""
        if space.ambient_dim != self.codomain_dim:
            raise DimensionError("target subspace lives elsewhere")
        # x maps into space iff the image has no component off the space:
        # solve self(x) = sum y_k b_k.
        k = space.dim
        n = self.codomain_dim
        rows = [[c[i] for c in self.columns] + [-b[i] for b in space.basis] for i in range(n)]
        sols = nullspace(self.field, rows, self.domain_dim + k)
        return Subspace(self.field, self.domain_dim, [s[: self.domain_dim] for s in sols])

    def __repr__(self):
        return f"LinearMap({self.domain_dim} -> {self.codomain_dim}, rows={[list(map(str, r)) for r in self.rows()]})"


def enumerate_subspaces(field: Field, n: int) -> Iterator[Subspace]:
    """All subspaces of GF(p)^n, by enumerating reduced echelon forms."""
    if not field.is_finite:
        raise ValueError("subspace enumeration needs a finite field")
    elems = field.elements()
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            pivset = set(pivots)
            # free slots: in row r, columns after pivot r that are not pivots
            slots = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivset]
            for values in itertools.product(elems, repeat=len(slots)):
                rows = [[field.zero] * n for _ in range(k)]
                for r, p in enumerate(pivots):
                    rows[r][p] = field.one
                for (r, c), x in zip(slots, values):
                    rows[r][c] = x
                yield Subspace(field, n, rows)
