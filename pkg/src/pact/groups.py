"""
Finite groups given by Cayley tables, plus the translate/stabilizer data of
subsets A containing the identity.

Elements are the integers 0..n-1 and the identity is always 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GroupError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Group:
    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    inverses: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise GroupError("a group has at least one element")
        if len(set(self.labels)) != n:
            raise GroupError("element labels must be distinct")
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise GroupError("Cayley table has the wrong shape")
        for r in self.table:
            for x in r:
                if not 0 <= x < n:
                    raise GroupError(f"table entry {x} out of range")
        t = self.table
        for x in range(n):
            if t[0][x] != x or t[x][0] != x:
                raise GroupError("element 0 must be the identity", witness=(0, x))
        inv = []
        for x in range(n):
            ys = [y for y in range(n) if t[x][y] == 0]
            if len(ys) != 1 or t[ys[0]][x] != 0:
                raise GroupError(f"{self.labels[x]} has no two-sided inverse", witness=(x,))
            inv.append(ys[0])
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise GroupError("table is not associative", witness=(a, b, c))
        object.__setattr__(self, "inverses", tuple(inv))

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def identity(self) -> int:
        return 0

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(range(len(self.labels)))

    def mul(self, *xs: int) -> int:
        out = 0
        for x in xs:
            out = self.table[out][x]
        return out

    def inv(self, x: int) -> int:
        return self.inverses[x]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def label(self, x: int) -> str:
        return self.labels[x]

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))

    def exponent(self) -> int:
        e = 1
        for x in self:
            k, y = 1, x
            while y != 0:
                y = self.mul(y, x)
                k += 1
            e = e * k // _gcd(e, k)
        return e

    def translate(self, g: int, subset: Iterable[int]) -> frozenset[int]:
        return frozenset(self.mul(g, a) for a in subset)

    def subset(self, labels: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(s) for s in labels)

    def format_subset(self, s: Iterable[int]) -> str:
        return "{" + ",".join(self.labels[x] for x in sorted(s)) + "}"

    def __str__(self):
        return f"Group(order={self.order}, elements={list(self.labels)})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def from_table(labels: Sequence[str], table: Sequence[Sequence[int]]) -> Group:
    """Build a group from any Cayley table, moving the identity to index 0."""
    n = len(labels)
    ident = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ident:
        raise GroupError("table has no identity element")
    e = ident[0]
    order = [e] + [x for x in range(n) if x != e]
    pos = {x: i for i, x in enumerate(order)}
    new = tuple(tuple(pos[table[a][b]] for b in order) for a in order)
    return Group(tuple(labels[x] for x in order), new)


def cyclic(n: int, gen: str = "g") -> Group:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    labels = ["1"] + [gen if k == 1 else f"{gen}^{k}" for k in range(1, n)]
    return Group(tuple(labels), tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def klein_four() -> Group:
    labels = ("1", "a", "b", "ab")
    # elements as bit pairs: 1=00, a=01, b=10, ab=11
    return Group(labels, tuple(tuple(a ^ b for b in range(4)) for a in range(4)))


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for s in range(len(perm)):
        if s in seen or perm[s] == s:
            continue
        c, x = [], s
        while x not in seen:
            seen.add(x)
            c.append(str(x + 1))
            x = perm[x]
        cycles.append("(" + "".join(c) + ")")
    return "".join(cycles) or "1"


def symmetric(n: int) -> Group:
    """S_n for n <= 4; permutations compose right to left, (pq)(i) = p(q(i))."""
    if not 1 <= n <= 4:
        raise GroupError("symmetric groups are supported for 1 <= n <= 4")
    perms = sorted(itertools.permutations(range(n)), key=lambda p: (p != tuple(range(n)), p))
    pos = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(pos[tuple(p[q[i]] for i in range(n))] for q in perms) for p in perms)
    return Group(tuple(_cycle_label(p) for p in perms), table)


def direct_product(g1: Group, g2: Group) -> Group:
    pairs = [(a, b) for a in g1 for b in g2]
    pos = {p: i for i, p in enumerate(pairs)}
    table = tuple(tuple(pos[(g1.mul(a, c), g2.mul(b, d))] for (c, d) in pairs) for (a, b) in pairs)
    labels = tuple(f"({g1.labels[a]},{g2.labels[b]})" for a, b in pairs)
    return Group(labels, table)


def make_group(kind: str, *args) -> Group:
    """Dispatch on a constructor name: cyclic, klein, sym, product, table."""
    if kind == "cyclic":
        return cyclic(*args)
    if kind in ("klein", "klein_four"):
        return klein_four()
    if kind in ("sym", "symmetric"):
        return symmetric(*args)
    if kind in ("product", "direct_product"):
        return direct_product(*args)
    if kind == "table":
        return from_table(*args)
    raise GroupError(f"unknown group constructor {kind!r}")


@dataclass(frozen=True)
class TranslateOrbit:
    """
    Stabilizer H = {h : hA = A}, the distinct translates A_1 = A, ..., A_n
    (gA with g^-1 in A), representatives g_i with g_i A = A_i, and the right
    cosets H g_i^-1 whose union is A.
    """

    group: Group
    subset: frozenset[int]
    stabilizer: tuple[int, ...]
    translates: tuple[frozenset[int], ...]
    representatives: tuple[int, ...]
    cosets: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.translates)

    def position(self, s: frozenset[int]) -> int:
        return self.translates.index(s)


def translate_orbit(group: Group, subset: Iterable[int]) -> TranslateOrbit:
    a = frozenset(subset)
    if 0 not in a:
        raise GroupError("the subset must contain the identity")
    stab = tuple(h for h in group if group.translate(h, a) == a)
    translates: list[frozenset[int]] = []
    reps: list[int] = []
    for g in group:
        if group.inv(g) not in a:
            continue
        t = group.translate(g, a)
        if t not in translates:
            translates.append(t)
            reps.append(g)
    cosets = tuple(frozenset(group.mul(h, group.inv(g)) for h in stab) for g in reps)
    return TranslateOrbit(group, a, stab, tuple(translates), tuple(reps), cosets)
