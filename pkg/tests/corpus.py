"""Shared fixtures and generators for the test-suite."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from pact.algebra import (Algebra, Ideal, counterexample_algebra, direct_product, enumerate_ideals,
                          group_algebra, matrix_algebra, product_field, truncated_polynomial,
                          upper_triangular)
from pact.exactfield import GF, QQ, LinearMap, Subspace
from pact.groups import cyclic, klein_four, symmetric
from pact.paction import GlobalAction, PartialAction, restrict_global


# -- named scenarios ---------------------------------------------------------

def counter_action(field=QQ) -> PartialAction:
    """Z/2 swapping u and v on the ideal span{u, v} of the 1, t, u, v algebra."""
    A = counterexample_algebra(field)
    G = cyclic(2)
    I = Ideal.span(A, [A.e("u"), A.e("v")])
    swap = lambda x: (x[0], x[1], x[3], x[2])
    return PartialAction.from_ambient(G, A, {"g": I}, {"g": swap})


def k3_swap(field=QQ) -> GlobalAction:
    return GlobalAction.permuting(cyclic(2), product_field(field, 3), {"g": [1, 0, 2]})


def k3_restriction(field=QQ):
    beta = k3_swap(field)
    B = beta.algebra
    return restrict_global(beta, Ideal.span(B, [B.e(0), B.e(2)]))


def k2_corner_action(field=QQ) -> PartialAction:
    """Z/2 on K^2 with D_g = e1 K^2 and alpha_g the identity there."""
    A = product_field(field, 2)
    D = Ideal.span(A, [A.e(0)])
    return PartialAction.from_ambient(cyclic(2), A, {"g": D}, {"g": lambda x: tuple(x)})


def global_swap_k2(field=QQ) -> GlobalAction:
    return GlobalAction.permuting(cyclic(2), product_field(field, 2), {"g": [1, 0]})


# -- small algebras over finite fields ---------------------------------------

def small_unital_algebras(field) -> list[tuple[str, Algebra]]:
    """Unital algebras of dimension at most 4, semiprime and not."""
    F = field
    out = [(f"K^{n}", product_field(F, n)) for n in range(1, 5)]
    out += [
        ("M2", matrix_algebra(F, 2)),
        ("T2", upper_triangular(F, 2)),
        ("KC2", group_algebra(F, cyclic(2))),
        ("KC3", group_algebra(F, cyclic(3))),
        ("KC4", group_algebra(F, cyclic(4))),
        ("KV", group_algebra(F, klein_four())),
        ("counter", counterexample_algebra(F)),
        ("K[x]/x^2", truncated_polynomial(F, [0, 0])),
        ("K[x]/x^3", truncated_polynomial(F, [0, 0, 0])),
        ("K[x]/x^4", truncated_polynomial(F, [0, 0, 0, 0])),
        ("K[x]/(x^2+x+1)", truncated_polynomial(F, [1, 1])),
        ("K[x]/(x^2+1)", truncated_polynomial(F, [1, 0])),
        ("K[x]/(x^3+x+1)", truncated_polynomial(F, [1, 1, 0])),
        ("K x K[x]/x^2", direct_product(product_field(F, 1), truncated_polynomial(F, [0, 0]))),
        ("K x T2", direct_product(product_field(F, 1), upper_triangular(F, 2))),
        ("K[x]/x^2 x K[x]/x^2", direct_product(truncated_polynomial(F, [0, 0]),
                                              truncated_polynomial(F, [0, 0]))),
    ]
    return out


@lru_cache(maxsize=None)
def small_corpus(p: int):
    return tuple(small_unital_algebras(GF(p)))


# -- random restricted actions over semiprime bases --------------------------

GROUPS = {"C2": cyclic(2), "C3": cyclic(3), "C4": cyclic(4), "V": klein_four(), "S3": symmetric(3)}


def _coset_action(G, H):
    """G acting on the left cosets gH, as a list of permutations indexed by group element."""
    cosets = []
    for g in G:
        c = frozenset(G.mul(g, h) for h in H)
        if c not in cosets:
            cosets.append(c)
    perms = []
    for g in G:
        perms.append([cosets.index(frozenset(G.mul(g, x) for x in c)) for c in cosets])
    return perms


def _subgroups(G):
    out = []
    for r in range(1, G.order + 1):
        for S in itertools.combinations(range(G.order), r):
            if 0 in S and all(G.mul(a, G.inv(b)) in S for a in S for b in S):
                out.append(S)
    return out


def permutation_global(G, A, perms) -> GlobalAction:
    """G permuting the factors of A^m (m = len(perms[0]))."""
    m = len(perms[0])
    d = A.dim
    B = direct_product(*([A] * m))
    F = A.field
    maps = []
    for g in G:
        cols = []
        for k in range(m * d):
            block, i = divmod(k, d)
            cols.append(F.unit_vector(m * d, perms[g][block] * d + i))
        maps.append(LinearMap(F, m * d, m * d, cols))
    return GlobalAction(G, B, maps)


def random_restriction(rng: random.Random, field=QQ):
    """
    A random semiprime base (K^n, M_2 or QS_3), a random G-set X of small
    size, B = base^X with G permuting the factors, and a random ideal of B
    made of whole factors (and, for K^n, coordinate ideals of a factor).
    Returns (name, restriction, global action).
    """
    kind = rng.choice(["Kn", "M2", "QS3"])
    if kind == "QS3":
        gname = rng.choice(["C2", "C3"])
        max_points = 2
    elif kind == "M2":
        gname = rng.choice(["C2", "C3", "V"])
        max_points = 3
    else:
        gname = rng.choice(list(GROUPS))
        max_points = 4
    G = GROUPS[gname]
    if kind == "Kn":
        A = product_field(field, rng.randint(1, 2))
    elif kind == "M2":
        A = matrix_algebra(field, 2)
    else:
        A = group_algebra(field, symmetric(3))
    perms = [[] for _ in G]
    while not perms[0]:
        for H in rng.sample(_subgroups(G), k=min(2, len(_subgroups(G)))):
            block = _coset_action(G, H)
            if len(perms[0]) + len(block[0]) > max_points:
                continue
            shift = len(perms[0])
            for g in G:
                perms[g] = perms[g] + [shift + x for x in block[g]]
    beta = permutation_global(G, A, perms)
    B = beta.algebra
    m, d = len(perms[0]), A.dim
    chosen = [k for k in range(m) if rng.random() < 0.6] or [0]
    vecs = []
    for k in chosen:
        if kind == "Kn" and rng.random() < 0.3:
            coords = [i for i in range(d) if rng.random() < 0.5] or [0]
        else:
            coords = range(d)
        vecs += [B.e(k * d + i) for i in coords]
    ideal = Ideal.span(B, vecs)
    return f"{kind}/{gname}/X={m}/S={chosen}", restrict_global(beta, ideal), beta


def random_restrictions(n: int, seed: int = 20240601, field=QQ):
    rng = random.Random(seed)
    return [random_restriction(rng, field) for _ in range(n)]


# -- exhaustive Z/2 partial actions over GF(2) -------------------------------

def _invertible_matrices(F, k):
    elems = F.elements()
    for entries in itertools.product(elems, repeat=k * k):
        cols = [tuple(entries[c * k:(c + 1) * k]) for c in range(k)]
        m = LinearMap(F, k, k, cols)
        if m.is_invertible():
            yield m


def z2_partial_actions(A: Algebra, max_domain_dim: int = 3):
    """
    Every partial action of Z/2 on A with dim D_g <= max_domain_dim (D_g an
    ideal, alpha_g an involutive automorphism of it).
    """
    G = cyclic(2)
    F = A.field
    out = []
    for D in enumerate_ideals(A):
        if not 0 < D.dim <= max_domain_dim:
            continue
        ident = LinearMap.identity(F, A.dim)
        for m in _invertible_matrices(F, D.dim):
            pa = PartialAction(G, A, [Ideal.whole(A), D], [ident, m])
            if pa.report().ok:
                out.append(pa)
    return out


@lru_cache(maxsize=None)
def exhaustive_z2_gf2():
    """(name, action) for every small GF(2) algebra, domains capped at dim 3 (dim 2 for dim-4 bases)."""
    out = []
    for name, A in small_corpus(2):
        for pa in z2_partial_actions(A, max_domain_dim=3 if A.dim <= 3 else 2):
            out.append((name, pa))
    return tuple(out)
