import itertools

import pytest

import corpus
from pact.algebra import (Algebra, AlgebraMorphism, Ideal, annihilators, counterexample_algebra,
                          enumerate_ideals, is_idempotent_ideal, matrix_algebra, product_field,
                          upper_triangular)
from pact.exactfield import GF, QQ, LinearMap
from pact.multiplier import (Multiplier, is_lr_associative, left_right, multiplier_algebra,
                             multiplier_violation, phi_embedding, psi_from_ambient,
                             transport_isomorphism, transport_multiplier)


def brute_multipliers(I):
    """Every pair (L, R) over GF(2) satisfying the three multiplier laws, checked elementwise."""
    F, d = I.field, I.dim
    basis = I.basis()
    out = []
    maps = []
    for entries in itertools.product(F.elements(), repeat=d * d):
        maps.append(LinearMap(F, d, d, [tuple(entries[c * d:(c + 1) * d]) for c in range(d)]))
    for L in maps:
        for R in maps:
            ok = all(L(I.mul(a, b)) == I.mul(L(a), b) and R(I.mul(a, b)) == I.mul(a, R(b))
                     and I.mul(R(a), b) == I.mul(a, L(b)) for a in basis for b in basis)
            if ok:
                out.append(Multiplier(L, R))
    return out


def zero_product(F, d):
    return Algebra(F, d, {})


def test_unital_ideal_has_multiplier_dim_equal():
    for A in (product_field(QQ, 3), matrix_algebra(QQ, 2), upper_triangular(QQ, 2)):
        M = multiplier_algebra(A)
        assert M.dim == A.dim
        assert phi_embedding(A).bijective


def test_zero_product_two_dim_has_eight():
    Z = zero_product(QQ, 2)
    assert multiplier_algebra(Z).dim == 8
    assert not is_lr_associative(Z)
    assert phi_embedding(Z).kernel.dim == 2


def test_radical_of_t2():
    T = upper_triangular(QQ, 2)
    R = Ideal.span(T, [T.e("e12")])
    assert multiplier_algebra(R).dim == 2
    assert is_lr_associative(R)
    psi = psi_from_ambient(T, R)
    assert psi.kernel.dim == 1
    assert T.e("e12") in psi.kernel


@pytest.mark.parametrize("d", [1, 2])
def test_zero_product_matches_brute_force(d):
    F = GF(2)
    Z = zero_product(F, d)
    assert 2 ** multiplier_algebra(Z).dim == len(brute_multipliers(Z))


def test_brute_force_oracle_on_small_corpus():
    F = GF(2)
    for name, A in corpus.small_corpus(2):
        for I in enumerate_ideals(A):
            if not 0 < I.dim <= 2:
                continue
            B = I.algebra
            brute = brute_multipliers(B)
            M = multiplier_algebra(B)
            assert 2 ** M.dim == len(brute), name
            assert all(m in M for m in brute)
            lr = all((m2.R @ m.L) == (m.L @ m2.R) for m in brute for m2 in brute)
            assert bool(is_lr_associative(B)) == lr, name


def test_idempotent_ideal_of_k2():
    K2 = product_field(QQ, 2)
    assert is_lr_associative(Ideal.span(K2, [K2.e(0)]))


def test_counter_ideal_not_lr_associative_with_witness():
    A = counterexample_algebra(QQ)
    I = Ideal.span(A, [A.e("u"), A.e("v")])
    v = is_lr_associative(I)
    assert not v
    M = multiplier_algebra(I)
    mi, mj, b = v.witness
    m, m2 = M.basis[M.algebra.index(mi)], M.basis[M.algebra.index(mj)]
    k = I.algebra.index(b)
    assert (m2.R @ m.L).columns[k] != (m.L @ m2.R).columns[k]


@pytest.mark.parametrize("p", [2, 3])
def test_sufficient_condition_soundness(p):
    for name, A in corpus.small_corpus(p):
        for I in enumerate_ideals(A):
            if not I.dim:
                continue
            if annihilators(I).non_degenerate or is_idempotent_ideal(I):
                assert is_lr_associative(I), (name, I)


def test_phi_image_is_ideal_with_explicit_identities():
    for A in (zero_product(QQ, 2), upper_triangular(QQ, 3), counterexample_algebra(QQ)):
        M = multiplier_algebra(A)
        emb = phi_embedding(A)
        for x in A.basis():
            px = left_right(A, x)
            for m in M.basis:
                prod = px * m
                assert prod.L == left_right(A, m.R(x)).L and prod.R == left_right(A, m.R(x)).R
                prod = m * px
                assert prod.L == left_right(A, m.L(x)).L and prod.R == left_right(A, m.L(x)).R
                assert M.coords(px * m) in emb.image


def test_multiplier_algebra_associative_and_closed():
    for A in (zero_product(QQ, 2), upper_triangular(QQ, 2), counterexample_algebra(QQ)):
        M = multiplier_algebra(A)
        assert M.algebra.is_associative()
        for x in M.basis:
            for y in M.basis:
                assert multiplier_violation(A, x * y) is None


def test_transport():
    A = counterexample_algebra(QQ)
    I = Ideal.span(A, [A.e("u"), A.e("v")]).algebra
    ident = AlgebraMorphism(I, I, LinearMap.identity(QQ, 2))
    M = multiplier_algebra(I)
    for m in M.basis:
        assert transport_multiplier(ident, m) == m
    swap = AlgebraMorphism(I, I, LinearMap(QQ, 2, 2, [(0, 1), (1, 0)]))
    proj_u = LinearMap(QQ, 2, 2, [(1, 0), (0, 0)])
    m = Multiplier(proj_u, LinearMap.zero(QQ, 2, 2))
    t = transport_multiplier(swap, m)
    assert t.L == LinearMap(QQ, 2, 2, [(0, 0), (0, 1)])
    one = Multiplier(LinearMap.identity(QQ, 2), LinearMap.identity(QQ, 2))
    assert transport_multiplier(swap, one) == one
    f = transport_isomorphism(swap)
    assert f.map.is_invertible()
