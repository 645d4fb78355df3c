import pytest

import corpus
from pact.algebra import AlgebraMorphism, Ideal, counterexample_algebra, product_field, upper_triangular
from pact.exactfield import GF, QQ, LinearMap
from pact.groups import cyclic
from pact.paction import (ActionError, GlobalAction, LocalActionSlice, PartialAction,
                          condition_x_check, restrict_global, triangular_slice, unit_family,
                          verify_equivalence, verify_partial_action)


def test_counter_action_is_valid():
    pa = corpus.counter_action()
    r = verify_partial_action(pa)
    assert r.ok and r.equivalence_consistent
    assert pa.domain("g").dim == 2
    A = pa.base
    assert pa.alpha("g", A.e("u")) == A.e("v")


def test_projection_is_rejected():
    A = counterexample_algebra(QQ)
    I = Ideal.span(A, [A.e("u"), A.e("v")])
    proj = lambda x: (0, 0, x[2], 0)
    pa = PartialAction.from_ambient(cyclic(2), A, {"g": I}, {"g": proj})
    r = verify_partial_action(pa)
    assert not r.ok and not r.morphisms_ok
    with pytest.raises(ActionError):
        pa.require_valid()


def test_map_outside_domain_is_rejected():
    A = counterexample_algebra(QQ)
    I = Ideal.span(A, [A.e("u"), A.e("v")])
    with pytest.raises(ActionError):
        PartialAction.from_ambient(cyclic(2), A, {"g": I}, {"g": lambda x: (0, x[2], 0, 0)})


def test_global_action_is_partial_action():
    beta = corpus.k3_swap()
    assert beta.verify()
    assert verify_partial_action(beta.as_partial()).ok


def test_k3_restriction():
    r = corpus.k3_restriction()
    pa = r.action
    assert r.admissible
    assert verify_partial_action(pa).ok
    # D_g is the third coordinate, alpha_g is the identity there
    B = r.ideal.parent
    dg = [r.inclusion(b) for b in pa.domain("g").space.basis]
    assert dg == [B.e(2)]
    assert pa.alpha("g", pa.domain("g").space.basis[0]) == pa.domain("g").space.basis[0]


def test_restriction_to_whole_and_zero():
    beta = corpus.k3_swap()
    B = beta.algebra
    whole = restrict_global(beta, Ideal.whole(B))
    assert whole.admissible and all(D.dim == 3 for D in whole.action.domains)
    zero = restrict_global(beta, Ideal.zero(B))
    assert not zero.admissible


def test_unit_family():
    uf = unit_family(corpus.k3_swap().as_partial())
    assert uf.ok and all(u == (1, 1, 1) for u in uf.units.values())
    r = corpus.k3_restriction()
    uf = unit_family(r.action)
    assert uf.ok
    assert r.inclusion(uf.units[1]) == r.ideal.parent.e(2)
    uf = unit_family(corpus.counter_action())
    assert not uf.ok and uf.missing == ["g"]


def test_equivalence_examples():
    pa = corpus.counter_action()
    A = pa.base
    ident = AlgebraMorphism(A, A, LinearMap.identity(QQ, 4))
    assert verify_equivalence(pa, pa, ident)
    # fixing 1, t and swapping u, v is not multiplicative: t v = u but t u = 0
    swap = AlgebraMorphism(A, A, LinearMap(QQ, 4, 4, [A.e("1"), A.e("t"), A.e("v"), A.e("u")]))
    assert verify_equivalence(pa, pa, swap).witness == "phi is not an isomorphism"
    shear = AlgebraMorphism(A, A, LinearMap(QQ, 4, 4, [A.e("1"), A.element({"t": 1, "u": 1}),
                                                       A.e("u"), A.e("v")]))
    assert verify_equivalence(pa, pa, shear)
    r = corpus.k3_restriction()
    base = r.action.base
    flip = AlgebraMorphism(base, base, LinearMap(QQ, 2, 2, [(0, 1), (1, 0)]))
    assert not verify_equivalence(r.action, r.action, flip)


def test_triangular_slice_fails_condition_x():
    v = condition_x_check(triangular_slice(QQ, 3))
    assert not v
    a, b, c = v.witness
    assert (a, b, c) == ("e11", "e23", "e23")
    assert v.detail == {"lhs": "0", "rhs": "e13"}


@pytest.mark.parametrize("n", [4, 5])
def test_triangular_slice_larger(n):
    assert not condition_x_check(triangular_slice(QQ, n))


def test_identity_slice_on_unital_ideal():
    K3 = product_field(QQ, 3)
    D = Ideal.span(K3, [K3.e(0), K3.e(1)])
    s = LocalActionSlice.from_ambient(K3, D, D, lambda x: x)
    assert condition_x_check(s)


def test_counter_slice_witness():
    v = condition_x_check(corpus.counter_action().slice("g"))
    assert not v
    a, b, c = v.witness
    assert a == "t" and c == "t" and b in ("u", "v")


def test_random_restrictions_are_partial_actions():
    for name, r, _ in corpus.random_restrictions(40, seed=7):
        rep = verify_partial_action(r.action)
        assert rep.ok and rep.equivalence_consistent, name
        uf = unit_family(r.action)
        # restrictions of unital global actions to unital ideals have units everywhere
        assert uf.ok, name


def test_equivalence_is_an_equivalence_relation():
    """Compose permutation automorphisms of K^2-based restrictions and transport the action."""
    for name, r, _ in corpus.random_restrictions(25, seed=11):
        pa = r.action
        A = pa.base
        ident = AlgebraMorphism(A, A, LinearMap.identity(A.field, A.dim))
        assert verify_equivalence(pa, pa, ident), name
        if A.dim > 6:
            continue
        # transported copy along a coordinate reversal when that is an automorphism
        perm = LinearMap(A.field, A.dim, A.dim, [A.e(A.dim - 1 - k) for k in range(A.dim)])
        f = AlgebraMorphism(A, A, perm)
        from pact.algebra import verify_isomorphism
        if not verify_isomorphism(f):
            continue
        pb = _transport(pa, perm)
        finv = AlgebraMorphism(A, A, perm.inverse())
        assert verify_equivalence(pa, pb, f), name
        assert verify_equivalence(pb, pa, finv), name
        pc = _transport(pb, perm)
        assert verify_equivalence(pa, pc, AlgebraMorphism(A, A, perm @ perm)), name


def _transport(pa, perm):
    G, A = pa.group, pa.base
    doms = {g: Ideal.span(A, [perm(b) for b in pa.domains[g].space.basis]) for g in G}
    inv = perm.inverse()
    maps = {g: (lambda g: lambda y: perm(pa.alpha(g, inv(y))))(g) for g in G}
    return PartialAction.from_ambient(G, A, doms, maps)


def test_exhaustive_z2_gf2_forms_agree():
    count = 0
    for name, pa in corpus.exhaustive_z2_gf2():
        rep = verify_partial_action(pa)
        assert rep.original_ok == rep.strong_ok, name
        count += 1
    assert count > 20
