import itertools

import pytest

import corpus
from pact.algebra import AlgebraError, annihilators, is_idempotent_ideal
from pact.crossed import CrossedProduct, associativity_via_condition_x, build_crossed, embed_base
from pact.exactfield import GF, QQ


def test_counter_crossed_product():
    cp = build_crossed(corpus.counter_action())
    assert cp.dim == 6
    assert cp.names == ("(1,1)", "(1,2)", "(1,3)", "(1,4)", "(g,1)", "(g,2)")
    v = cp.is_associative()
    assert not v and v.witness == ("(1,2)", "(g,1)", "(1,2)")
    with pytest.raises(AlgebraError):
        cp.as_algebra()


def test_counter_powers():
    pa = corpus.counter_action()
    cp = CrossedProduct(pa)
    A = pa.base
    x = cp.combination([("1", A.e("t")), ("g", A.e("u"))])
    xx = cp.mul(x, x)
    assert cp.mul(xx, x) == cp.zero
    assert cp.mul(x, xx) == cp.delta("g", A.e("u"))
    assert cp.describe(cp.mul(x, xx)) == "ud_g"


def test_condition_x_on_counter():
    v = associativity_via_condition_x(corpus.counter_action())
    assert not v and v.witness[0] == "g"


def test_global_swap_k2():
    pa = corpus.global_swap_k2().as_partial()
    cp = CrossedProduct(pa)
    assert cp.dim == 4 and cp.is_associative()
    assert associativity_via_condition_x(pa)
    R = cp.as_algebra()
    assert R.is_unital


def test_k3_restriction_dim():
    cp = CrossedProduct(corpus.k3_restriction().action)
    assert cp.dim == 3 and cp.is_associative()


def test_embed_base():
    pa = corpus.counter_action()
    cp = CrossedProduct(pa)
    f = embed_base(cp)
    A = pa.base
    assert f(A.e("1")) == cp.delta("1", A.e("1"))
    assert cp.mul(f(A.e("t")), f(A.e("v"))) == cp.delta("1", A.e("u"))
    K2 = corpus.global_swap_k2().as_partial()
    cp2 = CrossedProduct(K2)
    f2 = embed_base(cp2)
    assert f2.map.image().dim == 2


def _formula_product(pa, g, a, h, b):
    """(a d_g)(b d_h) straight from the definition, as (gh, ambient vector)."""
    G, A = pa.group, pa.base
    return G.mul(g, h), pa.alpha(g, A.mul(pa.alpha(G.inv(g), a), b))


def test_products_match_formula_and_grading():
    for pa in [corpus.counter_action(), corpus.k3_restriction().action, corpus.k2_corner_action()]:
        cp = CrossedProduct(pa)
        for (p, (g, i)), (q, (h, j)) in itertools.product(enumerate(cp.index_pairs), repeat=2):
            a = pa.domains[g].space.basis[i]
            b = pa.domains[h].space.basis[j]
            gh, c = _formula_product(pa, g, a, h, b)
            prod = cp.mul(cp.e(p), cp.e(q))
            # graded: everything lands in the gh component
            assert all(not prod[k] for k in range(cp.dim) if cp.index_pairs[k][0] != gh)
            assert cp.component(prod, gh) == c


def test_condition_x_agrees_with_brute_force_gf3():
    for name, r, _ in corpus.random_restrictions(25, seed=3, field=GF(3)):
        pa = r.action
        assert bool(CrossedProduct(pa).is_associative()) == bool(associativity_via_condition_x(pa)), name


def test_exhaustive_z2_gf2_condition_x_and_sufficient_condition():
    seen = {True: 0, False: 0}
    for name, pa in corpus.exhaustive_z2_gf2():
        brute = bool(CrossedProduct(pa).is_associative())
        assert brute == bool(associativity_via_condition_x(pa)), name
        seen[brute] += 1
        good = all(not D.dim or annihilators(D).non_degenerate or is_idempotent_ideal(D)
                   for D in pa.domains)
        if good:
            assert brute, name
    assert seen[True] and seen[False]


def test_counter_over_gf2_non_associative():
    pa = corpus.counter_action(GF(2))
    assert not CrossedProduct(pa).is_associative()
    assert not associativity_via_condition_x(pa)
