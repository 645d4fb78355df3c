import pytest

import corpus
from pact.algebra import Algebra, AlgebraMorphism, direct_product, product_field, verify_isomorphism
from pact.envelope import (EnvelopingAction, unit_shift_violation, build_enveloping, compare_envelopings,
                           embed_crossed, has_enveloping, morita_context, verify_enveloping)
from pact.exactfield import QQ, LinearMap, Subspace
from pact.paction import ActionError, GlobalAction, unit_family


def test_has_enveloping():
    assert not has_enveloping(corpus.counter_action())
    assert has_enveloping(corpus.k3_restriction().action)
    assert has_enveloping(corpus.k3_swap().as_partial())
    with pytest.raises(ActionError):
        build_enveloping(corpus.counter_action())


def test_k3_restriction_enveloping():
    r = corpus.k3_restriction()
    pa = r.action
    E = build_enveloping(pa)
    assert E.algebra.dim == 3
    assert verify_enveloping(pa, E.beta, E.phi).ok
    E0 = EnvelopingAction(pa, corpus.k3_swap(), AlgebraMorphism(pa.base, r.ideal.parent, r.inclusion))
    assert verify_enveloping(pa, E0.beta, E0.phi).ok
    f = compare_envelopings(pa, E, E0)
    assert verify_isomorphism(f)
    # the comparison map is a permutation matrix between the two copies of K^3
    for col in f.map.columns:
        assert sorted(col) == [0, 0, 1]


def test_compare_with_itself_is_identity():
    pa = corpus.k3_restriction().action
    E = build_enveloping(pa)
    f = compare_envelopings(pa, E, E)
    assert f.map == LinearMap.identity(QQ, E.algebra.dim)


def _reversed_copy(E):
    """The same enveloping action written in the reversed basis of B."""
    B = E.algebra
    n = B.dim
    rev = lambda v: tuple(reversed(v))
    consts = [[rev(B.structure_constants(n - 1 - i, n - 1 - j)) for j in range(n)] for i in range(n)]
    B2 = Algebra(B.field, n, consts, [f"c{k + 1}" for k in range(n)])
    P = LinearMap(B.field, n, n, [rev(b) for b in B.basis()])
    Pi = P.inverse()
    beta2 = GlobalAction(E.beta.group, B2, [P @ m @ Pi for m in E.beta.maps])
    phi2 = AlgebraMorphism(E.phi.source, B2, P @ E.phi.map)
    return EnvelopingAction(E.action, beta2, phi2), P


def test_compare_with_permuted_copy():
    for pa in (corpus.k3_restriction().action, corpus.k2_corner_action()):
        E = build_enveloping(pa)
        E2, P = _reversed_copy(E)
        assert verify_enveloping(pa, E2.beta, E2.phi).ok
        assert compare_envelopings(pa, E, E2).map == P


def test_global_action_envelops_itself():
    pa = corpus.k3_swap().as_partial()
    E = build_enveloping(pa)
    assert E.algebra.dim == 3
    assert E.phi.map.is_invertible()
    emb = embed_crossed(pa, E)
    assert emb.image.dim == emb.target.dim == 6


def test_corner_action_gives_three_dimensions():
    pa = corpus.k2_corner_action()
    E = build_enveloping(pa)
    assert E.algebra.dim == 3
    assert verify_enveloping(pa, E.beta, E.phi).ok


def test_enlarged_ambient_fails_generation():
    pa = corpus.k3_restriction().action
    E = build_enveloping(pa)
    B = E.algebra
    big = direct_product(B, product_field(QQ, 1))
    F = QQ
    n = B.dim
    maps = []
    for m in E.beta.maps:
        cols = [tuple(c) + (0,) for c in m.columns] + [F.unit_vector(n + 1, n)]
        maps.append(LinearMap(F, n + 1, n + 1, cols))
    beta = GlobalAction(pa.group, big, maps)
    phi = AlgebraMorphism(pa.base, big, LinearMap(F, pa.base.dim, n + 1,
                                                  [tuple(c) + (0,) for c in E.phi.map.columns]))
    rep = verify_enveloping(pa, beta, phi)
    assert not rep.ok and not rep.generates_ok
    assert rep.global_ok and rep.phi_ok and rep.intertwines_ok


def test_embed_crossed_k3():
    pa = corpus.k3_restriction().action
    emb = embed_crossed(pa, build_enveloping(pa))
    assert emb.source.dim == 3 and emb.target.dim == 6 and emb.image.dim == 3


def test_morita_k3():
    pa = corpus.k3_restriction().action
    mc = morita_context(pa, build_enveloping(pa))
    assert mc.ok
    assert mc.dims["MN"] == 3 == mc.dims["AxG"]
    assert mc.dims["NM"] == 6 == mc.dims["BxG"]


def test_morita_global_is_full():
    pa = corpus.k3_swap().as_partial()
    mc = morita_context(pa, build_enveloping(pa))
    full = Subspace.full(QQ, mc.ring.dim)
    assert mc.ok and mc.M == full and mc.N == full


def test_random_restrictions_enveloping_properties():
    checked = 0
    for name, r, beta in corpus.random_restrictions(30, seed=5):
        pa = r.action
        if pa.base.dim * pa.group.order > 16:
            continue
        checked += 1
        E = build_enveloping(pa)
        assert verify_enveloping(pa, E.beta, E.phi).ok, name
        assert unit_shift_violation(pa, unit_family(pa).units) is None, name
        assert E.algebra.dim <= pa.group.order * pa.base.dim
        if r.admissible:
            E0 = EnvelopingAction(pa, beta, AlgebraMorphism(pa.base, beta.algebra, r.inclusion))
            assert verify_enveloping(pa, E0.beta, E0.phi).ok, name
            assert verify_isomorphism(compare_envelopings(pa, E, E0)), name
        assert morita_context(pa, E).ok, name
    assert checked >= 10
