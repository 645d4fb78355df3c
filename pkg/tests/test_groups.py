import pytest

from pact.groups import (GroupError, cyclic, direct_product, from_table, klein_four, make_group,
                         symmetric, translate_orbit)


def test_constructors():
    assert cyclic(2).order == 2
    V = klein_four()
    assert V.order == 4 and V.exponent() == 2 and V.is_abelian()
    S3 = symmetric(3)
    assert S3.order == 6 and not S3.is_abelian()
    assert direct_product(cyclic(2), cyclic(3)).order == 6
    assert make_group("cyclic", 5).order == 5


@pytest.mark.parametrize("G", [cyclic(1), cyclic(4), cyclic(6), klein_four(), symmetric(3), symmetric(4)])
def test_group_axioms(G):
    n = G.order
    assert G.identity == 0
    for a in G:
        assert G.mul(a, G.inv(a)) == 0 == G.mul(G.inv(a), a)
        for b in G:
            for c in G:
                assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert len(set(G.labels)) == n


def test_table_moves_identity_first():
    G = from_table(["a", "e"], [[1, 0], [0, 1]])
    assert G.label(0) == "e" and G.order == 2


def test_table_without_identity_rejected():
    with pytest.raises(GroupError):
        from_table(["a", "b"], [[0, 0], [0, 0]])


def test_orbit_z3():
    G = cyclic(3)
    orb = translate_orbit(G, G.subset(["1", "g"]))
    assert orb.stabilizer == (0,)
    assert orb.n == 2
    assert [G.format_subset(t) for t in orb.translates] == ["{1,g}", "{1,g^2}"]


def test_orbit_whole_group():
    G = symmetric(3)
    orb = translate_orbit(G, range(6))
    assert orb.n == 1 and len(orb.stabilizer) == 6


def test_orbit_z4_half():
    G = cyclic(4)
    orb = translate_orbit(G, G.subset(["1", "g^2"]))
    assert orb.n == 1
    assert [G.label(h) for h in orb.stabilizer] == ["1", "g^2"]


def test_orbit_needs_identity():
    with pytest.raises(GroupError):
        translate_orbit(cyclic(3), [1])


@pytest.mark.parametrize("G", [cyclic(4), cyclic(6), klein_four(), symmetric(3)])
def test_orbit_invariants_exhaustive(G):
    from itertools import combinations
    others = list(range(1, G.order))
    for r in range(len(others) + 1):
        for rest in combinations(others, r):
            A = frozenset((0,) + rest)
            orb = translate_orbit(G, A)
            assert all(0 in T for T in orb.translates)
            assert len(A) == len(orb.stabilizer) * orb.n
            assert frozenset().union(*orb.cosets) == A
            for g, T in zip(orb.representatives, orb.translates):
                assert G.translate(g, A) == T
                # stabilizer of A_i is the conjugate g H g^-1
                conj = {G.mul(g, h, G.inv(g)) for h in orb.stabilizer}
                assert conj == {x for x in G if G.translate(x, T) == T}
