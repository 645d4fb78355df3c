"""Property tests over randomly generated algebras, actions and documents."""

import random

from hypothesis import HealthCheck, given, settings, strategies as st

import corpus
from pact.algebra import (AlgebraError, Ideal, ideal_generated, matrix_algebra, products_span, restrict,
                          subalgebra_generated, trace_radical, unit_of_ideal)
from pact.cli import emit, run
from pact.crossed import associativity_via_condition_x, build_crossed
from pact.dsl import parse_spec, print_spec
from pact.envelope import unit_shift_violation, build_enveloping, has_enveloping
from pact.exactfield import GF, QQ, Subspace
from pact.groups import cyclic, klein_four, symmetric
from pact.paction import unit_family
from pact.preps import (elementary_grading, elementary_rep, epsilon_family, induced_action, phi_pi,
                        verify_partial_rep)

SETTINGS = dict(deadline=None, suppress_health_check=[HealthCheck.too_slow])


# -- random subalgebras of matrix algebras --------------------------------------

@st.composite
def matrix_subalgebras(draw):
    F = draw(st.sampled_from([GF(2), GF(3), QQ]))
    n = draw(st.integers(2, 3))
    M = matrix_algebra(F, n)
    k = draw(st.integers(0, 2))
    gens = [tuple(F(draw(st.integers(-1, 1))) for _ in range(M.dim)) for _ in range(k)]
    S = subalgebra_generated(M, [M.unit, *gens])
    return M, S


@settings(max_examples=40, **SETTINGS)
@given(matrix_subalgebras(), st.data())
def test_random_subalgebra_is_associative_unital(ms, data):
    M, S = ms
    A = restrict(M, S)
    assert A.find_associativity_violation() is None
    unit = S.coords(M.unit)
    assert all(A.mul(unit, b) == b == A.mul(b, unit) for b in A.basis())
    # ideals generated by a random element: any unit is a central idempotent
    x = tuple(A.field(data.draw(st.integers(-1, 1))) for _ in range(A.dim))
    I = ideal_generated(A, [x])
    e = unit_of_ideal(I)
    if e is not None:
        assert A.mul(e, e) == e
        assert all(A.mul(e, b) == A.mul(b, e) for b in A.basis())


@settings(max_examples=30, **SETTINGS)
@given(matrix_subalgebras())
def test_trace_radical_is_a_nilpotent_ideal(ms):
    M, S = ms
    A = restrict(M, S)
    if A.field.characteristic and A.field.characteristic <= A.dim:
        return
    R = trace_radical(A)
    Ideal(A, R)  # raises if not an ideal
    power = R
    for _ in range(A.dim + 1):
        power = products_span(A, power, R)
    assert power.dim == 0


@settings(max_examples=60, **SETTINGS)
@given(st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), max_size=4))
def test_canonical_form_idempotent(rows):
    S = Subspace(QQ, 4, rows)
    assert S.canonicalize() == S
    assert S.canonicalize().basis == S.canonicalize().canonicalize().basis


# -- random restricted partial actions -------------------------------------------

@settings(max_examples=25, **SETTINGS)
@given(st.integers(0, 10 ** 6))
def test_random_restriction_invariants(seed):
    name, r, beta = corpus.random_restriction(random.Random(seed))
    pa = r.action
    rep = pa.report()
    assert rep.ok and rep.equivalence_consistent
    fam = unit_family(pa)
    assert fam.ok
    cp = build_crossed(pa)
    # semiprime bases always give associative crossed products
    assert cp.is_associative()
    assert associativity_via_condition_x(pa)
    assert has_enveloping(pa)
    E = build_enveloping(pa)
    assert E.algebra.dim <= pa.group.order * pa.base.dim
    assert unit_shift_violation(pa) is None


@settings(max_examples=25, **SETTINGS)
@given(st.integers(0, 10 ** 6))
def test_crossed_grading(seed):
    """(g, .) times (h, .) lies in the (gh, .) component."""
    _, r, _ = corpus.random_restriction(random.Random(seed))
    pa = r.action
    cp = build_crossed(pa)
    G = pa.group
    for a, (g, _) in enumerate(cp.index_pairs):
        for b, (h, _) in enumerate(cp.index_pairs):
            x = cp.mul(cp.e(a), cp.e(b))
            for k in G:
                if k != G.mul(g, h):
                    assert not any(cp.component(x, k))


# -- partial representations -------------------------------------------------------

GROUPS = [cyclic(2), cyclic(3), cyclic(4), klein_four(), symmetric(3), cyclic(5), cyclic(6)]


@st.composite
def group_subsets(draw):
    G = draw(st.sampled_from(GROUPS))
    rest = draw(st.sets(st.integers(1, G.order - 1))) if G.order > 1 else set()
    return G, frozenset({0, *rest})


@settings(max_examples=30, **SETTINGS)
@given(group_subsets())
def test_elementary_rep_invariants(gs):
    G, A = gs
    erd = elementary_rep(G, A, QQ)
    assert len(A) == erd.H.order * erd.n
    assert all(0 in t for t in erd.orbit.translates)
    assert verify_partial_rep(erd.pi)
    assert epsilon_family(erd.pi).ok
    pp = phi_pi(erd.pi)
    assert pp.bijective and pp.composition_ok
    gr = elementary_grading(erd)
    assert gr.ok


@settings(max_examples=15, **SETTINGS)
@given(group_subsets())
def test_induced_action_of_elementary_is_on_diagonal(gs):
    G, A = gs
    erd = elementary_rep(G, A, QQ)
    ind = induced_action(erd.pi)
    assert ind.base.dim == erd.n
    for g in G:
        # D_g is spanned by the e_ii with g in A_i
        want = sum(1 for t in erd.orbit.translates if g in t)
        assert ind.action.domains[g].dim == want


# -- documents ------------------------------------------------------------------------

@st.composite
def documents(draw):
    field = draw(st.sampled_from(["field rationals", "field gf 2", "field gf 3"]))
    lines = [field]
    group = draw(st.sampled_from(["cyclic 2", "cyclic 3", "klein", "sym 3"]))
    lines.append(f"group G = {group}")
    alg = draw(st.sampled_from(["matrix 2", "upper 2", "product 3", "group_algebra G", "counter"]))
    lines.append(f"algebra A = {alg}")
    lines.append("ideal J = generated(A; " + ("e1" if alg.startswith("product") else "0") + ")")
    cmds = draw(st.lists(st.sampled_from([
        "cmd semiprime A",
        "cmd multipliers J",
        "cmd lr_assoc J",
        "cmd kpar G expect iso=true",
        "cmd elementary G {1} expect iso=true",
        "cmd condition_x triangular 3 expect holds=false",
    ]), max_size=3))
    return "\n".join(lines + cmds) + "\n"


@settings(max_examples=25, **SETTINGS)
@given(documents())
def test_parse_print_round_trip_and_determinism(text):
    doc = parse_spec(text)
    printed = print_spec(doc)
    assert parse_spec(printed) == doc
    assert print_spec(parse_spec(printed)) == printed
    try:
        first = emit(run(doc))
    except AlgebraError:
        return
    assert first == emit(run(parse_spec(printed)))
