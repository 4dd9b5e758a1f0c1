import random

import pytest
from hypothesis import given, settings, strategies as st

from mlttcheck.syntax import (
    App,
    Class,
    Context,
    EMPTY_CTX,
    ID_SUBST,
    Fst,
    Lam,
    NAT,
    Pair,
    Pi,
    Sig,
    Succ,
    UNIV,
    Var,
    ZERO,
    apply_subst,
    classify,
    compose,
    is_neutral,
    is_whnf,
    max_free_index,
    occurs_free,
    shift,
    strengthen,
    subst1,
    subst2,
)

from oracles import random_subst, random_term, shift_ref, subst1_ref


def test_subst_identity_law():
    rng = random.Random(1)
    for _ in range(300):
        t = random_term(rng, 4)
        assert apply_subst(t, ID_SUBST) == t


def test_subst_composition_law():
    rng = random.Random(2)
    for _ in range(300):
        t = random_term(rng, 4)
        s1, s2 = random_subst(rng), random_subst(rng)
        assert apply_subst(apply_subst(t, s1), s2) == \
            apply_subst(t, compose(s1, s2))


def test_compose_associativity():
    rng = random.Random(3)
    for _ in range(300):
        t = random_term(rng, 3)
        s1, s2, s3 = (random_subst(rng) for _ in range(3))
        left = compose(compose(s1, s2), s3)
        right = compose(s1, compose(s2, s3))
        assert apply_subst(t, left) == apply_subst(t, right)


def test_compose_identity_absorbing():
    rng = random.Random(4)
    for _ in range(100):
        s = random_subst(rng)
        t = random_term(rng, 3)
        assert apply_subst(t, compose(s, ID_SUBST)) == apply_subst(t, s)
        assert apply_subst(t, compose(ID_SUBST, s)) == apply_subst(t, s)


def test_subst1_matches_reference_oracle():
    rng = random.Random(5)
    for _ in range(500):
        body = random_term(rng, 4, free=4)
        arg = random_term(rng, 3, free=3)
        assert subst1(body, arg) == subst1_ref(body, arg)


def test_shift_matches_reference_oracle():
    rng = random.Random(6)
    for _ in range(300):
        t = random_term(rng, 4)
        for by in (1, 2, 5):
            assert shift(t, by) == shift_ref(t, by)


def test_subst2_as_iterated_single_substitution():
    # index 1 gets outer, index 0 gets inner; substituting inner first and
    # then the (now innermost) outer must agree
    rng = random.Random(7)
    for _ in range(300):
        t = random_term(rng, 3, free=5)
        outer = random_term(rng, 2, free=3)
        inner = random_term(rng, 2, free=3)
        assert subst2(t, outer, inner) == subst1(subst1(t, shift(inner)), outer)


def test_strengthen_inverts_shift():
    rng = random.Random(8)
    for _ in range(300):
        t = random_term(rng, 4)
        lifted = shift(t)
        assert not occurs_free(lifted, 0)
        assert strengthen(lifted) == t


def test_strengthen_refuses_used_variable():
    assert strengthen(Var(0)) is None
    assert strengthen(App(Var(1), Var(0))) is None
    assert strengthen(Lam(NAT, Var(0))) == Lam(NAT, Var(0))


def test_beta_on_open_body():
    # (\x. x applied to the enclosing variable) instancing
    body = App(Var(0), Var(1))
    assert subst1(body, ZERO) == App(ZERO, Var(0))


def test_max_free_index():
    assert max_free_index(ZERO) == -1
    assert max_free_index(Var(3)) == 3
    assert max_free_index(Lam(NAT, Var(0))) == -1
    assert max_free_index(Lam(NAT, Var(2))) == 1


def test_context_lookup_shifts_entries():
    ctx = Context((NAT, Pi(Var(0), Var(1))))
    # entries are stored in their own prefix scope; lookup re-shifts into
    # the full context
    assert ctx.lookup(0) == Pi(Var(1), Var(2))
    assert ctx.lookup(1) == NAT
    assert ctx.lookup(2) is None
    assert len(EMPTY_CTX) == 0


def test_classification_of_heads():
    assert classify(ZERO) is Class.CANONICAL
    assert classify(Lam(NAT, Var(0))) is Class.CANONICAL
    assert classify(NAT) is Class.CANONICAL
    assert classify(Var(0)) is Class.NEUTRAL
    assert classify(App(Var(0), ZERO)) is Class.NEUTRAL
    assert classify(Fst(Var(0))) is Class.NEUTRAL
    assert classify(App(Lam(NAT, Var(0)), ZERO)) is Class.NOT_WHNF
    assert classify(Fst(Pair(NAT, NAT, ZERO, ZERO))) is Class.NOT_WHNF


def test_neutral_spines():
    assert is_neutral(App(Fst(Var(2)), ZERO))
    assert not is_neutral(App(Lam(NAT, Var(0)), ZERO))
    assert is_whnf(Succ(App(Lam(NAT, Var(0)), ZERO)))  # whnf is weak head only


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=50), st.integers(min_value=1, max_value=5))
def test_shift_is_additive_on_variables(ix, by):
    assert shift(shift(Var(ix), by), by) == Var(ix + 2 * by)


def test_sig_and_pi_binding_arities():
    # codomain binds one more variable than the domain
    t = Pi(NAT, Var(0))
    assert shift(t) == Pi(NAT, Var(0))
    t = Sig(Var(0), Var(0))
    assert shift(t) == Sig(Var(1), Var(0))
    assert shift(UNIV) == UNIV
