import random

from mlttcheck.reduction import decompose, machine_whnf, plug, step, whnf
from mlttcheck.syntax import (
    App,
    Fst,
    IdElim,
    Lam,
    NAT,
    NatElim,
    Pair,
    Refl,
    Snd,
    Succ,
    Var,
    ZERO,
    is_whnf,
)
from mlttcheck.verdict import Accept, OutOfFuel

from oracles import random_term

ONE = Succ(ZERO)
OMEGA_HALF = Lam(NAT, App(Var(0), Var(0)))
OMEGA = App(OMEGA_HALF, OMEGA_HALF)


def test_beta_step():
    assert step(App(Lam(NAT, Var(0)), ZERO)) == ZERO
    assert step(App(Lam(NAT, Succ(Var(0))), ZERO)) == ONE


def test_projection_steps():
    p = Pair(NAT, NAT, ZERO, ONE)
    assert step(Fst(p)) == ZERO
    assert step(Snd(p)) == ONE


def test_natelim_steps():
    e0 = NatElim(NAT, ZERO, Succ(Var(1)), ZERO)
    assert step(e0) == ZERO
    e1 = NatElim(NAT, ZERO, Succ(Var(1)), ONE)
    # step [x := pred, y := recursive call]; succ x at pred zero is succ zero
    assert step(e1) == ONE


def test_idelim_step():
    e = IdElim(NAT, ZERO, NAT, ONE, Refl(NAT, ZERO))
    assert step(e) == ONE


def test_step_is_weak_head_only():
    assert step(Succ(App(Lam(NAT, Var(0)), ZERO))) is None
    assert step(Lam(NAT, App(Lam(NAT, Var(0)), ZERO))) is None


def test_step_descends_into_spines():
    inner = App(Lam(NAT, Var(0)), ZERO)
    assert step(Fst(inner)) == Fst(ZERO)
    assert step(App(inner, ZERO)) == App(ZERO, ZERO)


def test_whnf_of_arithmetic():
    two = Succ(ONE)
    plus = NatElim(NAT, two, Succ(Var(0)), two)  # 2 + 2 by recursion on 2
    out = whnf(plus, 10**6)
    assert isinstance(out, Accept)
    assert isinstance(out.payload, Succ)


def test_whnf_fixpoint():
    out = whnf(App(Lam(NAT, Var(0)), ZERO), 100)
    assert isinstance(out, Accept)
    assert step(out.payload) is None
    assert is_whnf(out.payload)


def test_stuck_ill_typed_term_is_whnf_output():
    # no rule applies to fst zero; whnf returns it rather than failing
    stuck = Fst(ZERO)
    out = whnf(stuck, 100)
    assert isinstance(out, Accept)
    assert out.payload == stuck


def test_omega_runs_out_of_fuel():
    assert isinstance(whnf(OMEGA, 10**4), OutOfFuel)
    assert isinstance(machine_whnf(OMEGA, 10**4), OutOfFuel)


def test_machine_agrees_with_recursive_whnf():
    rng = random.Random(11)
    checked = 0
    for _ in range(500):
        t = random_term(rng, 5)
        a = whnf(t, 10**4)
        b = machine_whnf(t, 10**4)
        assert type(a) is type(b)
        if isinstance(a, Accept):
            assert a.payload == b.payload
            checked += 1
    assert checked > 300


def test_decompose_plug_roundtrip():
    rng = random.Random(12)
    for _ in range(300):
        t = random_term(rng, 5)
        head, stack = decompose(t)
        assert plug(head, stack) == t


def test_fuel_monotone_on_whnf():
    two = Succ(ONE)
    plus = NatElim(NAT, two, Succ(Var(0)), two)
    low = whnf(plus, 1)
    high = whnf(plus, 10**6)
    assert isinstance(high, Accept)
    if isinstance(low, Accept):
        assert low.payload == high.payload
    # and underfunding a diverging term never turns into a normal form
    assert isinstance(whnf(OMEGA, 3), OutOfFuel)
