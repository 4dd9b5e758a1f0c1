from mlttcheck.normalize import deep_nf_ne, deep_nf_tm, deep_nf_ty
from mlttcheck.syntax import (
    App,
    Context,
    EMPTY_CTX,
    Fst,
    Id,
    Lam,
    NAT,
    NatElim,
    Pair,
    Pi,
    Refl,
    Sig,
    Snd,
    Succ,
    UNIV,
    Var,
    ZERO,
)
from mlttcheck.verdict import Accept, OutOfFuel

NN = Pi(NAT, NAT)
SN = Sig(NAT, NAT)
ONE = Succ(ZERO)
FUEL = 10**6


def nf(ctx, ty, tm):
    out = deep_nf_tm(ctx, ty, tm, FUEL)
    assert isinstance(out, Accept), out
    return out.payload


def test_arithmetic_normalizes_to_numeral():
    two = Succ(ONE)
    plus = NatElim(NAT, two, Succ(Var(0)), two)
    assert nf(EMPTY_CTX, NAT, plus) == Succ(Succ(Succ(ONE)))


def test_eta_long_form_at_function_type():
    ctx = Context((NN,))
    assert nf(ctx, NN, Var(0)) == Lam(NAT, App(Var(1), Var(0)))


def test_eta_long_form_at_pair_type():
    ctx = Context((SN,))
    assert nf(ctx, SN, Var(0)) == Pair(NAT, NAT, Fst(Var(0)), Snd(Var(0)))


def test_normalization_under_binders():
    redex = App(Lam(NAT, Var(0)), ZERO)
    f = Lam(NAT, Succ(redex))
    assert nf(EMPTY_CTX, NN, f) == Lam(NAT, ONE)


def test_deep_nf_idempotent():
    cases = [
        (EMPTY_CTX, NAT, NatElim(NAT, ONE, Succ(Var(0)), ONE)),
        (Context((NN,)), NN, Var(0)),
        (Context((SN,)), SN, Var(0)),
        (EMPTY_CTX, NN, Lam(NAT, App(Lam(NAT, Var(0)), Var(0)))),
    ]
    for ctx, ty, tm in cases:
        once = nf(ctx, ty, tm)
        assert nf(ctx, ty, once) == once


def test_types_normalize():
    tred = App(Lam(NAT, NAT), ZERO)
    out = deep_nf_ty(EMPTY_CTX, Pi(tred, tred), FUEL)
    assert isinstance(out, Accept)
    assert out.payload == NN


def test_id_type_endpoints_normalize():
    redex = App(Lam(NAT, Var(0)), ZERO)
    out = deep_nf_ty(EMPTY_CTX, Id(NAT, redex, ONE), FUEL)
    assert isinstance(out, Accept)
    assert out.payload == Id(NAT, ZERO, ONE)


def test_neutral_spine_normalizes_arguments():
    ctx = Context((NN,))
    redex = App(Lam(NAT, Var(0)), ZERO)
    out = deep_nf_ne(ctx, App(Var(0), redex), FUEL)
    assert isinstance(out, Accept)
    normal, spine_ty = out.payload
    assert normal == App(Var(0), ZERO)
    assert spine_ty == NAT


def test_refl_annotations_left_alone():
    idn = Id(NAT, ZERO, ZERO)
    tred = App(Lam(NAT, NAT), ZERO)
    r = Refl(tred, ZERO)
    assert nf(EMPTY_CTX, idn, r) == r


def test_out_of_fuel():
    w = Lam(NAT, App(Var(0), Var(0)))
    omega = App(w, w)
    assert isinstance(deep_nf_tm(EMPTY_CTX, NAT, omega, 100), OutOfFuel)


def test_universe_members_normalize_as_types():
    tred = App(Lam(NAT, SN), ZERO)
    assert nf(EMPTY_CTX, UNIV, tred) == SN
