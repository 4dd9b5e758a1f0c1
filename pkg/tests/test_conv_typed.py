from pathlib import Path

from mlttcheck.conv_typed import conv_neu, conv_tm, conv_ty
from mlttcheck.syntax import (
    App,
    Context,
    EMPTY_CTX,
    Empty,
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
    shift,
)
from mlttcheck.verdict import Accept, OutOfFuel, Reject

DATA = Path(__file__).parent / "data"
NN = Pi(NAT, NAT)
SN = Sig(NAT, NAT)
ONE = Succ(ZERO)
FUEL = 10**5


def render(trace):
    return "".join("  " * depth + name + "\n" for name, depth in trace)


def test_golden_trace_neutral_function():
    """Comparing x with itself at Nat -> Nat eta-expands first, then falls
    back to neutral comparison under the fresh variable."""
    ctx = Context((NN,))
    trace = []
    out = conv_tm(ctx, NN, Var(0), Var(0), FUEL, trace)
    assert isinstance(out, Accept)
    assert render(trace) == (DATA / "golden_typed_trace.txt").read_text()


def test_trace_expansion_precedes_neutral_rules():
    ctx = Context((NN,))
    trace = []
    conv_tm(ctx, NN, Var(0), Var(0), FUEL, trace)
    names = [name for name, _ in trace]
    assert names.index("FunExp") < names.index("NVar")
    assert "NeuNeu" not in names


def test_eta_function_law():
    ctx = Context((NN,))
    expansion = Lam(NAT, App(Var(1), Var(0)))
    assert isinstance(conv_tm(ctx, NN, Var(0), expansion, FUEL), Accept)
    assert isinstance(conv_tm(ctx, NN, expansion, Var(0), FUEL), Accept)


def test_eta_pair_law():
    ctx = Context((SN,))
    expansion = Pair(NAT, NAT, Fst(Var(0)), Snd(Var(0)))
    assert isinstance(conv_tm(ctx, SN, Var(0), expansion, FUEL), Accept)
    assert isinstance(conv_tm(ctx, SN, expansion, Var(0), FUEL), Accept)


def test_beta_convertibility():
    redex = App(Lam(NAT, Succ(Var(0))), ZERO)
    assert isinstance(conv_tm(EMPTY_CTX, NAT, redex, ONE, FUEL), Accept)


def test_annotations_are_ignored():
    lhs = Lam(NAT, Var(0))
    rhs = Lam(SN, Var(0))  # differing annotation only
    assert isinstance(conv_tm(EMPTY_CTX, NN, lhs, rhs, FUEL), Accept)
    refl_l = Refl(NAT, ZERO)
    refl_r = Refl(NN, ONE)
    idn = Id(NAT, ZERO, ZERO)
    assert isinstance(conv_tm(EMPTY_CTX, idn, refl_l, refl_r, FUEL), Accept)


def test_no_confusion_between_type_heads():
    for lhs, rhs in ((NAT, NN), (NAT, SN), (NAT, Empty()), (SN, NN),
                     (Id(NAT, ZERO, ZERO), NAT)):
        assert isinstance(conv_ty(EMPTY_CTX, lhs, rhs, FUEL), Reject)
        assert isinstance(conv_tm(EMPTY_CTX, UNIV, lhs, rhs, FUEL), Reject)


def test_pi_injectivity():
    lhs = Pi(NAT, NAT)
    rhs = Pi(NN, NAT)
    out = conv_ty(EMPTY_CTX, lhs, rhs, FUEL)
    assert isinstance(out, Reject)


def test_distinct_variables_reject():
    ctx = Context((NAT, NAT))
    assert isinstance(conv_tm(ctx, NAT, Var(0), Var(1), FUEL), Reject)


def test_numerals_reject():
    assert isinstance(conv_tm(EMPTY_CTX, NAT, ZERO, ONE, FUEL), Reject)


def test_neutral_comparison_infers_type():
    ctx = Context((NN,))
    out = conv_neu(ctx, App(Var(0), ZERO), App(Var(0), ZERO), FUEL)
    assert isinstance(out, Accept)
    assert out.payload == NAT


def test_type_level_computation_in_conversion():
    # (\x:Nat. Nat) zero converts to Nat as a type
    tred = App(Lam(NAT, NAT), ZERO)
    assert isinstance(conv_ty(EMPTY_CTX, tred, NAT, FUEL), Accept)


def test_natelim_congruence_on_neutrals():
    ctx = Context((NAT,))
    e = NatElim(NAT, ZERO, Var(0), Var(0))
    assert isinstance(conv_tm(ctx, NAT, e, e, FUEL), Accept)
    e2 = NatElim(NAT, ONE, Var(0), Var(0))
    assert isinstance(conv_tm(ctx, NAT, e, e2, FUEL), Reject)


def test_out_of_fuel_is_not_reject():
    ctx = Context((NN,))
    out = conv_tm(ctx, NN, Var(0), Var(0), 2)
    assert isinstance(out, OutOfFuel)
    assert not isinstance(out, Reject)


def test_dependent_eta_under_binder():
    # a dependent function type with a genuine use of the bound variable
    ty = Pi(NAT, Id(NAT, Var(0), Var(0)))
    ctx = Context((ty,))
    expansion = Lam(NAT, App(Var(1), Var(0)))
    assert isinstance(conv_tm(ctx, shift(ty), Var(0), expansion, FUEL), Accept)
