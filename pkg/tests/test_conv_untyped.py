from pathlib import Path

from mlttcheck.conv_untyped import uconv, uconv_neu
from mlttcheck.syntax import (
    App,
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
    Var,
    ZERO,
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
    """The same query as the typed golden trace: two neutrals compare
    directly, with no eta expansion step."""
    trace = []
    out = uconv(Var(0), Var(0), FUEL, trace)
    assert isinstance(out, Accept)
    assert render(trace) == (DATA / "golden_untyped_trace.txt").read_text()


def test_no_expansion_rules_between_neutrals():
    trace = []
    uconv(Var(0), Var(0), FUEL, trace)
    names = [name for name, _ in trace]
    assert "NeuNeu" in names
    assert "FunExp" not in names and "CSigEta" not in names


def test_eta_lambda_vs_neutral():
    # the one-sided eta cases fire when exactly one side is a lambda or pair
    expansion = Lam(NAT, App(Var(1), Var(0)))
    assert isinstance(uconv(Var(0), expansion, FUEL), Accept)
    assert isinstance(uconv(expansion, Var(0), FUEL), Accept)
    pair_exp = Pair(NAT, NAT, Fst(Var(0)), Snd(Var(0)))
    assert isinstance(uconv(Var(0), pair_exp, FUEL), Accept)
    assert isinstance(uconv(pair_exp, Var(0), FUEL), Accept)


def test_beta():
    redex = App(Lam(NAT, Succ(Var(0))), ZERO)
    assert isinstance(uconv(redex, ONE, FUEL), Accept)


def test_annotations_are_ignored():
    assert isinstance(uconv(Lam(NAT, Var(0)), Lam(SN, Var(0)), FUEL), Accept)
    assert isinstance(uconv(Refl(NAT, ZERO), Refl(NN, ONE), FUEL), Accept)
    lhs = Pair(NAT, NAT, ZERO, ZERO)
    rhs = Pair(SN, NN, ZERO, ZERO)
    assert isinstance(uconv(lhs, rhs, FUEL), Accept)


def test_head_mismatches_reject():
    assert isinstance(uconv(ZERO, ONE, FUEL), Reject)
    assert isinstance(uconv(Var(0), Var(1), FUEL), Reject)
    assert isinstance(uconv(NAT, NN, FUEL), Reject)
    assert isinstance(uconv(SN, NN, FUEL), Reject)


def test_neutral_spines():
    assert isinstance(uconv_neu(App(Var(0), ZERO), App(Var(0), ZERO), FUEL),
                      Accept)
    assert isinstance(uconv_neu(App(Var(0), ZERO), App(Var(1), ZERO), FUEL),
                      Reject)
    assert isinstance(uconv(Fst(Var(0)), Snd(Var(0)), FUEL), Reject)


def test_natelim_neutral_congruence():
    e = NatElim(NAT, ZERO, Var(0), Var(0))
    assert isinstance(uconv(e, e, FUEL), Accept)
    assert isinstance(uconv(e, NatElim(NAT, ONE, Var(0), Var(0)), FUEL), Reject)


def test_type_formers_compare_structurally():
    assert isinstance(uconv(Pi(NAT, NAT), Pi(NAT, NAT), FUEL), Accept)
    dep = Id(NAT, Var(0), Var(0))
    assert isinstance(uconv(Pi(NAT, dep), Pi(NAT, dep), FUEL), Accept)
    assert isinstance(uconv(Id(NAT, ZERO, ZERO), Id(NAT, ZERO, ONE), FUEL),
                      Reject)


def test_out_of_fuel_is_distinguished():
    w = Lam(NAT, App(Var(0), Var(0)))
    omega = App(w, w)
    out = uconv(omega, ZERO, 100)
    assert isinstance(out, OutOfFuel)
    assert not isinstance(out, Reject)
