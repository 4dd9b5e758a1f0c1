import pytest

from mlttcheck.harness import GenConfig, gen_context, gen_term, gen_type
from mlttcheck.surface import (
    ParseError,
    ScopeError,
    parse_query,
    parse_term_source,
    print_term,
)
from mlttcheck.syntax import (
    App,
    Context,
    Fst,
    Id,
    Lam,
    NAT,
    NatElim,
    Pair,
    Pi,
    Refl,
    Sig,
    Succ,
    UNIV,
    Var,
    ZERO,
)

NN = Pi(NAT, NAT)


def test_parse_conv_query():
    q = parse_query("conv (x : Nat -> Nat) |- x == x : Nat -> Nat")
    assert q.directive == "conv"
    assert q.ctx == Context((NN,))
    assert q.payload == (Var(0), Var(0), NN)


def test_parse_infer_lambda():
    q = parse_query("infer |- \\x:Nat. x")
    assert q.ctx == Context(())
    assert q.payload == (Lam(NAT, Var(0)),)


def test_unbound_name_is_a_scope_error():
    with pytest.raises(ScopeError):
        parse_query("check |- y : Nat")
    with pytest.raises(ParseError):
        parse_query("check |- zero :")


def test_scope_error_carries_position():
    try:
        parse_query("check |- y : Nat")
    except ScopeError as e:
        assert (e.line, e.col) == (1, 10)
    else:
        pytest.fail("no scope error")


def test_shadowing_is_innermost_wins():
    t = parse_term_source("\\x:Nat. \\x:Nat. x")
    assert t == Lam(NAT, Lam(NAT, Var(0)))


def test_application_binds_tightest_and_arrow_right_assoc():
    t = parse_term_source("Nat -> Nat -> Nat")
    assert t == Pi(NAT, Pi(NAT, NAT))
    f = parse_term_source("\\f:Nat -> Nat. \\x:Nat. f (f x)")
    assert f == Lam(NN, Lam(NAT, App(Var(1), App(Var(1), Var(0)))))


def test_dependent_binders():
    t = parse_term_source("(a : U) -> a")
    assert t == Pi(UNIV, Var(0))
    s = parse_term_source("(a : Nat) * Id Nat a a")
    assert s == Sig(NAT, Id(NAT, Var(0), Var(0)))


def test_keyword_prefix_forms():
    t = parse_term_source(
        "natrec (n. Nat) zero (n r. succ r) (succ zero)")
    assert t == NatElim(NAT, ZERO, Succ(Var(0)), Succ(ZERO))
    p = parse_term_source("pair {x:Nat. Nat} (zero, succ zero)")
    assert p == Pair(NAT, NAT, ZERO, Succ(ZERO))
    assert parse_term_source("fst (pair {x:Nat. Nat} (zero, zero))") == \
        Fst(Pair(NAT, NAT, ZERO, ZERO))
    assert parse_term_source("refl Nat zero") == Refl(NAT, ZERO)


def test_comments_are_skipped():
    q = parse_query("infer |- zero -- trailing note")
    assert q.payload == (ZERO,)


def test_print_examples():
    assert print_term(Lam(NAT, Var(0))) == "\\x0:Nat. x0"
    assert print_term(Pi(NAT, NAT)) == "Nat -> Nat"
    assert print_term(Pi(NAT, Var(0))) == "(x0 : Nat) -> x0"
    assert print_term(Succ(Succ(ZERO))) == "succ (succ zero)"


def test_fresh_names_avoid_context_names():
    # a context variable already named x0 must not capture the fresh binder
    out = print_term(Lam(NAT, App(Var(1), Var(0))), names=("x0",))
    assert parse_term_source(out, names=("x0",)) == \
        Lam(NAT, App(Var(1), Var(0)))


def test_roundtrip_on_generated_terms():
    count = 0
    for seed in range(200):
        cfg = GenConfig(seed=seed)
        ctx = gen_context(cfg)
        names = tuple(f"v{i}" for i in range(len(ctx)))
        ty = gen_type(ctx, cfg)
        tm = gen_term(ctx, ty, cfg)
        for t in (ty, tm):
            assert parse_term_source(print_term(t, names), names) == t
            count += 1
    assert count == 400


def test_parse_error_reports_position_and_expectation():
    try:
        parse_term_source("succ )")
    except ParseError as e:
        assert e.line == 1 and e.col == 6
    else:
        pytest.fail("no parse error")
