"""End-to-end checks, one test per criterion, each printing a pass line.

The criteria exercise the differential harness, the golden traces, the
metatheory property suites, the curated eta and negative suites, the
declarative fixture corpus, the substitution calculus, and the fuel
discipline, at the sample sizes and tolerances stated for each.
"""

import random
import time
from pathlib import Path

from mlttcheck.bidir import TYPED_BACKEND, UNTYPED_BACKEND, check
from mlttcheck.conv_typed import conv_tm
from mlttcheck.conv_untyped import uconv, uconv_b
from mlttcheck.corpus import coverage
from mlttcheck.declarative import RULES, Typed, mutate, validate
from mlttcheck.harness import GenConfig, _gen_query, _sub_seed, diff_run, property_run
from mlttcheck.reduction import whnf
from mlttcheck.surface import parse_derivation
from mlttcheck.syntax import (
    App,
    Context,
    EMPTY_CTX,
    Empty,
    EmptyElim,
    Fst,
    ID_SUBST,
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
    apply_subst,
    compose,
    shift,
    subst1,
)
from mlttcheck.verdict import Accept, Budget, OutOfFuel, Reject

from oracles import random_subst, random_term, subst1_ref

DATA = Path(__file__).parent / "data"
FIXTURES = sorted((Path(__file__).parent.parent / "fixtures").glob("*.deriv"))
NN = Pi(NAT, NAT)
SN = Sig(NAT, NAT)
ONE = Succ(ZERO)
IDN = Id(NAT, ZERO, ZERO)


def ok(n, label):
    print(f"criterion {n} ({label}): PASS")


def test_criterion_01_differential_equivalence():
    start = time.monotonic()
    report = diff_run(1000, fuel=10**5)
    elapsed = time.monotonic() - start
    assert report.total == 1000
    assert len(report.disagreements) == 0
    assert report.fuel_exhausted <= 10  # at most 1%
    assert elapsed < 60
    ok(1, "differential equivalence, 1000 queries")


def test_criterion_02_trace_divergence():
    ctx = Context((NN,))
    typed_trace = []
    out = conv_tm(ctx, NN, Var(0), Var(0), 10**5, typed_trace)
    assert isinstance(out, Accept)
    rendered = "".join("  " * d + n + "\n" for n, d in typed_trace)
    assert rendered == (DATA / "golden_typed_trace.txt").read_text()

    untyped_trace = []
    out = uconv(Var(0), Var(0), 10**5, untyped_trace)
    assert isinstance(out, Accept)
    rendered = "".join("  " * d + n + "\n" for n, d in untyped_trace)
    assert rendered == (DATA / "golden_untyped_trace.txt").read_text()

    typed_names = [n for n, _ in typed_trace]
    untyped_names = [n for n, _ in untyped_trace]
    neutral_rules = {"NVar", "NApp", "NePos"}
    first_neutral = min(typed_names.index(n) for n in neutral_rules
                        if n in typed_names)
    assert typed_names.index("FunExp") < first_neutral
    assert "NeuNeu" in untyped_names
    assert "FunExp" not in untyped_names and "CSigEta" not in untyped_names
    ok(2, "golden trace divergence on x == x at Nat -> Nat")


def test_criterion_03_subject_reduction():
    report = property_run("subject-reduction", 1000)
    assert report.total == 1000 and not report.failures
    ok(3, "subject reduction, 1000 samples")


def test_criterion_04_canonicity():
    report = property_run("canonicity", 200)
    assert report.total == 200 and not report.failures
    ok(4, "canonicity of 200 closed Nat terms")


def test_criterion_05_classification():
    report = property_run("classification", 500)
    assert report.total == 500 and not report.failures
    ok(5, "classification of 500 normal forms")


def _eta_fun_instances():
    dep = Pi(NAT, Id(NAT, Var(0), Var(0)))
    hi = Pi(NN, NAT)
    cases = [
        (Context((NN,)), NN, Var(0)),
        (Context((dep,)), dep, Var(0)),
        (Context((hi,)), hi, Var(0)),
        (Context((NN, NAT)), NN, Var(1)),
        (Context((Pi(NAT, NN),)), Pi(NAT, NN), Var(0)),
        (Context((Pi(NAT, NN), NAT)), NN, App(Var(1), Var(0))),
        (EMPTY_CTX, NN, Lam(NAT, Var(0))),
        (EMPTY_CTX, NN, Lam(NAT, Succ(Var(0)))),
        (EMPTY_CTX, Pi(NAT, NN), Lam(NAT, Lam(NAT, Var(1)))),
        (Context((SN,)), Pi(NAT, NAT), Lam(NAT, Fst(Var(1)))),
    ]
    for ctx, pi, f in cases:
        yield ctx, pi, f, Lam(pi.dom, App(shift(f), Var(0)))


def _eta_sig_instances():
    dep = Sig(NAT, Id(NAT, Var(0), Var(0)))
    cases = [
        (Context((SN,)), SN, Var(0)),
        (Context((dep,)), dep, Var(0)),
        (Context((Sig(NN, NAT),)), Sig(NN, NAT), Var(0)),
        (Context((SN, NAT)), SN, Var(1)),
        (Context((Sig(SN, NAT),)), Sig(SN, NAT), Var(0)),
        (Context((Pi(NAT, SN), NAT)), SN, App(Var(1), Var(0))),
        (EMPTY_CTX, SN, Pair(NAT, NAT, ZERO, ONE)),
        (EMPTY_CTX, SN, Pair(NAT, NAT, ONE, ZERO)),
        (EMPTY_CTX, dep, Pair(NAT, Id(NAT, Var(0), Var(0)), ZERO,
                              Refl(NAT, ZERO))),
        (Context((SN,)), SN, Pair(NAT, NAT, Fst(Var(0)), Snd(Var(0)))),
    ]
    for ctx, sig, p in cases:
        yield ctx, sig, p, Pair(sig.dom, sig.cod, Fst(p), Snd(p))


def test_criterion_06_eta_law_suite():
    fuel = 10**5
    for ctx, ty, t, expansion in (*_eta_fun_instances(), *_eta_sig_instances()):
        for lhs, rhs in ((t, expansion), (expansion, t)):
            assert isinstance(conv_tm(ctx, ty, lhs, rhs, fuel), Accept), (ty, t)
            assert isinstance(uconv(lhs, rhs, fuel), Accept), (ty, t)
    # the neutral self-comparison accepts under both with different shapes
    ctx = Context((NN,))
    tt, ut = [], []
    assert isinstance(conv_tm(ctx, NN, Var(0), Var(0), fuel, tt), Accept)
    assert isinstance(uconv(Var(0), Var(0), fuel, ut), Accept)
    assert "FunExp" in [n for n, _ in tt]
    assert "NeuNeu" in [n for n, _ in ut]
    ok(6, "eta law suite, 20 curated instances plus neutral case")


NEGATIVE_SUITE = [
    (EMPTY_CTX, NAT, ZERO, ONE),
    (Context((NAT,)), NAT, ZERO, Var(0)),
    (Context((NAT, NAT)), NAT, Var(0), Var(1)),
    (EMPTY_CTX, UNIV, NAT, NN),
    (EMPTY_CTX, UNIV, NAT, SN),
    (EMPTY_CTX, UNIV, NAT, Empty()),
    (EMPTY_CTX, UNIV, Empty(), NN),
    (EMPTY_CTX, UNIV, NN, Pi(NN, NAT)),
    (EMPTY_CTX, UNIV, SN, NN),
    (EMPTY_CTX, UNIV, IDN, NAT),
    (EMPTY_CTX, UNIV, IDN, Id(NAT, ZERO, ONE)),
    (EMPTY_CTX, NN, Lam(NAT, Var(0)), Lam(NAT, Succ(Var(0)))),
    (Context((NAT,)), NAT, Succ(Var(0)), Var(0)),
    (EMPTY_CTX, SN, Pair(NAT, NAT, ZERO, ZERO), Pair(NAT, NAT, ZERO, ONE)),
    (Context((SN,)), NAT, Fst(Var(0)), Snd(Var(0))),
    (Context((NN,)), NAT, App(Var(0), ZERO), App(Var(0), ONE)),
    (Context((NN, NN)), NAT, App(Var(0), ZERO), App(Var(1), ZERO)),
    (Context((IDN,)), IDN, Var(0), Refl(NAT, ZERO)),
    (Context((NAT,)), NAT, NatElim(NAT, ZERO, Var(0), Var(0)),
     NatElim(NAT, ONE, Var(0), Var(0))),
    (Context((Empty(), Empty())), NAT, EmptyElim(NAT, Var(0)),
     EmptyElim(NAT, Var(1))),
]


def test_criterion_07_negative_suite():
    fuel = 10**5
    assert len(NEGATIVE_SUITE) == 20
    for ctx, ty, lhs, rhs in NEGATIVE_SUITE:
        typed = conv_tm(ctx, ty, lhs, rhs, fuel)
        untyped = uconv(lhs, rhs, fuel)
        assert isinstance(typed, Reject), (lhs, rhs, typed)
        assert isinstance(untyped, Reject), (lhs, rhs, untyped)
        assert not isinstance(typed, OutOfFuel)
        assert not isinstance(untyped, OutOfFuel)
    ok(7, "negative suite, 20 curated non-convertible pairs")


def test_criterion_08_strengthening():
    report = property_run("strengthening", 1000)
    assert report.total == 1000 and not report.failures
    ok(8, "strengthening of untyped conversion, 1000 samples")


def test_criterion_09_generic_conversion_closure():
    report = property_run("conversion-closure", 500)
    assert report.total == 500 and not report.failures
    # the same closure properties for the term-directed checker
    cfg = GenConfig()
    fuel = 10**5
    for idx in range(500):
        rng = random.Random(_sub_seed(cfg.seed, idx))
        _, _, lhs, rhs = _gen_query(rng, cfg)
        fwd = uconv_b(lhs, rhs, Budget(fuel))
        if not isinstance(fwd, Accept):
            continue
        assert isinstance(uconv_b(rhs, lhs, Budget(fuel)), Accept)
        assert isinstance(uconv_b(shift(lhs), shift(rhs), Budget(fuel)), Accept)
    ok(9, "symmetry, transitivity, weakening closure, 500 samples each")


def test_criterion_10_declarative_oracle():
    derivs = [(p.name, parse_derivation(p.read_text())) for p in FIXTURES]
    assert derivs
    for name, deriv in derivs:
        assert isinstance(validate(deriv), Accept), name
    cov = coverage([(n, d) for n, d in derivs])
    assert set(cov) == set(RULES)
    assert all(n >= 2 for n in cov.values())

    total = rejected = 0
    for i, (_, deriv) in enumerate(derivs):
        for s in range(4):
            m = mutate(deriv, seed=i * 37 + s)
            if m == deriv:
                continue
            total += 1
            if not isinstance(validate(m), Accept):
                rejected += 1
    assert rejected / total >= 0.95

    for name, deriv in derivs:
        match deriv.conclusion:
            case Typed(ctx, tm, ty):
                for backend in (TYPED_BACKEND, UNTYPED_BACKEND):
                    out = check(ctx, tm, ty, backend, 10**5)
                    assert isinstance(out, Accept), (name, backend.name, out)
    ok(10, f"declarative oracle: {len(derivs)} fixtures, "
           f"{rejected}/{total} mutations rejected")


def test_criterion_11_substitution_calculus():
    rng = random.Random(2024)
    for _ in range(10000):
        t = random_term(rng, 4, free=4)
        assert apply_subst(t, ID_SUBST) == t
        s1, s2 = random_subst(rng), random_subst(rng)
        assert apply_subst(apply_subst(t, s1), s2) == \
            apply_subst(t, compose(s1, s2))
        u = random_term(rng, 2, free=3)
        assert subst1(t, u) == subst1_ref(t, u)
    ok(11, "substitution monoid laws and oracle equivalence, 10000 terms")


def test_criterion_12_fuel_discipline():
    report = property_run("fuel-monotonicity", 500)
    assert report.total == 500 and not report.failures
    w = Lam(NAT, App(Var(0), Var(0)))
    omega = App(w, w)
    out = whnf(omega, 10**4)
    assert isinstance(out, OutOfFuel)
    assert not isinstance(out, Reject)
    from mlttcheck.cli import EXIT_OUT_OF_FUEL, run_query
    from mlttcheck.surface import parse_query
    q = parse_query("whnf |- (\\x:Nat. x x) (\\x:Nat. x x)")
    code, _ = run_query(q, "typed", 10**4)
    assert code == EXIT_OUT_OF_FUEL
    ok(12, "fuel monotonicity and OutOfFuel on the divergent term")
