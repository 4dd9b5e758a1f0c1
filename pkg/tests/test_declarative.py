from pathlib import Path

import pytest

from mlttcheck.bidir import TYPED_BACKEND, UNTYPED_BACKEND, check
from mlttcheck.conv_typed import conv_neu, conv_tm, conv_ty
from mlttcheck.conv_untyped import uconv, uconv_neu
from mlttcheck.corpus import build_corpus, coverage
from mlttcheck.declarative import (
    ConvTm,
    ConvTy,
    Derivation,
    NeuCmp,
    Red,
    RULES,
    Typed,
    mutate,
    validate,
)
from mlttcheck.normalize import deep_nf_tm, deep_nf_ty
from mlttcheck.surface import derivation_sexpr, parse_derivation
from mlttcheck.syntax import NAT, Succ, Var, ZERO
from mlttcheck.verdict import Accept, Reject

FIXTURES = sorted((Path(__file__).parent.parent / "fixtures").glob("*.deriv"))
CORPUS = build_corpus()
FUEL = 10**5


def test_fixture_files_match_builders():
    assert len(FIXTURES) == len(CORPUS)
    for path, (_, deriv) in zip(FIXTURES, CORPUS):
        assert parse_derivation(path.read_text()) == deriv


def test_corpus_validates():
    for name, deriv in CORPUS:
        out = validate(deriv)
        assert isinstance(out, Accept), f"{name}: {out}"


def test_every_rule_has_two_root_derivations():
    cov = coverage(CORPUS)
    assert set(cov) == set(RULES)
    thin = {rule for rule, n in cov.items() if n < 2}
    assert not thin


def test_sexpr_roundtrip():
    for name, deriv in CORPUS:
        assert parse_derivation(derivation_sexpr(deriv)) == deriv, name


def test_mutations_are_mostly_rejected():
    total = accepted = 0
    for i, (_, deriv) in enumerate(CORPUS):
        for s in range(4):
            m = mutate(deriv, seed=i * 61 + s)
            if m == deriv:
                continue
            total += 1
            if isinstance(validate(m), Accept):
                accepted += 1
    assert total > 500
    # a rare mutation lands on another valid tree; sensitivity is statistical
    assert accepted / total <= 0.05


def test_typed_fixtures_recheck_bidirectionally():
    seen = 0
    for name, deriv in CORPUS:
        match deriv.conclusion:
            case Typed(ctx, tm, ty):
                for backend in (TYPED_BACKEND, UNTYPED_BACKEND):
                    out = check(ctx, tm, ty, backend, FUEL)
                    assert isinstance(out, Accept), \
                        f"{name} under {backend.name}: {out}"
                seen += 1
    assert seen > 30


def test_conv_fixtures_accepted_by_both_algorithms():
    seen = 0
    for name, deriv in CORPUS:
        match deriv.conclusion:
            case ConvTm(ctx, ty, lhs, rhs):
                assert isinstance(conv_tm(ctx, ty, lhs, rhs, FUEL), Accept), name
                assert isinstance(uconv(lhs, rhs, FUEL), Accept), name
                seen += 1
            case ConvTy(ctx, lhs, rhs):
                assert isinstance(conv_ty(ctx, lhs, rhs, FUEL), Accept), name
                assert isinstance(uconv(lhs, rhs, FUEL), Accept), name
                seen += 1
    assert seen > 30


def test_neutral_fixtures_accepted_by_both_comparators():
    seen = 0
    for name, deriv in CORPUS:
        match deriv.conclusion:
            case NeuCmp(ctx, lhs, rhs, _):
                assert isinstance(conv_neu(ctx, lhs, rhs, FUEL), Accept), name
                assert isinstance(uconv_neu(lhs, rhs, FUEL), Accept), name
                seen += 1
    assert seen > 10


def test_normalisation_fixtures_agree_with_normalizer():
    from mlttcheck.declarative import DnfTm, DnfTy

    seen = 0
    for name, deriv in CORPUS:
        match deriv.conclusion:
            case DnfTm(ctx, ty, tm):
                assert isinstance(deep_nf_tm(ctx, ty, tm, 10**6), Accept), name
                seen += 1
            case DnfTy(ctx, ty):
                assert isinstance(deep_nf_ty(ctx, ty, 10**6), Accept), name
                seen += 1
    assert seen > 20


def test_wrong_rule_name_rejected():
    _, deriv = CORPUS[0]
    bad = Derivation("NoSuchRule", deriv.conclusion, deriv.premises)
    assert isinstance(validate(bad), Reject)


def test_unreachable_reduction_rejected():
    assert isinstance(validate(Derivation("Red", Red(ZERO, Succ(ZERO)))), Reject)
    assert isinstance(validate(Derivation("Red", Red(ZERO, ZERO))), Accept)


def test_reject_reports_premise_path():
    # break a premise two levels down and expect the path to point there
    target = dict(CORPUS)["CtxCons_nat"]
    broken_leaf = Derivation("CtxEmpty", target.premises[0].conclusion)
    bad = Derivation(
        target.rule, target.conclusion,
        (Derivation("Var", target.premises[0].conclusion),) + target.premises[1:])
    out = validate(bad)
    assert isinstance(out, Reject)
    del broken_leaf


def test_variable_rule_checks_declared_type():
    good = dict(CORPUS)["Var_nat"]
    bad = Derivation(good.rule,
                     Typed(good.conclusion.ctx, Var(0), Succ(ZERO)),
                     good.premises)
    assert isinstance(validate(bad), Reject)
    shifted = Derivation(good.rule,
                         Typed(good.conclusion.ctx, Var(1), NAT),
                         good.premises)
    assert isinstance(validate(shifted), Reject)
