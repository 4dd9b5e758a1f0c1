from mlttcheck.bidir import (
    TYPED_BACKEND,
    UNTYPED_BACKEND,
    check,
    check_ctx,
    check_ty,
    infer,
)
from mlttcheck.syntax import (
    App,
    Context,
    EMPTY_CTX,
    Empty,
    EmptyElim,
    Fst,
    Id,
    IdElim,
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
from mlttcheck.verdict import Accept, OutOfFuel, Reject

import pytest

NN = Pi(NAT, NAT)
SN = Sig(NAT, NAT)
ONE = Succ(ZERO)
FUEL = 10**5
BACKENDS = (TYPED_BACKEND, UNTYPED_BACKEND)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.name)
def test_infer_basic_forms(backend):
    assert infer(EMPTY_CTX, ZERO, backend, FUEL).payload == NAT
    assert infer(EMPTY_CTX, ONE, backend, FUEL).payload == NAT
    assert infer(EMPTY_CTX, Lam(NAT, Var(0)), backend, FUEL).payload == NN
    assert infer(EMPTY_CTX, NAT, backend, FUEL).payload == UNIV
    assert infer(Context((NAT,)), Var(0), backend, FUEL).payload == NAT


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.name)
def test_infer_application_instantiates_codomain(backend):
    # a dependent function whose codomain mentions the argument
    dep = Lam(NAT, Refl(NAT, Var(0)))
    out = infer(EMPTY_CTX, App(dep, ZERO), backend, FUEL)
    assert isinstance(out, Accept)
    assert out.payload == Id(NAT, ZERO, ZERO)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.name)
def test_check_uses_conversion(backend):
    # the stated type beta-reduces to Nat
    tred = App(Lam(NAT, NAT), ZERO)
    assert isinstance(check(EMPTY_CTX, ZERO, tred, backend, FUEL), Accept)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.name)
def test_ill_typed_rejections(backend):
    assert isinstance(infer(EMPTY_CTX, App(ZERO, ZERO), backend, FUEL), Reject)
    assert isinstance(infer(EMPTY_CTX, Fst(ZERO), backend, FUEL), Reject)
    assert isinstance(infer(EMPTY_CTX, Var(0), backend, FUEL), Reject)
    assert isinstance(check(EMPTY_CTX, Lam(NAT, Var(0)), NAT, backend, FUEL),
                      Reject)
    assert isinstance(check(EMPTY_CTX, ZERO, NN, backend, FUEL), Reject)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.name)
def test_eliminators(backend):
    ctx = Context((NAT,))
    plus2 = NatElim(NAT, Succ(Succ(Var(0))), Succ(Var(0)), Var(0))
    # motive and branches are scoped under their own binders
    out = infer(ctx, plus2, backend, FUEL)
    assert isinstance(out, Accept) and out.payload == NAT

    ectx = Context((Empty(),))
    out = infer(ectx, EmptyElim(NAT, Var(0)), backend, FUEL)
    assert isinstance(out, Accept) and out.payload == NAT

    ictx = Context((Id(NAT, ZERO, ZERO),))
    out = infer(ictx, IdElim(NAT, ZERO, NAT, ZERO, Var(0)), backend, FUEL)
    assert isinstance(out, Accept) and out.payload == NAT


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.name)
def test_pairs(backend):
    p = Pair(NAT, NAT, ZERO, ONE)
    assert isinstance(check(EMPTY_CTX, p, SN, backend, FUEL), Accept)
    assert infer(EMPTY_CTX, Fst(p), backend, FUEL).payload == NAT
    dep = Sig(NAT, Id(NAT, Var(0), Var(0)))
    q = Pair(NAT, Id(NAT, Var(0), Var(0)), ZERO, Refl(NAT, ZERO))
    assert isinstance(check(EMPTY_CTX, q, dep, backend, FUEL), Accept)
    # the inferred type of snd q is Id(Nat, fst q, fst q); conversion is what
    # connects it to the reduced form
    assert isinstance(
        check(EMPTY_CTX, Snd(q), Id(NAT, ZERO, ZERO), backend, FUEL), Accept)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.name)
def test_check_ty_accepts_large_types(backend):
    # the universe itself is a type even though it has no type
    assert isinstance(check_ty(EMPTY_CTX, UNIV, backend, FUEL), Accept)
    assert isinstance(check_ty(EMPTY_CTX, Pi(NAT, UNIV), backend, FUEL), Accept)
    assert isinstance(check_ty(EMPTY_CTX, ZERO, backend, FUEL), Reject)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.name)
def test_check_ctx(backend):
    good = Context((NAT, Pi(NAT, Id(NAT, Var(0), Var(0)))))
    assert isinstance(check_ctx(good, backend, FUEL), Accept)
    bad = Context((NAT, ZERO))
    assert isinstance(check_ctx(bad, backend, FUEL), Reject)


def test_out_of_fuel_propagates():
    out = check(EMPTY_CTX, Lam(NAT, Var(0)), NN, TYPED_BACKEND, 1)
    assert isinstance(out, OutOfFuel)


def test_refl_requires_equal_endpoints():
    bad = Id(NAT, ZERO, ONE)
    out = check(EMPTY_CTX, Refl(NAT, ZERO), bad, TYPED_BACKEND, FUEL)
    assert isinstance(out, Reject)
