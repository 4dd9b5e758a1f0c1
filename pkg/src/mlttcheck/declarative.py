"""Declarative judgments as explicit derivation trees, plus a validator.

A Derivation names a rule and carries its conclusion and premise subtrees;
validation checks that every node is a correct instance of its rule schema.
Matching is plain first-order: metavariables are bound by the conclusion and
by premise conclusions, and every remaining equation is decided by structural
equality, never by conversion.  Symmetry, transitivity and conversion steps
must therefore appear as explicit nodes, exactly as in a written derivation.

The congruence rules that the declarative presentation leaves implicit (for
lambdas, pairs, successor, refl, and the type formers at the universe) are
reconstructed here by mirroring the algorithmic congruences; each carries a
"reconstructed" note in its handler.

Reduction premises (the Red judgment) are leaves: they are discharged by
running weak-head reduction with a large validator-level fuel constant and
checking that the target occurs on the reduction chain.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Callable, Optional

from .reduction import step
from .syntax import (
    App,
    Context,
    Empty,
    EmptyElim,
    Fst,
    Id,
    IdElim,
    Lam,
    Nat,
    NAT,
    NatElim,
    Pair,
    Pi,
    Refl,
    Sig,
    Snd,
    Subst,
    Succ,
    Term,
    UNIV,
    Univ,
    Var,
    Zero,
    apply_subst,
    is_neutral,
    is_pos,
    shift,
    subst1,
    subst2,
)
from .verdict import Accept, Outcome, Reason, Reject

VALIDATOR_FUEL = 10**6


# ---------------------------------------------------------------------------
# Judgments


@dataclass(frozen=True, slots=True)
class CtxWf:
    ctx: Context


@dataclass(frozen=True, slots=True)
class SubstWf:
    """sub lists the image of each target variable, innermost first."""

    ctx: Context
    sub: tuple[Term, ...]
    target: Context


@dataclass(frozen=True, slots=True)
class TyWf:
    ctx: Context
    ty: Term


@dataclass(frozen=True, slots=True)
class Typed:
    ctx: Context
    tm: Term
    ty: Term


@dataclass(frozen=True, slots=True)
class ConvTy:
    ctx: Context
    lhs: Term
    rhs: Term


@dataclass(frozen=True, slots=True)
class ConvTm:
    ctx: Context
    ty: Term
    lhs: Term
    rhs: Term


@dataclass(frozen=True, slots=True)
class NeuCmp:
    ctx: Context
    lhs: Term
    rhs: Term
    ty: Term


@dataclass(frozen=True, slots=True)
class DnfTy:
    ctx: Context
    ty: Term


@dataclass(frozen=True, slots=True)
class DnfTm:
    ctx: Context
    ty: Term
    tm: Term


@dataclass(frozen=True, slots=True)
class DneTm:
    ctx: Context
    tm: Term
    ty: Term


@dataclass(frozen=True, slots=True)
class Red:
    src: Term
    tgt: Term


Judgment = (
    CtxWf | SubstWf | TyWf | Typed | ConvTy | ConvTm | NeuCmp
    | DnfTy | DnfTm | DneTm | Red
)


@dataclass(frozen=True, slots=True)
class Derivation:
    rule: str
    conclusion: Judgment
    premises: tuple["Derivation", ...] = ()


# ---------------------------------------------------------------------------
# Validation machinery


class SchemaError(Exception):
    pass


def fail(msg: str) -> None:
    raise SchemaError(msg)


Handler = Callable[[Derivation], None]
RULES: dict[str, Handler] = {}


def rule(name: str) -> Callable[[Handler], Handler]:
    def register(fn: Handler) -> Handler:
        RULES[name] = fn
        return fn

    return register


def _prems(d: Derivation, *kinds: type) -> tuple:
    if len(d.premises) != len(kinds):
        fail(f"expected {len(kinds)} premises, got {len(d.premises)}")
    out = []
    for i, (p, k) in enumerate(zip(d.premises, kinds)):
        if not isinstance(p.conclusion, k):
            fail(f"premise {i} should conclude {k.__name__}, "
                 f"concludes {type(p.conclusion).__name__}")
        out.append(p.conclusion)
    return tuple(out)


def _eq(got: object, want: object, what: str) -> None:
    if got != want:
        fail(f"{what} does not match the schema")


def _reaches(src: Term, tgt: Term) -> None:
    """Discharge a reduction side condition by a bounded weak-head chain."""
    t = src
    for _ in range(VALIDATOR_FUEL):
        if t == tgt:
            return
        t2 = step(t)
        if t2 is None:
            break
        t = t2
    if t != tgt:
        fail("target is not on the weak-head reduction chain of the source")


def validate(d: Derivation) -> Outcome:
    """Accept iff every node is a correct instance of its named rule."""
    return _validate(d, ())


def _validate(d: Derivation, path: tuple[str, ...]) -> Outcome:
    handler = RULES.get(d.rule)
    kind = type(d.conclusion).__name__
    if handler is None:
        return Reject(Reason((d.rule, kind), path, "unknown rule"))
    try:
        handler(d)
    except SchemaError as e:
        return Reject(Reason((d.rule, kind), path, str(e)))
    for i, p in enumerate(d.premises):
        out = _validate(p, path + (str(i),))
        if not isinstance(out, Accept):
            return out
    return Accept()


def _motive_succ(motive: Term) -> Term:
    # motive lives under x : Nat; the branch type is P[succ x] under x, y
    return apply_subst(motive, Subst((Succ(Var(1)),), 2))


def _id_motive_ctx(ctx: Context, a: Term, x: Term) -> Context:
    return ctx.push(a).push(Id(shift(a), shift(x), Var(0)))


# ---------------------------------------------------------------------------
# Contexts and substitutions


@rule("CtxEmpty")
def _r_ctx_empty(d: Derivation) -> None:
    match d.conclusion:
        case CtxWf(Context(())):
            _prems(d)
        case _:
            fail("conclusion is not well-formedness of the empty context")


@rule("CtxCons")
def _r_ctx_cons(d: Derivation) -> None:
    match d.conclusion:
        case CtxWf(Context(entries)) if entries:
            pass
        case _:
            fail("conclusion is not well-formedness of a non-empty context")
    prefix, a = Context(entries[:-1]), entries[-1]
    wf, ty = _prems(d, CtxWf, Typed)
    _eq(wf.ctx, prefix, "prefix context")
    _eq(ty, Typed(prefix, a, UNIV), "entry typing premise")


@rule("SubstEmpty")
def _r_subst_empty(d: Derivation) -> None:
    match d.conclusion:
        case SubstWf(_, (), Context(())):
            _prems(d)
        case _:
            fail("conclusion is not the empty substitution into the empty context")


@rule("SubstCons")
def _r_subst_cons(d: Derivation) -> None:
    match d.conclusion:
        case SubstWf(ctx, sub, Context(entries)) if sub and entries:
            pass
        case _:
            fail("conclusion is not a non-empty substitution judgment")
    t, tail = sub[0], sub[1:]
    target, a = Context(entries[:-1]), entries[-1]
    wf, ty = _prems(d, SubstWf, Typed)
    _eq(wf, SubstWf(ctx, tail, target), "substitution tail premise")
    _eq(ty, Typed(ctx, t, apply_subst(a, Subst(tail, 0))), "image typing premise")


# ---------------------------------------------------------------------------
# Type formation


@rule("FunTy")
def _r_fun_ty(d: Derivation) -> None:
    match d.conclusion:
        case TyWf(ctx, Pi(dom, cod)):
            pass
        case _:
            fail("conclusion is not well-formedness of a function type")
    p0, p1 = _prems(d, TyWf, TyWf)
    _eq(p0, TyWf(ctx, dom), "domain premise")
    _eq(p1, TyWf(ctx.push(dom), cod), "codomain premise")


@rule("SigTy")
def _r_sig_ty(d: Derivation) -> None:
    match d.conclusion:
        case TyWf(ctx, Sig(dom, cod)):
            pass
        case _:
            fail("conclusion is not well-formedness of a pair type")
    p0, p1 = _prems(d, TyWf, TyWf)
    _eq(p0, TyWf(ctx, dom), "domain premise")
    _eq(p1, TyWf(ctx.push(dom), cod), "codomain premise")


@rule("NatTy")
def _r_nat_ty(d: Derivation) -> None:
    match d.conclusion:
        case TyWf(ctx, Nat()):
            (p0,) = _prems(d, CtxWf)
            _eq(p0.ctx, ctx, "context premise")
        case _:
            fail("conclusion is not well-formedness of Nat")


@rule("EmptyTy")
def _r_empty_ty(d: Derivation) -> None:
    match d.conclusion:
        case TyWf(ctx, Empty()):
            (p0,) = _prems(d, CtxWf)
            _eq(p0.ctx, ctx, "context premise")
        case _:
            fail("conclusion is not well-formedness of Empty")


@rule("IdTy")
def _r_id_ty(d: Derivation) -> None:
    match d.conclusion:
        case TyWf(ctx, Id(a, l, r)):
            pass
        case _:
            fail("conclusion is not well-formedness of an Id type")
    p0, p1, p2 = _prems(d, TyWf, Typed, Typed)
    _eq(p0, TyWf(ctx, a), "carrier premise")
    _eq(p1, Typed(ctx, l, a), "left endpoint premise")
    _eq(p2, Typed(ctx, r, a), "right endpoint premise")


@rule("El")
def _r_el(d: Derivation) -> None:
    match d.conclusion:
        case TyWf(ctx, a):
            (p0,) = _prems(d, Typed)
            _eq(p0, Typed(ctx, a, UNIV), "universe typing premise")
        case _:
            fail("conclusion is not a type well-formedness judgment")


@rule("UnivTy")
def _r_univ_ty(d: Derivation) -> None:
    match d.conclusion:
        case TyWf(ctx, Univ()):
            (p0,) = _prems(d, CtxWf)
            _eq(p0.ctx, ctx, "context premise")
        case _:
            fail("conclusion is not well-formedness of the universe")


# ---------------------------------------------------------------------------
# Typing


@rule("Conv")
def _r_conv(d: Derivation) -> None:
    # one name for the two conversion coercion rules, distinguished by
    # the conclusion's judgment form
    match d.conclusion:
        case Typed(ctx, t, b):
            p0, p1 = _prems(d, Typed, ConvTy)
            _eq((p0.ctx, p0.tm), (ctx, t), "subject of the typing premise")
            _eq(p1, ConvTy(ctx, p0.ty, b), "type conversion premise")
        case ConvTm(ctx, b, l, r):
            p0, p1 = _prems(d, ConvTm, ConvTy)
            _eq((p0.ctx, p0.lhs, p0.rhs), (ctx, l, r),
                "subjects of the conversion premise")
            _eq(p1, ConvTy(ctx, p0.ty, b), "type conversion premise")
        case _:
            fail("conclusion is neither a typing nor a term conversion judgment")


@rule("Var")
def _r_var(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Var(ix), ty):
            pass
        case _:
            fail("conclusion is not a variable typing judgment")
    (p0,) = _prems(d, CtxWf)
    _eq(p0.ctx, ctx, "context premise")
    _eq(ty, ctx.lookup(ix), "declared type of the variable")


@rule("FunUni")
def _r_fun_uni(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Pi(dom, cod), Univ()):
            pass
        case _:
            fail("conclusion is not a function type at the universe")
    p0, p1 = _prems(d, Typed, Typed)
    _eq(p0, Typed(ctx, dom, UNIV), "domain premise")
    _eq(p1, Typed(ctx.push(dom), cod, UNIV), "codomain premise")


@rule("Abs")
def _r_abs(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Lam(ann, body), Pi(dom, cod)) if ann == dom:
            pass
        case _:
            fail("conclusion is not a lambda whose annotation is the domain")
    p0, p1, p2 = _prems(d, TyWf, TyWf, Typed)
    _eq(p0, TyWf(ctx, dom), "domain premise")
    _eq(p1, TyWf(ctx.push(dom), cod), "codomain premise")
    _eq(p2, Typed(ctx.push(dom), body, cod), "body premise")


@rule("App")
def _r_app(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, App(fn, arg), ty):
            pass
        case _:
            fail("conclusion is not an application typing judgment")
    p0, p1 = _prems(d, Typed, Typed)
    match p0:
        case Typed(pctx, pfn, Pi(dom, cod)) if pctx == ctx and pfn == fn:
            pass
        case _:
            fail("head premise does not type the head at a function type")
    _eq(p1, Typed(ctx, arg, dom), "argument premise")
    _eq(ty, subst1(cod, arg), "instantiated codomain")


@rule("SigUni")
def _r_sig_uni(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Sig(dom, cod), Univ()):
            pass
        case _:
            fail("conclusion is not a pair type at the universe")
    p0, p1 = _prems(d, Typed, Typed)
    _eq(p0, Typed(ctx, dom, UNIV), "domain premise")
    _eq(p1, Typed(ctx.push(dom), cod, UNIV), "codomain premise")


@rule("Pair")
def _r_pair(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Pair(adom, acod, first, second), Sig(dom, cod)) \
                if adom == dom and acod == cod:
            pass
        case _:
            fail("conclusion is not a pair whose annotations are the pair type")
    p0, p1 = _prems(d, Typed, Typed)
    _eq(p0, Typed(ctx, first, dom), "first component premise")
    _eq(p1, Typed(ctx, second, subst1(cod, first)), "second component premise")


@rule("Proj1")
def _r_proj1(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Fst(p), ty):
            pass
        case _:
            fail("conclusion is not a first projection")
    (p0,) = _prems(d, Typed)
    match p0:
        case Typed(pctx, pp, Sig(dom, _)) if pctx == ctx and pp == p:
            _eq(ty, dom, "projected type")
        case _:
            fail("premise does not type the pair at a pair type")


@rule("Proj2")
def _r_proj2(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Snd(p), ty):
            pass
        case _:
            fail("conclusion is not a second projection")
    (p0,) = _prems(d, Typed)
    match p0:
        case Typed(pctx, pp, Sig(_, cod)) if pctx == ctx and pp == p:
            _eq(ty, subst1(cod, Fst(p)), "projected type")
        case _:
            fail("premise does not type the pair at a pair type")


@rule("NatUni")
def _r_nat_uni(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Nat(), Univ()):
            (p0,) = _prems(d, CtxWf)
            _eq(p0.ctx, ctx, "context premise")
        case _:
            fail("conclusion is not Nat at the universe")


@rule("Zero")
def _r_zero(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Zero(), Nat()):
            (p0,) = _prems(d, CtxWf)
            _eq(p0.ctx, ctx, "context premise")
        case _:
            fail("conclusion is not zero at Nat")


@rule("Succ")
def _r_succ(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Succ(pred), Nat()):
            (p0,) = _prems(d, Typed)
            _eq(p0, Typed(ctx, pred, NAT), "predecessor premise")
        case _:
            fail("conclusion is not a successor at Nat")


@rule("NatRec")
def _r_nat_rec(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, NatElim(motive, base, stp, scrut), ty):
            pass
        case _:
            fail("conclusion is not a Nat elimination")
    p0, p1, p2, p3 = _prems(d, Typed, TyWf, Typed, Typed)
    _eq(p0, Typed(ctx, scrut, NAT), "scrutinee premise")
    _eq(p1, TyWf(ctx.push(NAT), motive), "motive premise")
    _eq(p2, Typed(ctx, base, subst1(motive, Zero())), "base premise")
    _eq(p3, Typed(ctx.push(NAT).push(motive), stp, _motive_succ(motive)),
        "step premise")
    _eq(ty, subst1(motive, scrut), "instantiated motive")


@rule("EmptyUni")
def _r_empty_uni(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Empty(), Univ()):
            (p0,) = _prems(d, CtxWf)
            _eq(p0.ctx, ctx, "context premise")
        case _:
            fail("conclusion is not Empty at the universe")


@rule("EmptyInd")
def _r_empty_ind(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, EmptyElim(motive, scrut), ty):
            pass
        case _:
            fail("conclusion is not an Empty elimination")
    p0, p1 = _prems(d, Typed, TyWf)
    _eq(p0, Typed(ctx, scrut, Empty()), "scrutinee premise")
    _eq(p1, TyWf(ctx.push(Empty()), motive), "motive premise")
    _eq(ty, subst1(motive, scrut), "instantiated motive")


@rule("IdUni")
def _r_id_uni(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Id(a, l, r), Univ()):
            pass
        case _:
            fail("conclusion is not an Id type at the universe")
    p0, p1, p2 = _prems(d, Typed, Typed, Typed)
    _eq(p0, Typed(ctx, a, UNIV), "carrier premise")
    _eq(p1, Typed(ctx, l, a), "left endpoint premise")
    _eq(p2, Typed(ctx, r, a), "right endpoint premise")


@rule("ReflTm")
def _r_refl_tm(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, Refl(a, x), Id(ta, tl, tr)) \
                if ta == a and tl == x and tr == x:
            pass
        case _:
            fail("conclusion is not refl at the matching reflexive Id type")
    p0, p1 = _prems(d, TyWf, Typed)
    _eq(p0, TyWf(ctx, a), "carrier premise")
    _eq(p1, Typed(ctx, x, a), "endpoint premise")


@rule("IdInd")
def _r_id_ind(d: Derivation) -> None:
    match d.conclusion:
        case Typed(ctx, IdElim(a, x, motive, branch, scrut), ty):
            pass
        case _:
            fail("conclusion is not an Id elimination")
    p0, p1, p2, p3, p4, p5 = _prems(d, TyWf, Typed, Typed, Typed, TyWf, Typed)
    _eq(p0, TyWf(ctx, a), "carrier premise")
    _eq(p1, Typed(ctx, x, a), "left endpoint premise")
    match p2:
        case Typed(pctx, rhs, pa) if pctx == ctx and pa == a:
            pass
        case _:
            fail("right endpoint premise is not at the carrier")
    _eq(p3, Typed(ctx, scrut, Id(a, x, rhs)), "scrutinee premise")
    _eq(p4, TyWf(_id_motive_ctx(ctx, a, x), motive), "motive premise")
    _eq(p5, Typed(ctx, branch, subst2(motive, x, Refl(a, x))), "branch premise")
    _eq(ty, subst2(motive, rhs, scrut), "instantiated motive")


# ---------------------------------------------------------------------------
# Type conversion


@rule("ReflTy")
def _r_refl_ty(d: Derivation) -> None:
    match d.conclusion:
        case ConvTy(ctx, l, r) if l == r:
            (p0,) = _prems(d, TyWf)
            _eq(p0, TyWf(ctx, l), "well-formedness premise")
        case _:
            fail("conclusion does not equate a type with itself")


@rule("SymTy")
def _r_sym_ty(d: Derivation) -> None:
    match d.conclusion:
        case ConvTy(ctx, l, r):
            (p0,) = _prems(d, ConvTy)
            _eq(p0, ConvTy(ctx, r, l), "flipped premise")
        case _:
            fail("conclusion is not a type conversion judgment")


@rule("TransTy")
def _r_trans_ty(d: Derivation) -> None:
    match d.conclusion:
        case ConvTy(ctx, l, r):
            pass
        case _:
            fail("conclusion is not a type conversion judgment")
    p0, p1 = _prems(d, ConvTy, ConvTy)
    _eq((p0.ctx, p0.lhs), (ctx, l), "left premise endpoints")
    _eq(p1, ConvTy(ctx, p0.rhs, r), "right premise endpoints")


@rule("ElC")
def _r_el_c(d: Derivation) -> None:
    match d.conclusion:
        case ConvTy(ctx, l, r):
            (p0,) = _prems(d, ConvTm)
            _eq(p0, ConvTm(ctx, UNIV, l, r), "universe conversion premise")
        case _:
            fail("conclusion is not a type conversion judgment")


@rule("FunTyC")
def _r_fun_ty_c(d: Derivation) -> None:
    match d.conclusion:
        case ConvTy(ctx, Pi(dom, cod), Pi(dom2, cod2)):
            pass
        case _:
            fail("conclusion does not equate two function types")
    p0, p1 = _prems(d, ConvTy, ConvTy)
    _eq(p0, ConvTy(ctx, dom, dom2), "domain premise")
    _eq(p1, ConvTy(ctx.push(dom), cod, cod2), "codomain premise")


@rule("SigTyC")
def _r_sig_ty_c(d: Derivation) -> None:
    match d.conclusion:
        case ConvTy(ctx, Sig(dom, cod), Sig(dom2, cod2)):
            pass
        case _:
            fail("conclusion does not equate two pair types")
    p0, p1 = _prems(d, ConvTy, ConvTy)
    _eq(p0, ConvTy(ctx, dom, dom2), "domain premise")
    _eq(p1, ConvTy(ctx.push(dom), cod, cod2), "codomain premise")


@rule("IdTyC")
def _r_id_ty_c(d: Derivation) -> None:
    match d.conclusion:
        case ConvTy(ctx, Id(a, l, r), Id(a2, l2, r2)):
            pass
        case _:
            fail("conclusion does not equate two Id types")
    p0, p1, p2 = _prems(d, ConvTy, ConvTm, ConvTm)
    _eq(p0, ConvTy(ctx, a, a2), "carrier premise")
    _eq(p1, ConvTm(ctx, a, l, l2), "left endpoint premise")
    _eq(p2, ConvTm(ctx, a, r, r2), "right endpoint premise")


# ---------------------------------------------------------------------------
# Term conversion


@rule("Refl")
def _r_refl(d: Derivation) -> None:
    match d.conclusion:
        case ConvTm(ctx, ty, l, r) if l == r:
            (p0,) = _prems(d, Typed)
            _eq(p0, Typed(ctx, l, ty), "typing premise")
        case _:
            fail("conclusion does not equate a term with itself")


@rule("Sym")
def _r_sym(d: Derivation) -> None:
    match d.conclusion:
        case ConvTm(ctx, ty, l, r):
            (p0,) = _prems(d, ConvTm)
            _eq(p0, ConvTm(ctx, ty, r, l), "flipped premise")
        case _:
            fail("conclusion is not a term conversion judgment")


@rule("Trans")
def _r_trans(d: Derivation) -> None:
    match d.conclusion:
        case ConvTm(ctx, ty, l, r):
            pass
        case _:
            fail("conclusion is not a term conversion judgment")
    p0, p1 = _prems(d, ConvTm, ConvTm)
    _eq((p0.ctx, p0.ty, p0.lhs), (ctx, ty, l), "left premise")
    _eq(p1, ConvTm(ctx, ty, p0.rhs, r), "right premise")


@rule("FunCong")
def _r_fun_cong(d: Derivation) -> None:
    match d.conclusion:
        case ConvTm(ctx, Univ(), Pi(dom, cod), Pi(dom2, cod2)):
            pass
        case _:
            fail("conclusion does not equate two function types at the universe")
    p0, p1 = _prems(d, ConvTm, ConvTm)
    _eq(p0, ConvTm(ctx, UNIV, dom, dom2), "domain premise")
    _eq(p1, ConvTm(ctx.push(dom), UNIV, cod, cod2), "codomain premise")


@rule("SigCong")
def _r_sig_cong(d: Derivation) -> None:
    # reconstructed congruence, mirroring FunCong
    match d.conclusion:
        case ConvTm(ctx, Univ(), Sig(dom, cod), Sig(dom2, cod2)):
            pass
        case _:
            fail("conclusion does not equate two pair types at the universe")
    p0, p1 = _prems(d, ConvTm, ConvTm)
    _eq(p0, ConvTm(ctx, UNIV, dom, dom2), "domain premise")
    _eq(p1, ConvTm(ctx.push(dom), UNIV, cod, cod2), "codomain premise")


@rule("IdCong")
def _r_id_cong(d: Derivation) -> None:
    # reconstructed congruence, mirroring the Id type conversion rule
    match d.conclusion:
        case ConvTm(ctx, Univ(), Id(a, l, r), Id(a2, l2, r2)):
            pass
        case _:
            fail("conclusion does not equate two Id types at the universe")
    p0, p1, p2 = _prems(d, ConvTm, ConvTm, ConvTm)
    _eq(p0, ConvTm(ctx, UNIV, a, a2), "carrier premise")
    _eq(p1, ConvTm(ctx, a, l, l2), "left endpoint premise")
    _eq(p2, ConvTm(ctx, a, r, r2), "right endpoint premise")


@rule("LamCong")
def _r_lam_cong(d: Derivation) -> None:
    # reconstructed congruence; annotations are unconstrained, as in the
    # algorithmic comparisons
    match d.conclusion:
        case ConvTm(ctx, Pi(dom, cod), Lam(body=body), Lam(body=body2)):
            (p0,) = _prems(d, ConvTm)
            _eq(p0, ConvTm(ctx.push(dom), cod, body, body2), "body premise")
        case _:
            fail("conclusion does not equate two lambdas at a function type")


@rule("PairCong")
def _r_pair_cong(d: Derivation) -> None:
    # reconstructed congruence; annotations are unconstrained
    match d.conclusion:
        case ConvTm(ctx, Sig(dom, cod),
                    Pair(first=p, second=q), Pair(first=p2, second=q2)):
            pass
        case _:
            fail("conclusion does not equate two pairs at a pair type")
    c0, c1 = _prems(d, ConvTm, ConvTm)
    _eq(c0, ConvTm(ctx, dom, p, p2), "first component premise")
    _eq(c1, ConvTm(ctx, subst1(cod, p), q, q2), "second component premise")


@rule("SuccCong")
def _r_succ_cong(d: Derivation) -> None:
    # reconstructed congruence
    match d.conclusion:
        case ConvTm(ctx, Nat(), Succ(l), Succ(r)):
            (p0,) = _prems(d, ConvTm)
            _eq(p0, ConvTm(ctx, NAT, l, r), "predecessor premise")
        case _:
            fail("conclusion does not equate two successors at Nat")


@rule("ReflCong")
def _r_refl_cong(d: Derivation) -> None:
    # reconstructed congruence; no premises, annotations ignored, mirroring
    # the algorithmic refl rule
    match d.conclusion:
        case ConvTm(_, Id(), Refl(), Refl()):
            _prems(d)
        case _:
            fail("conclusion does not equate two refls at an Id type")


@rule("BetaFun")
def _r_beta_fun(d: Derivation) -> None:
    match d.conclusion:
        case ConvTm(ctx, ty, App(Lam(ann, body), arg), reduct):
            pass
        case _:
            fail("conclusion is not a beta redex equation")
    p0, p1, p2, p3 = _prems(d, TyWf, TyWf, Typed, Typed)
    _eq(p0, TyWf(ctx, ann), "domain premise")
    match p1:
        case TyWf(pctx, cod) if pctx == ctx.push(ann):
            pass
        case _:
            fail("codomain premise is not under the domain")
    _eq(p2, Typed(ctx.push(ann), body, cod), "body premise")
    _eq(p3, Typed(ctx, arg, ann), "argument premise")
    _eq(reduct, subst1(body, arg), "contracted right-hand side")
    _eq(ty, subst1(cod, arg), "instantiated codomain")


@rule("EtaFun")
def _r_eta_fun(d: Derivation) -> None:
    match d.conclusion:
        case ConvTm(ctx, Pi(dom, cod) as pi, f, expansion):
            pass
        case _:
            fail("conclusion is not at a function type")
    (p0,) = _prems(d, Typed)
    _eq(p0, Typed(ctx, f, pi), "typing premise")
    _eq(expansion, Lam(dom, App(shift(f), Var(0))), "eta expansion")


@rule("BetaSig1")
def _r_beta_sig1(d: Derivation) -> None:
    match d.conclusion:
        case ConvTm(ctx, ty, Fst(Pair(adom, acod, first, second)), reduct):
            pass
        case _:
            fail("conclusion is not a first projection redex equation")
    p0, p1, p2, p3 = _prems(d, TyWf, TyWf, Typed, Typed)
    _eq(p0, TyWf(ctx, adom), "domain premise")
    _eq(p1, TyWf(ctx.push(adom), acod), "codomain premise")
    _eq(p2, Typed(ctx, first, adom), "first component premise")
    _eq(p3, Typed(ctx, second, subst1(acod, first)), "second component premise")
    _eq(reduct, first, "contracted right-hand side")
    _eq(ty, adom, "type of the projection")


@rule("BetaSig2")
def _r_beta_sig2(d: Derivation) -> None:
    match d.conclusion:
        case ConvTm(ctx, ty, Snd(Pair(adom, acod, first, second)), reduct):
            pass
        case _:
            fail("conclusion is not a second projection redex equation")
    p0, p1, p2, p3 = _prems(d, TyWf, TyWf, Typed, Typed)
    _eq(p0, TyWf(ctx, adom), "domain premise")
    _eq(p1, TyWf(ctx.push(adom), acod), "codomain premise")
    _eq(p2, Typed(ctx, first, adom), "first component premise")
    _eq(p3, Typed(ctx, second, subst1(acod, first)), "second component premise")
    _eq(reduct, second, "contracted right-hand side")
    _eq(ty, subst1(acod, first), "type of the projection")


@rule("EtaSig")
def _r_eta_sig(d: Derivation) -> None:
    match d.conclusion:
        case ConvTm(ctx, Sig(dom, cod) as sig, p, expansion):
            pass
        case _:
            fail("conclusion is not at a pair type")
    p0, p1, p2 = _prems(d, TyWf, TyWf, Typed)
    _eq(p0, TyWf(ctx, dom), "domain premise")
    _eq(p1, TyWf(ctx.push(dom), cod), "codomain premise")
    _eq(p2, Typed(ctx, p, sig), "typing premise")
    _eq(expansion, Pair(dom, cod, Fst(p), Snd(p)), "eta expansion")


@rule("BetaZero")
def _r_beta_zero(d: Derivation) -> None:
    match d.conclusion:
        case ConvTm(ctx, ty, NatElim(motive, base, stp, Zero()), reduct):
            pass
        case _:
            fail("conclusion is not a zero elimination redex equation")
    p0, p1, p2 = _prems(d, TyWf, Typed, Typed)
    _eq(p0, TyWf(ctx.push(NAT), motive), "motive premise")
    _eq(p1, Typed(ctx, base, subst1(motive, Zero())), "base premise")
    _eq(p2, Typed(ctx.push(NAT).push(motive), stp, _motive_succ(motive)),
        "step premise")
    _eq(reduct, base, "contracted right-hand side")
    _eq(ty, subst1(motive, Zero()), "instantiated motive")


@rule("BetaSucc")
def _r_beta_succ(d: Derivation) -> None:
    match d.conclusion:
        case ConvTm(ctx, ty, NatElim(motive, base, stp, Succ(pred)) as e, reduct):
            pass
        case _:
            fail("conclusion is not a successor elimination redex equation")
    p0, p1, p2, p3 = _prems(d, Typed, TyWf, Typed, Typed)
    _eq(p0, Typed(ctx, pred, NAT), "predecessor premise")
    _eq(p1, TyWf(ctx.push(NAT), motive), "motive premise")
    _eq(p2, Typed(ctx, base, subst1(motive, Zero())), "base premise")
    _eq(p3, Typed(ctx.push(NAT).push(motive), stp, _motive_succ(motive)),
        "step premise")
    _eq(reduct, subst2(stp, pred, NatElim(motive, base, stp, pred)),
        "contracted right-hand side")
    _eq(ty, subst1(motive, Succ(pred)), "instantiated motive")


@rule("BetaRefl")
def _r_beta_refl(d: Derivation) -> None:
    match d.conclusion:
        case ConvTm(ctx, ty, IdElim(a, x, motive, branch, Refl(ra, rx)), reduct) \
                if ra == a and rx == x:
            pass
        case _:
            fail("conclusion is not a refl elimination redex equation")
    p0, p1, p2, p3 = _prems(d, TyWf, Typed, TyWf, Typed)
    _eq(p0, TyWf(ctx, a), "carrier premise")
    _eq(p1, Typed(ctx, x, a), "endpoint premise")
    _eq(p2, TyWf(_id_motive_ctx(ctx, a, x), motive), "motive premise")
    _eq(p3, Typed(ctx, branch, subst2(motive, x, Refl(a, x))), "branch premise")
    _eq(reduct, branch, "contracted right-hand side")
    _eq(ty, subst2(motive, x, Refl(a, x)), "instantiated motive")


# ---------------------------------------------------------------------------
# Neutral comparison


@rule("NConv")
def _r_n_conv(d: Derivation) -> None:
    match d.conclusion:
        case NeuCmp(ctx, l, r, ty):
            pass
        case _:
            fail("conclusion is not a neutral comparison judgment")
    p0, p1 = _prems(d, NeuCmp, ConvTy)
    _eq((p0.ctx, p0.lhs, p0.rhs), (ctx, l, r), "compared neutrals")
    _eq(p1, ConvTy(ctx, p0.ty, ty), "type conversion premise")


@rule("NVar")
def _r_n_var(d: Derivation) -> None:
    match d.conclusion:
        case NeuCmp(ctx, Var(i), Var(j), ty) if i == j:
            _prems(d)
            _eq(ty, ctx.lookup(i), "declared type of the variable")
        case _:
            fail("conclusion does not compare a variable with itself")


@rule("NApp")
def _r_n_app(d: Derivation) -> None:
    match d.conclusion:
        case NeuCmp(ctx, App(fn, arg), App(fn2, arg2), ty):
            pass
        case _:
            fail("conclusion does not compare two applications")
    p0, p1 = _prems(d, NeuCmp, ConvTm)
    match p0:
        case NeuCmp(pctx, pl, pr, Pi(dom, cod)) \
                if pctx == ctx and pl == fn and pr == fn2:
            pass
        case _:
            fail("head premise does not compare the heads at a function type")
    _eq(p1, ConvTm(ctx, dom, arg, arg2), "argument premise")
    _eq(ty, subst1(cod, arg), "instantiated codomain")


@rule("NSig1")
def _r_n_sig1(d: Derivation) -> None:
    match d.conclusion:
        case NeuCmp(ctx, Fst(p), Fst(p2), ty):
            pass
        case _:
            fail("conclusion does not compare two first projections")
    (p0,) = _prems(d, NeuCmp)
    match p0:
        case NeuCmp(pctx, pl, pr, Sig(dom, _)) \
                if pctx == ctx and pl == p and pr == p2:
            _eq(ty, dom, "projected type")
        case _:
            fail("premise does not compare the pairs at a pair type")


@rule("NSig2")
def _r_n_sig2(d: Derivation) -> None:
    match d.conclusion:
        case NeuCmp(ctx, Snd(p), Snd(p2), ty):
            pass
        case _:
            fail("conclusion does not compare two second projections")
    (p0,) = _prems(d, NeuCmp)
    match p0:
        case NeuCmp(pctx, pl, pr, Sig(_, cod)) \
                if pctx == ctx and pl == p and pr == p2:
            _eq(ty, subst1(cod, Fst(p)), "projected type")
        case _:
            fail("premise does not compare the pairs at a pair type")


@rule("NNatElim")
def _r_n_nat_elim(d: Derivation) -> None:
    match d.conclusion:
        case NeuCmp(ctx, NatElim(motive, base, stp, scrut),
                    NatElim(motive2, base2, stp2, scrut2), ty):
            pass
        case _:
            fail("conclusion does not compare two Nat eliminations")
    p0, p1, p2, p3 = _prems(d, NeuCmp, ConvTy, ConvTm, ConvTm)
    _eq(p0, NeuCmp(ctx, scrut, scrut2, NAT), "scrutinee premise")
    _eq(p1, ConvTy(ctx.push(NAT), motive, motive2), "motive premise")
    _eq(p2, ConvTm(ctx, subst1(motive, Zero()), base, base2), "base premise")
    _eq(p3, ConvTm(ctx.push(NAT).push(motive), _motive_succ(motive), stp, stp2),
        "step premise")
    _eq(ty, subst1(motive, scrut), "instantiated motive")


@rule("NEmptyElim")
def _r_n_empty_elim(d: Derivation) -> None:
    match d.conclusion:
        case NeuCmp(ctx, EmptyElim(motive, scrut), EmptyElim(motive2, scrut2), ty):
            pass
        case _:
            fail("conclusion does not compare two Empty eliminations")
    p0, p1 = _prems(d, NeuCmp, ConvTy)
    _eq(p0, NeuCmp(ctx, scrut, scrut2, Empty()), "scrutinee premise")
    _eq(p1, ConvTy(ctx.push(Empty()), motive, motive2), "motive premise")
    _eq(ty, subst1(motive, scrut), "instantiated motive")


@rule("NIdInd")
def _r_n_id_ind(d: Derivation) -> None:
    match d.conclusion:
        case NeuCmp(ctx, IdElim(a, x, motive, branch, scrut),
                    IdElim(_, _, motive2, branch2, scrut2), ty):
            pass
        case _:
            fail("conclusion does not compare two Id eliminations")
    p0, p1, p2 = _prems(d, NeuCmp, ConvTy, ConvTm)
    match p0:
        case NeuCmp(pctx, pl, pr, Id(_, _, rhs)) \
                if pctx == ctx and pl == scrut and pr == scrut2:
            pass
        case _:
            fail("scrutinee premise does not compare the scrutinees at an Id type")
    _eq(p1, ConvTy(_id_motive_ctx(ctx, a, x), motive, motive2), "motive premise")
    _eq(p2, ConvTm(ctx, subst2(motive, x, Refl(a, x)), branch, branch2),
        "branch premise")
    _eq(ty, subst2(motive, rhs, scrut), "instantiated motive")


# ---------------------------------------------------------------------------
# Deep normalisation, with reduction premises fused in


@rule("Red")
def _r_red(d: Derivation) -> None:
    match d.conclusion:
        case Red(src, tgt):
            _prems(d)
            _reaches(src, tgt)
        case _:
            fail("conclusion is not a reduction judgment")


def _red_prem(concl: Judgment, src: Term, what: str) -> Term:
    """Bind the reduct of a fused reduction premise."""
    match concl:
        case Red(psrc, tgt) if psrc == src:
            return tgt
        case _:
            fail(f"{what} does not reduce the expected subject")
    raise AssertionError


@rule("DnfFunTy")
def _r_dnf_fun_ty(d: Derivation) -> None:
    match d.conclusion:
        case DnfTy(ctx, ty):
            pass
        case _:
            fail("conclusion is not a type normalisation judgment")
    p0, p1, p2 = _prems(d, Red, DnfTy, DnfTy)
    match _red_prem(p0, ty, "reduction premise"):
        case Pi(dom, cod):
            pass
        case _:
            fail("the type does not reduce to a function type")
    _eq(p1, DnfTy(ctx, dom), "domain premise")
    _eq(p2, DnfTy(ctx.push(dom), cod), "codomain premise")


@rule("DnfSigTy")
def _r_dnf_sig_ty(d: Derivation) -> None:
    match d.conclusion:
        case DnfTy(ctx, ty):
            pass
        case _:
            fail("conclusion is not a type normalisation judgment")
    p0, p1, p2 = _prems(d, Red, DnfTy, DnfTy)
    match _red_prem(p0, ty, "reduction premise"):
        case Sig(dom, cod):
            pass
        case _:
            fail("the type does not reduce to a pair type")
    _eq(p1, DnfTy(ctx, dom), "domain premise")
    _eq(p2, DnfTy(ctx.push(dom), cod), "codomain premise")


@rule("DnfNatTy")
def _r_dnf_nat_ty(d: Derivation) -> None:
    match d.conclusion:
        case DnfTy(_, ty):
            (p0,) = _prems(d, Red)
            _eq(_red_prem(p0, ty, "reduction premise"), NAT, "reduct")
        case _:
            fail("conclusion is not a type normalisation judgment")


@rule("DnfEmptyTy")
def _r_dnf_empty_ty(d: Derivation) -> None:
    match d.conclusion:
        case DnfTy(_, ty):
            (p0,) = _prems(d, Red)
            _eq(_red_prem(p0, ty, "reduction premise"), Empty(), "reduct")
        case _:
            fail("conclusion is not a type normalisation judgment")


@rule("DnfUnivTy")
def _r_dnf_univ_ty(d: Derivation) -> None:
    match d.conclusion:
        case DnfTy(_, ty):
            (p0,) = _prems(d, Red)
            _eq(_red_prem(p0, ty, "reduction premise"), UNIV, "reduct")
        case _:
            fail("conclusion is not a type normalisation judgment")


@rule("DnfIdTy")
def _r_dnf_id_ty(d: Derivation) -> None:
    match d.conclusion:
        case DnfTy(ctx, ty):
            pass
        case _:
            fail("conclusion is not a type normalisation judgment")
    p0, p1, p2, p3 = _prems(d, Red, DnfTy, DnfTm, DnfTm)
    match _red_prem(p0, ty, "reduction premise"):
        case Id(a, l, r):
            pass
        case _:
            fail("the type does not reduce to an Id type")
    _eq(p1, DnfTy(ctx, a), "carrier premise")
    _eq(p2, DnfTm(ctx, a, l), "left endpoint premise")
    _eq(p3, DnfTm(ctx, a, r), "right endpoint premise")


@rule("DnfNeuTy")
def _r_dnf_neu_ty(d: Derivation) -> None:
    match d.conclusion:
        case DnfTy(ctx, ty):
            pass
        case _:
            fail("conclusion is not a type normalisation judgment")
    p0, p1 = _prems(d, Red, DneTm)
    n = _red_prem(p0, ty, "reduction premise")
    if not is_neutral(n):
        fail("the type does not reduce to a neutral")
    _eq((p1.ctx, p1.tm), (ctx, n), "neutral premise")


@rule("DnfFun")
def _r_dnf_fun(d: Derivation) -> None:
    match d.conclusion:
        case DnfTm(ctx, ty, tm):
            pass
        case _:
            fail("conclusion is not a term normalisation judgment")
    p0, p1, p2 = _prems(d, Red, Red, DnfTm)
    match _red_prem(p0, ty, "type reduction premise"):
        case Pi(dom, cod):
            pass
        case _:
            fail("the type does not reduce to a function type")
    u = _red_prem(p1, tm, "term reduction premise")
    _eq(p2, DnfTm(ctx.push(dom), cod, App(shift(u), Var(0))),
        "eta expansion premise")


@rule("DnfSig")
def _r_dnf_sig(d: Derivation) -> None:
    match d.conclusion:
        case DnfTm(ctx, ty, tm):
            pass
        case _:
            fail("conclusion is not a term normalisation judgment")
    p0, p1, p2, p3 = _prems(d, Red, Red, DnfTm, DnfTm)
    match _red_prem(p0, ty, "type reduction premise"):
        case Sig(dom, cod):
            pass
        case _:
            fail("the type does not reduce to a pair type")
    u = _red_prem(p1, tm, "term reduction premise")
    _eq(p2, DnfTm(ctx, dom, Fst(u)), "first projection premise")
    _eq(p3, DnfTm(ctx, subst1(cod, Fst(u)), Snd(u)), "second projection premise")


@rule("DnfFunUni")
def _r_dnf_fun_uni(d: Derivation) -> None:
    match d.conclusion:
        case DnfTm(ctx, ty, tm):
            pass
        case _:
            fail("conclusion is not a term normalisation judgment")
    p0, p1, p2, p3 = _prems(d, Red, Red, DnfTm, DnfTm)
    _eq(_red_prem(p0, ty, "type reduction premise"), UNIV, "reduced type")
    match _red_prem(p1, tm, "term reduction premise"):
        case Pi(dom, cod):
            pass
        case _:
            fail("the term does not reduce to a function type")
    _eq(p2, DnfTm(ctx, UNIV, dom), "domain premise")
    _eq(p3, DnfTm(ctx.push(dom), UNIV, cod), "codomain premise")


@rule("DnfSigUni")
def _r_dnf_sig_uni(d: Derivation) -> None:
    match d.conclusion:
        case DnfTm(ctx, ty, tm):
            pass
        case _:
            fail("conclusion is not a term normalisation judgment")
    p0, p1, p2, p3 = _prems(d, Red, Red, DnfTm, DnfTm)
    _eq(_red_prem(p0, ty, "type reduction premise"), UNIV, "reduced type")
    match _red_prem(p1, tm, "term reduction premise"):
        case Sig(dom, cod):
            pass
        case _:
            fail("the term does not reduce to a pair type")
    _eq(p2, DnfTm(ctx, UNIV, dom), "domain premise")
    _eq(p3, DnfTm(ctx.push(dom), UNIV, cod), "codomain premise")


@rule("DnfNatUni")
def _r_dnf_nat_uni(d: Derivation) -> None:
    match d.conclusion:
        case DnfTm(_, ty, tm):
            p0, p1 = _prems(d, Red, Red)
            _eq(_red_prem(p0, ty, "type reduction premise"), UNIV, "reduced type")
            _eq(_red_prem(p1, tm, "term reduction premise"), NAT, "reduced term")
        case _:
            fail("conclusion is not a term normalisation judgment")


@rule("DnfEmptyUni")
def _r_dnf_empty_uni(d: Derivation) -> None:
    match d.conclusion:
        case DnfTm(_, ty, tm):
            p0, p1 = _prems(d, Red, Red)
            _eq(_red_prem(p0, ty, "type reduction premise"), UNIV, "reduced type")
            _eq(_red_prem(p1, tm, "term reduction premise"), Empty(),
                "reduced term")
        case _:
            fail("conclusion is not a term normalisation judgment")


@rule("DnfIdUni")
def _r_dnf_id_uni(d: Derivation) -> None:
    match d.conclusion:
        case DnfTm(ctx, ty, tm):
            pass
        case _:
            fail("conclusion is not a term normalisation judgment")
    p0, p1, p2, p3, p4 = _prems(d, Red, Red, DnfTm, DnfTm, DnfTm)
    _eq(_red_prem(p0, ty, "type reduction premise"), UNIV, "reduced type")
    match _red_prem(p1, tm, "term reduction premise"):
        case Id(a, l, r):
            pass
        case _:
            fail("the term does not reduce to an Id type")
    _eq(p2, DnfTm(ctx, UNIV, a), "carrier premise")
    _eq(p3, DnfTm(ctx, a, l), "left endpoint premise")
    _eq(p4, DnfTm(ctx, a, r), "right endpoint premise")


@rule("DnfZero")
def _r_dnf_zero(d: Derivation) -> None:
    match d.conclusion:
        case DnfTm(_, ty, tm):
            p0, p1 = _prems(d, Red, Red)
            _eq(_red_prem(p0, ty, "type reduction premise"), NAT, "reduced type")
            _eq(_red_prem(p1, tm, "term reduction premise"), Zero(),
                "reduced term")
        case _:
            fail("conclusion is not a term normalisation judgment")


@rule("DnfSucc")
def _r_dnf_succ(d: Derivation) -> None:
    match d.conclusion:
        case DnfTm(ctx, ty, tm):
            pass
        case _:
            fail("conclusion is not a term normalisation judgment")
    p0, p1, p2 = _prems(d, Red, Red, DnfTm)
    _eq(_red_prem(p0, ty, "type reduction premise"), NAT, "reduced type")
    match _red_prem(p1, tm, "term reduction premise"):
        case Succ(pred):
            pass
        case _:
            fail("the term does not reduce to a successor")
    _eq(p2, DnfTm(ctx, NAT, pred), "predecessor premise")


@rule("DnfRefl")
def _r_dnf_refl(d: Derivation) -> None:
    match d.conclusion:
        case DnfTm(_, ty, tm):
            p0, p1 = _prems(d, Red, Red)
            if not isinstance(_red_prem(p0, ty, "type reduction premise"), Id):
                fail("the type does not reduce to an Id type")
            if not isinstance(_red_prem(p1, tm, "term reduction premise"), Refl):
                fail("the term does not reduce to refl")
        case _:
            fail("conclusion is not a term normalisation judgment")


@rule("DnfNeuPos")
def _r_dnf_neu_pos(d: Derivation) -> None:
    match d.conclusion:
        case DnfTm(ctx, ty, tm):
            pass
        case _:
            fail("conclusion is not a term normalisation judgment")
    p0, p1, p2 = _prems(d, Red, Red, DneTm)
    pos = _red_prem(p0, ty, "type reduction premise")
    if not is_pos(pos):
        fail("the type does not reduce to a positive type")
    n = _red_prem(p1, tm, "term reduction premise")
    if not is_neutral(n):
        fail("the term does not reduce to a neutral")
    _eq((p2.ctx, p2.tm), (ctx, n), "neutral premise")


@rule("DneVar")
def _r_dne_var(d: Derivation) -> None:
    match d.conclusion:
        case DneTm(ctx, Var(i), ty):
            _prems(d)
            _eq(ty, ctx.lookup(i), "declared type of the variable")
        case _:
            fail("conclusion is not a variable neutral judgment")


@rule("DneApp")
def _r_dne_app(d: Derivation) -> None:
    match d.conclusion:
        case DneTm(ctx, App(fn, arg), ty):
            pass
        case _:
            fail("conclusion is not an application neutral judgment")
    p0, p1, p2 = _prems(d, DneTm, Red, DnfTm)
    _eq((p0.ctx, p0.tm), (ctx, fn), "head premise")
    match _red_prem(p1, p0.ty, "head type reduction premise"):
        case Pi(dom, cod):
            pass
        case _:
            fail("the head type does not reduce to a function type")
    _eq(p2, DnfTm(ctx, dom, arg), "argument premise")
    _eq(ty, subst1(cod, arg), "instantiated codomain")


@rule("DneFst")
def _r_dne_fst(d: Derivation) -> None:
    match d.conclusion:
        case DneTm(ctx, Fst(p), ty):
            pass
        case _:
            fail("conclusion is not a first projection neutral judgment")
    p0, p1 = _prems(d, DneTm, Red)
    _eq((p0.ctx, p0.tm), (ctx, p), "head premise")
    match _red_prem(p1, p0.ty, "head type reduction premise"):
        case Sig(dom, _):
            _eq(ty, dom, "projected type")
        case _:
            fail("the head type does not reduce to a pair type")


@rule("DneSnd")
def _r_dne_snd(d: Derivation) -> None:
    match d.conclusion:
        case DneTm(ctx, Snd(p), ty):
            pass
        case _:
            fail("conclusion is not a second projection neutral judgment")
    p0, p1 = _prems(d, DneTm, Red)
    _eq((p0.ctx, p0.tm), (ctx, p), "head premise")
    match _red_prem(p1, p0.ty, "head type reduction premise"):
        case Sig(_, cod):
            _eq(ty, subst1(cod, Fst(p)), "projected type")
        case _:
            fail("the head type does not reduce to a pair type")


@rule("DneNatElim")
def _r_dne_nat_elim(d: Derivation) -> None:
    match d.conclusion:
        case DneTm(ctx, NatElim(motive, base, stp, scrut), ty):
            pass
        case _:
            fail("conclusion is not a Nat elimination neutral judgment")
    p0, p1, p2, p3, p4 = _prems(d, DneTm, Red, DnfTy, DnfTm, DnfTm)
    _eq((p0.ctx, p0.tm), (ctx, scrut), "scrutinee premise")
    _eq(_red_prem(p1, p0.ty, "scrutinee type reduction premise"), NAT,
        "reduced scrutinee type")
    _eq(p2, DnfTy(ctx.push(NAT), motive), "motive premise")
    _eq(p3, DnfTm(ctx, subst1(motive, Zero()), base), "base premise")
    _eq(p4, DnfTm(ctx.push(NAT).push(motive), _motive_succ(motive), stp),
        "step premise")
    _eq(ty, subst1(motive, scrut), "instantiated motive")


@rule("DneEmptyElim")
def _r_dne_empty_elim(d: Derivation) -> None:
    match d.conclusion:
        case DneTm(ctx, EmptyElim(motive, scrut), ty):
            pass
        case _:
            fail("conclusion is not an Empty elimination neutral judgment")
    p0, p1, p2 = _prems(d, DneTm, Red, DnfTy)
    _eq((p0.ctx, p0.tm), (ctx, scrut), "scrutinee premise")
    _eq(_red_prem(p1, p0.ty, "scrutinee type reduction premise"), Empty(),
        "reduced scrutinee type")
    _eq(p2, DnfTy(ctx.push(Empty()), motive), "motive premise")
    _eq(ty, subst1(motive, scrut), "instantiated motive")


@rule("DneIdElim")
def _r_dne_id_elim(d: Derivation) -> None:
    match d.conclusion:
        case DneTm(ctx, IdElim(a, x, motive, branch, scrut), ty):
            pass
        case _:
            fail("conclusion is not an Id elimination neutral judgment")
    p0, p1, p2, p3 = _prems(d, DneTm, Red, DnfTy, DnfTm)
    _eq((p0.ctx, p0.tm), (ctx, scrut), "scrutinee premise")
    match _red_prem(p1, p0.ty, "scrutinee type reduction premise"):
        case Id(_, _, rhs):
            pass
        case _:
            fail("the scrutinee type does not reduce to an Id type")
    _eq(p2, DnfTy(_id_motive_ctx(ctx, a, x), motive), "motive premise")
    _eq(p3, DnfTm(ctx, subst2(motive, x, Refl(a, x)), branch), "branch premise")
    _eq(ty, subst2(motive, rhs, scrut), "instantiated motive")


# ---------------------------------------------------------------------------
# Mutation, for validator-sensitivity tests


_TERM_FIELDS: dict[type, tuple[str, ...]] = {
    CtxWf: (),
    SubstWf: (),
    TyWf: ("ty",),
    Typed: ("tm", "ty"),
    ConvTy: ("lhs", "rhs"),
    ConvTm: ("ty", "lhs", "rhs"),
    NeuCmp: ("lhs", "rhs", "ty"),
    DnfTy: ("ty",),
    DnfTm: ("ty", "tm"),
    DneTm: ("tm", "ty"),
    Red: ("src", "tgt"),
}


def _term_positions(t: Term) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for i, (_, _, child) in enumerate(_children(t)):
        out.extend((i,) + p for p in _term_positions(child))
    return out


def _children(t: Term):
    from .syntax import subterms

    return list(subterms(t))


def _term_at(t: Term, pos: tuple[int, ...]) -> Term:
    for i in pos:
        t = _children(t)[i][2]
    return t


def _replace_at(t: Term, pos: tuple[int, ...], new: Term) -> Term:
    from .syntax import rebuild

    if not pos:
        return new
    kids = [c for _, _, c in _children(t)]
    kids[pos[0]] = _replace_at(kids[pos[0]], pos[1:], new)
    return rebuild(t, kids)


def _tweak(t: Term) -> Term:
    match t:
        case Var(i):
            return Var(i + 1)
        case Zero():
            return Succ(Zero())
        case _:
            return ZERO_SWAP


ZERO_SWAP = Zero()


def _node_paths(d: Derivation) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for i, p in enumerate(d.premises):
        out.extend((i,) + q for q in _node_paths(p))
    return out


def _node_at(d: Derivation, path: tuple[int, ...]) -> Derivation:
    for i in path:
        d = d.premises[i]
    return d


def _replace_node(d: Derivation, path: tuple[int, ...], new: Derivation) -> Derivation:
    if not path:
        return new
    prems = list(d.premises)
    prems[path[0]] = _replace_node(prems[path[0]], path[1:], new)
    return replace(d, premises=tuple(prems))


def mutate(d: Derivation, seed: int) -> Derivation:
    """One local random edit intended to break validity.

    Picks a node and then one of: retag the rule, drop a premise, or edit a
    term inside the conclusion (variables get their index bumped, other
    subterms are swapped out).  The edit can in rare cases produce another
    valid tree; callers test sensitivity statistically, not per mutation.
    """
    rng = random.Random(seed)
    edits: list[Callable[[], Derivation]] = []
    names = sorted(RULES)
    for path in _node_paths(d):
        node = _node_at(d, path)

        def retag(node=node, path=path):
            other = rng.choice([n for n in names if n != node.rule])
            return _replace_node(d, path, replace(node, rule=other))

        edits.append(retag)
        if node.premises:

            def drop(node=node, path=path):
                i = rng.randrange(len(node.premises))
                prems = node.premises[:i] + node.premises[i + 1:]
                return _replace_node(d, path, replace(node, premises=prems))

            edits.append(drop)
        concl = node.conclusion
        for field in _TERM_FIELDS[type(concl)]:
            term = getattr(concl, field)
            for pos in _term_positions(term):

                def edit(node=node, path=path, field=field, term=term, pos=pos):
                    new = _replace_at(term, pos, _tweak(_term_at(term, pos)))
                    return _replace_node(
                        d, path, replace(node, conclusion=replace(
                            node.conclusion, **{field: new})))

                edits.append(edit)
    return rng.choice(edits)()
