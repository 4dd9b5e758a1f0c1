"""Type-directed conversion: checking at a type, eagerly eta-expanding at
negative types, with an inferring comparison of neutral spines.

Five mutually recursive procedures share one fuel budget; each rule
application costs one unit, as does each reduction step performed on their
behalf.  Rejections carry the head pair and the rule path from the root query.
"""

from __future__ import annotations

from typing import Optional

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
    NatElim,
    NAT,
    Pair,
    Pi,
    Refl,
    Sig,
    Snd,
    Succ,
    Term,
    Univ,
    Var,
    Zero,
    head_name,
    is_neutral,
    is_pos,
    shift,
    subst1,
    subst2,
)
from .reduction import whnf_budget
from .verdict import Accept, Budget, OUT_OF_FUEL, OutOfFuel, Outcome, Reason, Reject

Path = tuple[str, ...]


def conv_ty(
    ctx: Context, lhs: Term, rhs: Term, fuel: int,
    trace: Optional[list[tuple[str, int]]] = None,
) -> Outcome:
    """Are two well-formed types convertible?"""
    budget = Budget(fuel, trace)
    return conv_ty_b(ctx, lhs, rhs, budget)


def conv_tm(
    ctx: Context, ty: Term, lhs: Term, rhs: Term, fuel: int,
    trace: Optional[list[tuple[str, int]]] = None,
) -> Outcome:
    """Are two terms of type `ty` convertible?"""
    budget = Budget(fuel, trace)
    return conv_tm_b(ctx, ty, lhs, rhs, budget)


def conv_neu(
    ctx: Context, lhs: Term, rhs: Term, fuel: int,
    trace: Optional[list[tuple[str, int]]] = None,
) -> Outcome:
    """Compare two neutrals, inferring their common type on Accept."""
    budget = Budget(fuel, trace)
    return conv_neu_b(ctx, lhs, rhs, budget)


def conv_ty_red(
    ctx: Context, lhs: Term, rhs: Term, fuel: int,
    trace: Optional[list[tuple[str, int]]] = None,
) -> Outcome:
    budget = Budget(fuel, trace)
    return _conv_ty_red(ctx, lhs, rhs, budget, 0, ())


def conv_tm_red(
    ctx: Context, ty: Term, lhs: Term, rhs: Term, fuel: int,
    trace: Optional[list[tuple[str, int]]] = None,
) -> Outcome:
    budget = Budget(fuel, trace)
    return _conv_tm_red(ctx, ty, lhs, rhs, budget, 0, ())


def conv_neu_red(
    ctx: Context, lhs: Term, rhs: Term, fuel: int,
    trace: Optional[list[tuple[str, int]]] = None,
) -> Outcome:
    budget = Budget(fuel, trace)
    return _conv_neu_red(ctx, lhs, rhs, budget, 0, ())


# Budget-sharing entry points, used by the typing algorithm.

def conv_ty_b(ctx: Context, lhs: Term, rhs: Term, budget: Budget,
              depth: int = 0, path: Path = ()) -> Outcome:
    return _conv_ty(ctx, lhs, rhs, budget, depth, path)


def conv_tm_b(ctx: Context, ty: Term, lhs: Term, rhs: Term, budget: Budget,
              depth: int = 0, path: Path = ()) -> Outcome:
    return _conv_tm(ctx, ty, lhs, rhs, budget, depth, path)


def conv_neu_b(ctx: Context, lhs: Term, rhs: Term, budget: Budget,
               depth: int = 0, path: Path = ()) -> Outcome:
    return _conv_neu(ctx, lhs, rhs, budget, depth, path)


def _mismatch(lhs: Term, rhs: Term, path: Path, detail: str = "") -> Reject:
    return Reject(Reason((head_name(lhs), head_name(rhs)), path, detail))


def _conv_ty(ctx, lhs, rhs, budget, depth, path) -> Outcome:
    if not budget.fire("TyRed", depth):
        return OUT_OF_FUEL
    path = path + ("TyRed",)
    lw = whnf_budget(lhs, budget)
    rw = whnf_budget(rhs, budget)
    if isinstance(lw, OutOfFuel) or isinstance(rw, OutOfFuel):
        return OUT_OF_FUEL
    return _conv_ty_red(ctx, lw.payload, rw.payload, budget, depth + 1, path)


def _conv_ty_red(ctx, lhs, rhs, budget, depth, path) -> Outcome:
    match lhs, rhs:
        case Pi(a, b), Pi(a2, b2):
            if not budget.fire("CProdTy", depth):
                return OUT_OF_FUEL
            path = path + ("CProdTy",)
            out = _conv_ty(ctx, a, a2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            # codomains are compared under the *right* domain
            return _conv_ty(ctx.push(a2), b, b2, budget, depth + 1, path)
        case Sig(a, b), Sig(a2, b2):
            if not budget.fire("CSigTy", depth):
                return OUT_OF_FUEL
            path = path + ("CSigTy",)
            out = _conv_ty(ctx, a, a2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _conv_ty(ctx.push(a), b, b2, budget, depth + 1, path)
        case Nat(), Nat():
            return Accept() if budget.fire("CNatTy", depth) else OUT_OF_FUEL
        case Empty(), Empty():
            return Accept() if budget.fire("CEmptyTy", depth) else OUT_OF_FUEL
        case Univ(), Univ():
            return Accept() if budget.fire("CUniTy", depth) else OUT_OF_FUEL
        case Id(a, l, r), Id(a2, l2, r2):
            if not budget.fire("CIdTy", depth):
                return OUT_OF_FUEL
            path = path + ("CIdTy",)
            out = _conv_ty(ctx, a, a2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = _conv_tm(ctx, a, l, l2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _conv_tm(ctx, a, r, r2, budget, depth + 1, path)
        case _ if is_neutral(lhs) and is_neutral(rhs):
            if not budget.fire("NeuTy", depth):
                return OUT_OF_FUEL
            out = _conv_neu(ctx, lhs, rhs, budget, depth + 1, path + ("NeuTy",))
            # the inferred type is discarded: two comparable neutrals are
            # convertible as types regardless of the universe they sit in
            return Accept() if isinstance(out, Accept) else out
        case _:
            return _mismatch(lhs, rhs, path, "type constructor mismatch")


def _conv_tm(ctx, ty, lhs, rhs, budget, depth, path) -> Outcome:
    if not budget.fire("TTmRed", depth):
        return OUT_OF_FUEL
    path = path + ("TTmRed",)
    tw = whnf_budget(ty, budget)
    lw = whnf_budget(lhs, budget)
    rw = whnf_budget(rhs, budget)
    if any(isinstance(o, OutOfFuel) for o in (tw, lw, rw)):
        return OUT_OF_FUEL
    return _conv_tm_red(ctx, tw.payload, lw.payload, rw.payload, budget, depth + 1, path)


def _conv_tm_red(ctx, ty, lhs, rhs, budget, depth, path) -> Outcome:
    match ty:
        case Pi(dom, cod):
            if not budget.fire("FunExp", depth):
                return OUT_OF_FUEL
            # compare the eta-expansions under the extended context;
            # weakening of lhs and rhs is an explicit shift
            return _conv_tm(
                ctx.push(dom), cod,
                App(shift(lhs), Var(0)), App(shift(rhs), Var(0)),
                budget, depth + 1, path + ("FunExp",),
            )
        case Sig(dom, cod):
            if not budget.fire("CSigEta", depth):
                return OUT_OF_FUEL
            path = path + ("CSigEta",)
            out = _conv_tm(ctx, dom, Fst(lhs), Fst(rhs), budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _conv_tm(
                ctx, subst1(cod, Fst(lhs)), Snd(lhs), Snd(rhs),
                budget, depth + 1, path,
            )
    # positive type: congruences on canonical forms, neutral comparison else
    l_neu, r_neu = is_neutral(lhs), is_neutral(rhs)
    if l_neu and r_neu:
        if not budget.fire("NePos", depth):
            return OUT_OF_FUEL
        out = _conv_neu(ctx, lhs, rhs, budget, depth + 1, path + ("NePos",))
        return Accept() if isinstance(out, Accept) else out
    if l_neu != r_neu:
        return _mismatch(lhs, rhs, path, "canonical vs neutral at positive type")
    match ty, lhs, rhs:
        case Univ(), Pi(a, b), Pi(a2, b2):
            if not budget.fire("TFun", depth):
                return OUT_OF_FUEL
            path = path + ("TFun",)
            out = _conv_tm(ctx, UNIV_, a, a2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _conv_tm(ctx.push(a2), UNIV_, b, b2, budget, depth + 1, path)
        case Univ(), Sig(a, b), Sig(a2, b2):
            if not budget.fire("CSig", depth):
                return OUT_OF_FUEL
            path = path + ("CSig",)
            out = _conv_tm(ctx, UNIV_, a, a2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _conv_tm(ctx.push(a2), UNIV_, b, b2, budget, depth + 1, path)
        case Univ(), Nat(), Nat():
            return Accept() if budget.fire("CNat", depth) else OUT_OF_FUEL
        case Univ(), Empty(), Empty():
            return Accept() if budget.fire("CEmpty", depth) else OUT_OF_FUEL
        case Univ(), Id(a, l, r), Id(a2, l2, r2):
            if not budget.fire("CId", depth):
                return OUT_OF_FUEL
            path = path + ("CId",)
            out = _conv_tm(ctx, UNIV_, a, a2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = _conv_tm(ctx, a, l, l2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _conv_tm(ctx, a, r, r2, budget, depth + 1, path)
        case Nat(), Zero(), Zero():
            return Accept() if budget.fire("CZero", depth) else OUT_OF_FUEL
        case Nat(), Succ(p), Succ(p2):
            if not budget.fire("TSucc", depth):
                return OUT_OF_FUEL
            return _conv_tm(ctx, NAT, p, p2, budget, depth + 1, path + ("TSucc",))
        case Id(), Refl(), Refl():
            # annotations are deliberately not compared
            return Accept() if budget.fire("ReflRefl", depth) else OUT_OF_FUEL
        case _:
            return _mismatch(lhs, rhs, path, "head mismatch at positive type")


def _conv_neu(ctx, lhs, rhs, budget, depth, path) -> Outcome:
    match lhs, rhs:
        case Var(i), Var(j):
            if not budget.fire("NVar", depth):
                return OUT_OF_FUEL
            if i != j:
                return _mismatch(lhs, rhs, path + ("NVar",), "distinct variables")
            ty = ctx.lookup(i)
            if ty is None:
                return _mismatch(lhs, rhs, path + ("NVar",), "variable out of scope")
            return Accept(ty)
        case App(f, u), App(f2, u2):
            if not budget.fire("NApp", depth):
                return OUT_OF_FUEL
            path = path + ("NApp",)
            head = _conv_neu_red(ctx, f, f2, budget, depth + 1, path)
            if not isinstance(head, Accept):
                return head
            match head.payload:
                case Pi(dom, cod):
                    out = _conv_tm(ctx, dom, u, u2, budget, depth + 1, path)
                    if not isinstance(out, Accept):
                        return out
                    return Accept(subst1(cod, u))
                case other:
                    return _mismatch(other, other, path, "head does not infer a function type")
        case Fst(p), Fst(p2):
            if not budget.fire("NSig1", depth):
                return OUT_OF_FUEL
            path = path + ("NSig1",)
            head = _conv_neu_red(ctx, p, p2, budget, depth + 1, path)
            if not isinstance(head, Accept):
                return head
            match head.payload:
                case Sig(dom, _):
                    return Accept(dom)
                case other:
                    return _mismatch(other, other, path, "head does not infer a pair type")
        case Snd(p), Snd(p2):
            if not budget.fire("NSig2", depth):
                return OUT_OF_FUEL
            path = path + ("NSig2",)
            head = _conv_neu_red(ctx, p, p2, budget, depth + 1, path)
            if not isinstance(head, Accept):
                return head
            match head.payload:
                case Sig(_, cod):
                    return Accept(subst1(cod, Fst(p)))
                case other:
                    return _mismatch(other, other, path, "head does not infer a pair type")
        case NatElim(mot, base, stp, n), NatElim(mot2, base2, stp2, n2):
            if not budget.fire("NNatElim", depth):
                return OUT_OF_FUEL
            path = path + ("NNatElim",)
            head = _conv_neu_red(ctx, n, n2, budget, depth + 1, path)
            if not isinstance(head, Accept):
                return head
            if not isinstance(head.payload, Nat):
                return _mismatch(head.payload, head.payload, path, "scrutinee not at Nat")
            out = _conv_ty(ctx.push(NAT), mot, mot2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = _conv_tm(ctx, subst1(mot, Zero()), base, base2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            # successor branch lives in ctx, x : Nat, y : P[x], at type P[succ x]
            step_ctx = ctx.push(NAT).push(mot)
            step_ty = _motive_succ(mot)
            out = _conv_tm(step_ctx, step_ty, stp, stp2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return Accept(subst1(mot, n))
        case EmptyElim(mot, n), EmptyElim(mot2, n2):
            if not budget.fire("NEmptyElim", depth):
                return OUT_OF_FUEL
            path = path + ("NEmptyElim",)
            head = _conv_neu_red(ctx, n, n2, budget, depth + 1, path)
            if not isinstance(head, Accept):
                return head
            if not isinstance(head.payload, Empty):
                return _mismatch(head.payload, head.payload, path, "scrutinee not at Empty")
            out = _conv_ty(ctx.push(EMPTY_), mot, mot2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return Accept(subst1(mot, n))
        case IdElim(a, x, mot, br, n), IdElim(a2, x2, mot2, br2, n2):
            if not budget.fire("NIdInd", depth):
                return OUT_OF_FUEL
            path = path + ("NIdInd",)
            head = _conv_neu_red(ctx, n, n2, budget, depth + 1, path)
            if not isinstance(head, Accept):
                return head
            match head.payload:
                case Id(_, _, scrut_rhs):
                    pass
                case other:
                    return _mismatch(other, other, path, "scrutinee not at an Id type")
            # motives bind the endpoint and the equation; scrutinees, motives
            # and branches are compared, annotations are not
            mot_ctx = ctx.push(a).push(Id(shift(a), shift(x), Var(0)))
            out = _conv_ty(mot_ctx, mot, mot2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            branch_ty = subst2(mot, x, Refl(a, x))
            out = _conv_tm(ctx, branch_ty, br, br2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return Accept(subst2(mot, scrut_rhs, n))
        case _:
            return _mismatch(lhs, rhs, path, "neutral spine mismatch")


def _conv_neu_red(ctx, lhs, rhs, budget, depth, path) -> Outcome:
    out = _conv_neu(ctx, lhs, rhs, budget, depth, path)
    if not isinstance(out, Accept):
        return out
    ty = out.payload
    tw = whnf_budget(ty, budget)
    if isinstance(tw, OutOfFuel):
        return OUT_OF_FUEL
    if tw.payload != ty:
        budget.emit("NRed", depth)
    return Accept(tw.payload)


def _motive_succ(motive: Term) -> Term:
    """P[succ x] transported into the context extended by x : Nat, y : P[x]."""
    from .syntax import Subst, apply_subst

    return apply_subst(motive, Subst((Succ(Var(1)),), 2))


UNIV_ = Univ()
EMPTY_ = Empty()
