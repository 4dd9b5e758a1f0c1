"""Fuel-bounded deep normalizer: eta-long, type-directed normal forms.

At function types the result is a wrapper lambda around the normalized
eta-expansion; at pair types, a pair of normalized projections.  At positive
types normalization recurses into canonical subterms; neutral spines are
traversed while reconstructing their type, exactly like neutral comparison.
Refl annotations are left untouched, mirroring the annotation blindness of
the conversion checkers.
"""

from __future__ import annotations

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
    Univ,
    Var,
    Zero,
    apply_subst,
    head_name,
    is_neutral,
    shift,
    subst1,
    subst2,
)
from .reduction import whnf_budget
from .verdict import Accept, Budget, OUT_OF_FUEL, OutOfFuel, Outcome, Reason, Reject


def deep_nf_tm(ctx: Context, ty: Term, t: Term, fuel: int) -> Outcome:
    budget = Budget(fuel)
    return _nf_tm(ctx, ty, t, budget)


def deep_nf_ty(ctx: Context, ty: Term, fuel: int) -> Outcome:
    budget = Budget(fuel)
    return _nf_ty(ctx, ty, budget)


def deep_nf_ne(ctx: Context, n: Term, fuel: int) -> Outcome:
    """Accept((normal form, whnf of the inferred type)) for a neutral spine."""
    budget = Budget(fuel)
    return _nf_ne(ctx, n, budget)


def _stuck(t: Term, detail: str) -> Reject:
    return Reject(Reason((head_name(t), "-"), (), detail))


def _nf_tm(ctx: Context, ty: Term, t: Term, budget: Budget) -> Outcome:
    tyw = whnf_budget(ty, budget)
    if isinstance(tyw, OutOfFuel):
        return OUT_OF_FUEL
    tw = whnf_budget(t, budget)
    if isinstance(tw, OutOfFuel):
        return OUT_OF_FUEL
    ty, t = tyw.payload, tw.payload
    if not budget.spend():
        return OUT_OF_FUEL
    match ty:
        case Pi(dom, cod):
            dom_nf = _nf_ty(ctx, dom, budget)
            if not isinstance(dom_nf, Accept):
                return dom_nf
            body = _nf_tm(ctx.push(dom), cod, App(shift(t), Var(0)), budget)
            if not isinstance(body, Accept):
                return body
            return Accept(Lam(dom_nf.payload, body.payload))
        case Sig(dom, cod):
            dom_nf = _nf_ty(ctx, dom, budget)
            if not isinstance(dom_nf, Accept):
                return dom_nf
            cod_nf = _nf_ty(ctx.push(dom), cod, budget)
            if not isinstance(cod_nf, Accept):
                return cod_nf
            first = _nf_tm(ctx, dom, Fst(t), budget)
            if not isinstance(first, Accept):
                return first
            second = _nf_tm(ctx, subst1(cod, Fst(t)), Snd(t), budget)
            if not isinstance(second, Accept):
                return second
            return Accept(Pair(dom_nf.payload, cod_nf.payload,
                               first.payload, second.payload))
        case Univ():
            return _nf_ty(ctx, t, budget)
    if is_neutral(t):
        out = _nf_ne(ctx, t, budget)
        if not isinstance(out, Accept):
            return out
        return Accept(out.payload[0])
    match ty, t:
        case Nat(), Zero():
            return Accept(t)
        case Nat(), Succ(p):
            out = _nf_tm(ctx, NAT, p, budget)
            if not isinstance(out, Accept):
                return out
            return Accept(Succ(out.payload))
        case Id(), Refl():
            return Accept(t)
        case _:
            return _stuck(t, f"no canonical form of this shape at {head_name(ty)}")


def _nf_ty(ctx: Context, ty: Term, budget: Budget) -> Outcome:
    tyw = whnf_budget(ty, budget)
    if isinstance(tyw, OutOfFuel):
        return OUT_OF_FUEL
    ty = tyw.payload
    if not budget.spend():
        return OUT_OF_FUEL
    match ty:
        case Univ() | Nat() | Empty():
            return Accept(ty)
        case Pi(dom, cod) | Sig(dom, cod):
            dom_nf = _nf_ty(ctx, dom, budget)
            if not isinstance(dom_nf, Accept):
                return dom_nf
            cod_nf = _nf_ty(ctx.push(dom), cod, budget)
            if not isinstance(cod_nf, Accept):
                return cod_nf
            return Accept(type(ty)(dom_nf.payload, cod_nf.payload))
        case Id(a, l, r):
            a_nf = _nf_ty(ctx, a, budget)
            if not isinstance(a_nf, Accept):
                return a_nf
            l_nf = _nf_tm(ctx, a, l, budget)
            if not isinstance(l_nf, Accept):
                return l_nf
            r_nf = _nf_tm(ctx, a, r, budget)
            if not isinstance(r_nf, Accept):
                return r_nf
            return Accept(Id(a_nf.payload, l_nf.payload, r_nf.payload))
        case _ if is_neutral(ty):
            out = _nf_ne(ctx, ty, budget)
            if not isinstance(out, Accept):
                return out
            return Accept(out.payload[0])
        case _:
            return _stuck(ty, "not a type in weak-head normal form")


def _nf_ne(ctx: Context, n: Term, budget: Budget) -> Outcome:
    """Normalize a neutral spine; returns (normal form, whnf of inferred type)."""
    if not budget.spend():
        return OUT_OF_FUEL
    match n:
        case Var(i):
            ty = ctx.lookup(i)
            if ty is None:
                return _stuck(n, f"index {i} out of scope")
            tyw = whnf_budget(ty, budget)
            if isinstance(tyw, OutOfFuel):
                return OUT_OF_FUEL
            return Accept((n, tyw.payload))
        case App(fn, arg):
            head = _nf_ne(ctx, fn, budget)
            if not isinstance(head, Accept):
                return head
            fn_nf, fn_ty = head.payload
            match fn_ty:
                case Pi(dom, cod):
                    arg_nf = _nf_tm(ctx, dom, arg, budget)
                    if not isinstance(arg_nf, Accept):
                        return arg_nf
                    out_ty = whnf_budget(subst1(cod, arg), budget)
                    if isinstance(out_ty, OutOfFuel):
                        return OUT_OF_FUEL
                    return Accept((App(fn_nf, arg_nf.payload), out_ty.payload))
                case other:
                    return _stuck(other, "spine head is not at a function type")
        case Fst(p):
            head = _nf_ne(ctx, p, budget)
            if not isinstance(head, Accept):
                return head
            p_nf, p_ty = head.payload
            match p_ty:
                case Sig(dom, _):
                    out_ty = whnf_budget(dom, budget)
                    if isinstance(out_ty, OutOfFuel):
                        return OUT_OF_FUEL
                    return Accept((Fst(p_nf), out_ty.payload))
                case other:
                    return _stuck(other, "spine head is not at a pair type")
        case Snd(p):
            head = _nf_ne(ctx, p, budget)
            if not isinstance(head, Accept):
                return head
            p_nf, p_ty = head.payload
            match p_ty:
                case Sig(_, cod):
                    out_ty = whnf_budget(subst1(cod, Fst(p)), budget)
                    if isinstance(out_ty, OutOfFuel):
                        return OUT_OF_FUEL
                    return Accept((Snd(p_nf), out_ty.payload))
                case other:
                    return _stuck(other, "spine head is not at a pair type")
        case NatElim(motive, base, stp, scrut):
            head = _nf_ne(ctx, scrut, budget)
            if not isinstance(head, Accept):
                return head
            scrut_nf, scrut_ty = head.payload
            if not isinstance(scrut_ty, Nat):
                return _stuck(scrut_ty, "eliminated spine is not at Nat")
            mot_nf = _nf_ty(ctx.push(NAT), motive, budget)
            if not isinstance(mot_nf, Accept):
                return mot_nf
            base_nf = _nf_tm(ctx, subst1(motive, Zero()), base, budget)
            if not isinstance(base_nf, Accept):
                return base_nf
            step_ty = apply_subst(motive, Subst((Succ(Var(1)),), 2))
            step_nf = _nf_tm(ctx.push(NAT).push(motive), step_ty, stp, budget)
            if not isinstance(step_nf, Accept):
                return step_nf
            out_ty = whnf_budget(subst1(motive, scrut), budget)
            if isinstance(out_ty, OutOfFuel):
                return OUT_OF_FUEL
            return Accept((NatElim(mot_nf.payload, base_nf.payload,
                                   step_nf.payload, scrut_nf), out_ty.payload))
        case EmptyElim(motive, scrut):
            head = _nf_ne(ctx, scrut, budget)
            if not isinstance(head, Accept):
                return head
            scrut_nf, scrut_ty = head.payload
            if not isinstance(scrut_ty, Empty):
                return _stuck(scrut_ty, "eliminated spine is not at Empty")
            mot_nf = _nf_ty(ctx.push(Empty()), motive, budget)
            if not isinstance(mot_nf, Accept):
                return mot_nf
            out_ty = whnf_budget(subst1(motive, scrut), budget)
            if isinstance(out_ty, OutOfFuel):
                return OUT_OF_FUEL
            return Accept((EmptyElim(mot_nf.payload, scrut_nf), out_ty.payload))
        case IdElim(a, x, motive, branch, scrut):
            head = _nf_ne(ctx, scrut, budget)
            if not isinstance(head, Accept):
                return head
            scrut_nf, scrut_ty = head.payload
            match scrut_ty:
                case Id(_, _, rhs):
                    pass
                case other:
                    return _stuck(other, "eliminated spine is not at an Id type")
            a_nf = _nf_ty(ctx, a, budget)
            if not isinstance(a_nf, Accept):
                return a_nf
            x_nf = _nf_tm(ctx, a, x, budget)
            if not isinstance(x_nf, Accept):
                return x_nf
            mot_ctx = ctx.push(a).push(Id(shift(a), shift(x), Var(0)))
            mot_nf = _nf_ty(mot_ctx, motive, budget)
            if not isinstance(mot_nf, Accept):
                return mot_nf
            branch_nf = _nf_tm(ctx, subst2(motive, x, Refl(a, x)), branch, budget)
            if not isinstance(branch_nf, Accept):
                return branch_nf
            out_ty = whnf_budget(subst2(motive, rhs, scrut), budget)
            if isinstance(out_ty, OutOfFuel):
                return OUT_OF_FUEL
            return Accept((IdElim(a_nf.payload, x_nf.payload, mot_nf.payload,
                                  branch_nf.payload, scrut_nf), out_ty.payload))
        case _:
            return _stuck(n, "not a neutral spine")
