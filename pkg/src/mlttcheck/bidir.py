"""Bidirectional typing: inference, reduced inference, checking, type and
context well-formation, parameterized over a pluggable conversion backend.

Constructors check their pieces; eliminators infer through their scrutinee.
The backend only needs to decide type conversion; both shipped backends (the
type-directed and the term-directed checker) qualify.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

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
    shift,
    subst1,
    subst2,
)
from .reduction import whnf_budget
from . import conv_typed, conv_untyped
from .verdict import Accept, Budget, OUT_OF_FUEL, OutOfFuel, Outcome, Reason, Reject

Path = tuple[str, ...]


@dataclass(frozen=True, slots=True)
class ConvBackend:
    """Conversion capability used by the type checker.

    `ty_conv(ctx, lhs, rhs, budget)` decides convertibility of two types;
    `tm_conv(ctx, ty, lhs, rhs, budget)` is only used by debug assertions.
    """

    name: str
    ty_conv: Callable[[Context, Term, Term, Budget], Outcome]
    tm_conv: Callable[[Context, Term, Term, Term, Budget], Outcome]


TYPED_BACKEND = ConvBackend(
    "typed",
    lambda ctx, lhs, rhs, budget: conv_typed.conv_ty_b(ctx, lhs, rhs, budget),
    lambda ctx, ty, lhs, rhs, budget: conv_typed.conv_tm_b(ctx, ty, lhs, rhs, budget),
)

UNTYPED_BACKEND = ConvBackend(
    "untyped",
    lambda ctx, lhs, rhs, budget: conv_untyped.uconv_b(lhs, rhs, budget),
    lambda ctx, ty, lhs, rhs, budget: conv_untyped.uconv_b(lhs, rhs, budget),
)


def infer(ctx: Context, t: Term, conv: ConvBackend, fuel: int,
          trace: Optional[list[tuple[str, int]]] = None) -> Outcome:
    budget = Budget(fuel, trace)
    return infer_b(ctx, t, conv, budget)


def infer_red(ctx: Context, t: Term, conv: ConvBackend, fuel: int,
              trace: Optional[list[tuple[str, int]]] = None) -> Outcome:
    budget = Budget(fuel, trace)
    return _infer_red(ctx, t, conv, budget, 0, ())


def check(ctx: Context, t: Term, ty: Term, conv: ConvBackend, fuel: int,
          trace: Optional[list[tuple[str, int]]] = None) -> Outcome:
    budget = Budget(fuel, trace)
    return check_b(ctx, t, ty, conv, budget)


def check_ty(ctx: Context, ty: Term, conv: ConvBackend, fuel: int,
             trace: Optional[list[tuple[str, int]]] = None) -> Outcome:
    budget = Budget(fuel, trace)
    return check_ty_b(ctx, ty, conv, budget)


def check_ctx(ctx: Context, conv: ConvBackend, fuel: int,
              trace: Optional[list[tuple[str, int]]] = None) -> Outcome:
    """Each entry must be a well-formed type in the prefix before it."""
    budget = Budget(fuel, trace)
    prefix = Context()
    for i, entry in enumerate(ctx.entries):
        out = check_ty_b(prefix, entry, conv, budget)
        if isinstance(out, Reject):
            return Reject(Reason(out.reason.heads, out.reason.path,
                                 f"context entry {i}: {out.reason.detail}"))
        if isinstance(out, OutOfFuel):
            return out
        prefix = prefix.push(entry)
    return Accept()


def infer_b(ctx: Context, t: Term, conv: ConvBackend, budget: Budget,
            depth: int = 0, path: Path = ()) -> Outcome:
    return _infer(ctx, t, conv, budget, depth, path)


def check_b(ctx: Context, t: Term, ty: Term, conv: ConvBackend, budget: Budget,
            depth: int = 0, path: Path = ()) -> Outcome:
    if not budget.fire("Check", depth):
        return OUT_OF_FUEL
    path = path + ("Check",)
    inferred = _infer(ctx, t, conv, budget, depth + 1, path)
    if not isinstance(inferred, Accept):
        return inferred
    out = conv.ty_conv(ctx, inferred.payload, ty, budget)
    if isinstance(out, Reject):
        return Reject(Reason(out.reason.heads, path + out.reason.path,
                             "inferred type does not convert to the expected one"))
    return out


def check_ty_b(ctx: Context, ty: Term, conv: ConvBackend, budget: Budget,
               depth: int = 0, path: Path = ()) -> Outcome:
    match ty:
        case Univ():
            return Accept() if budget.fire("Sort", depth) else OUT_OF_FUEL
        case Pi(dom, cod) | Sig(dom, cod):
            rule = "FunTy" if isinstance(ty, Pi) else "SigTy"
            if not budget.fire(rule, depth):
                return OUT_OF_FUEL
            path = path + (rule,)
            out = check_ty_b(ctx, dom, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return check_ty_b(ctx.push(dom), cod, conv, budget, depth + 1, path)
        case Nat():
            return Accept() if budget.fire("NatTy", depth) else OUT_OF_FUEL
        case Empty():
            return Accept() if budget.fire("EmptyTy", depth) else OUT_OF_FUEL
        case Id(a, l, r):
            if not budget.fire("IdTy", depth):
                return OUT_OF_FUEL
            path = path + ("IdTy",)
            out = check_ty_b(ctx, a, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = check_b(ctx, l, a, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return check_b(ctx, r, a, conv, budget, depth + 1, path)
        case _:
            # anything else is a type only if it infers the universe
            if not budget.fire("El", depth):
                return OUT_OF_FUEL
            path = path + ("El",)
            out = _infer_red(ctx, ty, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            if isinstance(out.payload, Univ):
                return Accept()
            return Reject(Reason((head_name(out.payload), "Univ"), path,
                                 "term used as a type does not infer the universe"))


def _reject(t: Term, path: Path, detail: str) -> Reject:
    return Reject(Reason((head_name(t), "-"), path, detail))


def _infer_red(ctx, t, conv, budget, depth, path) -> Outcome:
    if not budget.fire("InfRed", depth):
        return OUT_OF_FUEL
    out = _infer(ctx, t, conv, budget, depth + 1, path + ("InfRed",))
    if not isinstance(out, Accept):
        return out
    tw = whnf_budget(out.payload, budget)
    if isinstance(tw, OutOfFuel):
        return OUT_OF_FUEL
    return Accept(tw.payload)


def _infer(ctx, t, conv, budget, depth, path) -> Outcome:
    match t:
        case Var(i):
            if not budget.fire("Var", depth):
                return OUT_OF_FUEL
            ty = ctx.lookup(i)
            if ty is None:
                return _reject(t, path + ("Var",), f"index {i} out of scope")
            return Accept(ty)
        case Univ():
            return _reject(t, path, "the universe has no type")
        case Pi(a, b) | Sig(a, b):
            rule = "Fun" if isinstance(t, Pi) else "SigUniv"
            if not budget.fire(rule, depth):
                return OUT_OF_FUEL
            path = path + (rule,)
            out = _infer_red(ctx, a, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            if not isinstance(out.payload, Univ):
                return _reject(a, path, "domain is not a small type")
            out = _infer_red(ctx.push(a), b, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            if not isinstance(out.payload, Univ):
                return _reject(b, path, "codomain is not a small type")
            return Accept(Univ())
        case Lam(ann, body):
            if not budget.fire("Abs", depth):
                return OUT_OF_FUEL
            path = path + ("Abs",)
            out = check_ty_b(ctx, ann, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = _infer(ctx.push(ann), body, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return Accept(Pi(ann, out.payload))
        case App(fn, arg):
            if not budget.fire("App", depth):
                return OUT_OF_FUEL
            path = path + ("App",)
            head = _infer_red(ctx, fn, conv, budget, depth + 1, path)
            if not isinstance(head, Accept):
                return head
            match head.payload:
                case Pi(dom, cod):
                    out = check_b(ctx, arg, dom, conv, budget, depth + 1, path)
                    if not isinstance(out, Accept):
                        return out
                    return Accept(subst1(cod, arg))
                case other:
                    return _reject(other, path, "applying a non-function")
        case Pair(ann_dom, ann_cod, first, second):
            if not budget.fire("Pair", depth):
                return OUT_OF_FUEL
            path = path + ("Pair",)
            out = check_ty_b(ctx, ann_dom, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = check_ty_b(ctx.push(ann_dom), ann_cod, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = check_b(ctx, first, ann_dom, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = check_b(ctx, second, subst1(ann_cod, first), conv, budget,
                          depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return Accept(Sig(ann_dom, ann_cod))
        case Fst(p):
            if not budget.fire("Proj1", depth):
                return OUT_OF_FUEL
            path = path + ("Proj1",)
            head = _infer_red(ctx, p, conv, budget, depth + 1, path)
            if not isinstance(head, Accept):
                return head
            match head.payload:
                case Sig(dom, _):
                    return Accept(dom)
                case other:
                    return _reject(other, path, "projecting a non-pair")
        case Snd(p):
            if not budget.fire("Proj2", depth):
                return OUT_OF_FUEL
            path = path + ("Proj2",)
            head = _infer_red(ctx, p, conv, budget, depth + 1, path)
            if not isinstance(head, Accept):
                return head
            match head.payload:
                case Sig(_, cod):
                    return Accept(subst1(cod, Fst(p)))
                case other:
                    return _reject(other, path, "projecting a non-pair")
        case Nat():
            return Accept(Univ()) if budget.fire("NatUniv", depth) else OUT_OF_FUEL
        case Zero():
            return Accept(NAT) if budget.fire("Zero", depth) else OUT_OF_FUEL
        case Succ(p):
            if not budget.fire("Succ", depth):
                return OUT_OF_FUEL
            out = check_b(ctx, p, NAT, conv, budget, depth + 1, path + ("Succ",))
            if not isinstance(out, Accept):
                return out
            return Accept(NAT)
        case NatElim(motive, base, stp, scrut):
            if not budget.fire("NatRec", depth):
                return OUT_OF_FUEL
            path = path + ("NatRec",)
            out = check_b(ctx, scrut, NAT, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = check_ty_b(ctx.push(NAT), motive, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = check_b(ctx, base, subst1(motive, Zero()), conv, budget,
                          depth + 1, path)
            if not isinstance(out, Accept):
                return out
            step_ty = apply_subst(motive, Subst((Succ(Var(1)),), 2))
            out = check_b(ctx.push(NAT).push(motive), stp, step_ty, conv, budget,
                          depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return Accept(subst1(motive, scrut))
        case Empty():
            return Accept(Univ()) if budget.fire("Empty", depth) else OUT_OF_FUEL
        case EmptyElim(motive, scrut):
            if not budget.fire("EmptyInd", depth):
                return OUT_OF_FUEL
            path = path + ("EmptyInd",)
            out = check_b(ctx, scrut, Empty(), conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = check_ty_b(ctx.push(Empty()), motive, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return Accept(subst1(motive, scrut))
        case Id(a, l, r):
            if not budget.fire("IdTy", depth):
                return OUT_OF_FUEL
            path = path + ("IdTy",)
            out = _infer_red(ctx, a, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            if not isinstance(out.payload, Univ):
                return _reject(a, path, "Id over a non-small type")
            out = check_b(ctx, l, a, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = check_b(ctx, r, a, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return Accept(Univ())
        case Refl(a, x):
            if not budget.fire("ReflTm", depth):
                return OUT_OF_FUEL
            path = path + ("ReflTm",)
            out = check_ty_b(ctx, a, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = check_b(ctx, x, a, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return Accept(Id(a, x, x))
        case IdElim(a, x, motive, branch, scrut):
            if not budget.fire("IdInd", depth):
                return OUT_OF_FUEL
            path = path + ("IdInd",)
            out = check_ty_b(ctx, a, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = check_b(ctx, x, a, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            head = _infer_red(ctx, scrut, conv, budget, depth + 1, path)
            if not isinstance(head, Accept):
                return head
            match head.payload:
                case Id(a2, l2, r2):
                    pass
                case other:
                    return _reject(other, path, "eliminating a non-equation")
            # the annotated type and endpoint must agree with the scrutinee's;
            # the comparison goes through type conversion on Id
            out = conv.ty_conv(ctx, Id(a, x, x), Id(a2, l2, l2), budget)
            if not isinstance(out, Accept):
                return out if isinstance(out, OutOfFuel) else _reject(
                    x, path, "annotation differs from the scrutinee's equation")
            mot_ctx = ctx.push(a).push(Id(shift(a), shift(x), Var(0)))
            out = check_ty_b(mot_ctx, motive, conv, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = check_b(ctx, branch, subst2(motive, x, Refl(a, x)), conv,
                          budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return Accept(subst2(motive, r2, scrut))
    return _reject(t, path, "no inference rule applies")
