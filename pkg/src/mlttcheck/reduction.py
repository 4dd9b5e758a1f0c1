"""Deterministic weak-head reduction: one-step, fuel-bounded closure, stack machine.

Reduction is defined on raw terms: ill-typed and open inputs are fine, the
typing invariants live one level up.  Running out of fuel is always reported
as OutOfFuel, never as a rejection; reduction itself never rejects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .syntax import (
    App,
    Fst,
    IdElim,
    Lam,
    NatElim,
    EmptyElim,
    Pair,
    Refl,
    Snd,
    Succ,
    Term,
    Zero,
    subst1,
    subst2,
)
from .verdict import Accept, Budget, Outcome, OUT_OF_FUEL


def step(t: Term) -> Optional[Term]:
    """One weak-head step, or None when no rule applies (t is a whnf or stuck)."""
    match t:
        case App(Lam(body=body), arg):
            return subst1(body, arg)
        case App(fn, arg):
            fn2 = step(fn)
            return None if fn2 is None else App(fn2, arg)
        case Fst(Pair(first=first)):
            return first
        case Fst(pair):
            p2 = step(pair)
            return None if p2 is None else Fst(p2)
        case Snd(Pair(second=second)):
            return second
        case Snd(pair):
            p2 = step(pair)
            return None if p2 is None else Snd(p2)
        case NatElim(motive, base, _, Zero()):
            return base
        case NatElim(motive, base, stp, Succ(pred)):
            return subst2(stp, pred, NatElim(motive, base, stp, pred))
        case NatElim(motive, base, stp, scrut):
            s2 = step(scrut)
            return None if s2 is None else NatElim(motive, base, stp, s2)
        case IdElim(_, _, _, branch, Refl()):
            return branch
        case IdElim(ann_ty, ann_lhs, motive, branch, scrut):
            s2 = step(scrut)
            return None if s2 is None else IdElim(ann_ty, ann_lhs, motive, branch, s2)
        case EmptyElim():
            # the empty type has no canonical forms, only the head congruence
            s2 = step(t.scrut)
            return None if s2 is None else EmptyElim(t.motive, s2)
        case _:
            return None


def whnf(t: Term, fuel: int) -> Outcome:
    """Iterate `step` until no rule applies, spending one unit per step."""
    budget = Budget(fuel)
    out = whnf_budget(t, budget)
    return out


def whnf_budget(t: Term, budget: Budget) -> Outcome:
    """As `whnf`, drawing from a shared budget (used inside the checkers)."""
    while True:
        t2 = step(t)
        if t2 is None:
            return Accept(t)
        if not budget.spend():
            return OUT_OF_FUEL
        t = t2


# ---------------------------------------------------------------------------
# Stack machine


@dataclass(frozen=True, slots=True)
class AppArg:
    arg: Term


@dataclass(frozen=True, slots=True)
class FstF:
    pass


@dataclass(frozen=True, slots=True)
class SndF:
    pass


@dataclass(frozen=True, slots=True)
class NatElimF:
    motive: Term
    base: Term
    step: Term


@dataclass(frozen=True, slots=True)
class EmptyElimF:
    motive: Term


@dataclass(frozen=True, slots=True)
class IdElimF:
    ann_ty: Term
    ann_lhs: Term
    motive: Term
    branch: Term


Frame = AppArg | FstF | SndF | NatElimF | EmptyElimF | IdElimF


@dataclass(frozen=True, slots=True)
class Stack:
    """Eliminator frames, outermost last."""

    frames: tuple[Frame, ...] = ()


def decompose(t: Term) -> tuple[Term, Stack]:
    """Split a term into its head and the spine of eliminators around it."""
    frames: list[Frame] = []
    while True:
        match t:
            case App(fn, arg):
                frames.append(AppArg(arg))
                t = fn
            case Fst(pair):
                frames.append(FstF())
                t = pair
            case Snd(pair):
                frames.append(SndF())
                t = pair
            case NatElim(motive, base, stp, scrut):
                frames.append(NatElimF(motive, base, stp))
                t = scrut
            case EmptyElim(motive, scrut):
                frames.append(EmptyElimF(motive))
                t = scrut
            case IdElim(ann_ty, ann_lhs, motive, branch, scrut):
                frames.append(IdElimF(ann_ty, ann_lhs, motive, branch))
                t = scrut
            case _:
                # frames were collected outermost first; flip to the spec order
                return t, Stack(tuple(reversed(frames)))


def plug_frame(frame: Frame, t: Term) -> Term:
    match frame:
        case AppArg(arg):
            return App(t, arg)
        case FstF():
            return Fst(t)
        case SndF():
            return Snd(t)
        case NatElimF(motive, base, stp):
            return NatElim(motive, base, stp, t)
        case EmptyElimF(motive):
            return EmptyElim(motive, t)
        case IdElimF(ann_ty, ann_lhs, motive, branch):
            return IdElim(ann_ty, ann_lhs, motive, branch, t)
    raise AssertionError(frame)


def plug(t: Term, stack: Stack) -> Term:
    for frame in stack.frames:
        t = plug_frame(frame, t)
    return t


def _fire(head: Term, frame: Frame) -> Optional[Term]:
    """Fire a beta rule between a canonical head and the innermost frame."""
    match head, frame:
        case Lam(body=body), AppArg(arg):
            return subst1(body, arg)
        case Pair(first=first), FstF():
            return first
        case Pair(second=second), SndF():
            return second
        case Zero(), NatElimF(base=base):
            return base
        case Succ(pred), NatElimF(motive, base, stp):
            return subst2(stp, pred, NatElim(motive, base, stp, pred))
        case Refl(), IdElimF(branch=branch):
            return branch
        case _:
            return None


def machine_whnf(t: Term, fuel: int) -> Outcome:
    """Same observable contract as `whnf`, via decompose/fire/plug.

    Fuel counts fired redexes, so it is exchangeable with `whnf`'s step count.
    """
    budget = Budget(fuel)
    head, stack = decompose(t)
    frames = list(stack.frames)  # innermost at the end
    frames.reverse()
    while frames:
        redex = _fire(head, frames[-1])
        if redex is None:
            break  # head is stuck (a variable, or an ill-typed combination)
        if not budget.spend():
            return OUT_OF_FUEL
        frames.pop()
        head, tail = decompose(redex)
        frames.extend(reversed(tail.frames))
    return Accept(plug(head, Stack(tuple(reversed(frames)))))
