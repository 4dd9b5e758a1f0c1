"""Term-directed conversion: no type inputs anywhere.

Eta is handled by the lambda-vs-neutral and pair-vs-neutral rules; between two
neutrals there is no eta at all, they are compared spine against spine.
Annotations on lambdas and pairs are never inspected.
"""

from __future__ import annotations

from typing import Optional

from .syntax import (
    App,
    Empty,
    EmptyElim,
    Fst,
    Id,
    IdElim,
    Lam,
    Nat,
    NatElim,
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
    shift,
)
from .reduction import whnf_budget
from .verdict import Accept, Budget, OUT_OF_FUEL, OutOfFuel, Outcome, Reason, Reject

Path = tuple[str, ...]


def uconv(lhs: Term, rhs: Term, fuel: int,
          trace: Optional[list[tuple[str, int]]] = None) -> Outcome:
    budget = Budget(fuel, trace)
    return uconv_b(lhs, rhs, budget)


def uconv_red(lhs: Term, rhs: Term, fuel: int,
              trace: Optional[list[tuple[str, int]]] = None) -> Outcome:
    budget = Budget(fuel, trace)
    return _uconv_red(lhs, rhs, budget, 0, ())


def uconv_neu(lhs: Term, rhs: Term, fuel: int,
              trace: Optional[list[tuple[str, int]]] = None) -> Outcome:
    budget = Budget(fuel, trace)
    return _uconv_neu(lhs, rhs, budget, 0, ())


def uconv_b(lhs: Term, rhs: Term, budget: Budget,
            depth: int = 0, path: Path = ()) -> Outcome:
    return _uconv(lhs, rhs, budget, depth, path)


def _mismatch(lhs: Term, rhs: Term, path: Path, detail: str = "") -> Reject:
    return Reject(Reason((head_name(lhs), head_name(rhs)), path, detail))


def _uconv(lhs, rhs, budget, depth, path) -> Outcome:
    if not budget.fire("UTmRed", depth):
        return OUT_OF_FUEL
    path = path + ("UTmRed",)
    lw = whnf_budget(lhs, budget)
    rw = whnf_budget(rhs, budget)
    if isinstance(lw, OutOfFuel) or isinstance(rw, OutOfFuel):
        return OUT_OF_FUEL
    return _uconv_red(lw.payload, rw.payload, budget, depth + 1, path)


def _uconv_red(lhs, rhs, budget, depth, path) -> Outcome:
    l_neu, r_neu = is_neutral(lhs), is_neutral(rhs)
    if l_neu and r_neu:
        if not budget.fire("NeuNeu", depth):
            return OUT_OF_FUEL
        return _uconv_neu(lhs, rhs, budget, depth + 1, path + ("NeuNeu",))
    match lhs, rhs:
        case Univ(), Univ():
            return Accept() if budget.fire("CUni", depth) else OUT_OF_FUEL
        case Pi(a, b), Pi(a2, b2):
            if not budget.fire("CFun", depth):
                return OUT_OF_FUEL
            path = path + ("CFun",)
            out = _uconv(a, a2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _uconv(b, b2, budget, depth + 1, path)
        case Lam(body=t), Lam(body=t2):
            # annotations ignored: this is the point of term-directed checking
            if not budget.fire("CLam", depth):
                return OUT_OF_FUEL
            return _uconv(t, t2, budget, depth + 1, path + ("CLam",))
        case Lam(body=t), _ if r_neu:
            if not budget.fire("CLamNe", depth):
                return OUT_OF_FUEL
            return _uconv(t, App(shift(rhs), Var(0)), budget, depth + 1,
                          path + ("CLamNe",))
        case _, Lam(body=t2) if l_neu:
            if not budget.fire("CNeLam", depth):
                return OUT_OF_FUEL
            return _uconv(App(shift(lhs), Var(0)), t2, budget, depth + 1,
                          path + ("CNeLam",))
        case Sig(a, b), Sig(a2, b2):
            if not budget.fire("CSig", depth):
                return OUT_OF_FUEL
            path = path + ("CSig",)
            out = _uconv(a, a2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _uconv(b, b2, budget, depth + 1, path)
        case Pair(first=p, second=q), Pair(first=p2, second=q2):
            if not budget.fire("CPair", depth):
                return OUT_OF_FUEL
            path = path + ("CPair",)
            out = _uconv(p, p2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _uconv(q, q2, budget, depth + 1, path)
        case Pair(first=p, second=q), _ if r_neu:
            if not budget.fire("CPairNe", depth):
                return OUT_OF_FUEL
            path = path + ("CPairNe",)
            out = _uconv(p, Fst(rhs), budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _uconv(q, Snd(rhs), budget, depth + 1, path)
        case _, Pair(first=p2, second=q2) if l_neu:
            if not budget.fire("CNePair", depth):
                return OUT_OF_FUEL
            path = path + ("CNePair",)
            out = _uconv(Fst(lhs), p2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _uconv(Snd(lhs), q2, budget, depth + 1, path)
        case Nat(), Nat():
            return Accept() if budget.fire("CNat", depth) else OUT_OF_FUEL
        case Zero(), Zero():
            return Accept() if budget.fire("CZero", depth) else OUT_OF_FUEL
        case Succ(t), Succ(t2):
            if not budget.fire("CSucc", depth):
                return OUT_OF_FUEL
            return _uconv(t, t2, budget, depth + 1, path + ("CSucc",))
        case Empty(), Empty():
            return Accept() if budget.fire("CEmpty", depth) else OUT_OF_FUEL
        case Id(a, l, r), Id(a2, l2, r2):
            if not budget.fire("CId", depth):
                return OUT_OF_FUEL
            path = path + ("CId",)
            out = _uconv(a, a2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = _uconv(l, l2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _uconv(r, r2, budget, depth + 1, path)
        case Refl(), Refl():
            return Accept() if budget.fire("ReflRefl", depth) else OUT_OF_FUEL
        case _:
            # different canonical heads, or canonical non-(lambda/pair)
            # against a neutral: no rule applies
            return _mismatch(lhs, rhs, path, "head mismatch")


def _uconv_neu(lhs, rhs, budget, depth, path) -> Outcome:
    match lhs, rhs:
        case Var(i), Var(j):
            if not budget.fire("UVar", depth):
                return OUT_OF_FUEL
            if i != j:
                return _mismatch(lhs, rhs, path + ("UVar",), "distinct variables")
            return Accept()
        case App(f, u), App(f2, u2):
            if not budget.fire("UApp", depth):
                return OUT_OF_FUEL
            path = path + ("UApp",)
            out = _uconv_neu(f, f2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _uconv(u, u2, budget, depth + 1, path)
        case Fst(p), Fst(p2):
            if not budget.fire("NSig1", depth):
                return OUT_OF_FUEL
            return _uconv_neu(p, p2, budget, depth + 1, path + ("NSig1",))
        case Snd(p), Snd(p2):
            if not budget.fire("NSig2", depth):
                return OUT_OF_FUEL
            return _uconv_neu(p, p2, budget, depth + 1, path + ("NSig2",))
        case NatElim(mot, base, stp, n), NatElim(mot2, base2, stp2, n2):
            if not budget.fire("NNatElim", depth):
                return OUT_OF_FUEL
            path = path + ("NNatElim",)
            out = _uconv_neu(n, n2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = _uconv(mot, mot2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = _uconv(base, base2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _uconv(stp, stp2, budget, depth + 1, path)
        case EmptyElim(mot, n), EmptyElim(mot2, n2):
            if not budget.fire("NEmptyElim", depth):
                return OUT_OF_FUEL
            path = path + ("NEmptyElim",)
            out = _uconv_neu(n, n2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _uconv(mot, mot2, budget, depth + 1, path)
        case IdElim(_, _, mot, br, n), IdElim(_, _, mot2, br2, n2):
            # scrutinees, motives, branches; the type/endpoint annotations
            # are ignored, as everywhere in the term-directed algorithm
            if not budget.fire("NIdInd", depth):
                return OUT_OF_FUEL
            path = path + ("NIdInd",)
            out = _uconv_neu(n, n2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            out = _uconv(mot, mot2, budget, depth + 1, path)
            if not isinstance(out, Accept):
                return out
            return _uconv(br, br2, budget, depth + 1, path)
        case _:
            return _mismatch(lhs, rhs, path, "neutral spine mismatch")
