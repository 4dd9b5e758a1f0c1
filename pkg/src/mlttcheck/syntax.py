"""Terms, contexts, the parallel substitution calculus, and whnf classification.

Terms are immutable de Bruijn trees; alpha-equivalence is plain structural
equality.  A substitution is kept in the canonical form (explicit prefix,
tail shift): index i maps to explicit[i] when i < len(explicit) and to
Var(i - len(explicit) + tail_shift) otherwise.  Composition re-canonicalizes,
so the monoid laws are decidable by structural equality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True, slots=True)
class Term:
    pass


@dataclass(frozen=True, slots=True)
class Var(Term):
    ix: int


@dataclass(frozen=True, slots=True)
class Univ(Term):
    pass


@dataclass(frozen=True, slots=True)
class Pi(Term):
    dom: Term
    cod: Term  # binds 1


@dataclass(frozen=True, slots=True)
class Lam(Term):
    ann: Term
    body: Term  # binds 1


@dataclass(frozen=True, slots=True)
class App(Term):
    fn: Term
    arg: Term


@dataclass(frozen=True, slots=True)
class Sig(Term):
    dom: Term
    cod: Term  # binds 1


@dataclass(frozen=True, slots=True)
class Pair(Term):
    ann_dom: Term
    ann_cod: Term  # binds 1
    first: Term
    second: Term


@dataclass(frozen=True, slots=True)
class Fst(Term):
    pair: Term


@dataclass(frozen=True, slots=True)
class Snd(Term):
    pair: Term


@dataclass(frozen=True, slots=True)
class Nat(Term):
    pass


@dataclass(frozen=True, slots=True)
class Zero(Term):
    pass


@dataclass(frozen=True, slots=True)
class Succ(Term):
    pred: Term


@dataclass(frozen=True, slots=True)
class NatElim(Term):
    motive: Term  # binds 1
    base: Term
    step: Term  # binds 2 (outer: the number, inner: the recursive result)
    scrut: Term


@dataclass(frozen=True, slots=True)
class Empty(Term):
    pass


@dataclass(frozen=True, slots=True)
class EmptyElim(Term):
    motive: Term  # binds 1
    scrut: Term


@dataclass(frozen=True, slots=True)
class Id(Term):
    ty: Term
    lhs: Term
    rhs: Term


@dataclass(frozen=True, slots=True)
class Refl(Term):
    ty: Term
    tm: Term


@dataclass(frozen=True, slots=True)
class IdElim(Term):
    ann_ty: Term
    ann_lhs: Term
    motive: Term  # binds 2 (outer: the endpoint, inner: the equation)
    branch: Term
    scrut: Term


UNIV = Univ()
NAT = Nat()
ZERO = Zero()
EMPTY = Empty()

# field name -> binding arity, per constructor; drives all generic traversals
BINDING: dict[type, tuple[tuple[str, int], ...]] = {
    Var: (),
    Univ: (),
    Nat: (),
    Zero: (),
    Empty: (),
    Pi: (("dom", 0), ("cod", 1)),
    Lam: (("ann", 0), ("body", 1)),
    App: (("fn", 0), ("arg", 0)),
    Sig: (("dom", 0), ("cod", 1)),
    Pair: (("ann_dom", 0), ("ann_cod", 1), ("first", 0), ("second", 0)),
    Fst: (("pair", 0),),
    Snd: (("pair", 0),),
    Succ: (("pred", 0),),
    NatElim: (("motive", 1), ("base", 0), ("step", 2), ("scrut", 0)),
    EmptyElim: (("motive", 1), ("scrut", 0)),
    Id: (("ty", 0), ("lhs", 0), ("rhs", 0)),
    Refl: (("ty", 0), ("tm", 0)),
    IdElim: (("ann_ty", 0), ("ann_lhs", 0), ("motive", 2), ("branch", 0), ("scrut", 0)),
}


def subterms(t: Term) -> Iterator[tuple[str, int, Term]]:
    """Yield (field, binding arity, child) for every immediate subterm."""
    for name, arity in BINDING[type(t)]:
        yield name, arity, getattr(t, name)


def rebuild(t: Term, children: list[Term]) -> Term:
    return type(t)(*children)


# ---------------------------------------------------------------------------
# Substitutions


@dataclass(frozen=True, slots=True)
class Subst:
    explicit: tuple[Term, ...] = ()
    tail_shift: int = 0

    def lookup(self, ix: int) -> Term:
        if ix < len(self.explicit):
            return self.explicit[ix]
        return Var(ix - len(self.explicit) + self.tail_shift)


ID_SUBST = Subst()
SHIFT_SUBST = Subst((), 1)


def canonical(s: Subst) -> Subst:
    """Fold redundant trailing images back into the tail shift."""
    explicit = list(s.explicit)
    shift = s.tail_shift
    while explicit and shift >= 1 and explicit[-1] == Var(shift - 1):
        explicit.pop()
        shift -= 1
    return Subst(tuple(explicit), shift)


def cons(u: Term, s: Subst) -> Subst:
    return canonical(Subst((u,) + s.explicit, s.tail_shift))


def single(u: Term) -> Subst:
    """The substitution sending the last variable to u, dropping the others by one."""
    return cons(u, ID_SUBST)


def lift(s: Subst, n: int = 1) -> Subst:
    """Push a substitution under n binders: 0..n-1 fixed, images shifted by n."""
    if n == 0 or s == ID_SUBST:
        return s
    explicit = tuple(Var(i) for i in range(n)) + tuple(
        shift(t, n) for t in s.explicit
    )
    return canonical(Subst(explicit, s.tail_shift + n))


def apply_subst(t: Term, s: Subst) -> Term:
    if s == ID_SUBST:
        return t
    match t:
        case Var(ix):
            return s.lookup(ix)
        case Univ() | Nat() | Zero() | Empty():
            return t
        case _:
            return rebuild(
                t,
                [apply_subst(child, lift(s, k)) for _, k, child in subterms(t)],
            )


def compose(s: Subst, s2: Subst) -> Subst:
    """The substitution applying s first, then s2."""
    e1, k1 = len(s.explicit), s.tail_shift
    e2 = len(s2.explicit)
    n = max(e1, e1 + e2 - k1)
    explicit = tuple(apply_subst(s.lookup(i), s2) for i in range(n))
    shift_ = n - e1 + k1 - e2 + s2.tail_shift
    return canonical(Subst(explicit, shift_))


def shift(t: Term, by: int = 1) -> Term:
    """Increment every free index (uniform weakening)."""
    return apply_subst(t, Subst((), by))


def subst1(t: Term, u: Term) -> Term:
    """Substitute u for the innermost variable of a 1-binding subterm."""
    return apply_subst(t, single(u))


def subst2(t: Term, outer: Term, inner: Term) -> Term:
    """Substitute a 2-binding subterm: index 1 gets `outer`, index 0 gets `inner`."""
    return apply_subst(t, cons(inner, cons(outer, ID_SUBST)))


def strengthen(t: Term) -> Optional[Term]:
    """Undo one weakening: Some t' with shift(t') = t, unless Var 0 occurs free."""
    return _strengthen(t, 0)


def _strengthen(t: Term, depth: int) -> Optional[Term]:
    match t:
        case Var(ix):
            if ix == depth:
                return None
            return Var(ix - 1) if ix > depth else t
        case Univ() | Nat() | Zero() | Empty():
            return t
        case _:
            children = []
            for _, k, child in subterms(t):
                out = _strengthen(child, depth + k)
                if out is None:
                    return None
                children.append(out)
            return rebuild(t, children)


def max_free_index(t: Term) -> int:
    """Largest free de Bruijn index in t, or -1 if t is closed."""
    match t:
        case Var(ix):
            return ix
        case _:
            best = -1
            for _, k, child in subterms(t):
                best = max(best, max_free_index(child) - k)
            return best


def occurs_free(t: Term, ix: int) -> bool:
    match t:
        case Var(i):
            return i == ix
        case _:
            return any(occurs_free(child, ix + k) for _, k, child in subterms(t))


# ---------------------------------------------------------------------------
# Contexts


@dataclass(frozen=True, slots=True)
class Context:
    """Telescope of types, innermost binder last; entry i is scoped in its prefix."""

    entries: tuple[Term, ...] = ()

    def push(self, ty: Term) -> "Context":
        return Context(self.entries + (ty,))

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, ix: int) -> Optional[Term]:
        """Type of Var(ix), shifted so the result is scoped in the whole context."""
        if ix < 0 or ix >= len(self.entries):
            return None
        return shift(self.entries[len(self.entries) - 1 - ix], ix + 1)


EMPTY_CTX = Context()


def context_of(*entries: Term) -> Context:
    return Context(tuple(entries))


# ---------------------------------------------------------------------------
# Weak-head classification


class Class(enum.Enum):
    CANONICAL = "canonical"
    NEUTRAL = "neutral"
    NOT_WHNF = "not-whnf"


_CANONICAL_HEADS = (Univ, Pi, Lam, Sig, Pair, Nat, Zero, Succ, Empty, Id, Refl)
_ELIMS = (App, Fst, Snd, NatElim, EmptyElim, IdElim)


def _elim_head(t: Term) -> Term:
    match t:
        case App(fn=h) | Fst(pair=h) | Snd(pair=h):
            return h
        case NatElim(scrut=h) | EmptyElim(scrut=h) | IdElim(scrut=h):
            return h
    raise AssertionError(t)


def is_neutral(t: Term) -> bool:
    while isinstance(t, _ELIMS):
        t = _elim_head(t)
    return isinstance(t, Var)


def classify(t: Term) -> Class:
    if isinstance(t, _CANONICAL_HEADS):
        return Class.CANONICAL
    if isinstance(t, Var) or is_neutral(t):
        return Class.NEUTRAL
    return Class.NOT_WHNF


def is_whnf(t: Term) -> bool:
    return classify(t) is not Class.NOT_WHNF


def is_ty(t: Term) -> bool:
    """Types in weak-head normal form."""
    return isinstance(t, (Univ, Pi, Sig, Nat, Empty, Id)) or is_neutral(t)


def is_pos(t: Term) -> bool:
    """Positive types in weak-head normal form: universe, nat, empty, Id, neutrals."""
    return isinstance(t, (Univ, Nat, Empty, Id)) or is_neutral(t)


def is_nat_form(t: Term) -> bool:
    return isinstance(t, (Zero, Succ)) or is_neutral(t)


def is_fun_form(t: Term) -> bool:
    return isinstance(t, Lam) or is_neutral(t)


def is_pair_form(t: Term) -> bool:
    return isinstance(t, Pair) or is_neutral(t)


def is_id_form(t: Term) -> bool:
    return isinstance(t, Refl) or is_neutral(t)


def head_name(t: Term) -> str:
    return type(t).__name__
