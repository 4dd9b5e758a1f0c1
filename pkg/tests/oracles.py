"""Independent reference implementations and raw generators used as oracles.

The substitution oracle is the textbook single-variable algorithm with an
explicit shifting cutoff, written without reference to the parallel
substitution machinery it is checking.
"""

from __future__ import annotations

import random

from mlttcheck.syntax import (
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
    Subst,
    Succ,
    Term,
    Univ,
    Var,
    Zero,
    rebuild,
    subterms,
)


def shift_ref(t: Term, by: int, cutoff: int = 0) -> Term:
    match t:
        case Var(ix):
            return Var(ix + by) if ix >= cutoff else t
        case _:
            return rebuild(
                t, [shift_ref(c, by, cutoff + k) for _, k, c in subterms(t)])


def subst1_ref(t: Term, u: Term, depth: int = 0) -> Term:
    """Substitute u for Var(depth), decrementing the indices above it."""
    match t:
        case Var(ix):
            if ix == depth:
                return shift_ref(u, depth)
            return Var(ix - 1) if ix > depth else t
        case _:
            return rebuild(
                t, [subst1_ref(c, u, depth + k) for _, k, c in subterms(t)])


_LEAVES = (Zero(), Nat(), Univ(), Empty())


def random_term(rng: random.Random, size: int, free: int = 3) -> Term:
    """A random raw term; scoped within `free` variables but not necessarily
    well typed, which is all the substitution laws need."""
    if size <= 0:
        if free > 0 and rng.random() < 0.5:
            return Var(rng.randrange(free))
        return rng.choice(_LEAVES)

    def sub(extra: int = 0) -> Term:
        return random_term(rng, rng.randrange(size), free + extra)

    match rng.randrange(12):
        case 0:
            return Pi(sub(), sub(1))
        case 1:
            return Sig(sub(), sub(1))
        case 2:
            return Lam(sub(), sub(1))
        case 3:
            return App(sub(), sub())
        case 4:
            return Pair(sub(), sub(1), sub(), sub())
        case 5:
            return Fst(sub()) if rng.random() < 0.5 else Snd(sub())
        case 6:
            return Succ(sub())
        case 7:
            return NatElim(sub(1), sub(), sub(2), sub())
        case 8:
            return EmptyElim(sub(1), sub())
        case 9:
            return Id(sub(), sub(), sub())
        case 10:
            return Refl(sub(), sub())
        case _:
            return IdElim(sub(), sub(), sub(2), sub(), sub())


def random_subst(rng: random.Random, free: int = 3) -> Subst:
    explicit = tuple(random_term(rng, 2, free) for _ in range(rng.randrange(4)))
    return Subst(explicit, rng.randrange(4))
