"""Bidirectional type checking: inferring and checking a few terms.

Terms use de Bruijn indices internally; the surface parser and printer
translate between named syntax and indices.
"""

from mlttcheck import (
    EMPTY_CTX,
    TYPED_BACKEND,
    Accept,
    check,
    infer,
    parse_term_source,
    print_term,
)

FUEL = 10**5


def show(label, outcome):
    if isinstance(outcome, Accept):
        payload = outcome.payload
        print(f"{label}: accept"
              + (f", {print_term(payload)}" if payload is not None else ""))
    else:
        print(f"{label}: {outcome}")


def main():
    ident = parse_term_source("\\x:Nat. x")
    show("infer \\x:Nat. x", infer(EMPTY_CTX, ident, TYPED_BACKEND, FUEL))

    # dependent application: the codomain is instantiated with the argument
    prog = parse_term_source("(\\x:Nat. refl Nat x) zero")
    show("infer (\\x:Nat. refl Nat x) zero",
         infer(EMPTY_CTX, prog, TYPED_BACKEND, FUEL))

    # checking goes through conversion, so type level computation is allowed
    redex_ty = parse_term_source("(\\A:U. A) Nat")
    zero = parse_term_source("zero")
    show("check zero : (\\A:U. A) Nat",
         check(EMPTY_CTX, zero, redex_ty, TYPED_BACKEND, FUEL))

    bad = parse_term_source("succ zero")
    arrow = parse_term_source("Nat -> Nat")
    show("check succ zero : Nat -> Nat",
         check(EMPTY_CTX, bad, arrow, TYPED_BACKEND, FUEL))


if __name__ == "__main__":
    main()
