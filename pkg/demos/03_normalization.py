"""Weak-head reduction versus deep normalization.

whnf stops at the outermost constructor; the deep normalizer recurses
under binders and eta-expands at function and pair types, producing
eta-long beta-normal forms.
"""

from mlttcheck import (
    EMPTY_CTX,
    Accept,
    Context,
    NAT,
    Pi,
    deep_nf_tm,
    parse_term_source,
    print_term,
    whnf,
)

FUEL = 10**6


def main():
    two_plus_two = parse_term_source(
        "natrec (n. Nat) (succ (succ zero)) (n r. succ r) (succ (succ zero))")
    head = whnf(two_plus_two, FUEL)
    print("whnf of 2 + 2:", print_term(head.payload))

    full = deep_nf_tm(EMPTY_CTX, NAT, two_plus_two, FUEL)
    print("deep normal form of 2 + 2:", print_term(full.payload))

    # eta-long: a bare function variable normalizes to its expansion
    nn = Pi(NAT, NAT)
    out = deep_nf_tm(Context((nn,)), nn, parse_term_source("f", names=("f",)),
                     FUEL)
    print("eta-long form of f : Nat -> Nat:",
          print_term(out.payload, names=("f",)))

    # normalization also happens under binders
    under = parse_term_source("\\x:Nat. succ ((\\y:Nat. y) x)")
    out = deep_nf_tm(EMPTY_CTX, nn, under, FUEL)
    assert isinstance(out, Accept)
    print("redex under a lambda:", print_term(out.payload))


if __name__ == "__main__":
    main()
