"""The two conversion checkers on the same query, with rule traces.

Comparing a neutral function variable against itself shows where the
algorithms differ: the type-directed checker eta-expands at function type
(FunExp) before comparing neutrals, while the term-directed checker goes
straight to structural neutral comparison (NeuNeu).
"""

from mlttcheck import Context, NAT, Pi, Succ, Var, ZERO, conv_tm, uconv

FUEL = 10**5


def render(trace):
    return "".join("  " * depth + name + "\n" for name, depth in trace)


def main():
    nn = Pi(NAT, NAT)
    ctx = Context((nn,))

    trace = []
    out = conv_tm(ctx, nn, Var(0), Var(0), FUEL, trace)
    print(f"type-directed: x == x : Nat -> Nat  ->  {type(out).__name__}")
    print(render(trace))

    trace = []
    out = uconv(Var(0), Var(0), FUEL, trace)
    print(f"term-directed: x == x  ->  {type(out).__name__}")
    print(render(trace))

    # both reject genuinely different terms, and neither runs out of fuel
    out = conv_tm(ctx, NAT, ZERO, Succ(ZERO), FUEL)
    print(f"zero == succ zero : Nat  ->  {out}")
    out = uconv(ZERO, Succ(ZERO), FUEL)
    print(f"zero == succ zero (term-directed)  ->  {out}")


if __name__ == "__main__":
    main()
