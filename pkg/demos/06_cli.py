"""Driving the command line front end programmatically.

Each input line is a directive followed by a context and a payload.
Exit codes: 0 accept, 1 reject, 2 out of fuel, 3 parse or scope error.
"""

from mlttcheck.cli import run_query
from mlttcheck.surface import parse_query

QUERIES = [
    ("check |- zero : Nat", "typed", 10**5),
    ("infer |- \\x:Nat. x", "typed", 10**5),
    ("conv (x : Nat -> Nat) |- x == x : Nat -> Nat", "untyped", 10**5),
    ("nf |- natrec (n. Nat) (succ (succ zero)) (n r. succ r)"
     " (succ (succ zero))", "typed", 10**6),
    ("whnf |- (\\x:Nat. x x) (\\x:Nat. x x)", "typed", 100),
    ("check |- succ zero : Nat -> Nat", "typed", 10**5),
]


def main():
    for line, algo, fuel in QUERIES:
        code, out = run_query(parse_query(line), algo, fuel)
        print(f"$ {line}")
        print(f"  [{code}] {out}")


if __name__ == "__main__":
    main()
