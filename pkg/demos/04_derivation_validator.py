"""The declarative derivation validator and the fixture corpus.

A derivation is a rule-labelled tree of judgments. The validator checks
each node against the first-order shape of its rule and recurses into the
premises, so it acts as an independent oracle for the algorithmic
checkers. Mutating a valid tree almost always breaks it.
"""

from pathlib import Path

from mlttcheck import Accept, derivation_sexpr, mutate, parse_derivation, \
    validate
from mlttcheck.corpus import build_corpus

FIXTURES = Path(__file__).parent.parent / "fixtures"


def main():
    corpus = build_corpus()
    print(f"corpus size: {len(corpus)} derivations")

    name, deriv = corpus[10]
    print(f"\nfixture {name!r} as an s-expression:\n")
    print(derivation_sexpr(deriv))

    out = validate(deriv)
    print(f"validate: {type(out).__name__}")

    # the serialized form on disk parses back to the same tree
    path = sorted(FIXTURES.glob(f"*_{name}.deriv"))[0]
    assert parse_derivation(path.read_text()) == deriv
    print(f"round-trips through {path.name}")

    total = rejected = 0
    for i, (_, d) in enumerate(corpus[:40]):
        for s in range(4):
            m = mutate(d, seed=i * 17 + s)
            if m == d:
                continue
            total += 1
            if not isinstance(validate(m), Accept):
                rejected += 1
    print(f"\nmutation sensitivity: {rejected}/{total} mutants rejected")


if __name__ == "__main__":
    main()
