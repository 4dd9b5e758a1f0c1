"""Batch command-line front end.

Each non-blank input line is one query in the surface syntax, for example

    conv (x : Nat -> Nat) |- x == x : Nat -> Nat
    infer |- \\x:Nat. x
    nf |- natrec (n. Nat) (succ (succ zero)) (n r. succ r) (succ (succ zero))
    validate fixtures/000_CtxEmpty_plain.deriv

Exit codes: 0 all queries accepted, 1 some query rejected, 2 some query ran
out of fuel, 3 some query failed to parse or mentioned an unbound name.
The worst outcome wins, in the order 3 > 2 > 1 > 0.  With --trace, rule
events stream to stderr, one `depth*2 spaces + ruleName` per line.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import conv_typed, conv_untyped, declarative
from .bidir import (
    ConvBackend,
    TYPED_BACKEND,
    UNTYPED_BACKEND,
    check,
    check_ctx,
    check_ty,
    infer,
)
from .normalize import deep_nf_tm
from .reduction import whnf
from .surface import (
    Query,
    SurfaceError,
    parse_derivation,
    parse_query,
    print_term,
)
from .verdict import Accept, OutOfFuel, Reject

EXIT_ACCEPT = 0
EXIT_REJECT = 1
EXIT_OUT_OF_FUEL = 2
EXIT_SURFACE_ERROR = 3

Trace = list[tuple[str, int]]


def _emit_trace(trace: Trace) -> None:
    for name, depth in trace:
        print("  " * depth + name, file=sys.stderr)


def _assert_preconditions(q: Query, backend: ConvBackend, fuel: int) -> None:
    """Optional debug checks: the query's context and type must be well formed
    and, for conversion, both sides must inhabit the stated type."""
    out = check_ctx(q.ctx, backend, fuel)
    assert isinstance(out, Accept), f"ill-formed context: {out}"
    match q.directive, q.payload:
        case "check", (_, ty):
            out = check_ty(q.ctx, ty, backend, fuel)
            assert isinstance(out, Accept), f"ill-formed type: {out}"
        case "conv", (lhs, rhs, ty):
            out = check_ty(q.ctx, ty, backend, fuel)
            assert isinstance(out, Accept), f"ill-formed type: {out}"
            for side in (lhs, rhs):
                out = check(q.ctx, side, ty, backend, fuel)
                assert isinstance(out, Accept), \
                    f"side does not inhabit the stated type: {out}"


def run_query(q: Query, algo: str, fuel: int,
              trace: Trace | None = None) -> tuple[int, str]:
    """Execute one parsed query; returns (exit code, output line)."""
    backend = TYPED_BACKEND if algo == "typed" else UNTYPED_BACKEND
    match q.directive, q.payload:
        case "validate", (path,):
            try:
                source = Path(path).read_text()
            except OSError as e:
                return EXIT_SURFACE_ERROR, f"cannot read fixture: {e}"
            deriv = parse_derivation(source)
            out = declarative.validate(deriv)
        case "check", (tm, ty):
            out = check(q.ctx, tm, ty, backend, fuel, trace)
        case "conv", (lhs, rhs, ty):
            if algo == "typed":
                out = conv_typed.conv_tm(q.ctx, ty, lhs, rhs, fuel, trace)
            else:
                out = conv_untyped.uconv(lhs, rhs, fuel, trace)
        case "infer", (tm,):
            out = infer(q.ctx, tm, backend, fuel, trace)
            if isinstance(out, Accept):
                return EXIT_ACCEPT, print_term(out.payload, q.ctx_names)
        case "whnf", (tm,):
            out = whnf(tm, fuel)
            if isinstance(out, Accept):
                return EXIT_ACCEPT, print_term(out.payload, q.ctx_names)
        case "nf", (tm,):
            out = infer(q.ctx, tm, backend, fuel, trace)
            if isinstance(out, Accept):
                out = deep_nf_tm(q.ctx, out.payload, tm, fuel)
            if isinstance(out, Accept):
                return EXIT_ACCEPT, print_term(out.payload, q.ctx_names)
        case other:
            raise AssertionError(other)
    match out:
        case Accept():
            return EXIT_ACCEPT, "accept"
        case Reject(reason):
            return EXIT_REJECT, f"reject: {reason}"
        case OutOfFuel():
            return EXIT_OUT_OF_FUEL, "out of fuel"
    raise AssertionError(out)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="mlttcheck",
        description="type-check, convert, normalize, and validate queries "
                    "against a small dependent type theory")
    parser.add_argument("input", nargs="?", default="-",
                        help="query file, or - for stdin (default)")
    parser.add_argument("--algo", choices=("typed", "untyped"),
                        default="typed", help="conversion checker to use")
    parser.add_argument("--fuel", type=int, default=100000,
                        help="work budget per query")
    parser.add_argument("--trace", action="store_true",
                        help="stream fired rules to stderr")
    parser.add_argument("--debug-assert-preconditions", action="store_true",
                        help="assert context/type well-formedness before "
                             "running each query")
    args = parser.parse_args(argv)

    if args.input == "-":
        source = sys.stdin.read()
    else:
        try:
            source = Path(args.input).read_text()
        except OSError as e:
            print(f"cannot read input: {e}", file=sys.stderr)
            return EXIT_SURFACE_ERROR
    worst = EXIT_ACCEPT
    for line in source.split("\n"):
        if not line.strip() or line.lstrip().startswith("--"):
            continue
        try:
            q = parse_query(line)
        except SurfaceError as e:
            print(e, file=sys.stderr)
            worst = EXIT_SURFACE_ERROR
            continue
        if args.debug_assert_preconditions and q.directive != "validate":
            backend = TYPED_BACKEND if args.algo == "typed" else UNTYPED_BACKEND
            _assert_preconditions(q, backend, args.fuel)
        trace: Trace | None = [] if args.trace else None
        try:
            code, output = run_query(q, args.algo, args.fuel, trace)
        except SurfaceError as e:
            # a validate fixture failed to parse
            print(e, file=sys.stderr)
            worst = EXIT_SURFACE_ERROR
            continue
        if trace:
            _emit_trace(trace)
        print(output)
        # exit code ordering: 3 beats 2 beats 1 beats 0
        if code != EXIT_ACCEPT:
            worst = code if worst == EXIT_ACCEPT else max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
