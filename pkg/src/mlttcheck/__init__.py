"""A kernel for a small Martin-Lof type theory, with two conversion
checkers, a declarative-derivation validator, a deep normalizer, and a
differential testing harness."""

from .verdict import Accept, Budget, OUT_OF_FUEL, OutOfFuel, Outcome, Reason, Reject
from .syntax import (
    App,
    Context,
    EMPTY_CTX,
    Empty,
    EmptyElim,
    Fst,
    Id,
    IdElim,
    Lam,
    NAT,
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
    UNIV,
    Univ,
    Var,
    ZERO,
    Zero,
    apply_subst,
    classify,
    shift,
    strengthen,
    subst1,
    subst2,
)
from .reduction import machine_whnf, step, whnf
from .conv_typed import conv_neu, conv_tm, conv_ty
from .conv_untyped import uconv, uconv_neu
from .bidir import (
    ConvBackend,
    TYPED_BACKEND,
    UNTYPED_BACKEND,
    check,
    check_ctx,
    check_ty,
    infer,
)
from .normalize import deep_nf_ne, deep_nf_tm, deep_nf_ty
from .declarative import Derivation, mutate, validate
from .harness import (
    GenConfig,
    SUITES,
    diff_run,
    gen_context,
    gen_term,
    gen_type,
    property_run,
    render_report,
)
from .surface import (
    ParseError,
    Query,
    ScopeError,
    SurfaceError,
    derivation_sexpr,
    parse_derivation,
    parse_query,
    parse_term_source,
    print_term,
)

__all__ = [name for name in dir() if not name.startswith("_")]
