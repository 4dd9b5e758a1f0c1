"""A hand-assembled derivation corpus covering every validator rule.

Syntax-directed judgments (contexts, type formation, typing) are built by
small recursive helpers that mirror the rules; everything the helpers cannot
reach (symmetry, transitivity, beta and eta axioms, neutral comparison, deep
normalisation) is spelled out tree by tree.  Each rule in the validator's
registry appears as the root of at least two corpus entries.

The corpus is the oracle side of the acceptance story: the validator must
accept all of it, reject almost all single-point mutations of it, and agree
with the bidirectional checker on every Typed conclusion.
"""

from __future__ import annotations

from .bidir import TYPED_BACKEND, infer
from .declarative import (
    ConvTm,
    ConvTy,
    CtxWf,
    Derivation,
    DneTm,
    DnfTm,
    DnfTy,
    NeuCmp,
    Red,
    RULES,
    SubstWf,
    Typed,
    TyWf,
)
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
    shift,
    subst1,
    subst2,
)
from .verdict import Accept

NN = Pi(NAT, NAT)
SN = Sig(NAT, NAT)
IDN = Id(NAT, ZERO, ZERO)
ONE = Succ(ZERO)

# a type-level redex: (\x:Nat. Nat) zero, weak-head reducing to Nat
TRED = App(Lam(NAT, NAT), ZERO)
# a term-level redex: (\x:Nat. x) zero, weak-head reducing to zero
RED0 = App(Lam(NAT, Var(0)), ZERO)

C0 = EMPTY_CTX
CN = Context((NAT,))
CF = Context((NN,))
CS = Context((SN,))
CE = Context((Empty(),))
CI = Context((IDN,))
CT = Context((TRED,))


def d(rule: str, conclusion, *premises: Derivation) -> Derivation:
    return Derivation(rule, conclusion, premises)


def _motive_succ(motive: Term) -> Term:
    return apply_subst(motive, Subst((Succ(Var(1)),), 2))


# ---------------------------------------------------------------------------
# Syntax-directed builders


def derive_ctx(ctx: Context) -> Derivation:
    if not ctx.entries:
        return d("CtxEmpty", CtxWf(C0))
    prefix = Context(ctx.entries[:-1])
    return d("CtxCons", CtxWf(ctx),
             derive_ctx(prefix), derive_tm(prefix, ctx.entries[-1], UNIV))


def derive_ty(ctx: Context, ty: Term) -> Derivation:
    match ty:
        case Univ():
            return d("UnivTy", TyWf(ctx, ty), derive_ctx(ctx))
        case Nat():
            return d("NatTy", TyWf(ctx, ty), derive_ctx(ctx))
        case Empty():
            return d("EmptyTy", TyWf(ctx, ty), derive_ctx(ctx))
        case Pi(dom, cod):
            return d("FunTy", TyWf(ctx, ty),
                     derive_ty(ctx, dom), derive_ty(ctx.push(dom), cod))
        case Sig(dom, cod):
            return d("SigTy", TyWf(ctx, ty),
                     derive_ty(ctx, dom), derive_ty(ctx.push(dom), cod))
        case Id(a, l, r):
            return d("IdTy", TyWf(ctx, ty), derive_ty(ctx, a),
                     derive_tm(ctx, l, a), derive_tm(ctx, r, a))
        case _:
            return d("El", TyWf(ctx, ty), derive_tm(ctx, ty, UNIV))


def _infer(ctx: Context, t: Term) -> Term:
    out = infer(ctx, t, TYPED_BACKEND, 10**6)
    if not isinstance(out, Accept):
        raise ValueError(f"corpus term does not infer: {t!r} ({out})")
    return out.payload


def derive_tm(ctx: Context, t: Term, ty: Term) -> Derivation:
    """A Typed derivation for annotation-exact terms, following the syntax."""
    concl = Typed(ctx, t, ty)
    match t, ty:
        case Var(ix), _:
            if ctx.lookup(ix) != ty:
                raise ValueError(f"variable {ix} is not at {ty!r} syntactically")
            return d("Var", concl, derive_ctx(ctx))
        case Pi(dom, cod), Univ():
            return d("FunUni", concl, derive_tm(ctx, dom, UNIV),
                     derive_tm(ctx.push(dom), cod, UNIV))
        case Sig(dom, cod), Univ():
            return d("SigUni", concl, derive_tm(ctx, dom, UNIV),
                     derive_tm(ctx.push(dom), cod, UNIV))
        case Nat(), Univ():
            return d("NatUni", concl, derive_ctx(ctx))
        case Empty(), Univ():
            return d("EmptyUni", concl, derive_ctx(ctx))
        case Id(a, l, r), Univ():
            return d("IdUni", concl, derive_tm(ctx, a, UNIV),
                     derive_tm(ctx, l, a), derive_tm(ctx, r, a))
        case Lam(ann, body), Pi(dom, cod) if ann == dom:
            return d("Abs", concl, derive_ty(ctx, dom),
                     derive_ty(ctx.push(dom), cod),
                     derive_tm(ctx.push(dom), body, cod))
        case App(fn, arg), _:
            fn_ty = _infer(ctx, fn)
            match fn_ty:
                case Pi(dom, _):
                    return d("App", concl, derive_tm(ctx, fn, fn_ty),
                             derive_tm(ctx, arg, dom))
            raise ValueError(f"head of {t!r} is not at a function type")
        case Pair(adom, acod, first, second), Sig(dom, cod) \
                if adom == dom and acod == cod:
            return d("Pair", concl, derive_tm(ctx, first, dom),
                     derive_tm(ctx, second, subst1(cod, first)))
        case Fst(p), _:
            return d("Proj1", concl, derive_tm(ctx, p, _infer(ctx, p)))
        case Snd(p), _:
            return d("Proj2", concl, derive_tm(ctx, p, _infer(ctx, p)))
        case Zero(), Nat():
            return d("Zero", concl, derive_ctx(ctx))
        case Succ(pred), Nat():
            return d("Succ", concl, derive_tm(ctx, pred, NAT))
        case NatElim(motive, base, stp, scrut), _:
            return d("NatRec", concl,
                     derive_tm(ctx, scrut, NAT),
                     derive_ty(ctx.push(NAT), motive),
                     derive_tm(ctx, base, subst1(motive, ZERO)),
                     derive_tm(ctx.push(NAT).push(motive), stp,
                               _motive_succ(motive)))
        case EmptyElim(motive, scrut), _:
            return d("EmptyInd", concl,
                     derive_tm(ctx, scrut, Empty()),
                     derive_ty(ctx.push(Empty()), motive))
        case Refl(a, x), Id(ta, tl, tr) if ta == a and tl == x and tr == x:
            return d("ReflTm", concl, derive_ty(ctx, a), derive_tm(ctx, x, a))
        case IdElim(a, x, motive, branch, scrut), _:
            match _infer(ctx, scrut):
                case Id(_, _, rhs) as scrut_ty:
                    pass
                case _:
                    raise ValueError(f"scrutinee of {t!r} is not at an Id type")
            mot_ctx = ctx.push(a).push(Id(shift(a), shift(x), Var(0)))
            return d("IdInd", concl,
                     derive_ty(ctx, a),
                     derive_tm(ctx, x, a),
                     derive_tm(ctx, rhs, a),
                     derive_tm(ctx, scrut, scrut_ty),
                     derive_ty(mot_ctx, motive),
                     derive_tm(ctx, branch, subst2(motive, x, Refl(a, x))))
    raise ValueError(f"no syntax-directed derivation for {t!r} at {ty!r}")


def refl_tm(ctx: Context, t: Term, ty: Term) -> Derivation:
    return d("Refl", ConvTm(ctx, ty, t, t), derive_tm(ctx, t, ty))


def refl_ty(ctx: Context, ty: Term) -> Derivation:
    return d("ReflTy", ConvTy(ctx, ty, ty), derive_ty(ctx, ty))


def beta_ty(ctx: Context) -> Derivation:
    """(\\x:Nat. Nat) zero converts to Nat at the universe."""
    return d("BetaFun", ConvTm(ctx, UNIV, TRED, NAT),
             derive_ty(ctx, NAT),
             derive_ty(ctx.push(NAT), UNIV),
             derive_tm(ctx.push(NAT), NAT, UNIV),
             derive_tm(ctx, ZERO, NAT))


def conv_tred_nat(ctx: Context) -> Derivation:
    return d("ElC", ConvTy(ctx, TRED, NAT), beta_ty(ctx))


def conv_nat_tred(ctx: Context) -> Derivation:
    return d("SymTy", ConvTy(ctx, NAT, TRED), conv_tred_nat(ctx))


def beta_tm(ctx: Context) -> Derivation:
    """(\\x:Nat. x) zero converts to zero at Nat."""
    return d("BetaFun", ConvTm(ctx, NAT, RED0, ZERO),
             derive_ty(ctx, NAT),
             derive_ty(ctx.push(NAT), NAT),
             derive_tm(ctx.push(NAT), Var(0), NAT),
             derive_tm(ctx, ZERO, NAT))


def red(src: Term, tgt: Term) -> Derivation:
    return d("Red", Red(src, tgt))


def dnf_nat_ty(ctx: Context) -> Derivation:
    return d("DnfNatTy", DnfTy(ctx, NAT), red(NAT, NAT))


def dnf_zero(ctx: Context, tm: Term = ZERO) -> Derivation:
    return d("DnfZero", DnfTm(ctx, NAT, tm), red(NAT, NAT), red(tm, ZERO))


def dne_var(ctx: Context, ix: int) -> Derivation:
    return d("DneVar", DneTm(ctx, Var(ix), ctx.lookup(ix)))


# ---------------------------------------------------------------------------
# The corpus proper


def _nat_elim_univ(ctx: Context, scrut: Term) -> Term:
    """A neutral type: natrec with the universe as its constant motive."""
    return NatElim(UNIV, NAT, NAT, scrut)


def _dne_nat_elim_univ(ctx: Context, scrut_ix: int) -> Derivation:
    scrut = Var(scrut_ix)
    elim = _nat_elim_univ(ctx, scrut)
    step_ctx = ctx.push(NAT).push(UNIV)
    return d("DneNatElim", DneTm(ctx, elim, UNIV),
             dne_var(ctx, scrut_ix),
             red(NAT, NAT),
             d("DnfUnivTy", DnfTy(ctx.push(NAT), UNIV), red(UNIV, UNIV)),
             d("DnfNatUni", DnfTm(ctx, UNIV, NAT),
               red(UNIV, UNIV), red(NAT, NAT)),
             d("DnfNatUni", DnfTm(step_ctx, UNIV, NAT),
               red(UNIV, UNIV), red(NAT, NAT)))


def _id_elim(scrut: Term) -> Term:
    return IdElim(NAT, ZERO, NAT, ZERO, scrut)


def build_corpus() -> list[tuple[str, Derivation]]:
    """(name, derivation) pairs; names are unique and file-system friendly."""
    entries: list[tuple[str, Derivation]] = []

    def add(name: str, deriv: Derivation) -> None:
        entries.append((name, deriv))

    # contexts and substitutions
    add("CtxEmpty_plain", d("CtxEmpty", CtxWf(C0)))
    add("CtxEmpty_again", d("CtxEmpty", CtxWf(C0)))
    add("CtxCons_nat", derive_ctx(CN))
    add("CtxCons_fun", derive_ctx(CF))
    add("SubstEmpty_closed", d("SubstEmpty", SubstWf(C0, (), C0)))
    add("SubstEmpty_open", d("SubstEmpty", SubstWf(CN, (), C0)))
    add("SubstCons_single",
        d("SubstCons", SubstWf(C0, (ZERO,), CN),
          d("SubstEmpty", SubstWf(C0, (), C0)),
          derive_tm(C0, ZERO, NAT)))
    add("SubstCons_double",
        d("SubstCons", SubstWf(C0, (ONE, ZERO), Context((NAT, NAT))),
          d("SubstCons", SubstWf(C0, (ZERO,), CN),
            d("SubstEmpty", SubstWf(C0, (), C0)),
            derive_tm(C0, ZERO, NAT)),
          derive_tm(C0, ONE, NAT)))

    # type formation
    add("FunTy_simple", derive_ty(C0, NN))
    add("FunTy_dependent", derive_ty(C0, Pi(NAT, Id(NAT, Var(0), Var(0)))))
    add("SigTy_simple", derive_ty(C0, SN))
    add("SigTy_dependent", derive_ty(C0, Sig(NAT, Id(NAT, Var(0), Var(0)))))
    add("NatTy_closed", derive_ty(C0, NAT))
    add("NatTy_open", derive_ty(CF, NAT))
    add("EmptyTy_closed", derive_ty(C0, Empty()))
    add("EmptyTy_open", derive_ty(CN, Empty()))
    add("IdTy_closed", derive_ty(C0, IDN))
    add("IdTy_open", derive_ty(CN, Id(NAT, Var(0), Var(0))))
    add("El_nat", d("El", TyWf(C0, NAT), derive_tm(C0, NAT, UNIV)))
    add("El_fun", d("El", TyWf(C0, NN), derive_tm(C0, NN, UNIV)))
    add("UnivTy_closed", derive_ty(C0, UNIV))
    add("UnivTy_open", derive_ty(CN, UNIV))

    # typing
    add("Conv_typed",
        d("Conv", Typed(C0, ZERO, TRED),
          derive_tm(C0, ZERO, NAT), conv_nat_tred(C0)))
    add("Conv_conv",
        d("Conv", ConvTm(C0, TRED, ZERO, ZERO),
          refl_tm(C0, ZERO, NAT), conv_nat_tred(C0)))
    add("Var_nat", derive_tm(CN, Var(0), NAT))
    add("Var_fun", derive_tm(CF, Var(0), NN))
    add("FunUni_closed", derive_tm(C0, NN, UNIV))
    add("FunUni_open", derive_tm(CN, NN, UNIV))
    add("Abs_identity", derive_tm(C0, Lam(NAT, Var(0)), NN))
    add("Abs_successor", derive_tm(C0, Lam(NAT, Succ(Var(0))), NN))
    add("App_zero", derive_tm(CF, App(Var(0), ZERO), NAT))
    add("App_succ", derive_tm(CF, App(Var(0), ONE), NAT))
    add("SigUni_closed", derive_tm(C0, SN, UNIV))
    add("SigUni_open", derive_tm(CN, SN, UNIV))
    add("Pair_simple", derive_tm(C0, Pair(NAT, NAT, ZERO, ONE), SN))
    add("Pair_dependent",
        derive_tm(C0,
                  Pair(NAT, Id(NAT, Var(0), Var(0)), ZERO, Refl(NAT, ZERO)),
                  Sig(NAT, Id(NAT, Var(0), Var(0)))))
    add("Proj1_var", derive_tm(CS, Fst(Var(0)), NAT))
    add("Proj1_literal", derive_tm(C0, Fst(Pair(NAT, NAT, ZERO, ONE)), NAT))
    add("Proj2_var", derive_tm(CS, Snd(Var(0)), NAT))
    add("Proj2_literal", derive_tm(C0, Snd(Pair(NAT, NAT, ZERO, ONE)), NAT))
    add("NatUni_closed", derive_tm(C0, NAT, UNIV))
    add("NatUni_open", derive_tm(CE, NAT, UNIV))
    add("Zero_closed", derive_tm(C0, ZERO, NAT))
    add("Zero_open", derive_tm(CN, ZERO, NAT))
    add("Succ_one", derive_tm(C0, ONE, NAT))
    add("Succ_var", derive_tm(CN, Succ(Var(0)), NAT))
    add("NatRec_var",
        derive_tm(CN, NatElim(NAT, ZERO, Var(0), Var(0)), NAT))
    add("NatRec_literal",
        derive_tm(C0, NatElim(NAT, ONE, Succ(Var(0)), ONE), NAT))
    add("EmptyUni_closed", derive_tm(C0, Empty(), UNIV))
    add("EmptyUni_open", derive_tm(CN, Empty(), UNIV))
    add("EmptyInd_nat", derive_tm(CE, EmptyElim(NAT, Var(0)), NAT))
    add("EmptyInd_empty", derive_tm(CE, EmptyElim(Empty(), Var(0)), Empty()))
    add("IdUni_closed", derive_tm(C0, IDN, UNIV))
    add("IdUni_open", derive_tm(CN, Id(NAT, Var(0), Var(0)), UNIV))
    add("ReflTm_closed", derive_tm(C0, Refl(NAT, ZERO), IDN))
    add("ReflTm_open", derive_tm(CN, Refl(NAT, Var(0)), Id(NAT, Var(0), Var(0))))
    add("IdInd_zero", derive_tm(CI, _id_elim(Var(0)), NAT))
    add("IdInd_refl", derive_tm(C0, _id_elim(Refl(NAT, ZERO)), NAT))

    # type conversion
    add("ReflTy_nat", refl_ty(C0, NAT))
    add("ReflTy_fun", refl_ty(C0, NN))
    add("SymTy_beta", conv_nat_tred(C0))
    add("SymTy_refl", d("SymTy", ConvTy(C0, NAT, NAT), refl_ty(C0, NAT)))
    add("TransTy_beta",
        d("TransTy", ConvTy(C0, TRED, NAT),
          conv_tred_nat(C0), refl_ty(C0, NAT)))
    add("TransTy_round",
        d("TransTy", ConvTy(C0, NAT, NAT),
          conv_nat_tred(C0), conv_tred_nat(C0)))
    add("ElC_beta", conv_tred_nat(C0))
    add("ElC_refl",
        d("ElC", ConvTy(C0, NAT, NAT), refl_tm(C0, NAT, UNIV)))
    add("FunTyC_plain",
        d("FunTyC", ConvTy(C0, NN, NN),
          refl_ty(C0, NAT), refl_ty(CN, NAT)))
    add("FunTyC_beta",
        d("FunTyC", ConvTy(C0, Pi(NAT, NAT), Pi(TRED, NAT)),
          conv_nat_tred(C0), refl_ty(CN, NAT)))
    add("SigTyC_plain",
        d("SigTyC", ConvTy(C0, SN, SN),
          refl_ty(C0, NAT), refl_ty(CN, NAT)))
    add("SigTyC_beta",
        d("SigTyC", ConvTy(C0, Sig(NAT, NAT), Sig(TRED, NAT)),
          conv_nat_tred(C0), refl_ty(CN, NAT)))
    add("IdTyC_plain",
        d("IdTyC", ConvTy(C0, IDN, IDN),
          refl_ty(C0, NAT), refl_tm(C0, ZERO, NAT), refl_tm(C0, ZERO, NAT)))
    add("IdTyC_beta",
        d("IdTyC", ConvTy(C0, Id(NAT, ZERO, ZERO), Id(NAT, RED0, ZERO)),
          refl_ty(C0, NAT),
          d("Sym", ConvTm(C0, NAT, ZERO, RED0), beta_tm(C0)),
          refl_tm(C0, ZERO, NAT)))

    # term conversion
    add("Refl_zero", refl_tm(C0, ZERO, NAT))
    add("Refl_var", refl_tm(CF, Var(0), NN))
    add("Sym_beta", d("Sym", ConvTm(C0, NAT, ZERO, RED0), beta_tm(C0)))
    add("Sym_refl", d("Sym", ConvTm(C0, NAT, ZERO, ZERO),
                      refl_tm(C0, ZERO, NAT)))
    fst_red = Fst(Pair(NAT, NAT, ZERO, ONE))
    beta_fst = d("BetaSig1", ConvTm(C0, NAT, fst_red, ZERO),
                 derive_ty(C0, NAT), derive_ty(CN, NAT),
                 derive_tm(C0, ZERO, NAT), derive_tm(C0, ONE, NAT))
    add("Trans_beta",
        d("Trans", ConvTm(C0, NAT, RED0, ZERO),
          beta_tm(C0), refl_tm(C0, ZERO, NAT)))
    add("Trans_chain",
        d("Trans", ConvTm(C0, NAT, RED0, fst_red),
          beta_tm(C0),
          d("Sym", ConvTm(C0, NAT, ZERO, fst_red), beta_fst)))
    add("FunCong_plain",
        d("FunCong", ConvTm(C0, UNIV, NN, NN),
          refl_tm(C0, NAT, UNIV), refl_tm(CN, NAT, UNIV)))
    add("FunCong_beta",
        d("FunCong", ConvTm(C0, UNIV, Pi(NAT, NAT), Pi(TRED, NAT)),
          d("Sym", ConvTm(C0, UNIV, NAT, TRED), beta_ty(C0)),
          refl_tm(CN, NAT, UNIV)))
    add("SigCong_plain",
        d("SigCong", ConvTm(C0, UNIV, SN, SN),
          refl_tm(C0, NAT, UNIV), refl_tm(CN, NAT, UNIV)))
    add("SigCong_beta",
        d("SigCong", ConvTm(C0, UNIV, Sig(NAT, NAT), Sig(TRED, NAT)),
          d("Sym", ConvTm(C0, UNIV, NAT, TRED), beta_ty(C0)),
          refl_tm(CN, NAT, UNIV)))
    add("IdCong_plain",
        d("IdCong", ConvTm(C0, UNIV, IDN, IDN),
          refl_tm(C0, NAT, UNIV),
          refl_tm(C0, ZERO, NAT), refl_tm(C0, ZERO, NAT)))
    add("IdCong_beta",
        d("IdCong", ConvTm(C0, UNIV, IDN, Id(NAT, RED0, ZERO)),
          refl_tm(C0, NAT, UNIV),
          d("Sym", ConvTm(C0, NAT, ZERO, RED0), beta_tm(C0)),
          refl_tm(C0, ZERO, NAT)))
    add("LamCong_same",
        d("LamCong", ConvTm(C0, NN, Lam(NAT, Var(0)), Lam(NAT, Var(0))),
          refl_tm(CN, Var(0), NAT)))
    add("LamCong_annotations",
        d("LamCong", ConvTm(C0, NN, Lam(NAT, Var(0)), Lam(SN, Var(0))),
          refl_tm(CN, Var(0), NAT)))
    pr = Pair(NAT, NAT, ZERO, ZERO)
    add("PairCong_same",
        d("PairCong", ConvTm(C0, SN, pr, pr),
          refl_tm(C0, ZERO, NAT), refl_tm(C0, ZERO, NAT)))
    add("PairCong_beta",
        d("PairCong", ConvTm(C0, SN, pr, Pair(NAT, NAT, ZERO, RED0)),
          refl_tm(C0, ZERO, NAT),
          d("Sym", ConvTm(C0, NAT, ZERO, RED0), beta_tm(C0))))
    add("SuccCong_refl",
        d("SuccCong", ConvTm(C0, NAT, ONE, ONE), refl_tm(C0, ZERO, NAT)))
    add("SuccCong_beta",
        d("SuccCong", ConvTm(C0, NAT, Succ(RED0), ONE), beta_tm(C0)))
    add("ReflCong_same",
        d("ReflCong", ConvTm(C0, IDN, Refl(NAT, ZERO), Refl(NAT, ZERO))))
    add("ReflCong_annotations",
        d("ReflCong", ConvTm(C0, IDN, Refl(NAT, ZERO), Refl(TRED, RED0))))
    add("BetaFun_identity", beta_tm(C0))
    add("BetaFun_successor",
        d("BetaFun", ConvTm(C0, NAT, App(Lam(NAT, Succ(Var(0))), ZERO), ONE),
          derive_ty(C0, NAT), derive_ty(CN, NAT),
          derive_tm(CN, Succ(Var(0)), NAT), derive_tm(C0, ZERO, NAT)))
    add("EtaFun_var",
        d("EtaFun", ConvTm(CF, NN, Var(0), Lam(NAT, App(Var(1), Var(0)))),
          derive_tm(CF, Var(0), NN)))
    lam_id = Lam(NAT, Var(0))
    add("EtaFun_lambda",
        d("EtaFun", ConvTm(C0, NN, lam_id, Lam(NAT, App(shift(lam_id), Var(0)))),
          derive_tm(C0, lam_id, NN)))
    pair01 = Pair(NAT, NAT, ZERO, ONE)
    add("BetaSig1_literal", beta_fst)
    add("BetaSig1_swapped",
        d("BetaSig1", ConvTm(C0, NAT, Fst(Pair(NAT, NAT, ONE, ZERO)), ONE),
          derive_ty(C0, NAT), derive_ty(CN, NAT),
          derive_tm(C0, ONE, NAT), derive_tm(C0, ZERO, NAT)))
    add("BetaSig2_literal",
        d("BetaSig2", ConvTm(C0, NAT, Snd(pair01), ONE),
          derive_ty(C0, NAT), derive_ty(CN, NAT),
          derive_tm(C0, ZERO, NAT), derive_tm(C0, ONE, NAT)))
    add("BetaSig2_swapped",
        d("BetaSig2", ConvTm(C0, NAT, Snd(Pair(NAT, NAT, ONE, ZERO)), ZERO),
          derive_ty(C0, NAT), derive_ty(CN, NAT),
          derive_tm(C0, ONE, NAT), derive_tm(C0, ZERO, NAT)))
    add("EtaSig_var",
        d("EtaSig", ConvTm(CS, SN, Var(0),
                           Pair(NAT, NAT, Fst(Var(0)), Snd(Var(0)))),
          derive_ty(CS, NAT), derive_ty(CS.push(NAT), NAT),
          derive_tm(CS, Var(0), SN)))
    add("EtaSig_literal",
        d("EtaSig", ConvTm(C0, SN, pair01,
                           Pair(NAT, NAT, Fst(pair01), Snd(pair01))),
          derive_ty(C0, NAT), derive_ty(CN, NAT),
          derive_tm(C0, pair01, SN)))
    elim0 = NatElim(NAT, ZERO, Var(0), ZERO)
    add("BetaZero_forward",
        d("BetaZero", ConvTm(C0, NAT, elim0, ZERO),
          derive_ty(CN, NAT), derive_tm(C0, ZERO, NAT),
          derive_tm(Context((NAT, NAT)), Var(0), NAT)))
    add("BetaZero_one",
        d("BetaZero", ConvTm(C0, NAT, NatElim(NAT, ONE, Var(0), ZERO), ONE),
          derive_ty(CN, NAT), derive_tm(C0, ONE, NAT),
          derive_tm(Context((NAT, NAT)), Var(0), NAT)))
    add("BetaSucc_one",
        d("BetaSucc",
          ConvTm(C0, NAT, NatElim(NAT, ZERO, Var(0), ONE), elim0),
          derive_tm(C0, ZERO, NAT), derive_ty(CN, NAT),
          derive_tm(C0, ZERO, NAT),
          derive_tm(Context((NAT, NAT)), Var(0), NAT)))
    add("BetaSucc_step",
        d("BetaSucc",
          # step \x y. succ x, so the contractum at succ zero is succ zero
          ConvTm(C0, NAT, NatElim(NAT, ZERO, Succ(Var(1)), ONE), ONE),
          derive_tm(C0, ZERO, NAT), derive_ty(CN, NAT),
          derive_tm(C0, ZERO, NAT),
          derive_tm(Context((NAT, NAT)), Succ(Var(1)), NAT)))
    add("BetaRefl_zero",
        d("BetaRefl", ConvTm(C0, NAT, _id_elim(Refl(NAT, ZERO)), ZERO),
          derive_ty(C0, NAT), derive_tm(C0, ZERO, NAT),
          derive_ty(C0.push(NAT).push(Id(NAT, ZERO, Var(0))), NAT),
          derive_tm(C0, ZERO, NAT)))
    add("BetaRefl_one",
        d("BetaRefl",
          ConvTm(C0, NAT, IdElim(NAT, ZERO, NAT, ONE, Refl(NAT, ZERO)), ONE),
          derive_ty(C0, NAT), derive_tm(C0, ZERO, NAT),
          derive_ty(C0.push(NAT).push(Id(NAT, ZERO, Var(0))), NAT),
          derive_tm(C0, ONE, NAT)))

    # neutral comparison
    add("NConv_beta",
        d("NConv", NeuCmp(CT, Var(0), Var(0), NAT),
          d("NVar", NeuCmp(CT, Var(0), Var(0), TRED)),
          conv_tred_nat(CT)))
    add("NConv_refl",
        d("NConv", NeuCmp(CN, Var(0), Var(0), NAT),
          d("NVar", NeuCmp(CN, Var(0), Var(0), NAT)),
          refl_ty(CN, NAT)))
    add("NVar_nat", d("NVar", NeuCmp(CN, Var(0), Var(0), NAT)))
    add("NVar_fun", d("NVar", NeuCmp(CF, Var(0), Var(0), NN)))
    add("NApp_same",
        d("NApp", NeuCmp(CF, App(Var(0), ZERO), App(Var(0), ZERO), NAT),
          d("NVar", NeuCmp(CF, Var(0), Var(0), NN)),
          refl_tm(CF, ZERO, NAT)))
    add("NApp_beta",
        d("NApp", NeuCmp(CF, App(Var(0), ZERO), App(Var(0), RED0), NAT),
          d("NVar", NeuCmp(CF, Var(0), Var(0), NN)),
          d("Sym", ConvTm(CF, NAT, ZERO, RED0), beta_tm(CF))))
    add("NSig1_var",
        d("NSig1", NeuCmp(CS, Fst(Var(0)), Fst(Var(0)), NAT),
          d("NVar", NeuCmp(CS, Var(0), Var(0), SN))))
    add("NSig2_var",
        d("NSig2", NeuCmp(CS, Snd(Var(0)), Snd(Var(0)), NAT),
          d("NVar", NeuCmp(CS, Var(0), Var(0), SN))))
    two_pairs = Context((SN, SN))
    add("NSig1_outer",
        d("NSig1", NeuCmp(two_pairs, Fst(Var(1)), Fst(Var(1)), NAT),
          d("NVar", NeuCmp(two_pairs, Var(1), Var(1), SN))))
    add("NSig2_outer",
        d("NSig2", NeuCmp(two_pairs, Snd(Var(1)), Snd(Var(1)), NAT),
          d("NVar", NeuCmp(two_pairs, Var(1), Var(1), SN))))
    nat_elim_var = NatElim(NAT, ZERO, Var(0), Var(0))
    add("NNatElim_same",
        d("NNatElim", NeuCmp(CN, nat_elim_var, nat_elim_var, NAT),
          d("NVar", NeuCmp(CN, Var(0), Var(0), NAT)),
          refl_ty(CN.push(NAT), NAT),
          refl_tm(CN, ZERO, NAT),
          refl_tm(CN.push(NAT).push(NAT), Var(0), NAT)))
    add("NNatElim_base_beta",
        d("NNatElim",
          NeuCmp(CN, nat_elim_var, NatElim(NAT, RED0, Var(0), Var(0)), NAT),
          d("NVar", NeuCmp(CN, Var(0), Var(0), NAT)),
          refl_ty(CN.push(NAT), NAT),
          d("Sym", ConvTm(CN, NAT, ZERO, RED0), beta_tm(CN)),
          refl_tm(CN.push(NAT).push(NAT), Var(0), NAT)))
    ee = EmptyElim(NAT, Var(0))
    add("NEmptyElim_nat",
        d("NEmptyElim", NeuCmp(CE, ee, ee, NAT),
          d("NVar", NeuCmp(CE, Var(0), Var(0), Empty())),
          refl_ty(CE.push(Empty()), NAT)))
    ee2 = EmptyElim(Empty(), Var(0))
    add("NEmptyElim_empty",
        d("NEmptyElim", NeuCmp(CE, ee2, ee2, Empty()),
          d("NVar", NeuCmp(CE, Var(0), Var(0), Empty())),
          refl_ty(CE.push(Empty()), Empty())))
    ie = _id_elim(Var(0))
    id_mot_ctx = CI.push(NAT).push(Id(NAT, ZERO, Var(0)))
    add("NIdInd_same",
        d("NIdInd", NeuCmp(CI, ie, ie, NAT),
          d("NVar", NeuCmp(CI, Var(0), Var(0), IDN)),
          refl_ty(id_mot_ctx, NAT),
          refl_tm(CI, ZERO, NAT)))
    ie2 = IdElim(NAT, ZERO, NAT, RED0, Var(0))
    add("NIdInd_branch_beta",
        d("NIdInd", NeuCmp(CI, ie, ie2, NAT),
          d("NVar", NeuCmp(CI, Var(0), Var(0), IDN)),
          refl_ty(id_mot_ctx, NAT),
          d("Sym", ConvTm(CI, NAT, ZERO, RED0), beta_tm(CI))))

    # deep normalisation
    pi_red = App(Lam(NAT, NN), ZERO)
    add("DnfFunTy_plain",
        d("DnfFunTy", DnfTy(C0, NN), red(NN, NN),
          dnf_nat_ty(C0), dnf_nat_ty(CN)))
    add("DnfFunTy_reduced",
        d("DnfFunTy", DnfTy(C0, pi_red), red(pi_red, NN),
          dnf_nat_ty(C0), dnf_nat_ty(CN)))
    sig_red = App(Lam(NAT, SN), ZERO)
    add("DnfSigTy_plain",
        d("DnfSigTy", DnfTy(C0, SN), red(SN, SN),
          dnf_nat_ty(C0), dnf_nat_ty(CN)))
    add("DnfSigTy_reduced",
        d("DnfSigTy", DnfTy(C0, sig_red), red(sig_red, SN),
          dnf_nat_ty(C0), dnf_nat_ty(CN)))
    add("DnfNatTy_plain", dnf_nat_ty(C0))
    add("DnfNatTy_reduced",
        d("DnfNatTy", DnfTy(C0, TRED), red(TRED, NAT)))
    add("DnfEmptyTy_plain",
        d("DnfEmptyTy", DnfTy(C0, Empty()), red(Empty(), Empty())))
    empty_red = App(Lam(NAT, Empty()), ZERO)
    add("DnfEmptyTy_reduced",
        d("DnfEmptyTy", DnfTy(C0, empty_red), red(empty_red, Empty())))
    add("DnfUnivTy_plain", d("DnfUnivTy", DnfTy(C0, UNIV), red(UNIV, UNIV)))
    add("DnfUnivTy_open", d("DnfUnivTy", DnfTy(CN, UNIV), red(UNIV, UNIV)))
    add("DnfIdTy_plain",
        d("DnfIdTy", DnfTy(C0, IDN), red(IDN, IDN),
          dnf_nat_ty(C0), dnf_zero(C0), dnf_zero(C0)))
    id_red = App(Lam(NAT, IDN), ZERO)
    add("DnfIdTy_reduced",
        d("DnfIdTy", DnfTy(C0, id_red), red(id_red, IDN),
          dnf_nat_ty(C0), dnf_zero(C0), dnf_zero(C0)))
    neu_ty = _nat_elim_univ(CN, Var(0))
    add("DnfNeuTy_natrec",
        d("DnfNeuTy", DnfTy(CN, neu_ty), red(neu_ty, neu_ty),
          _dne_nat_elim_univ(CN, 0)))
    two_nats = Context((NAT, NAT))
    neu_ty2 = _nat_elim_univ(two_nats, Var(1))
    add("DnfNeuTy_outer",
        d("DnfNeuTy", DnfTy(two_nats, neu_ty2), red(neu_ty2, neu_ty2),
          _dne_nat_elim_univ(two_nats, 1)))
    eta_body = App(shift(lam_id), Var(0))
    add("DnfFun_lambda",
        d("DnfFun", DnfTm(C0, NN, lam_id),
          red(NN, NN), red(lam_id, lam_id),
          d("DnfNeuPos", DnfTm(CN, NAT, eta_body),
            red(NAT, NAT), red(eta_body, Var(0)), dne_var(CN, 0))))
    add("DnfFun_var",
        d("DnfFun", DnfTm(CF, NN, Var(0)),
          red(NN, NN), red(Var(0), Var(0)),
          d("DnfNeuPos", DnfTm(CF.push(NAT), NAT, App(Var(1), Var(0))),
            red(NAT, NAT), red(App(Var(1), Var(0)), App(Var(1), Var(0))),
            d("DneApp", DneTm(CF.push(NAT), App(Var(1), Var(0)), NAT),
              dne_var(CF.push(NAT), 1), red(NN, NN),
              d("DnfNeuPos", DnfTm(CF.push(NAT), NAT, Var(0)),
                red(NAT, NAT), red(Var(0), Var(0)),
                dne_var(CF.push(NAT), 0))))))
    add("DnfSig_literal",
        d("DnfSig", DnfTm(C0, SN, pair01),
          red(SN, SN), red(pair01, pair01),
          dnf_zero(C0, Fst(pair01)),
          d("DnfSucc", DnfTm(C0, NAT, Snd(pair01)),
            red(NAT, NAT), red(Snd(pair01), ONE), dnf_zero(C0))))
    add("DnfSig_var",
        d("DnfSig", DnfTm(CS, SN, Var(0)),
          red(SN, SN), red(Var(0), Var(0)),
          d("DnfNeuPos", DnfTm(CS, NAT, Fst(Var(0))),
            red(NAT, NAT), red(Fst(Var(0)), Fst(Var(0))),
            d("DneFst", DneTm(CS, Fst(Var(0)), NAT),
              dne_var(CS, 0), red(SN, SN))),
          d("DnfNeuPos", DnfTm(CS, NAT, Snd(Var(0))),
            red(NAT, NAT), red(Snd(Var(0)), Snd(Var(0))),
            d("DneSnd", DneTm(CS, Snd(Var(0)), NAT),
              dne_var(CS, 0), red(SN, SN)))))
    add("DnfFunUni_plain",
        d("DnfFunUni", DnfTm(C0, UNIV, NN),
          red(UNIV, UNIV), red(NN, NN),
          d("DnfNatUni", DnfTm(C0, UNIV, NAT), red(UNIV, UNIV), red(NAT, NAT)),
          d("DnfNatUni", DnfTm(CN, UNIV, NAT), red(UNIV, UNIV), red(NAT, NAT))))
    add("DnfFunUni_reduced",
        d("DnfFunUni", DnfTm(C0, UNIV, pi_red),
          red(UNIV, UNIV), red(pi_red, NN),
          d("DnfNatUni", DnfTm(C0, UNIV, NAT), red(UNIV, UNIV), red(NAT, NAT)),
          d("DnfNatUni", DnfTm(CN, UNIV, NAT), red(UNIV, UNIV), red(NAT, NAT))))
    add("DnfSigUni_plain",
        d("DnfSigUni", DnfTm(C0, UNIV, SN),
          red(UNIV, UNIV), red(SN, SN),
          d("DnfNatUni", DnfTm(C0, UNIV, NAT), red(UNIV, UNIV), red(NAT, NAT)),
          d("DnfNatUni", DnfTm(CN, UNIV, NAT), red(UNIV, UNIV), red(NAT, NAT))))
    add("DnfSigUni_reduced",
        d("DnfSigUni", DnfTm(C0, UNIV, sig_red),
          red(UNIV, UNIV), red(sig_red, SN),
          d("DnfNatUni", DnfTm(C0, UNIV, NAT), red(UNIV, UNIV), red(NAT, NAT)),
          d("DnfNatUni", DnfTm(CN, UNIV, NAT), red(UNIV, UNIV), red(NAT, NAT))))
    add("DnfNatUni_plain",
        d("DnfNatUni", DnfTm(C0, UNIV, NAT), red(UNIV, UNIV), red(NAT, NAT)))
    add("DnfNatUni_reduced",
        d("DnfNatUni", DnfTm(C0, UNIV, TRED), red(UNIV, UNIV), red(TRED, NAT)))
    add("DnfEmptyUni_plain",
        d("DnfEmptyUni", DnfTm(C0, UNIV, Empty()),
          red(UNIV, UNIV), red(Empty(), Empty())))
    add("DnfEmptyUni_reduced",
        d("DnfEmptyUni", DnfTm(C0, UNIV, empty_red),
          red(UNIV, UNIV), red(empty_red, Empty())))
    add("DnfIdUni_plain",
        d("DnfIdUni", DnfTm(C0, UNIV, IDN),
          red(UNIV, UNIV), red(IDN, IDN),
          d("DnfNatUni", DnfTm(C0, UNIV, NAT), red(UNIV, UNIV), red(NAT, NAT)),
          dnf_zero(C0), dnf_zero(C0)))
    add("DnfIdUni_reduced",
        d("DnfIdUni", DnfTm(C0, UNIV, id_red),
          red(UNIV, UNIV), red(id_red, IDN),
          d("DnfNatUni", DnfTm(C0, UNIV, NAT), red(UNIV, UNIV), red(NAT, NAT)),
          dnf_zero(C0), dnf_zero(C0)))
    add("DnfZero_plain", dnf_zero(C0))
    add("DnfZero_reduced", dnf_zero(C0, RED0))
    add("DnfSucc_one",
        d("DnfSucc", DnfTm(C0, NAT, ONE),
          red(NAT, NAT), red(ONE, ONE), dnf_zero(C0)))
    add("DnfSucc_reduced",
        d("DnfSucc", DnfTm(C0, NAT, Succ(RED0)),
          red(NAT, NAT), red(Succ(RED0), Succ(RED0)), dnf_zero(C0, RED0)))
    add("DnfRefl_plain",
        d("DnfRefl", DnfTm(C0, IDN, Refl(NAT, ZERO)),
          red(IDN, IDN), red(Refl(NAT, ZERO), Refl(NAT, ZERO))))
    refl_red = App(Lam(NAT, Refl(NAT, ZERO)), ZERO)
    add("DnfRefl_reduced",
        d("DnfRefl", DnfTm(C0, IDN, refl_red),
          red(IDN, IDN), red(refl_red, Refl(NAT, ZERO))))
    add("DnfNeuPos_var",
        d("DnfNeuPos", DnfTm(CN, NAT, Var(0)),
          red(NAT, NAT), red(Var(0), Var(0)), dne_var(CN, 0)))
    add("DnfNeuPos_reduced_ty",
        d("DnfNeuPos", DnfTm(CN, TRED, Var(0)),
          red(TRED, NAT), red(Var(0), Var(0)), dne_var(CN, 0)))
    add("DneVar_nat", dne_var(CN, 0))
    add("DneVar_fun", dne_var(CF, 0))
    add("DneApp_zero",
        d("DneApp", DneTm(CF, App(Var(0), ZERO), NAT),
          dne_var(CF, 0), red(NN, NN), dnf_zero(C0.push(NN))))
    add("DneApp_reduced_arg",
        d("DneApp", DneTm(CF, App(Var(0), RED0), NAT),
          dne_var(CF, 0), red(NN, NN), dnf_zero(CF, RED0)))
    add("DneFst_var",
        d("DneFst", DneTm(CS, Fst(Var(0)), NAT),
          dne_var(CS, 0), red(SN, SN)))
    add("DneFst_outer",
        d("DneFst", DneTm(two_pairs, Fst(Var(1)), NAT),
          dne_var(two_pairs, 1), red(SN, SN)))
    add("DneSnd_var",
        d("DneSnd", DneTm(CS, Snd(Var(0)), NAT),
          dne_var(CS, 0), red(SN, SN)))
    add("DneSnd_outer",
        d("DneSnd", DneTm(two_pairs, Snd(Var(1)), NAT),
          dne_var(two_pairs, 1), red(SN, SN)))
    add("DneNatElim_univ", _dne_nat_elim_univ(CN, 0))
    add("DneNatElim_nat",
        d("DneNatElim", DneTm(CN, nat_elim_var, NAT),
          dne_var(CN, 0), red(NAT, NAT),
          dnf_nat_ty(CN.push(NAT)),
          dnf_zero(CN),
          d("DnfNeuPos", DnfTm(CN.push(NAT).push(NAT), NAT, Var(0)),
            red(NAT, NAT), red(Var(0), Var(0)),
            dne_var(CN.push(NAT).push(NAT), 0))))
    add("DneEmptyElim_nat",
        d("DneEmptyElim", DneTm(CE, ee, NAT),
          dne_var(CE, 0), red(Empty(), Empty()),
          dnf_nat_ty(CE.push(Empty()))))
    add("DneEmptyElim_empty",
        d("DneEmptyElim", DneTm(CE, ee2, Empty()),
          dne_var(CE, 0), red(Empty(), Empty()),
          d("DnfEmptyTy", DnfTy(CE.push(Empty()), Empty()),
            red(Empty(), Empty()))))
    add("DneIdElim_var",
        d("DneIdElim", DneTm(CI, ie, NAT),
          dne_var(CI, 0), red(IDN, IDN),
          dnf_nat_ty(id_mot_ctx),
          dnf_zero(CI)))
    add("DneIdElim_reduced_branch",
        d("DneIdElim", DneTm(CI, IdElim(NAT, ZERO, NAT, RED0, Var(0)), NAT),
          dne_var(CI, 0), red(IDN, IDN),
          dnf_nat_ty(id_mot_ctx),
          dnf_zero(CI, RED0)))
    add("Red_beta", red(TRED, NAT))
    add("Red_base", red(NatElim(NAT, ONE, Succ(Var(0)), ZERO), ONE))

    return entries


def coverage(entries: list[tuple[str, Derivation]]) -> dict[str, int]:
    """How many corpus entries have each rule at the root."""
    counts = {name: 0 for name in RULES}
    for _, deriv in entries:
        counts[deriv.rule] += 1
    return counts
