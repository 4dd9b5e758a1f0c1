"""Surface syntax: tokenizer, named-variable parser, and pretty-printer.

The textual language has named binders; parsing resolves them to de Bruijn
indices, and printing invents fresh names (x0, x1, ...) that avoid capture.
Types and terms share one grammar: the type formers are ordinary expressions.

    T ::= (x : T) -> T | T -> T | (x : T) * T | U | Nat | Empty | Id T t t | t
    t ::= \\x:T. t | pair {x:T. T} (t, t) | fst t | snd t | zero | succ t
        | natrec (x. T) t (x y. t) t | emptyrec (x. T) t
        | refl T t | idrec T t (x y. T) t t | x | t t | (t)

Application binds tightest; the arrow is right-associative; keyword forms
take atoms as arguments.  `--` comments to end of line.

Derivation fixtures use an s-expression tree `(RuleName (conclusion) child*)`
whose leaves are written in the same surface syntax; the reader and writer
for that format live here too, shared by the command line and the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .declarative import (
    ConvTm,
    ConvTy,
    CtxWf,
    Derivation,
    DneTm,
    DnfTm,
    DnfTy,
    Judgment,
    NeuCmp,
    Red,
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
    Succ,
    Term,
    UNIV,
    Univ,
    Var,
    ZERO,
    Zero,
    occurs_free,
    shift,
    strengthen,
)


class SurfaceError(Exception):
    """Positioned front-end failure; syntax and scope problems are distinct."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.message = message


class ParseError(SurfaceError):
    def __init__(self, line: int, col: int, expected: str, found: str):
        super().__init__(line, col, f"expected {expected}, found {found}")
        self.expected = expected
        self.found = found


class ScopeError(SurfaceError):
    def __init__(self, line: int, col: int, name: str):
        super().__init__(line, col, f"unbound name {name!r}")
        self.name = name


# ---------------------------------------------------------------------------
# Tokenizer


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # "ident", "punct", or "eof"
    text: str
    line: int
    col: int


_PUNCT = ("->", "==", "|-", "(", ")", "{", "}", ",", ":", ".", "*", "\\")

KEYWORDS = frozenset({
    "U", "Nat", "Empty", "Id", "zero", "succ", "fst", "snd", "pair",
    "natrec", "emptyrec", "refl", "idrec", "ctx", "sub",
})


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if source.startswith("--", i):
            while i < n and source[i] != "\n":
                i += 1
            continue
        for p in _PUNCT:
            if source.startswith(p, i):
                tokens.append(Token("punct", p, line, col))
                i += len(p)
                col += len(p)
                break
        else:
            if ch.isalnum() or ch == "_":
                j = i
                while j < n and (source[j].isalnum() or source[j] in "_'"):
                    j += 1
                tokens.append(Token("ident", source[i:j], line, col))
                col += j - i
                i = j
            else:
                raise ParseError(line, col, "a token", repr(ch))
    tokens.append(Token("eof", "", line, col))
    return tokens


class TokenStream:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> Token:
        ix = min(self.pos + ahead, len(self.tokens) - 1)
        return self.tokens[ix]

    def next(self) -> Token:
        tok = self.peek()
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.text != text or tok.kind == "eof":
            raise ParseError(tok.line, tok.col, repr(text),
                             repr(tok.text) if tok.kind != "eof" else "end of input")
        return self.next()

    def at_ident(self) -> bool:
        tok = self.peek()
        return tok.kind == "ident" and tok.text not in KEYWORDS


# ---------------------------------------------------------------------------
# Term parser (names -> de Bruijn)


def _resolve(names: tuple[str, ...], tok: Token) -> Term:
    for depth, name in enumerate(reversed(names)):
        if name == tok.text:
            return Var(depth)
    # `_k`: the k-th variable beyond the named scope; lets context-free
    # judgments (reduction) mention context variables and still round-trip
    if tok.text.startswith("_") and tok.text[1:].isdigit():
        return Var(len(names) + int(tok.text[1:]))
    raise ScopeError(tok.line, tok.col, tok.text)


def parse_term(ts: TokenStream, names: tuple[str, ...]) -> Term:
    return _parse_arrow(ts, names)


def _parse_arrow(ts: TokenStream, names: tuple[str, ...]) -> Term:
    # binder group: ( ident : T ) -> ...  or  ( ident : T ) * ...
    if (ts.peek().text == "(" and ts.peek(1).kind == "ident"
            and ts.peek(1).text not in KEYWORDS and ts.peek(2).text == ":"):
        ts.expect("(")
        name = ts.next().text
        ts.expect(":")
        dom = _parse_arrow(ts, names)
        ts.expect(")")
        tok = ts.peek()
        if tok.text == "->":
            ts.next()
            return Pi(dom, _parse_arrow(ts, names + (name,)))
        if tok.text == "*":
            ts.next()
            return Sig(dom, _parse_arrow(ts, names + (name,)))
        raise ParseError(tok.line, tok.col, "'->' or '*'", repr(tok.text))
    head = _parse_app(ts, names)
    if ts.peek().text == "->":
        ts.next()
        cod = _parse_arrow(ts, names)
        return Pi(head, shift(cod))
    return head


def _starts_atom(ts: TokenStream) -> bool:
    tok = ts.peek()
    if tok.text == "(":
        return True
    return tok.kind == "ident"


def _parse_app(ts: TokenStream, names: tuple[str, ...]) -> Term:
    head = _parse_prefix(ts, names)
    while _starts_atom(ts):
        head = App(head, _parse_atom(ts, names))
    return head


def _parse_binder1(ts: TokenStream, names: tuple[str, ...]) -> Term:
    """`(x. T)` one-binder group."""
    ts.expect("(")
    name = ts.next()
    if name.kind != "ident":
        raise ParseError(name.line, name.col, "a binder name", repr(name.text))
    ts.expect(".")
    body = parse_term(ts, names + (name.text,))
    ts.expect(")")
    return body


def _parse_binder2(ts: TokenStream, names: tuple[str, ...]) -> Term:
    """`(x y. T)` two-binder group; x is the outer variable."""
    ts.expect("(")
    x = ts.next()
    y = ts.next()
    if x.kind != "ident" or y.kind != "ident":
        raise ParseError(x.line, x.col, "two binder names", repr(x.text))
    ts.expect(".")
    body = parse_term(ts, names + (x.text, y.text))
    ts.expect(")")
    return body


def _parse_prefix(ts: TokenStream, names: tuple[str, ...]) -> Term:
    tok = ts.peek()
    match tok.text:
        case "\\":
            ts.next()
            name = ts.next()
            if name.kind != "ident":
                raise ParseError(name.line, name.col, "a binder name",
                                 repr(name.text))
            ts.expect(":")
            ann = parse_term(ts, names)
            ts.expect(".")
            return Lam(ann, parse_term(ts, names + (name.text,)))
        case "succ":
            ts.next()
            return Succ(_parse_atom(ts, names))
        case "fst":
            ts.next()
            return Fst(_parse_atom(ts, names))
        case "snd":
            ts.next()
            return Snd(_parse_atom(ts, names))
        case "Id":
            ts.next()
            ty = _parse_atom(ts, names)
            lhs = _parse_atom(ts, names)
            return Id(ty, lhs, _parse_atom(ts, names))
        case "refl":
            ts.next()
            ty = _parse_atom(ts, names)
            return Refl(ty, _parse_atom(ts, names))
        case "pair":
            ts.next()
            ts.expect("{")
            name = ts.next()
            if name.kind != "ident":
                raise ParseError(name.line, name.col, "a binder name",
                                 repr(name.text))
            ts.expect(":")
            dom = parse_term(ts, names)
            ts.expect(".")
            cod = parse_term(ts, names + (name.text,))
            ts.expect("}")
            ts.expect("(")
            first = parse_term(ts, names)
            ts.expect(",")
            second = parse_term(ts, names)
            ts.expect(")")
            return Pair(dom, cod, first, second)
        case "natrec":
            ts.next()
            motive = _parse_binder1(ts, names)
            base = _parse_atom(ts, names)
            step = _parse_binder2(ts, names)
            return NatElim(motive, base, step, _parse_atom(ts, names))
        case "emptyrec":
            ts.next()
            motive = _parse_binder1(ts, names)
            return EmptyElim(motive, _parse_atom(ts, names))
        case "idrec":
            ts.next()
            ty = _parse_atom(ts, names)
            lhs = _parse_atom(ts, names)
            motive = _parse_binder2(ts, names)
            branch = _parse_atom(ts, names)
            return IdElim(ty, lhs, motive, branch, _parse_atom(ts, names))
        case _:
            return _parse_atom(ts, names)


def _parse_atom(ts: TokenStream, names: tuple[str, ...]) -> Term:
    tok = ts.peek()
    if tok.text == "(":
        ts.next()
        inner = parse_term(ts, names)
        ts.expect(")")
        return inner
    if tok.kind != "ident":
        raise ParseError(tok.line, tok.col, "a term",
                         repr(tok.text) if tok.kind != "eof" else "end of input")
    match tok.text:
        case "U":
            ts.next()
            return UNIV
        case "Nat":
            ts.next()
            return NAT
        case "Empty":
            ts.next()
            return Empty()
        case "zero":
            ts.next()
            return ZERO
        case kw if kw in KEYWORDS:
            # keyword-led forms reachable in atom position via parentheses only
            raise ParseError(tok.line, tok.col, "an atom", repr(kw))
        case _:
            ts.next()
            return _resolve(names, tok)


def parse_term_source(source: str, names: tuple[str, ...] = ()) -> Term:
    ts = TokenStream(tokenize(source))
    t = parse_term(ts, names)
    tok = ts.peek()
    if tok.kind != "eof":
        raise ParseError(tok.line, tok.col, "end of input", repr(tok.text))
    return t


# ---------------------------------------------------------------------------
# Pretty-printer

_ARROW_LEVEL, _APP_LEVEL, _ATOM_LEVEL = 0, 1, 2


def _fresh(names: tuple[str, ...]) -> str:
    used = set(names)
    i = 0
    while f"x{i}" in used:
        i += 1
    return f"x{i}"


def print_term(t: Term, names: tuple[str, ...] = ()) -> str:
    return _print(t, names, _ARROW_LEVEL)


def _wrap(text: str, level: int, required: int) -> str:
    return f"({text})" if level < required else text


def _print(t: Term, names: tuple[str, ...], required: int) -> str:
    match t:
        case Var(ix):
            if ix < len(names):
                return names[len(names) - 1 - ix]
            return f"_{ix - len(names)}"  # free beyond the given names
        case Univ():
            return "U"
        case Nat():
            return "Nat"
        case Empty():
            return "Empty"
        case Zero():
            return "zero"
        case Pi(dom, cod):
            inner = strengthen(cod)
            if inner is not None and not occurs_free(cod, 0):
                text = (f"{_print(dom, names, _APP_LEVEL)} -> "
                        f"{_print(inner, names, _ARROW_LEVEL)}")
            else:
                x = _fresh(names)
                text = (f"({x} : {_print(dom, names, _ARROW_LEVEL)}) -> "
                        f"{_print(cod, names + (x,), _ARROW_LEVEL)}")
            return _wrap(text, _ARROW_LEVEL, required)
        case Sig(dom, cod):
            x = _fresh(names)
            text = (f"({x} : {_print(dom, names, _ARROW_LEVEL)}) * "
                    f"{_print(cod, names + (x,), _ARROW_LEVEL)}")
            return _wrap(text, _ARROW_LEVEL, required)
        case Lam(ann, body):
            x = _fresh(names)
            text = (f"\\{x}:{_print(ann, names, _APP_LEVEL)}. "
                    f"{_print(body, names + (x,), _ARROW_LEVEL)}")
            return _wrap(text, _ARROW_LEVEL, required)
        case App(fn, arg):
            text = f"{_print(fn, names, _APP_LEVEL)} {_print(arg, names, _ATOM_LEVEL)}"
            return _wrap(text, _APP_LEVEL, required)
        case Succ(pred):
            text = f"succ {_print(pred, names, _ATOM_LEVEL)}"
            return _wrap(text, _APP_LEVEL, required)
        case Fst(p):
            text = f"fst {_print(p, names, _ATOM_LEVEL)}"
            return _wrap(text, _APP_LEVEL, required)
        case Snd(p):
            text = f"snd {_print(p, names, _ATOM_LEVEL)}"
            return _wrap(text, _APP_LEVEL, required)
        case Id(ty, lhs, rhs):
            text = (f"Id {_print(ty, names, _ATOM_LEVEL)} "
                    f"{_print(lhs, names, _ATOM_LEVEL)} "
                    f"{_print(rhs, names, _ATOM_LEVEL)}")
            return _wrap(text, _APP_LEVEL, required)
        case Refl(ty, tm):
            text = (f"refl {_print(ty, names, _ATOM_LEVEL)} "
                    f"{_print(tm, names, _ATOM_LEVEL)}")
            return _wrap(text, _APP_LEVEL, required)
        case Pair(dom, cod, first, second):
            x = _fresh(names)
            text = (f"pair {{{x}:{_print(dom, names, _ARROW_LEVEL)}. "
                    f"{_print(cod, names + (x,), _ARROW_LEVEL)}}} "
                    f"({_print(first, names, _ARROW_LEVEL)}, "
                    f"{_print(second, names, _ARROW_LEVEL)})")
            return _wrap(text, _APP_LEVEL, required)
        case NatElim(motive, base, step, scrut):
            x = _fresh(names)
            y = _fresh(names + (x,))
            text = (f"natrec ({x}. {_print(motive, names + (x,), _ARROW_LEVEL)}) "
                    f"{_print(base, names, _ATOM_LEVEL)} "
                    f"({x} {y}. {_print(step, names + (x, y), _ARROW_LEVEL)}) "
                    f"{_print(scrut, names, _ATOM_LEVEL)}")
            return _wrap(text, _APP_LEVEL, required)
        case EmptyElim(motive, scrut):
            x = _fresh(names)
            text = (f"emptyrec ({x}. {_print(motive, names + (x,), _ARROW_LEVEL)}) "
                    f"{_print(scrut, names, _ATOM_LEVEL)}")
            return _wrap(text, _APP_LEVEL, required)
        case IdElim(ty, lhs, motive, branch, scrut):
            x = _fresh(names)
            y = _fresh(names + (x,))
            text = (f"idrec {_print(ty, names, _ATOM_LEVEL)} "
                    f"{_print(lhs, names, _ATOM_LEVEL)} "
                    f"({x} {y}. {_print(motive, names + (x, y), _ARROW_LEVEL)}) "
                    f"{_print(branch, names, _ATOM_LEVEL)} "
                    f"{_print(scrut, names, _ATOM_LEVEL)}")
            return _wrap(text, _APP_LEVEL, required)
    raise AssertionError(t)


# ---------------------------------------------------------------------------
# Queries


@dataclass(frozen=True, slots=True)
class Query:
    directive: str  # check | infer | conv | whnf | nf | validate
    ctx_names: tuple[str, ...]
    ctx: Context
    payload: tuple  # directive-specific terms, or a fixture path for validate


DIRECTIVES = ("check", "infer", "conv", "whnf", "nf", "validate")


def parse_query(source: str) -> Query:
    # validate's payload is a raw file path, which the term tokenizer would
    # choke on; peel it off before tokenizing
    stripped = source.strip()
    if stripped == "validate" or stripped.startswith("validate ") \
            or stripped.startswith("validate\t"):
        rest = stripped[len("validate"):].strip()
        if not rest:
            col = source.rstrip().rfind("validate") + len("validate") + 1
            raise ParseError(1, col, "a fixture file path", "end of input")
        return Query("validate", (), EMPTY_CTX, (rest,))
    ts = TokenStream(tokenize(source))
    head = ts.next()
    if head.kind != "ident" or head.text not in DIRECTIVES:
        raise ParseError(head.line, head.col, "a directive",
                         repr(head.text) if head.kind != "eof" else "end of input")
    directive = head.text
    names: tuple[str, ...] = ()
    ctx = EMPTY_CTX
    while ts.peek().text == "(":
        ts.expect("(")
        name = ts.next()
        if name.kind != "ident" or name.text in KEYWORDS:
            raise ParseError(name.line, name.col, "a variable name",
                             repr(name.text))
        ts.expect(":")
        ctx = ctx.push(parse_term(ts, names))
        names = names + (name.text,)
        ts.expect(")")
    ts.expect("|-")
    match directive:
        case "conv":
            lhs = parse_term(ts, names)
            ts.expect("==")
            rhs = parse_term(ts, names)
            ts.expect(":")
            ty = parse_term(ts, names)
            payload = (lhs, rhs, ty)
        case "check":
            tm = parse_term(ts, names)
            ts.expect(":")
            payload = (tm, parse_term(ts, names))
        case _:
            payload = (parse_term(ts, names),)
    tok = ts.peek()
    if tok.kind != "eof":
        raise ParseError(tok.line, tok.col, "end of input", repr(tok.text))
    return Query(directive, names, ctx, payload)


# ---------------------------------------------------------------------------
# Derivation fixtures (s-expressions over the surface syntax)


def _group(ts: TokenStream) -> list[Token]:
    """One balanced token group: a single token or a parenthesized span."""
    tok = ts.peek()
    if tok.text != "(":
        if tok.kind == "eof":
            raise ParseError(tok.line, tok.col, "a term", "end of input")
        return [ts.next()]
    depth = 0
    out: list[Token] = []
    while True:
        tok = ts.next()
        if tok.kind == "eof":
            raise ParseError(tok.line, tok.col, "')'", "end of input")
        out.append(tok)
        if tok.text == "(" or tok.text == "{":
            depth += 1
        elif tok.text == ")" or tok.text == "}":
            depth -= 1
            if depth == 0:
                return out


def _group_term(ts: TokenStream, names: tuple[str, ...]) -> Term:
    tokens = _group(ts)
    sub = TokenStream(tokens + [Token("eof", "", tokens[-1].line, tokens[-1].col)])
    t = parse_term(sub, names)
    tok = sub.peek()
    if tok.kind != "eof":
        raise ParseError(tok.line, tok.col, "end of term", repr(tok.text))
    return t


def _parse_ctx_sexpr(ts: TokenStream) -> tuple[tuple[str, ...], Context]:
    ts.expect("(")
    ts.expect("ctx")
    names: tuple[str, ...] = ()
    ctx = EMPTY_CTX
    while ts.peek().text == "(":
        ts.expect("(")
        name = ts.next()
        if name.kind != "ident":
            raise ParseError(name.line, name.col, "a variable name",
                             repr(name.text))
        ts.expect(":")
        ctx = ctx.push(parse_term(ts, names))
        names = names + (name.text,)
        ts.expect(")")
    ts.expect(")")
    return names, ctx


def _parse_judgment(ts: TokenStream) -> Judgment:
    ts.expect("(")
    head = ts.next()
    match head.text:
        case "CtxWf":
            _, ctx = _parse_ctx_sexpr(ts)
            out: Judgment = CtxWf(ctx)
        case "SubstWf":
            names, ctx = _parse_ctx_sexpr(ts)
            ts.expect("(")
            ts.expect("sub")
            sub = []
            while ts.peek().text != ")":
                sub.append(_group_term(ts, names))
            ts.expect(")")
            _, target = _parse_ctx_sexpr(ts)
            out = SubstWf(ctx, tuple(sub), target)
        case "TyWf":
            names, ctx = _parse_ctx_sexpr(ts)
            out = TyWf(ctx, _group_term(ts, names))
        case "Typed":
            names, ctx = _parse_ctx_sexpr(ts)
            tm = _group_term(ts, names)
            out = Typed(ctx, tm, _group_term(ts, names))
        case "ConvTy":
            names, ctx = _parse_ctx_sexpr(ts)
            lhs = _group_term(ts, names)
            out = ConvTy(ctx, lhs, _group_term(ts, names))
        case "ConvTm":
            names, ctx = _parse_ctx_sexpr(ts)
            ty = _group_term(ts, names)
            lhs = _group_term(ts, names)
            out = ConvTm(ctx, ty, lhs, _group_term(ts, names))
        case "NeuCmp":
            names, ctx = _parse_ctx_sexpr(ts)
            lhs = _group_term(ts, names)
            rhs = _group_term(ts, names)
            out = NeuCmp(ctx, lhs, rhs, _group_term(ts, names))
        case "DnfTy":
            names, ctx = _parse_ctx_sexpr(ts)
            out = DnfTy(ctx, _group_term(ts, names))
        case "DnfTm":
            names, ctx = _parse_ctx_sexpr(ts)
            ty = _group_term(ts, names)
            out = DnfTm(ctx, ty, _group_term(ts, names))
        case "DneTm":
            names, ctx = _parse_ctx_sexpr(ts)
            tm = _group_term(ts, names)
            out = DneTm(ctx, tm, _group_term(ts, names))
        case "Red":
            src = _group_term(ts, ())
            out = Red(src, _group_term(ts, ()))
        case _:
            raise ParseError(head.line, head.col, "a judgment name",
                             repr(head.text))
    ts.expect(")")
    return out


def parse_derivation_stream(ts: TokenStream) -> Derivation:
    ts.expect("(")
    name = ts.next()
    if name.kind != "ident":
        raise ParseError(name.line, name.col, "a rule name", repr(name.text))
    conclusion = _parse_judgment(ts)
    premises = []
    while ts.peek().text == "(":
        premises.append(parse_derivation_stream(ts))
    ts.expect(")")
    return Derivation(name.text, conclusion, tuple(premises))


def parse_derivation(source: str) -> Derivation:
    ts = TokenStream(tokenize(source))
    d = parse_derivation_stream(ts)
    tok = ts.peek()
    if tok.kind != "eof":
        raise ParseError(tok.line, tok.col, "end of input", repr(tok.text))
    return d


def _ctx_names(ctx: Context) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(len(ctx.entries)))


def _ctx_sexpr(ctx: Context) -> str:
    names: tuple[str, ...] = ()
    parts = []
    for i, entry in enumerate(ctx.entries):
        parts.append(f"(x{i} : {print_term(entry, names)})")
        names = names + (f"x{i}",)
    inner = " ".join(parts)
    return f"(ctx {inner})" if inner else "(ctx)"


def _tm(t: Term, names: tuple[str, ...]) -> str:
    """A term as one balanced group, parenthesized unless already atomic."""
    text = print_term(t, names)
    if isinstance(t, (Var, Univ, Nat, Empty, Zero)):
        return text
    return f"({text})"


def _judgment_sexpr(j: Judgment) -> str:
    match j:
        case CtxWf(ctx):
            return f"(CtxWf {_ctx_sexpr(ctx)})"
        case SubstWf(ctx, sub, target):
            names = _ctx_names(ctx)
            subs = " ".join(_tm(t, names) for t in sub)
            inner = f"(sub {subs})" if subs else "(sub)"
            return f"(SubstWf {_ctx_sexpr(ctx)} {inner} {_ctx_sexpr(target)})"
        case TyWf(ctx, ty):
            return f"(TyWf {_ctx_sexpr(ctx)} {_tm(ty, _ctx_names(ctx))})"
        case Typed(ctx, tm, ty):
            names = _ctx_names(ctx)
            return f"(Typed {_ctx_sexpr(ctx)} {_tm(tm, names)} {_tm(ty, names)})"
        case ConvTy(ctx, lhs, rhs):
            names = _ctx_names(ctx)
            return f"(ConvTy {_ctx_sexpr(ctx)} {_tm(lhs, names)} {_tm(rhs, names)})"
        case ConvTm(ctx, ty, lhs, rhs):
            names = _ctx_names(ctx)
            return (f"(ConvTm {_ctx_sexpr(ctx)} {_tm(ty, names)} "
                    f"{_tm(lhs, names)} {_tm(rhs, names)})")
        case NeuCmp(ctx, lhs, rhs, ty):
            names = _ctx_names(ctx)
            return (f"(NeuCmp {_ctx_sexpr(ctx)} {_tm(lhs, names)} "
                    f"{_tm(rhs, names)} {_tm(ty, names)})")
        case DnfTy(ctx, ty):
            return f"(DnfTy {_ctx_sexpr(ctx)} {_tm(ty, _ctx_names(ctx))})"
        case DnfTm(ctx, ty, tm):
            names = _ctx_names(ctx)
            return f"(DnfTm {_ctx_sexpr(ctx)} {_tm(ty, names)} {_tm(tm, names)})"
        case DneTm(ctx, tm, ty):
            names = _ctx_names(ctx)
            return f"(DneTm {_ctx_sexpr(ctx)} {_tm(tm, names)} {_tm(ty, names)})"
        case Red(src, tgt):
            return f"(Red {_tm(src, ())} {_tm(tgt, ())})"
    raise AssertionError(j)


def derivation_sexpr(d: Derivation, indent: int = 0) -> str:
    pad = "  " * indent
    head = f"{pad}({d.rule} {_judgment_sexpr(d.conclusion)}"
    if not d.premises:
        return head + ")"
    kids = "\n".join(derivation_sexpr(p, indent + 1) for p in d.premises)
    return f"{head}\n{kids}\n{pad})"
