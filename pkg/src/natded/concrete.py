"""ASCII concrete syntax for terms, formulas, contexts, proofs and scripts.

Formulas::

    formula := disj ('=>' formula)?          right associative
    disj    := conj ('|' disj)?
    conj    := unary ('&' conj)?
    unary   := '~' unary | 'forall' VAR unary | 'exists' VAR unary
             | 'bot' | REL term* | META | '(' formula ')'
    term    := VAR | NUMERAL | FUNC | FUNC '(' term (',' term)* ')'

An atom takes exactly as many terms as its relation's arity. ``~a`` is
``a => bot``. Variables are ``x``, ``y``, ``z`` and ``v<n>``; numerals are
constants. ``r<i>_<k>`` and ``f<i>_<k>`` name raw symbols of index i and
arity k.

Proof bodies are rule applications named after the kernel nodes::

    assume F | arrowintro F P | arrowelim P P | conjintro P P | conjelim P P
    disjintro1 F P | disjintro2 F P | disjelim P P P | univintro VAR P
    univelim TERM P | existintro TERM VAR F P | existelim VAR P P
    close CTX P | cite NAME | cite SCHEME[F, ...] | botc F P | boti F P

where an argument P is a parenthesized application or the name of an
earlier proof, and F is a unary-level formula unless it is the last
argument. Contexts are ``{F, ...}`` joined with ``++`` and ``-- F``.

A script is a sequence of declarations::

    relation NAME/ARITY [= INDEX]
    function NAME/ARITY [= INDEX]
    formula F
    scheme NAME(a, ...) := F
    proof NAME [MODE] [using S, ...] : [CTX] |- F := BODY
    reduction NAME [MODE] : [S, ...] supset T(a, ...) := BODY
"""
from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass, field

from .context import EMPTY, Context, Empty, Remove, Singleton, Union
from .kernel import (ArrowElim, ArrowIntro, Assume, BotC, BotI, Cite, Close,
                     ConjElim, ConjIntro, DisjElim, DisjIntro1, DisjIntro2,
                     ExistElim, ExistIntro, LogicMode, Proof, UnivElim,
                     UnivIntro)
from .syntax import (BOT, And, ArityError, Atom, Exists, Forall, Formula,
                     Func, FuncTerm, Implies, Or, Rel, Term, Var, VarTerm)


class ParseError(ValueError):
    def __init__(self, message, line=0, col=0, expected=()):
        self.line, self.col = line, col
        self.expected = tuple(sorted(set(expected)))
        where = f"{line}:{col}: " if line else ""
        tail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{where}{message}{tail}")


@dataclass(frozen=True)
class Meta(Formula):
    """A formula metavariable, only found in scheme and reduction templates."""
    name: str


@dataclass(frozen=True)
class SchemeCite(Proof):
    """Template node: cite an instance of a hypothesis scheme."""
    scheme: str
    args: tuple


# signature

KEYWORDS = {"forall", "exists", "bot", "relation", "function", "formula", "scheme",
            "proof", "reduction", "using", "supset", "minimal", "int", "classical",
            "assume", "arrowintro", "arrowelim", "conjintro", "conjelim", "disjintro1",
            "disjintro2", "disjelim", "univintro", "univelim", "existintro", "existelim",
            "close", "cite", "botc", "boti"}

_VAR = re.compile(r"([xyz])|v(\d+)$")
_RAW_REL = re.compile(r"r(\d+)_(\d+)$")
_RAW_FUNC = re.compile(r"f(\d+)_(\d+)$")
_FIXED_VARS = {"x": 0, "y": 1, "z": 2}


def var_name(v: Var) -> str:
    for name, i in _FIXED_VARS.items():
        if v.index == i:
            return name
    return f"v{v.index}"


def parse_var_name(s: str) -> Var | None:
    if s in _FIXED_VARS:
        return Var(_FIXED_VARS[s])
    m = re.fullmatch(r"v(\d+)", s)
    return Var(int(m.group(1))) if m else None


def _default_relations():
    rels = {"A": Rel(1, 0), "B": Rel(2, 0), "C": Rel(3, 0), "D": Rel(4, 0),
            "P": Rel(5, 1), "Q": Rel(6, 1)}
    return rels


@dataclass
class Signature:
    relations: dict = field(default_factory=_default_relations)
    functions: dict = field(default_factory=dict)

    def declare(self, kind: str, name: str, sym):
        if name in KEYWORDS or parse_var_name(name) is not None \
                or _RAW_REL.match(name) or _RAW_FUNC.match(name):
            raise ValueError(f"{name!r} is reserved")
        if name in self.relations or name in self.functions:
            raise ValueError(f"{name!r} is already declared")
        (self.relations if kind == "relation" else self.functions)[name] = sym

    def relation(self, name):
        if name == "bot":
            return BOT.rel
        if name in self.relations:
            return self.relations[name]
        m = _RAW_REL.match(name)
        return Rel(int(m.group(1)), int(m.group(2))) if m else None

    def function(self, name):
        if name in self.functions:
            return self.functions[name]
        m = _RAW_FUNC.match(name)
        return Func(int(m.group(1)), int(m.group(2))) if m else None

    def relation_name(self, r: Rel) -> str:
        if r == BOT.rel:
            return "bot"
        for name, s in self.relations.items():
            if s == r:
                return name
        return f"r{r.index}_{r.arity}"

    def function_name(self, f: Func) -> str:
        for name, s in self.functions.items():
            if s == f:
                return name
        if f.arity == 0:
            return str(f.index)
        return f"f{f.index}_{f.arity}"


DEFAULT_SIGNATURE = Signature()


# printing

def show_term(t: Term, sig: Signature = DEFAULT_SIGNATURE) -> str:
    match t:
        case VarTerm(v):
            return var_name(v)
        case FuncTerm(f, args):
            name = sig.function_name(f)
            if not args:
                return name
            return name + "(" + ", ".join(show_term(u, sig) for u in args) + ")"
    raise TypeError(f"not a term: {t!r}")


def show_formula(a: Formula, sig: Signature = DEFAULT_SIGNATURE, level: int = 0) -> str:
    def par(s, need):
        return f"({s})" if need else s

    match a:
        case Meta(name):
            return name
        case Atom(r, args):
            return " ".join([sig.relation_name(r)] + [show_term(t, sig) for t in args])
        case Implies(l, r) if r == BOT:
            return "~" + show_formula(l, sig, 3)
        case Implies(l, r):
            return par(show_formula(l, sig, 1) + " => " + show_formula(r, sig, 0), level > 0)
        case Or(l, r):
            return par(show_formula(l, sig, 2) + " | " + show_formula(r, sig, 1), level > 1)
        case And(l, r):
            return par(show_formula(l, sig, 3) + " & " + show_formula(r, sig, 2), level > 2)
        case Forall(v, body):
            return f"forall {var_name(v)} " + show_formula(body, sig, 3)
        case Exists(v, body):
            return f"exists {var_name(v)} " + show_formula(body, sig, 3)
    raise TypeError(f"not a formula: {a!r}")


def show_context(g: Context, sig: Signature = DEFAULT_SIGNATURE, top=True) -> str:
    match g:
        case Empty():
            return "{}"
        case Singleton(a):
            return "{" + show_formula(a, sig) + "}"
        case Union(l, r):
            # the grammar is left associative, so a union on the right needs parens
            s = show_context(l, sig, True) + " ++ " + show_context(r, sig, False)
        case Remove(inner, a):
            s = show_context(inner, sig, True) + " -- " + show_formula(a, sig, 3)
        case _:
            raise TypeError(f"not a context: {g!r}")
    return s if top else f"({s})"


def show_proof(p: Proof, sig: Signature = DEFAULT_SIGNATURE, top=True) -> str:
    f = lambda a: show_formula(a, sig, 3)
    last = lambda a: show_formula(a, sig)
    sub = lambda q: show_proof(q, sig, False)
    match p:
        case Assume(a):
            s = "assume " + last(a)
        case ArrowIntro(a, q):
            s = f"arrowintro {f(a)} {sub(q)}"
        case ArrowElim(q1, q2):
            s = f"arrowelim {sub(q1)} {sub(q2)}"
        case ConjIntro(q1, q2):
            s = f"conjintro {sub(q1)} {sub(q2)}"
        case ConjElim(q1, q2):
            s = f"conjelim {sub(q1)} {sub(q2)}"
        case DisjIntro1(b, q):
            s = f"disjintro1 {f(b)} {sub(q)}"
        case DisjIntro2(a, q):
            s = f"disjintro2 {f(a)} {sub(q)}"
        case DisjElim(q1, q2, q3):
            s = f"disjelim {sub(q1)} {sub(q2)} {sub(q3)}"
        case UnivIntro(v, q):
            s = f"univintro {var_name(v)} {sub(q)}"
        case UnivElim(t, q, _):
            s = f"univelim {show_term(t, sig)} {sub(q)}"
        case ExistIntro(t, v, body, q, _):
            s = f"existintro {show_term(t, sig)} {var_name(v)} {f(body)} {sub(q)}"
        case ExistElim(v, q1, q2):
            s = f"existelim {var_name(v) if v is not None else '_'} {sub(q1)} {sub(q2)}"
        case Close(g, q):
            s = f"close {show_context(g, sig)} {sub(q)}"
        case Cite(name, _, _, _):
            s = f"cite {name}"
        case SchemeCite(name, args):
            s = f"cite {name}[" + ", ".join(last(a) for a in args) + "]"
        case BotC(a, q):
            s = f"botc {f(a)} {sub(q)}"
        case BotI(a, q):
            s = f"boti {f(a)} {sub(q)}"
        case _:
            raise TypeError(f"not a proof: {p!r}")
    return s if top else f"({s})"


# lexing

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<op>=>|\|-|\+\+|--|:=|[()\[\]{},:/=~&|_])
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z][A-Za-z0-9_']*)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    text = text.replace("\r\n", "\n")
    out, pos, line, start = [], 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), line, pos - start + 1))
        for i, ch in enumerate(m.group()):
            if ch == "\n":
                line += 1
                start = pos + i + 1
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


class Parser:
    def __init__(self, text: str, sig: Signature | None = None, metas=(), proofs=None,
                 schemes=None):
        self.toks = tokenize(text)
        self.i = 0
        self.sig = sig or Signature()
        self.metas = set(metas)
        self.proofs = proofs if proofs is not None else {}     # name -> conclusion
        self.schemes = schemes if schemes is not None else {}  # name -> arity

    # token helpers

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, message, expected=(), tok=None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.col, expected)

    def at(self, text) -> bool:
        return self.tok.text == text and self.tok.kind != "eof"

    def take(self, text=None) -> Token:
        t = self.tok
        if text is not None and t.text != text:
            self.error(f"unexpected {t.text or 'end of input'!r}", [text])
        self.i += 1
        return t

    def ident(self, what="identifier") -> Token:
        if self.tok.kind != "ident":
            self.error(f"unexpected {self.tok.text or 'end of input'!r}", [what])
        return self.take()

    def number(self) -> int:
        if self.tok.kind != "num":
            self.error(f"unexpected {self.tok.text or 'end of input'!r}", ["number"])
        return int(self.take().text)

    def expect_end(self):
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}", ["end of input"])

    # terms and formulas

    def variable(self) -> Var:
        t = self.tok
        v = parse_var_name(t.text) if t.kind == "ident" else None
        if v is None:
            self.error(f"unexpected {t.text or 'end of input'!r}", ["variable"])
        self.take()
        return v

    def term(self) -> Term:
        t = self.tok
        if t.kind == "num":
            self.take()
            return FuncTerm(Func(int(t.text), 0))
        if t.kind != "ident":
            self.error(f"unexpected {t.text or 'end of input'!r}", ["term"])
        v = parse_var_name(t.text)
        if v is not None:
            self.take()
            return VarTerm(v)
        f = self.sig.function(t.text)
        if f is None:
            self.error(f"unknown function or variable {t.text!r}", ["term"])
        self.take()
        if f.arity == 0:
            return FuncTerm(f)
        self.take("(")
        args = [self.term()]
        while self.at(","):
            self.take()
            args.append(self.term())
        close = self.take(")")
        if len(args) != f.arity:
            self.error(f"{t.text} expects {f.arity} arguments, got {len(args)}", tok=close)
        return FuncTerm(f, tuple(args))

    def formula(self) -> Formula:
        a = self.disj()
        if self.at("=>"):
            self.take()
            return Implies(a, self.formula())
        return a

    def disj(self) -> Formula:
        a = self.conj()
        if self.at("|"):
            self.take()
            return Or(a, self.disj())
        return a

    def conj(self) -> Formula:
        a = self.unary()
        if self.at("&"):
            self.take()
            return And(a, self.conj())
        return a

    def unary(self) -> Formula:
        t = self.tok
        if t.text == "~":
            self.take()
            return Implies(self.unary(), BOT)
        if t.text == "(":
            self.take()
            a = self.formula()
            self.take(")")
            return a
        if t.kind != "ident":
            self.error(f"unexpected {t.text or 'end of input'!r}", ["formula"])
        if t.text in ("forall", "exists"):
            self.take()
            v = self.variable()
            body = self.unary()
            return Forall(v, body) if t.text == "forall" else Exists(v, body)
        if t.text in self.metas:
            self.take()
            return Meta(t.text)
        r = self.sig.relation(t.text)
        if r is None:
            self.error(f"unknown relation {t.text!r}", ["formula"])
        self.take()
        args = tuple(self.term() for _ in range(r.arity))
        try:
            return Atom(r, args)
        except ArityError as err:  # pragma: no cover - arity is read off the symbol
            self.error(str(err), tok=t)

    # contexts

    def context(self) -> Context:
        g = self.context_atom()
        while self.at("++") or self.at("--"):
            if self.take().text == "++":
                g = Union(g, self.context_atom())
            else:
                g = Remove(g, self.unary())
        return g

    def context_atom(self) -> Context:
        if self.at("("):
            self.take()
            g = self.context()
            self.take(")")
            return g
        self.take("{")
        if self.at("}"):
            self.take()
            return EMPTY
        items = [self.formula()]
        while self.at(","):
            self.take()
            items.append(self.formula())
        self.take("}")
        g = Singleton(items[-1])
        for a in reversed(items[:-1]):
            g = Union(Singleton(a), g)
        return g

    # proofs

    RULES = ("assume", "arrowintro", "arrowelim", "conjintro", "conjelim", "disjintro1",
             "disjintro2", "disjelim", "univintro", "univelim", "existintro", "existelim",
             "close", "cite", "botc", "boti")

    def proof_arg(self) -> Proof:
        if self.at("("):
            self.take()
            p = self.proof()
            self.take(")")
            return p
        t = self.tok
        if t.kind == "ident" and t.text not in self.RULES:
            return self.cite_name(self.take())
        self.error(f"unexpected {t.text or 'end of input'!r}", ["(", "proof name"])

    def cite_name(self, t: Token) -> Proof:
        if t.text not in self.proofs:
            self.error(f"{t.text!r} is not an earlier proof", tok=t)
        return Cite(t.text, self.proofs[t.text])

    def proof(self) -> Proof:
        t = self.tok
        if t.kind != "ident" or t.text not in self.RULES:
            self.error(f"unexpected {t.text or 'end of input'!r}", self.RULES)
        rule = self.take().text
        match rule:
            case "assume":
                return Assume(self.formula())
            case "arrowintro":
                return ArrowIntro(self.unary(), self.proof_arg())
            case "arrowelim":
                return ArrowElim(self.proof_arg(), self.proof_arg())
            case "conjintro":
                return ConjIntro(self.proof_arg(), self.proof_arg())
            case "conjelim":
                return ConjElim(self.proof_arg(), self.proof_arg())
            case "disjintro1":
                return DisjIntro1(self.unary(), self.proof_arg())
            case "disjintro2":
                return DisjIntro2(self.unary(), self.proof_arg())
            case "disjelim":
                return DisjElim(self.proof_arg(), self.proof_arg(), self.proof_arg())
            case "univintro":
                return UnivIntro(self.variable(), self.proof_arg())
            case "univelim":
                return UnivElim(self.term(), self.proof_arg())
            case "existintro":
                return ExistIntro(self.term(), self.variable(), self.unary(), self.proof_arg())
            case "existelim":
                if self.at("_"):
                    self.take()
                    v = None
                else:
                    v = self.variable()
                return ExistElim(v, self.proof_arg(), self.proof_arg())
            case "close":
                return Close(self.context(), self.proof_arg())
            case "botc":
                return BotC(self.unary(), self.proof_arg())
            case "boti":
                return BotI(self.unary(), self.proof_arg())
            case "cite":
                name = self.ident("name")
                if not self.at("["):
                    return self.cite_name(name)
                if name.text not in self.schemes:
                    self.error(f"{name.text!r} is not an available scheme", tok=name)
                self.take("[")
                args = [self.formula()]
                while self.at(","):
                    self.take()
                    args.append(self.formula())
                close = self.take("]")
                if len(args) != self.schemes[name.text]:
                    self.error(f"{name.text} takes {self.schemes[name.text]} formulas, "
                               f"got {len(args)}", tok=close)
                return SchemeCite(name.text, tuple(args))


def parse_formula(text: str, sig: Signature | None = None, metas=()) -> Formula:
    p = Parser(text, sig, metas)
    a = p.formula()
    p.expect_end()
    return a


def parse_term(text: str, sig: Signature | None = None) -> Term:
    p = Parser(text, sig)
    t = p.term()
    p.expect_end()
    return t


def parse_context(text: str, sig: Signature | None = None) -> Context:
    p = Parser(text, sig)
    g = p.context()
    p.expect_end()
    return g


def parse_proof(text: str, sig: Signature | None = None, proofs=None, schemes=None,
                metas=()) -> Proof:
    p = Parser(text, sig, metas, proofs, schemes)
    if p.at("("):
        q = p.proof_arg()
    else:
        q = p.proof()
    p.expect_end()
    return q


# templates

def fill(obj, env: dict, cite=None):
    """Replace metavariables by formulas (``env``) and scheme citations by
    whatever ``cite(name, args)`` returns."""
    match obj:
        case Meta(name):
            if name not in env:
                raise KeyError(f"unbound metavariable {name!r}")
            return env[name]
        case SchemeCite(name, args):
            args = tuple(fill(a, env) for a in args)
            if cite is None:
                raise ValueError(f"no hypothesis instances available for {name}")
            return cite(name, args)
        case Atom() | Term() | Var() | None | str():
            return obj
        case tuple():
            return tuple(fill(x, env, cite) for x in obj)
        case _ if dataclasses.is_dataclass(obj):
            changes = {f.name: fill(getattr(obj, f.name), env, cite)
                       for f in dataclasses.fields(obj)}
            return dataclasses.replace(obj, **changes)
    return obj


# scripts

MODES = {m.value: m for m in LogicMode}


@dataclass(frozen=True)
class SchemeDecl:
    name: str
    params: tuple
    template: Formula
    line: int = 0


@dataclass(frozen=True)
class FormulaDecl:
    formula: Formula
    line: int = 0


@dataclass(frozen=True)
class ProofDecl:
    name: str
    mode: LogicMode | None
    using: tuple
    context: Context
    conclusion: Formula
    body: Proof
    line: int = 0


@dataclass(frozen=True)
class ReductionDecl:
    name: str
    mode: LogicMode | None
    hypotheses: tuple
    target: str
    params: tuple
    body: Proof
    line: int = 0


@dataclass
class Script:
    signature: Signature
    schemes: dict
    items: list


def _builtin_schemes():
    from .schemes import BUILTIN
    return {s.name: SchemeDecl(s.name, tuple(f"a{i}" for i in range(s.arity)),
                                     s.instantiate(*(Meta(f"a{i}") for i in range(s.arity))))
            for s in BUILTIN}


class ScriptParser(Parser):
    def __init__(self, text: str):
        super().__init__(text, Signature())
        self.scheme_decls = _builtin_schemes()
        self.items = []

    def mode(self):
        if not self.at("["):
            return None
        self.take("[")
        t = self.ident("mode")
        if t.text not in MODES:
            self.error(f"unknown mode {t.text!r}", list(MODES), tok=t)
        self.take("]")
        return MODES[t.text]

    def fresh_name(self, t: Token):
        if t.text in self.proofs or any(getattr(i, "name", None) == t.text for i in self.items):
            self.error(f"{t.text!r} is already defined", tok=t)

    def script(self) -> Script:
        while self.tok.kind != "eof":
            t = self.tok
            match t.text:
                case "relation" | "function":
                    self.symbol_decl()
                case "formula":
                    self.take()
                    self.items.append(FormulaDecl(self.formula(), t.line))
                case "scheme":
                    self.scheme_decl()
                case "proof":
                    self.proof_decl()
                case "reduction":
                    self.reduction_decl()
                case _:
                    self.error(f"unexpected {t.text!r}",
                               ["relation", "function", "formula", "scheme", "proof", "reduction"])
        return Script(self.sig, self.scheme_decls, self.items)

    def symbol_decl(self):
        kind = self.take().text
        name = self.ident("name")
        self.take("/")
        arity = self.number()
        index = None
        if self.at("="):
            self.take()
            index = self.number()
        if index is None:
            used = {s.index for s in (self.sig.relations if kind == "relation"
                                      else self.sig.functions).values()}
            index = max(used | {6}) + 1 if kind == "relation" else max(used | {-1}) + 1
        sym = Rel(index, arity) if kind == "relation" else Func(index, arity)
        try:
            self.sig.declare(kind, name.text, sym)
        except ValueError as err:
            self.error(str(err), tok=name)

    def params(self):
        self.take("(")
        names = [self.ident("metavariable").text]
        while self.at(","):
            self.take()
            names.append(self.ident("metavariable").text)
        self.take(")")
        return tuple(names)

    def scheme_decl(self):
        t = self.take()
        name = self.ident("name")
        if name.text in self.scheme_decls:
            self.error(f"scheme {name.text!r} is already defined", tok=name)
        params = self.params()
        self.take(":=")
        saved, self.metas = self.metas, set(params)
        body = self.formula()
        self.metas = saved
        self.scheme_decls[name.text] = SchemeDecl(name.text, params, body, t.line)

    def scheme_list(self, stop):
        names = []
        while not self.at(stop):
            n = self.ident("scheme name")
            if n.text not in self.scheme_decls:
                self.error(f"unknown scheme {n.text!r}", tok=n)
            names.append(n.text)
            if not self.at(","):
                break
            self.take(",")
        return tuple(names)

    def proof_decl(self):
        t = self.take()
        name = self.ident("name")
        self.fresh_name(name)
        mode = self.mode()
        using = ()
        if self.at("using"):
            self.take()
            using = self.scheme_list(":")
        self.take(":")
        g = EMPTY if self.at("|-") else self.context()
        self.take("|-")
        a = self.formula()
        self.take(":=")
        self.schemes = {n: len(self.scheme_decls[n].params) for n in using}
        body = self.proof_arg() if self.at("(") else self.proof()
        self.schemes = {}
        self.items.append(ProofDecl(name.text, mode, using, g, a, body, t.line))
        self.proofs[name.text] = a

    def reduction_decl(self):
        t = self.take()
        name = self.ident("name")
        self.fresh_name(name)
        mode = self.mode()
        self.take(":")
        hyps = self.scheme_list("supset")
        self.take("supset")
        target = self.ident("scheme name")
        if target.text not in self.scheme_decls:
            self.error(f"unknown scheme {target.text!r}", tok=target)
        params = self.params()
        if len(params) != len(self.scheme_decls[target.text].params):
            self.error(f"{target.text} takes {len(self.scheme_decls[target.text].params)} "
                       "formulas", tok=target)
        self.take(":=")
        self.schemes = {n: len(self.scheme_decls[n].params) for n in hyps}
        saved, self.metas = self.metas, set(params)
        body = self.proof_arg() if self.at("(") else self.proof()
        self.metas, self.schemes = saved, {}
        self.items.append(ReductionDecl(name.text, mode, hyps, target.text, params, body, t.line))


def parse_script(text: str) -> Script:
    return ScriptParser(text).script()
