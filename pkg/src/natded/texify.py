"""LaTeX output for checked proofs, using the bussproofs package."""
from __future__ import annotations

from dataclasses import dataclass

from .context import Context, member_of
from .kernel import (ArrowElim, ArrowIntro, Assume, BotC, BotI, Cite, Close,
                     ConjElim, ConjIntro, DisjElim, DisjIntro1, DisjIntro2,
                     ExistElim, ExistIntro, Proof, UnivElim, UnivIntro,
                     Checker)
from .syntax import (BOT, And, Atom, Exists, Forall, Formula, FuncTerm,
                     Implies, Or, Rel, Term, Var, VarTerm)

ARROW_INTRO = "$\\rightarrow^+$"
ARROW_ELIM = "$\\rightarrow^{-}$"
CONJ_INTRO = "$\\land^+$"
CONJ_ELIM = "$\\land^{-}$"
DISJ_INTRO = "$\\lor^+$"
DISJ_ELIM = "$\\lor^{-}$"
UNIV_INTRO = "$\\forall^+$"
UNIV_ELIM = "$\\forall^{-}$"
EXIST_INTRO = "$\\exists^+$"
EXIST_ELIM = "$\\exists^{-}$"
BOT_C = "$\\bot_c$"
BOT_I = "$\\bot_i$"

ARROW = " \\rightarrow "
AND = " \\land "
OR = " \\lor "
FORALL = "\\forall"
EXISTS = "\\exists"
NOT = "\\lnot"
TEX_BOT = "\\bot"
LP = "\\left("
RP = "\\right)"

_RELS = {0: "\\bot", 1: "A", 2: "B", 3: "C", 4: "D", 5: "P", 6: "Q"}
_VARS = {0: "x", 1: "y", 2: "z"}


def wrap(s: str) -> str:
    return "{" + s + "}"


def strrel(r: Rel) -> str:
    return _RELS.get(r.index, "R_" + wrap(str(r.index)))


def strvar(v: Var) -> str:
    return _VARS.get(v.index, "v_" + wrap(str(v.index)))


def texterm(t: Term) -> str:
    match t:
        case VarTerm(v):
            return wrap(strvar(v))
        case FuncTerm(f, ()) if f.index <= 5:
            return wrap(str(f.index))
        case FuncTerm(f, ()):
            return wrap("f_" + wrap(str(f.index)))
        case FuncTerm(f, args):
            return wrap("f_" + wrap(str(f.index)) + LP + texterms(args) + RP)
    raise TypeError(f"not a term: {t!r}")


def texterms(ts) -> str:
    return ", ".join(texterm(t) for t in ts)


def parenformula(a: Formula) -> str:
    match a:
        case Implies(_, b) if b != BOT:
            return LP + texformula(a) + RP
        case And() | Or():
            return LP + texformula(a) + RP
    return texformula(a)


def texformula(a: Formula) -> str:
    match a:
        case Atom() if a == BOT:
            return TEX_BOT
        case Atom(r, ()):
            return strrel(r)
        case Atom(r, (t,)):
            return strrel(r) + texterm(t)
        case Atom(r, (s, t)):
            return texterm(s) + strrel(r) + texterm(t)
        case Atom(r, ts):
            return strrel(r) + LP + texterms(ts) + RP
        case Implies(l, r) if r == BOT:
            return NOT + wrap(parenformula(l))
        case Implies(l, r):
            return parenformula(l) + ARROW + parenformula(r)
        case And(l, r):
            return parenformula(l) + AND + parenformula(r)
        case Or(l, r):
            return parenformula(l) + OR + parenformula(r)
        case Forall(v, body):
            return FORALL + wrap(strvar(v)) + parenformula(body)
        case Exists(v, body):
            return EXISTS + wrap(strvar(v)) + parenformula(body)
    raise TypeError(f"not a formula: {a!r}")


# proof trees

@dataclass(frozen=True)
class SchemeAx:
    formula: Formula
    label: str


@dataclass(frozen=True)
class OpenAx:
    formula: Formula


@dataclass(frozen=True)
class ClosedAx:
    formula: Formula


@dataclass(frozen=True)
class UnaryInf:
    formula: Formula
    label: str
    child: object


@dataclass(frozen=True)
class BinaryInf:
    formula: Formula
    label: str
    left: object
    right: object


@dataclass(frozen=True)
class TrinaryInf:
    formula: Formula
    label: str
    first: object
    second: object
    third: object


def escape(s: str) -> str:
    return s.replace("_", "\\_")


class _AnyRules:
    # rendering only needs conclusions, so both bottom rules are accepted
    value = "any"
    allows_bot_c = True
    allows_bot_i = True


def proof_to_textree(p: Proof, final: Context | None = None, library=None):
    """Build the display tree. ``final`` is the context of the whole
    deduction; assumptions in it stay open, the others are shown as
    discharged. Conclusions come from the checker, so ``p`` must check."""
    checker = Checker(_AnyRules, library)
    root = checker.check(p)
    final = root.context if final is None else final

    def go(q: Proof):
        a = checker.check(q).conclusion
        match q:
            case Close(_, sub):
                return go(sub)
            case Cite(name, _, _, label):
                return SchemeAx(a, label if label is not None else escape(name))
            case Assume(b):
                return OpenAx(a) if member_of(b, final) else ClosedAx(a)
            case ArrowIntro(_, sub):
                return UnaryInf(a, ARROW_INTRO, go(sub))
            case ArrowElim(s1, s2):
                return BinaryInf(a, ARROW_ELIM, go(s1), go(s2))
            case ConjIntro(s1, s2):
                return BinaryInf(a, CONJ_INTRO, go(s1), go(s2))
            case ConjElim(s1, s2):
                return BinaryInf(a, CONJ_ELIM, go(s1), go(s2))
            case DisjIntro1(_, sub) | DisjIntro2(_, sub):
                return UnaryInf(a, DISJ_INTRO, go(sub))
            case DisjElim(s1, s2, s3):
                return TrinaryInf(a, DISJ_ELIM, go(s1), go(s2), go(s3))
            case UnivIntro(_, sub):
                return UnaryInf(a, UNIV_INTRO, go(sub))
            case UnivElim(_, sub, _):
                return UnaryInf(a, UNIV_ELIM, go(sub))
            case ExistIntro(_, _, _, sub, _):
                return UnaryInf(a, EXIST_INTRO, go(sub))
            case ExistElim(_, s1, s2):
                return BinaryInf(a, EXIST_ELIM, go(s1), go(s2))
            case BotC(_, sub):
                return UnaryInf(a, BOT_C, go(sub))
            case BotI(_, sub):
                return UnaryInf(a, BOT_I, go(sub))
        raise TypeError(f"not a proof node: {q!r}")

    return go(p)


def line(i: int, s: str) -> str:
    return "\t" * i + s + "\n"


def _tag(name: str, s: str) -> str:
    return "\\" + name + "{" + s + "}"


def _label(i, s):
    return line(i, _tag("RightLabel", s))


def _inf(i, name, a):
    return line(i, _tag(name, "$" + texformula(a) + "$"))


def render_tree(t, i: int = 0) -> str:
    match t:
        case SchemeAx(a, s):
            return line(i, "\\AxiomC{}") + _label(i, s) + _inf(i, "UnaryInfC", a)
        case OpenAx(a):
            return _inf(i, "AxiomC", a)
        case ClosedAx(a):
            return line(i, _tag("AxiomC", "$\\left[" + texformula(a) + "\\right]$"))
        case UnaryInf(a, s, c):
            return render_tree(c, i) + _label(i, s) + _inf(i, "UnaryInfC", a)
        case BinaryInf(a, s, c1, c2):
            return (render_tree(c1, i) + render_tree(c2, i + 1)
                    + _label(i, s) + _inf(i, "BinaryInfC", a))
        case TrinaryInf(a, s, c1, c2, c3):
            return (render_tree(c1, i) + render_tree(c2, i + 1) + render_tree(c3, i + 2)
                    + _label(i, s) + _inf(i, "TrinaryInfC", a))
    raise TypeError(f"not a tex tree: {t!r}")


def render_deduction(p: Proof, library=None) -> str:
    return ("\\begin{prooftree}\n"
            + render_tree(proof_to_textree(p, None, library))
            + "\\end{prooftree}\n")


def render_proposition(hypotheses, target: str, deduction: str) -> str:
    return ("\\begin{proposition}\n"
            + "$\\text{" + ", ".join(hypotheses) + "}"
            + " \\supset \\text{" + target + "}$\n"
            + "\\end{proposition}\n"
            + "\\begin{proof}\n"
            + "$ $\n"
            + "\\vspace{-\\baselineskip}\n"
            + deduction
            + "\\vspace{-\\baselineskip}\n"
            + "\\end{proof}\n")


def render_reduction(r, args) -> str:
    """Proposition block for ``r``, with the instance proof for ``args``.
    Hypothesis instances appear as marked fixture citations."""
    from .schemes import reduction_instance
    p, library = reduction_instance(r, args)
    return render_proposition([h.tex_name for h in r.hypotheses], r.target.tex_name,
                              render_deduction(p, library))


def balanced(s: str) -> bool:
    """Braces return to depth zero and environments nest properly."""
    import re
    depth = 0
    i = 0
    while i < len(s):
        c = s[i]
        if c == "\\" and i + 1 < len(s) and s[i + 1] in "{}":
            i += 2
            continue
        if c == "{":
            depth += 1
        elif c == "}":
            depth -= 1
            if depth < 0:
                return False
        i += 1
    if depth:
        return False
    stack = []
    for kind, env in re.findall(r"\\(begin|end)\{([^}]*)\}", s):
        if kind == "begin":
            stack.append(env)
        elif not stack or stack.pop() != env:
            return False
    return not stack
