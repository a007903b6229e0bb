"""Axiom schemes, reductions between them, and the classical corpus.

A reduction ``Ωs ⊃ Φ`` is a function that, given arguments for Φ and a way
to cite instances of the hypotheses, builds a proof of the Φ instance. It
cannot be checked for every formula, so ``check_reduction`` checks it on a
fixed list of sample arguments. Hypothesis instances enter the proof as
``Cite`` nodes backed by fixture library entries, never as kernel axioms.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .binding import NotFree, NotInTerm, fresh, fresh_to_not_free, not_free_in
from .context import EMPTY, Remove, subset_of
from .kernel import (ArrowElim, ArrowIntro, Assume, BotC, BotI, Cite, Close,
                     Diagnostic, ExistIntro, Judgement, LibraryEntry, LogicMode,
                     Proof, UnivElim, UnivIntro, check_proof, judgement_of)
from .substitution import (Sub, apply_substitution, fresh_free_for,
                           sub_inverse, sub_not_free)
from .syntax import (BOT, X, Y, Atom, Dec, Exists, Forall, Formula, Implies,
                     Or, Rel, VarTerm, formula_eq, neg, no, yes)

A = Atom(Rel(1, 0))
P_REL = Rel(5, 1)
FIXTURE_MARK = "$^{\\dagger}$"


def P(t) -> Atom:
    return Atom(P_REL, (t,))


Px = P(VarTerm(X))
Py = P(VarTerm(Y))


@dataclass(frozen=True)
class Scheme:
    name: str
    arity: int
    fn: Callable[..., Formula]
    tex: str | None = None

    def instantiate(self, *args: Formula) -> Formula:
        if len(args) != self.arity:
            raise ValueError(f"{self.name} takes {self.arity} formulas, got {len(args)}")
        return self.fn(*args)

    @property
    def tex_name(self) -> str:
        return self.tex or self.name


def scheme(name: str, arity: int, fn, tex=None) -> Scheme:
    return Scheme(name, arity, fn, tex)


def nullary(name: str, a: Formula, tex=None) -> Scheme:
    return Scheme(name, 0, lambda: a, tex)


def unary(name: str, fn, tex=None) -> Scheme:
    return Scheme(name, 1, fn, tex)


def binary(name: str, fn, tex=None) -> Scheme:
    return Scheme(name, 2, fn, tex)


def dne(a):
    return Implies(neg(neg(a)), a)


def efq(a):
    return Implies(BOT, a)


def dp(a):
    return Exists(X, Implies(a, Forall(X, a)))


def he(a):
    return Exists(X, Implies(Exists(X, a), a))


def lem(a):
    return Or(a, neg(a))


DNE = unary("DNE", dne)
EFQ = unary("EFQ", efq)
DP = unary("DP", dp)
HE = unary("HE", he, tex="H$\\epsilon$")
LEM = unary("LEM", lem)
BUILTIN = (DNE, EFQ, DP, HE, LEM)

# the fixed sample set: a unary atom at x, a nullary atom, bottom, quantified
# formulas (one binding x, one with x free under another binder), and
# compound ones
SAMPLES = (
    Px,
    A,
    BOT,
    Forall(X, Px),
    Forall(Y, Px),
    Implies(Exists(Y, Py), Px),
    Or(Py, A),
)


def instance_key(s: Scheme, args) -> str:
    from .concrete import show_formula
    return f"{s.name}[" + ", ".join(show_formula(a) for a in args) + "]"


class FixtureCiter:
    """Cites hypothesis-scheme instances. Each instance is registered in
    ``library`` as a fixture: a judgement ∅ ⊢ instance that the checker
    accepts by name, and that the typesetter marks as unproved."""

    def __init__(self, schemes: Sequence[Scheme], library: dict | None = None, check=None):
        self.schemes = {s.name: s for s in schemes}
        self.library = library if library is not None else {}
        self.check = check

    def __call__(self, s: Scheme | str, *args: Formula) -> Cite:
        name = s if isinstance(s, str) else s.name
        if name not in self.schemes:
            # not a hypothesis: emit an unresolvable citation so the checker
            # reports it
            sch = s if isinstance(s, Scheme) else None
            a = sch.instantiate(*args) if sch else BOT
            return Cite(f"{name}[?]", a, label=name)
        sch = self.schemes[name]
        a = sch.instantiate(*args)
        if self.check is not None:
            self.check(sch, args)
        key = instance_key(sch, args)
        self.library[key] = LibraryEntry(Judgement(EMPTY, a), fixture=True)
        return Cite(key, a, label=sch.tex_name + FIXTURE_MARK)


@dataclass(frozen=True)
class Reduction:
    hypotheses: tuple
    target: Scheme
    witness: Callable  # (args, cite) -> Proof
    mode: LogicMode = LogicMode.MINIMAL
    name: str = ""
    check: Callable | None = None  # restriction on cited hypothesis instances


def reduction_instance(r: Reduction, args) -> tuple[Proof, dict]:
    library = {}
    citer = FixtureCiter(r.hypotheses, library, r.check)
    return r.witness(tuple(args), citer), library


def check_reduction(r: Reduction, samples=None, mode: LogicMode | None = None) -> Dec:
    """Yes with the list of judgements iff every sampled instance proof
    checks to ∅ ⊢ target instance; no with (sample, diagnostic) otherwise."""
    mode = mode or r.mode
    if samples is None:
        samples = [(a,) * r.target.arity for a in SAMPLES]
    out = []
    for args in samples:
        args = tuple(args)
        if len(args) != r.target.arity:
            raise ValueError(f"{r.target.name} takes {r.target.arity} formulas")
        p, library = reduction_instance(r, args)
        d = check_proof(p, mode, library)
        if not d:
            return no((args, d.reason))
        j = d.witness
        want = r.target.instantiate(*args)
        if not formula_eq(j.conclusion, want):
            return no((args, Diagnostic("mismatch", "conclusion is not the target instance",
                                        (), (want, j.conclusion))))
        if not subset_of(j.context, EMPTY):
            return no((args, Diagnostic("subset", "proof depends on open assumptions",
                                        (), subset_of(j.context, EMPTY).reason)))
        out.append(j)
    return yes(out)


# DNE ⊃ DP

def _ident(a: Formula, x) -> Sub:
    return Sub("ident", a, x, VarTerm(x), a)


def dne_to_dp(a: Formula, cite_dne: Callable[[Formula], Proof]) -> Proof:
    """∅ ⊢ ∃x(α ⇒ ∀xα) from DNE instances, in minimal logic."""
    body = Implies(a, Forall(X, a))
    dpa = dp(a)
    x = VarTerm(X)

    def witness(inner: Proof) -> Proof:
        # ¬DP(α) applied to the ∃-introduction of α ⇒ ∀xα
        return ArrowElim(Assume(neg(dpa)),
                         ExistIntro(x, X, body, ArrowIntro(a, inner), _ident(body, X)))

    all_a = witness(ArrowElim(cite_dne(Forall(X, a)),
                              ArrowIntro(neg(Forall(X, a)),
                                         ArrowElim(Assume(neg(a)), Assume(a)))))
    univ = UnivIntro(X, ArrowElim(cite_dne(a), ArrowIntro(neg(a), all_a)))
    return Close(EMPTY, ArrowElim(cite_dne(dpa),
                                  ArrowIntro(neg(dpa), witness(univ))))


DNE_TO_DP = Reduction((DNE,), DP, lambda args, cite: dne_to_dp(args[0], lambda f: cite(DNE, f)),
                      LogicMode.MINIMAL, "dne_to_dp")


# the bottom rules

def bot_c_from_dne(a: Formula, bot_proof: Proof, cite_dne: Callable[[Formula], Proof],
                   mode: LogicMode = LogicMode.MINIMAL, library=None) -> Proof:
    """From Γ ⊢ ⊥ and DNE, a proof of Γ − ¬α ⊢ α without the classical rule."""
    g = judgement_of(bot_proof, mode, library).context
    return Close(Remove(g, neg(a)),
                 ArrowElim(cite_dne(a), ArrowIntro(neg(a), bot_proof)))


def dne_from_bot_c(a: Formula) -> Proof:
    """∅ ⊢ ¬¬α ⇒ α using the classical rule once."""
    return Close(EMPTY, ArrowIntro(neg(neg(a)),
                                   BotC(a, ArrowElim(Assume(neg(neg(a))), Assume(neg(a))))))


def bot_i_from_efq(a: Formula, bot_proof: Proof, cite_efq: Callable[[Formula], Proof],
                   mode: LogicMode = LogicMode.MINIMAL, library=None) -> Proof:
    """From Γ ⊢ ⊥ and EFQ, a proof of Γ ⊢ α without the intuitionistic rule."""
    g = judgement_of(bot_proof, mode, library).context
    return Close(g, ArrowElim(cite_efq(a), bot_proof))


def efq_from_bot_i(a: Formula) -> Proof:
    """∅ ⊢ ⊥ ⇒ α using the intuitionistic rule once."""
    return Close(EMPTY, ArrowIntro(BOT, BotI(a, Assume(BOT))))


DNE_FROM_BOT_C = Reduction((), DNE, lambda args, cite: dne_from_bot_c(args[0]),
                           LogicMode.CLASSICAL, "dne_from_bot_c")
EFQ_FROM_BOT_I = Reduction((), EFQ, lambda args, cite: efq_from_bot_i(args[0]),
                           LogicMode.INTUITIONISTIC, "efq_from_bot_i")


# LEM without loss of generality

def wlog_lem(a: Formula, nf_lem: Callable[[Formula], Proof]) -> Proof:
    """∅ ⊢ α ∨ ¬α from LEM for formulas where x is not free.

    Rename x to a variable ω fresh in ∀xα, use the oracle on α[x/ω], then
    generalise over ω and instantiate back at x.
    """
    omega, w = fresh(Forall(X, a))
    body_fresh = w.premises[0]  # ω fresh in α, and ω ≠ x
    a_omega, e = apply_substitution(a, X, VarTerm(omega), fresh_free_for(body_fresh, X))
    nf = fresh_to_not_free(body_fresh)
    bot_nf = NotFree("atom", omega, BOT)
    lem_nf = NotFree("or", omega, lem(a), (nf, NotFree("imp", omega, neg(a), (nf, bot_nf))))
    bot_e = Sub("notfree", BOT, X, VarTerm(omega), BOT, (NotFree("atom", X, BOT),))
    lem_e = Sub("or", lem(a), X, VarTerm(omega), lem(a_omega),
                (e, Sub("imp", neg(a), X, VarTerm(omega), neg(a_omega), (e, bot_e))))
    back = sub_inverse(lem_nf, lem_e)
    return Close(EMPTY, UnivElim(VarTerm(X), UnivIntro(omega, nf_lem(a_omega)), back))


def x_not_free_after(a: Formula) -> NotFree:
    """x is not free in α[x/ω] for the ω chosen by ``wlog_lem``."""
    omega, w = fresh(Forall(X, a))
    e = apply_substitution(a, X, VarTerm(omega), fresh_free_for(w.premises[0], X)).evidence
    return sub_not_free(NotInTerm(X, VarTerm(omega)), e)


def _x_not_free_only(s, args):
    if not not_free_in(X, args[0]):
        raise ValueError("the LEM oracle only covers formulas without free x")


WLOG_LEM = Reduction((LEM,), LEM, lambda args, cite: wlog_lem(args[0], lambda b: cite(LEM, b)),
                     LogicMode.MINIMAL, "wlog_lem", _x_not_free_only)
