"""Natural deduction proof objects and the checker.

A proof is a tree of rule nodes. ``check_proof`` computes the context and
conclusion of every node bottom-up and re-decides every side condition
(formula agreement, variable freedom over the open assumptions, substitution
evidence, context inclusion). Evidence stored in a proof is verified, never
trusted.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .binding import not_free_in
from .context import (EMPTY, Context, Remove, Singleton, Union, all_satisfy,
                      subset_of)
from .substitution import (Sub, SubstitutionError, apply_substitution,
                           verify_evidence)
from .syntax import (BOT, Dec, Exists, Forall, Formula, Implies, And, Or,
                     Term, Var, formula_eq, neg, no, yes)


class LogicMode(enum.Enum):
    MINIMAL = "minimal"
    INTUITIONISTIC = "int"
    CLASSICAL = "classical"

    @property
    def allows_bot_i(self) -> bool:
        # the two bottom rules are independent toggles
        return self is LogicMode.INTUITIONISTIC

    @property
    def allows_bot_c(self) -> bool:
        return self is LogicMode.CLASSICAL


class Proof:
    __slots__ = ()


@dataclass(frozen=True)
class Cite(Proof):
    """Use a closed result: either ``proof`` itself or the library entry
    ``name``. ``label`` is the display name used when typesetting."""

    name: str
    formula: Formula
    proof: Proof | None = None
    label: str | None = None


@dataclass(frozen=True)
class Close(Proof):
    target: Context
    proof: Proof


@dataclass(frozen=True)
class Assume(Proof):
    formula: Formula


@dataclass(frozen=True)
class ArrowIntro(Proof):
    formula: Formula
    proof: Proof


@dataclass(frozen=True)
class ArrowElim(Proof):
    major: Proof
    minor: Proof


@dataclass(frozen=True)
class ConjIntro(Proof):
    left: Proof
    right: Proof


@dataclass(frozen=True)
class ConjElim(Proof):
    major: Proof
    minor: Proof


@dataclass(frozen=True)
class DisjIntro1(Proof):
    """From α conclude α ∨ ``formula``."""
    formula: Formula
    proof: Proof


@dataclass(frozen=True)
class DisjIntro2(Proof):
    """From β conclude ``formula`` ∨ β."""
    formula: Formula
    proof: Proof


@dataclass(frozen=True)
class DisjElim(Proof):
    major: Proof
    left: Proof
    right: Proof


@dataclass(frozen=True)
class UnivIntro(Proof):
    var: Var
    proof: Proof


@dataclass(frozen=True)
class UnivElim(Proof):
    """From ∀x α conclude α[x/term]. Missing evidence is computed by the
    checker."""
    term: Term
    proof: Proof
    evidence: Sub | None = None


@dataclass(frozen=True)
class ExistIntro(Proof):
    """From α[var/term] conclude ∃var ``body``."""
    term: Term
    var: Var
    body: Formula
    proof: Proof
    evidence: Sub | None = None


@dataclass(frozen=True)
class ExistElim(Proof):
    var: Var | None
    major: Proof
    minor: Proof


@dataclass(frozen=True)
class BotC(Proof):
    formula: Formula
    proof: Proof


@dataclass(frozen=True)
class BotI(Proof):
    formula: Formula
    proof: Proof


@dataclass(frozen=True)
class Judgement:
    context: Context
    conclusion: Formula


@dataclass(frozen=True)
class LibraryEntry:
    judgement: Judgement
    fixture: bool = False


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str
    path: tuple = ()
    detail: object = field(default=None, compare=False)

    def __str__(self):
        where = "/".join(map(str, self.path)) or "root"
        return f"{self.kind} at {where}: {self.message}"


class ProofError(Exception):
    def __init__(self, diagnostic: Diagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


def _fail(kind, message, path, detail=None):
    raise ProofError(Diagnostic(kind, message, path, detail))


def _show(a):
    from .concrete import show_formula
    return show_formula(a)


def _lookup(library, name) -> LibraryEntry | None:
    if library is None or name not in library:
        return None
    entry = library[name]
    return entry if isinstance(entry, LibraryEntry) else LibraryEntry(entry)


class Checker:
    def __init__(self, mode: LogicMode = LogicMode.MINIMAL,
                 library: Mapping[str, Judgement | LibraryEntry] | None = None,
                 memo: dict | None = None):
        self.mode = mode
        self.library = library or {}
        self.memo = memo if memo is not None else {}

    def check(self, p: Proof, path=()) -> Judgement:
        key = id(p)
        hit = self.memo.get(key)
        if hit is not None and hit[0] is p:
            return hit[1]
        j = self._check(p, path)
        self.memo[key] = (p, j)
        return j

    def _freedom(self, x: Var, g: Context, path, rule):
        d = all_satisfy(lambda a: not_free_in(x, a), g)
        if not d:
            _fail("freedom", f"{rule}: variable {x.index} is free in open assumption "
                  f"{_show(d.reason)}", path, d.reason)
        return d.witness

    def _evidence(self, e, a, x, t, path) -> Formula:
        """Validate (or compute) evidence for a[x/t]; return the result."""
        if e is None:
            try:
                return apply_substitution(a, x, t).result
            except SubstitutionError as err:
                _fail("substitution", str(err), path)
        if (e.formula, e.x, e.t) != (a, x, t):
            _fail("substitution", "evidence is for a different substitution", path)
        d = verify_evidence(e)
        if not d:
            _fail("substitution", f"invalid substitution evidence at node {d.reason}", path)
        return e.result

    def _same(self, want, got, path, what):
        d = formula_eq(want, got)
        if not d:
            _fail("mismatch", f"{what}: expected {_show(want)}, got {_show(got)} "
                  f"(first difference at {d.reason})", path, (want, got))

    def _check(self, p: Proof, path) -> Judgement:
        match p:
            case Assume(a):
                return Judgement(Singleton(a), a)

            case ArrowIntro(a, sub):
                j = self.check(sub, path + (0,))
                return Judgement(Remove(j.context, a), Implies(a, j.conclusion))

            case ArrowElim(major, minor):
                j1 = self.check(major, path + (0,))
                j2 = self.check(minor, path + (1,))
                if not isinstance(j1.conclusion, Implies):
                    _fail("shape", f"arrowelim: major premise {_show(j1.conclusion)} "
                          "is not an implication", path)
                self._same(j1.conclusion.left, j2.conclusion, path, "arrowelim minor premise")
                return Judgement(Union(j1.context, j2.context), j1.conclusion.right)

            case ConjIntro(l, r):
                j1 = self.check(l, path + (0,))
                j2 = self.check(r, path + (1,))
                return Judgement(Union(j1.context, j2.context), And(j1.conclusion, j2.conclusion))

            case ConjElim(major, minor):
                j1 = self.check(major, path + (0,))
                j2 = self.check(minor, path + (1,))
                if not isinstance(j1.conclusion, And):
                    _fail("shape", f"conjelim: major premise {_show(j1.conclusion)} "
                          "is not a conjunction", path)
                a, b = j1.conclusion.left, j1.conclusion.right
                return Judgement(Union(j1.context, Remove(Remove(j2.context, a), b)),
                                 j2.conclusion)

            case DisjIntro1(b, sub):
                j = self.check(sub, path + (0,))
                return Judgement(j.context, Or(j.conclusion, b))

            case DisjIntro2(a, sub):
                j = self.check(sub, path + (0,))
                return Judgement(j.context, Or(a, j.conclusion))

            case DisjElim(major, l, r):
                j1 = self.check(major, path + (0,))
                j2 = self.check(l, path + (1,))
                j3 = self.check(r, path + (2,))
                if not isinstance(j1.conclusion, Or):
                    _fail("shape", f"disjelim: major premise {_show(j1.conclusion)} "
                          "is not a disjunction", path)
                self._same(j2.conclusion, j3.conclusion, path, "disjelim branches")
                a, b = j1.conclusion.left, j1.conclusion.right
                g = Union(j1.context, Union(Remove(j2.context, a), Remove(j3.context, b)))
                return Judgement(g, j2.conclusion)

            case UnivIntro(x, sub):
                j = self.check(sub, path + (0,))
                self._freedom(x, j.context, path, "univintro")
                return Judgement(j.context, Forall(x, j.conclusion))

            case UnivElim(t, sub, e):
                j = self.check(sub, path + (0,))
                if not isinstance(j.conclusion, Forall):
                    _fail("shape", f"univelim: premise {_show(j.conclusion)} "
                          "is not universally quantified", path)
                q = j.conclusion
                return Judgement(j.context, self._evidence(e, q.body, q.var, t, path))

            case ExistIntro(t, x, body, sub, e):
                j = self.check(sub, path + (0,))
                got = self._evidence(e, body, x, t, path)
                self._same(got, j.conclusion, path, "existintro premise")
                return Judgement(j.context, Exists(x, body))

            case ExistElim(x, major, minor):
                j1 = self.check(major, path + (0,))
                j2 = self.check(minor, path + (1,))
                if not isinstance(j1.conclusion, Exists):
                    _fail("shape", f"existelim: major premise {_show(j1.conclusion)} "
                          "is not existentially quantified", path)
                if x is not None and x != j1.conclusion.var:
                    _fail("mismatch", f"existelim: variable {x.index} does not match "
                          f"the quantifier of {_show(j1.conclusion)}", path)
                x, a = j1.conclusion.var, j1.conclusion.body
                discharged = Remove(j2.context, a)
                self._freedom(x, Union(Singleton(j2.conclusion), discharged), path, "existelim")
                return Judgement(Union(j1.context, discharged), j2.conclusion)

            case Close(target, sub):
                j = self.check(sub, path + (0,))
                d = subset_of(j.context, target)
                if not d:
                    _fail("subset", f"close: open assumption {_show(d.reason)} "
                          "is not in the target context", path, d.reason)
                return Judgement(target, j.conclusion)

            case Cite(name, a, sub, _):
                if sub is not None:
                    j = self.check(sub, path + (0,))
                else:
                    entry = _lookup(self.library, name)
                    if entry is None:
                        _fail("cite", f"unknown name {name!r}", path)
                    j = entry.judgement
                if not subset_of(j.context, EMPTY):
                    _fail("cite", f"{name!r} depends on open assumptions", path)
                self._same(a, j.conclusion, path, f"cite {name!r}")
                return Judgement(EMPTY, a)

            case BotC(a, sub):
                if not self.mode.allows_bot_c:
                    _fail("mode", f"classical bottom rule not available in {self.mode.value} logic", path)
                j = self.check(sub, path + (0,))
                self._same(BOT, j.conclusion, path, "botc premise")
                return Judgement(Remove(j.context, neg(a)), a)

            case BotI(a, sub):
                if not self.mode.allows_bot_i:
                    _fail("mode", f"intuitionistic bottom rule not available in {self.mode.value} logic", path)
                j = self.check(sub, path + (0,))
                self._same(BOT, j.conclusion, path, "boti premise")
                return Judgement(j.context, a)

        raise TypeError(f"not a proof node: {p!r}")


def check_proof(p: Proof, mode: LogicMode = LogicMode.MINIMAL, library=None) -> Dec:
    """Check a proof. Yes carries the Judgement; no carries a Diagnostic."""
    try:
        return yes(Checker(mode, library).check(p))
    except ProofError as err:
        return no(err.diagnostic)
    except RecursionError:
        return no(Diagnostic("limit", "proof too deep"))


def judgement_of(p: Proof, mode: LogicMode = LogicMode.MINIMAL, library=None) -> Judgement:
    """Like check_proof, but raises ProofError on failure."""
    return Checker(mode, library).check(p)


def conclusion_of(p: Proof, mode: LogicMode = LogicMode.MINIMAL, library=None) -> Formula:
    return judgement_of(p, mode, library).conclusion


def context_of(p: Proof, mode: LogicMode = LogicMode.MINIMAL, library=None) -> Context:
    return judgement_of(p, mode, library).context
