"""Variable occurrence, freedom and freshness, with derivation witnesses.

Every positive answer carries a witness tree whose nodes mirror the
inductive definitions (one node per formula/term constructor). Witnesses
remember their subject, so they can be re-checked on their own with the
``verify_*`` functions and consumed structurally by later transformations.
"""
from __future__ import annotations

from dataclasses import dataclass

from .syntax import (Atom, BINARY, Dec, Formula, FuncTerm, Implies, And, Or,
                     QUANTIFIERS, Term, Var, VarTerm, no, yes)

BINARY_RULE = {Implies: "imp", And: "and", Or: "or"}


@dataclass(frozen=True)
class NotInTerm:
    """``x`` does not occur in ``term``. Variable terms have no premises
    (the side condition is ``x != term.var``); function terms carry one
    premise per argument."""

    x: Var
    term: Term
    premises: tuple = ()


@dataclass(frozen=True)
class NotFree:
    """``x`` is not free in ``formula``.

    rule is one of ``atom`` (premises: NotInTerm per argument), ``imp``,
    ``and``, ``or`` (two NotFree premises), ``bound`` (the quantifier binds
    ``x``; no premises) or ``under`` (the quantifier binds another variable;
    one NotFree premise for the body).
    """

    rule: str
    x: Var
    formula: Formula
    premises: tuple = ()


@dataclass(frozen=True)
class Fresh:
    """``x`` appears nowhere in ``formula``, neither free nor bound.
    Quantifier nodes implicitly assert binder != x."""

    x: Var
    formula: Formula
    premises: tuple = ()


# deciders

def not_in_term(x: Var, t: Term) -> Dec:
    match t:
        case VarTerm(y):
            if x == y:
                return no(())
            return yes(NotInTerm(x, t))
        case FuncTerm(_, args):
            d = not_in_terms(x, args)
            if not d:
                return d
            return yes(NotInTerm(x, t, d.witness))
    raise TypeError(f"not a term: {t!r}")


def not_in_terms(x: Var, ts) -> Dec:
    """One NotInTerm witness per term, or the path (argument positions) to
    the first occurrence of ``x``."""
    ws = []
    for i, t in enumerate(ts):
        d = not_in_term(x, t)
        if not d:
            return no((i,) + d.reason)
        ws.append(d.witness)
    return yes(tuple(ws))


def not_free_in(x: Var, a: Formula) -> Dec:
    match a:
        case Atom(_, args):
            d = not_in_terms(x, args)
            if not d:
                return no(("args",) + d.reason)
            return yes(NotFree("atom", x, a, d.witness))
        case Implies(l, r) | And(l, r) | Or(l, r):
            dl = not_free_in(x, l)
            if not dl:
                return no(("left",) + dl.reason)
            dr = not_free_in(x, r)
            if not dr:
                return no(("right",) + dr.reason)
            return yes(NotFree(BINARY_RULE[type(a)], x, a, (dl.witness, dr.witness)))
        case _ if isinstance(a, QUANTIFIERS):
            if a.var == x:
                return yes(NotFree("bound", x, a))
            d = not_free_in(x, a.body)
            if not d:
                return no(("body",) + d.reason)
            return yes(NotFree("under", x, a, (d.witness,)))
    raise TypeError(f"not a formula: {a!r}")


def fresh_in(x: Var, a: Formula) -> Dec:
    """On failure the reason is the path to the first occurrence of ``x``;
    an occurrence as a binder ends the path with ``"binder"``."""
    match a:
        case Atom(_, args):
            d = not_in_terms(x, args)
            if not d:
                return no(("args",) + d.reason)
            return yes(Fresh(x, a, d.witness))
        case Implies(l, r) | And(l, r) | Or(l, r):
            dl = fresh_in(x, l)
            if not dl:
                return no(("left",) + dl.reason)
            dr = fresh_in(x, r)
            if not dr:
                return no(("right",) + dr.reason)
            return yes(Fresh(x, a, (dl.witness, dr.witness)))
        case _ if isinstance(a, QUANTIFIERS):
            if a.var == x:
                return no(("binder",))
            d = fresh_in(x, a.body)
            if not d:
                return no(("body",) + d.reason)
            return yes(Fresh(x, a, (d.witness,)))
    raise TypeError(f"not a formula: {a!r}")


# witness checking

def verify_not_in_term(w: NotInTerm, path=()) -> Dec:
    match w.term:
        case VarTerm(y):
            if w.premises or w.x == y:
                return no(path)
            return yes()
        case FuncTerm(_, args):
            if len(w.premises) != len(args):
                return no(path)
            for i, (p, t) in enumerate(zip(w.premises, args)):
                if not isinstance(p, NotInTerm) or p.x != w.x or p.term != t:
                    return no(path + (i,))
                d = verify_not_in_term(p, path + (i,))
                if not d:
                    return d
            return yes()
    return no(path)


def _check_term_premises(w, args, path) -> Dec:
    if len(w.premises) != len(args):
        return no(path)
    for i, (p, t) in enumerate(zip(w.premises, args)):
        if not isinstance(p, NotInTerm) or p.x != w.x or p.term != t:
            return no(path + (i,))
        d = verify_not_in_term(p, path + (i,))
        if not d:
            return d
    return yes()


def verify_not_free(w: NotFree, path=()) -> Dec:
    """Check every node of a NotFree witness; on failure the reason is the
    path to the first bad node."""
    if not isinstance(w, NotFree):
        return no(path)
    a = w.formula
    match w.rule:
        case "atom" if isinstance(a, Atom):
            return _check_term_premises(w, a.args, path)
        case "imp" | "and" | "or" if isinstance(a, BINARY) and BINARY_RULE[type(a)] == w.rule:
            if len(w.premises) != 2:
                return no(path)
            for side, p in zip(("left", "right"), w.premises):
                if not isinstance(p, NotFree) or p.x != w.x or p.formula != getattr(a, side):
                    return no(path + (side,))
                d = verify_not_free(p, path + (side,))
                if not d:
                    return d
            return yes()
        case "bound" if isinstance(a, QUANTIFIERS):
            return yes() if a.var == w.x and not w.premises else no(path)
        case "under" if isinstance(a, QUANTIFIERS):
            if len(w.premises) != 1:
                return no(path)
            p = w.premises[0]
            if not isinstance(p, NotFree) or p.x != w.x or p.formula != a.body:
                return no(path + ("body",))
            return verify_not_free(p, path + ("body",))
    return no(path)


def verify_fresh(w: Fresh, path=()) -> Dec:
    if not isinstance(w, Fresh):
        return no(path)
    a = w.formula
    match a:
        case Atom(_, args):
            return _check_term_premises(w, args, path)
        case Implies() | And() | Or():
            if len(w.premises) != 2:
                return no(path)
            for side, p in zip(("left", "right"), w.premises):
                if not isinstance(p, Fresh) or p.x != w.x or p.formula != getattr(a, side):
                    return no(path + (side,))
                d = verify_fresh(p, path + (side,))
                if not d:
                    return d
            return yes()
        case _ if isinstance(a, QUANTIFIERS):
            if a.var == w.x or len(w.premises) != 1:
                return no(path)
            p = w.premises[0]
            if not isinstance(p, Fresh) or p.x != w.x or p.formula != a.body:
                return no(path + ("body",))
            return verify_fresh(p, path + ("body",))
    return no(path)


def fresh_to_not_free(w: Fresh) -> NotFree:
    a = w.formula
    match a:
        case Atom():
            return NotFree("atom", w.x, a, w.premises)
        case Implies() | And() | Or():
            l, r = w.premises
            return NotFree(BINARY_RULE[type(a)], w.x, a,
                           (fresh_to_not_free(l), fresh_to_not_free(r)))
        case _:
            return NotFree("under", w.x, a, (fresh_to_not_free(w.premises[0]),))


# upper bounds on occurring variables

def _later(a: Var, b: Var) -> Var:
    # ties keep the second argument
    return b if a.index <= b.index else a


@dataclass(frozen=True)
class VariableBound:
    """Every variable with index above ``bound.index`` is absent from
    ``subject`` (a formula, or a tuple of terms)."""

    bound: Var
    subject: object

    def witness(self, n: int):
        """Freshness witness (or NotInTerm witnesses for terms) for ``var n``."""
        if n <= self.bound.index:
            raise ValueError(f"var {n} is not above the bound {self.bound.index}")
        v = Var(n)
        d = fresh_in(v, self.subject) if isinstance(self.subject, Formula) \
            else not_in_terms(v, self.subject)
        assert d, "variable bound is unsound"
        return d.witness


def _max_var_terms(ts) -> Var:
    m = Var(0)
    for t in reversed(ts):
        match t:
            case VarTerm(v):
                m = _later(v, m)
            case FuncTerm(_, args):
                m = _later(_max_var_terms(args), m)
    return m


def max_var_terms(ts) -> VariableBound:
    ts = tuple(ts)
    return VariableBound(_max_var_terms(ts), ts)


def _max_var(a: Formula) -> Var:
    match a:
        case Atom(_, args):
            return _max_var_terms(args)
        case Implies(l, r) | And(l, r) | Or(l, r):
            return _later(_max_var(l), _max_var(r))
        case _:
            return _later(a.var, _max_var(a.body))


def max_var(a: Formula) -> VariableBound:
    return VariableBound(_max_var(a), a)


def fresh(a: Formula) -> tuple[Var, Fresh]:
    """A variable absent from ``a``: the successor of the largest index
    occurring. Not necessarily the least such variable."""
    v = Var(_max_var(a).index + 1)
    d = fresh_in(v, a)
    assert d
    return v, d.witness
