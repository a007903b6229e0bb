"""Substitution of a term for a variable, as checkable evidence.

``Sub`` trees witness ``formula[x/t] = result`` one constructor at a time;
``FreeFor`` trees witness that ``t`` can be substituted for ``x`` without
capture. Evidence is never trusted: ``verify_evidence`` re-checks every
node, and the transformations below (``sub_not_free``, ``sub_inverse``,
``not_free_sub``) consume evidence structurally.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .binding import (BINARY_RULE, Fresh, NotFree, NotInTerm, not_free_in,
                      not_in_term, verify_not_free, verify_not_in_term)
from .syntax import (BINARY, QUANTIFIERS, Atom, Dec, Formula, FuncTerm,
                     Term, Var, VarTerm, formula_eq, no, yes)


class SubstitutionError(ValueError):
    """Raised when a substitution does not exist or a witness is malformed."""


@dataclass(frozen=True)
class TermSub:
    """``term[x/t] = result``. rule: ``var_eq``, ``var_ne`` or ``func``
    (one TermSub premise per argument)."""

    rule: str
    term: Term
    x: Var
    t: Term
    result: Term
    premises: tuple = ()


@dataclass(frozen=True)
class Sub:
    """``formula[x/t] = result``.

    rules: ``ident`` (t is x itself), ``notfree`` (premise: NotFree x),
    ``atom`` (TermSub per argument), ``imp``/``and``/``or`` (two Sub),
    ``bound`` (quantifier binds x), ``under`` (premises: NotInTerm for the
    binder in t, then the Sub for the body; binder != x).
    """

    rule: str
    formula: Formula
    x: Var
    t: Term
    result: Formula
    premises: tuple = ()


@dataclass(frozen=True)
class FreeFor:
    """``t`` is free for ``x`` in ``formula``. Same rule names as Sub minus
    ``ident``; ``under`` carries NotInTerm for the binder and the body
    witness."""

    rule: str
    t: Term
    x: Var
    formula: Formula
    premises: tuple = ()


class SubstitutionResult(NamedTuple):
    result: Formula
    evidence: Sub


# free-for

def free_for(t: Term, x: Var, a: Formula) -> Dec:
    """Decide whether ``t`` is free for ``x`` in ``a``. A negative answer
    carries the path to the occurrence of ``x`` that would be captured."""
    match a:
        case Atom():
            return yes(FreeFor("atom", t, x, a))
        case _ if isinstance(a, BINARY):
            dl = free_for(t, x, a.left)
            if not dl:
                return no(("left",) + dl.reason)
            dr = free_for(t, x, a.right)
            if not dr:
                return no(("right",) + dr.reason)
            return yes(FreeFor(BINARY_RULE[type(a)], t, x, a, (dl.witness, dr.witness)))
        case _ if isinstance(a, QUANTIFIERS):
            if a.var == x:
                return yes(FreeFor("bound", t, x, a))
            binder_absent = not_in_term(a.var, t)
            if binder_absent:
                d = free_for(t, x, a.body)
                if not d:
                    return no(("body",) + d.reason)
                return yes(FreeFor("under", t, x, a, (binder_absent.witness, d.witness)))
            # the binder occurs in t: only fine if x has nothing to replace
            nf = not_free_in(x, a.body)
            if nf:
                return yes(FreeFor("notfree", t, x, a, (NotFree("under", x, a, (nf.witness,)),)))
            return no(("body",) + nf.reason)
    raise TypeError(f"not a formula: {a!r}")


def verify_free_for(w: FreeFor, path=()) -> Dec:
    if not isinstance(w, FreeFor):
        return no(path)
    a = w.formula
    match w.rule:
        case "notfree":
            if len(w.premises) != 1:
                return no(path)
            nf = w.premises[0]
            if not isinstance(nf, NotFree) or nf.x != w.x or nf.formula != a:
                return no(path)
            return verify_not_free(nf, path)
        case "atom":
            return yes() if isinstance(a, Atom) else no(path)
        case "imp" | "and" | "or" if isinstance(a, BINARY) and BINARY_RULE[type(a)] == w.rule:
            if len(w.premises) != 2:
                return no(path)
            for side, p in zip(("left", "right"), w.premises):
                if not isinstance(p, FreeFor) or (p.t, p.x, p.formula) != (w.t, w.x, getattr(a, side)):
                    return no(path + (side,))
                d = verify_free_for(p, path + (side,))
                if not d:
                    return d
            return yes()
        case "bound" if isinstance(a, QUANTIFIERS):
            return yes() if a.var == w.x else no(path)
        case "under" if isinstance(a, QUANTIFIERS):
            if len(w.premises) != 2:
                return no(path)
            nit, p = w.premises
            if not isinstance(nit, NotInTerm) or nit.x != a.var or nit.term != w.t \
                    or not verify_not_in_term(nit):
                return no(path)
            if not isinstance(p, FreeFor) or (p.t, p.x, p.formula) != (w.t, w.x, a.body):
                return no(path + ("body",))
            return verify_free_for(p, path + ("body",))
    return no(path)


# computing substitutions

def sub_term(u: Term, x: Var, t: Term) -> TermSub:
    match u:
        case VarTerm(y):
            if y == x:
                return TermSub("var_eq", u, x, t, t)
            return TermSub("var_ne", u, x, t, u)
        case FuncTerm(f, args):
            subs = sub_terms(args, x, t)
            return TermSub("func", u, x, t, FuncTerm(f, tuple(s.result for s in subs)), subs)
    raise TypeError(f"not a term: {u!r}")


def sub_terms(us, x: Var, t: Term) -> tuple:
    return tuple(sub_term(u, x, t) for u in us)


def _apply(a: Formula, x: Var, t: Term, w: FreeFor) -> Sub:
    match w.rule:
        case "notfree":
            return Sub("notfree", a, x, t, a, w.premises)
        case "atom":
            subs = sub_terms(a.args, x, t)
            return Sub("atom", a, x, t, Atom(a.rel, tuple(s.result for s in subs)), subs)
        case "imp" | "and" | "or":
            sl = _apply(a.left, x, t, w.premises[0])
            sr = _apply(a.right, x, t, w.premises[1])
            return Sub(w.rule, a, x, t, type(a)(sl.result, sr.result), (sl, sr))
        case "bound":
            return Sub("bound", a, x, t, a)
        case "under":
            if a.var == x:
                return Sub("bound", a, x, t, a)
            nit, body_w = w.premises
            sb = _apply(a.body, x, t, body_w)
            return Sub("under", a, x, t, type(a)(a.var, sb.result), (nit, sb))
    raise SubstitutionError(f"unknown free-for rule {w.rule!r}")


def apply_substitution(a: Formula, x: Var, t: Term, w: FreeFor | None = None,
                       prefer_notfree: bool = False) -> SubstitutionResult:
    """Compute ``a[x/t]`` together with its evidence.

    ``w`` is a free-for witness; when omitted it is decided here. Substituting
    x by itself always yields ``ident`` evidence. ``notfree`` evidence for the
    whole formula is only produced when asked for with ``prefer_notfree``.
    """
    if w is None:
        d = free_for(t, x, a)
        if not d:
            raise SubstitutionError(f"term is not free for the variable; capture at {d.reason}")
        w = d.witness
    else:
        if (w.t, w.x, w.formula) != (t, x, a) or not verify_free_for(w):
            raise SubstitutionError("free-for witness does not match the substitution")
    if t == VarTerm(x):
        return SubstitutionResult(a, Sub("ident", a, x, t, a))
    if prefer_notfree:
        d = not_free_in(x, a)
        if d:
            return SubstitutionResult(a, Sub("notfree", a, x, t, a, (d.witness,)))
    e = _apply(a, x, t, w)
    return SubstitutionResult(e.result, e)


def substitute(a: Formula, x: Var, t: Term) -> Formula:
    return apply_substitution(a, x, t).result


# checking evidence

def verify_term_sub(e: TermSub, path=()) -> Dec:
    if not isinstance(e, TermSub):
        return no(path)
    match e.rule, e.term:
        case "var_eq", VarTerm(y):
            return yes() if y == e.x and e.result == e.t and not e.premises else no(path)
        case "var_ne", VarTerm(y):
            return yes() if y != e.x and e.result == e.term and not e.premises else no(path)
        case "func", FuncTerm(f, args):
            if not isinstance(e.result, FuncTerm) or e.result.func != f \
                    or len(e.premises) != len(args):
                return no(path)
            for i, (p, u, v) in enumerate(zip(e.premises, args, e.result.args)):
                if not isinstance(p, TermSub) or (p.term, p.x, p.t, p.result) != (u, e.x, e.t, v):
                    return no(path + (i,))
                d = verify_term_sub(p, path + (i,))
                if not d:
                    return d
            return yes()
    return no(path)


def verify_evidence(e: Sub, path=()) -> Dec:
    """Re-check every node of substitution evidence against the claimed
    ``(formula, x, t, result)``. On failure the reason is the path to the
    first invalid node."""
    if not isinstance(e, Sub):
        return no(path)
    a, b = e.formula, e.result
    match e.rule:
        case "ident":
            return yes() if e.t == VarTerm(e.x) and a == b else no(path)
        case "notfree":
            if a != b or len(e.premises) != 1:
                return no(path)
            nf = e.premises[0]
            if not isinstance(nf, NotFree) or nf.x != e.x or nf.formula != a:
                return no(path)
            return verify_not_free(nf, path)
        case "atom":
            if not (isinstance(a, Atom) and isinstance(b, Atom)) or a.rel != b.rel \
                    or len(e.premises) != len(a.args):
                return no(path)
            for i, (p, u, v) in enumerate(zip(e.premises, a.args, b.args)):
                if not isinstance(p, TermSub) or (p.term, p.x, p.t, p.result) != (u, e.x, e.t, v):
                    return no(path + ("args", i))
                d = verify_term_sub(p, path + ("args", i))
                if not d:
                    return d
            return yes()
        case "imp" | "and" | "or":
            if not isinstance(a, BINARY) or type(a) is not type(b) \
                    or BINARY_RULE[type(a)] != e.rule or len(e.premises) != 2:
                return no(path)
            for side, p in zip(("left", "right"), e.premises):
                if not isinstance(p, Sub) or (p.formula, p.x, p.t, p.result) != \
                        (getattr(a, side), e.x, e.t, getattr(b, side)):
                    return no(path + (side,))
                d = verify_evidence(p, path + (side,))
                if not d:
                    return d
            return yes()
        case "bound":
            return yes() if isinstance(a, QUANTIFIERS) and a.var == e.x and a == b else no(path)
        case "under":
            if not isinstance(a, QUANTIFIERS) or type(a) is not type(b) or a.var != b.var \
                    or a.var == e.x or len(e.premises) != 2:
                return no(path)
            nit, p = e.premises
            if not isinstance(nit, NotInTerm) or nit.x != a.var or nit.term != e.t \
                    or not verify_not_in_term(nit):
                return no(path)
            if not isinstance(p, Sub) or (p.formula, p.x, p.t, p.result) != (a.body, e.x, e.t, b.body):
                return no(path + ("body",))
            return verify_evidence(p, path + ("body",))
    return no(path)


def evidence_functional(e1: Sub, e2: Sub) -> Dec:
    """Two valid pieces of evidence for the same ``formula[x/t]`` must agree
    on the result. A negative answer is a kernel bug and carries both
    results."""
    if (e1.formula, e1.x, e1.t) != (e2.formula, e2.x, e2.t):
        raise ValueError("evidence relates different substitutions")
    if not verify_evidence(e1) or not verify_evidence(e2):
        raise ValueError("invalid evidence")
    if formula_eq(e1.result, e2.result):
        return yes(e1.result)
    return no((e1.result, e2.result))


# metatheory as witness transformations

def _term_not_free(xt: NotInTerm, s: TermSub) -> NotInTerm:
    match s.rule:
        case "var_eq":
            return xt
        case "var_ne":
            return NotInTerm(xt.x, s.result)
        case _:
            return NotInTerm(xt.x, s.result, tuple(_term_not_free(xt, p) for p in s.premises))


def sub_not_free(xt: NotInTerm, e: Sub) -> NotFree:
    """Given x not in t and ``formula[x/t] = result``, x is not free in the
    result."""
    x = e.x
    if xt.x != x or xt.term != e.t:
        raise ValueError("not-in-term witness is for a different variable or term")
    b = e.result
    match e.rule:
        case "ident":
            # t is x itself, contradicting the premise
            raise ValueError("absurd: variable cannot be absent from itself")
        case "notfree":
            return e.premises[0]
        case "atom":
            return NotFree("atom", x, b, tuple(_term_not_free(xt, p) for p in e.premises))
        case "imp" | "and" | "or":
            return NotFree(e.rule, x, b, tuple(sub_not_free(xt, p) for p in e.premises))
        case "bound":
            return NotFree("bound", x, b)
        case "under":
            return NotFree("under", x, b, (sub_not_free(xt, e.premises[1]),))
    raise ValueError(f"unknown evidence rule {e.rule!r}")


def _term_not_in_after(zu: NotInTerm, zt: NotInTerm, s: TermSub) -> NotInTerm:
    match s.rule:
        case "var_eq":
            return zt
        case "var_ne":
            return zu
        case _:
            return NotInTerm(zu.x, s.result, tuple(
                _term_not_in_after(zp, zt, p) for zp, p in zip(zu.premises, s.premises)))


def not_free_sub(nf: NotFree, zt: NotInTerm, e: Sub) -> NotFree:
    """If z is not free in the formula and not in t, then z is not free in
    ``formula[x/t]``."""
    z = nf.x
    if nf.formula != e.formula or zt.x != z or zt.term != e.t:
        raise ValueError("witnesses do not match the substitution")
    b = e.result
    match e.rule:
        case "ident" | "notfree" | "bound":
            return nf
        case "atom":
            return NotFree("atom", z, b, tuple(
                _term_not_in_after(zu, zt, s) for zu, s in zip(nf.premises, e.premises)))
        case "imp" | "and" | "or":
            return NotFree(e.rule, z, b, tuple(
                not_free_sub(n, zt, s) for n, s in zip(nf.premises, e.premises)))
        case "under":
            if nf.rule == "bound":
                return NotFree("bound", z, b)
            return NotFree("under", z, b, (not_free_sub(nf.premises[0], zt, e.premises[1]),))
    raise ValueError(f"unknown evidence rule {e.rule!r}")


def _term_inverse(ws: tuple, subs: tuple, omega: Var, xt: VarTerm) -> tuple:
    out = []
    for w, s in zip(ws, subs):
        match s.rule:
            case "var_eq":
                out.append(TermSub("var_eq", s.result, omega, xt, s.term))
            case "var_ne":
                # omega differs from the untouched variable
                out.append(TermSub("var_ne", s.result, omega, xt, s.term))
            case _:
                inner = _term_inverse(w.premises, s.premises, omega, xt)
                out.append(TermSub("func", s.result, omega, xt, s.term, inner))
    return tuple(out)


def sub_inverse(nf: NotFree, e: Sub) -> Sub:
    """Given ω not free in α and ``α[x/ω] = β``, build evidence for
    ``β[ω/x] = α``."""
    if not isinstance(e.t, VarTerm):
        raise ValueError("substituted term must be a variable")
    omega, x = e.t.var, e.x
    if nf.x != omega or nf.formula != e.formula:
        raise ValueError("not-free witness does not match the substitution")
    a, b = e.formula, e.result
    xt = VarTerm(x)
    match e.rule:
        case "ident":
            return Sub("ident", b, x, xt, a)
        case "notfree":
            return Sub("notfree", b, omega, xt, a, (nf,))
        case "atom":
            return Sub("atom", b, omega, xt, a, _term_inverse(nf.premises, e.premises, omega, xt))
        case "imp" | "and" | "or":
            pl, pr = (sub_inverse(n, s) for n, s in zip(nf.premises, e.premises))
            return Sub(e.rule, b, omega, xt, a, (pl, pr))
        case "bound":
            return Sub("notfree", b, omega, xt, a, (nf,))
        case "under":
            y = a.var
            if nf.rule == "bound" or omega == y:
                raise ValueError("absurd: the binder cannot be the substituted variable")
            if x == y:
                raise ValueError("absurd: substitution under its own binder")
            inner = sub_inverse(nf.premises[0], e.premises[1])
            return Sub("under", b, omega, xt, a, (NotInTerm(y, xt), inner))
    raise ValueError(f"unknown evidence rule {e.rule!r}")


def fresh_free_for(w: Fresh, y: Var) -> FreeFor:
    """A variable fresh in a formula is free for any variable there."""
    t = VarTerm(w.x)
    a = w.formula
    match a:
        case Atom():
            return FreeFor("atom", t, y, a)
        case _ if isinstance(a, BINARY):
            l, r = (fresh_free_for(p, y) for p in w.premises)
            return FreeFor(BINARY_RULE[type(a)], t, y, a, (l, r))
        case _:
            if a.var == y:
                return FreeFor("bound", t, y, a)
            return FreeFor("under", t, y, a,
                           (NotInTerm(a.var, t), fresh_free_for(w.premises[0], y)))
