"""Assumption contexts built from empty, singleton, union and removal.

A context is a finite tree; its members are computed structurally, with a
removal shadowing every earlier insertion of the removed formula. The
``all_satisfy`` check walks the tree keeping a list of removed formulas, so
a singleton whose formula has already been removed needs no evidence.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .syntax import Dec, Formula, formula_eq, no, yes


class Context:
    __slots__ = ()


@dataclass(frozen=True)
class Empty(Context):
    pass


@dataclass(frozen=True)
class Singleton(Context):
    formula: Formula


@dataclass(frozen=True)
class Union(Context):
    left: Context
    right: Context


@dataclass(frozen=True)
class Remove(Context):
    inner: Context
    formula: Formula


EMPTY = Empty()


def of(*formulas: Formula) -> Context:
    """``{a, b, c}`` as a right-nested union of singletons."""
    if not formulas:
        return EMPTY
    ctx = Singleton(formulas[-1])
    for a in reversed(formulas[:-1]):
        ctx = Union(Singleton(a), ctx)
    return ctx


def candidates(g: Context) -> list[Formula]:
    """Formulas written in singleton nodes, in order, without duplicates.
    Only these can be members."""
    out, stack = [], [g]
    while stack:
        c = stack.pop()
        t = type(c)
        if t is Singleton:
            if c.formula not in out:
                out.append(c.formula)
        elif t is Union:
            stack.append(c.right)
            stack.append(c.left)
        elif t is Remove:
            stack.append(c.inner)
    return out


def member_of(a: Formula, g: Context) -> Dec:
    """Yes with the path to a singleton holding ``a``; no otherwise.
    Formulas are compared with structural ``==``, which agrees with
    ``formula_eq`` and is cheaper."""
    match g:
        case Empty():
            return no()
        case Singleton(b):
            return yes(()) if a == b else no()
        case Union(l, r):
            d = member_of(a, l)
            if d:
                return yes(("left",) + d.witness)
            d = member_of(a, r)
            return yes(("right",) + d.witness) if d else no()
        case Remove(inner, b):
            if a == b:
                return no()
            d = member_of(a, inner)
            return yes(("inner",) + d.witness) if d else no()
    raise TypeError(f"not a context: {g!r}")


def _in(a: Formula, g: Context) -> bool:
    # member_of without the path, for the subset loop
    t = type(g)
    if t is Singleton:
        return a == g.formula
    if t is Union:
        return _in(a, g.left) or _in(a, g.right)
    if t is Remove:
        return a != g.formula and _in(a, g.inner)
    return False


def members(g: Context) -> list[Formula]:
    return [a for a in candidates(g) if _in(a, g)]


def subset_of(g: Context, d: Context) -> Dec:
    """Yes iff every member of ``g`` is a member of ``d``; otherwise the
    reason is a member of ``g`` missing from ``d``."""
    for a in candidates(g):
        if _in(a, g) and not _in(a, d):
            return no(a)
    return yes()


@dataclass(frozen=True)
class AllWitness:
    """One node per context node. rule: ``empty``, ``single`` (premise: the
    predicate's witness), ``removed`` (the singleton's formula is in
    ``removed``), ``union`` (two premises) or ``remove`` (one premise, checked
    with the removed formula pushed onto the list)."""

    rule: str
    context: Context
    removed: tuple
    premises: tuple = ()


def all_satisfy(pred: Callable[[Formula], Dec], g: Context, removed: tuple = ()) -> Dec:
    """Decide whether ``pred`` holds on the context using the removed-list
    walk. On failure the reason is a formula on which ``pred`` fails."""
    match g:
        case Empty():
            return yes(AllWitness("empty", g, removed))
        case Singleton(a):
            if any(formula_eq(a, r) for r in removed):
                return yes(AllWitness("removed", g, removed))
            d = pred(a)
            if not d:
                return no(a)
            return yes(AllWitness("single", g, removed, (d.witness,)))
        case Union(l, r):
            dl = all_satisfy(pred, l, removed)
            if not dl:
                return dl
            dr = all_satisfy(pred, r, removed)
            if not dr:
                return dr
            return yes(AllWitness("union", g, removed, (dl.witness, dr.witness)))
        case Remove(inner, a):
            d = all_satisfy(pred, inner, (a,) + removed)
            if not d:
                return d
            return yes(AllWitness("remove", g, removed, (d.witness,)))
    raise TypeError(f"not a context: {g!r}")


def verify_all(w: AllWitness, check: Callable[[object, Formula], bool], removed: tuple = ()) -> bool:
    """Re-check an AllWitness. ``check(witness, formula)`` validates the
    predicate evidence stored at ``single`` nodes."""
    if w.removed != removed:
        return False
    match w.rule, w.context:
        case "empty", Empty():
            return True
        case "removed", Singleton(a):
            return any(formula_eq(a, r) for r in removed)
        case "single", Singleton(a):
            return len(w.premises) == 1 and check(w.premises[0], a)
        case "union", Union(l, r):
            return (len(w.premises) == 2
                    and w.premises[0].context == l and w.premises[1].context == r
                    and verify_all(w.premises[0], check, removed)
                    and verify_all(w.premises[1], check, removed))
        case "remove", Remove(inner, a):
            return (len(w.premises) == 1 and w.premises[0].context == inner
                    and verify_all(w.premises[0], check, (a,) + removed))
    return False


def all_implies_members(w: AllWitness, pred: Callable[[Formula], Dec]) -> Dec:
    """Confirm ``pred`` on every member of the context ``w`` was built for.
    A failure here means the removed-list walk was unsound."""
    for a in members(w.context):
        if not pred(a):
            return no(a)
    return yes()
