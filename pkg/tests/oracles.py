"""Independent reference implementations used as test oracles.

Nothing here calls the deciders under test: occurrences are collected by a
plain recursive walk, substitution is the textbook capture-checking
definition, and contexts are evaluated to Python sets.
"""
from __future__ import annotations

import functools
import itertools
import random

from natded.binding import NotFree, NotInTerm
from natded.context import Empty, Remove, Singleton, Union
from natded.substitution import Sub, TermSub
from natded.syntax import (BOT, And, Atom, Exists, Forall, Func, FuncTerm,
                           Implies, Or, Rel, Var, VarTerm)

X, Y, Z = Var(0), Var(1), Var(2)
P = Rel(5, 1)
A = Atom(Rel(1, 0))
Px = Atom(P, (VarTerm(X),))
Py = Atom(P, (VarTerm(Y),))
ATOMS = (Px, Py, A, BOT)
BINDERS = (X, Y)
BINARIES = (Implies, And, Or)
QUANTS = (Forall, Exists)


# enumeration

def formulas(depth, atoms=ATOMS, binders=BINDERS):
    """All formulas of depth <= ``depth``; atoms have depth 1."""
    if depth <= 0:
        return []
    level = list(atoms)
    for _ in range(depth - 1):
        prev = level
        level = list(atoms)
        level += [c(a, b) for c in BINARIES for a in prev for b in prev]
        level += [q(v, a) for q in QUANTS for v in binders for a in prev]
    return level


def terms(depth, variables=(X, Y), funcs=(Func(0, 1), Func(0, 2))):
    if depth <= 0:
        return []
    level = [VarTerm(v) for v in variables]
    for _ in range(depth - 1):
        prev = level
        level = [VarTerm(v) for v in variables]
        for f in funcs:
            level += [FuncTerm(f, args) for args in itertools.product(prev, repeat=f.arity)]
    return level


def random_formula(rng: random.Random, depth=4, variables=(X, Y, Z), atoms=None):
    atoms = atoms or [A, BOT] + [Atom(P, (VarTerm(v),)) for v in variables]
    if depth <= 1 or rng.random() < 0.25:
        return rng.choice(atoms)
    k = rng.random()
    if k < 0.5:
        c = rng.choice(BINARIES)
        return c(random_formula(rng, depth - 1, variables, atoms),
                 random_formula(rng, depth - 1, variables, atoms))
    q = rng.choice(QUANTS)
    return q(rng.choice(variables), random_formula(rng, depth - 1, variables, atoms))


# occurrences

def term_vars(t):
    match t:
        case VarTerm(v):
            return {v}
        case FuncTerm(_, args):
            return set().union(*(term_vars(u) for u in args)) if args else set()


@functools.lru_cache(maxsize=None)
def free_vars(a):
    match a:
        case Atom(_, args):
            return frozenset().union(*(term_vars(t) for t in args))
        case Implies(l, r) | And(l, r) | Or(l, r):
            return free_vars(l) | free_vars(r)
        case Forall(v, b) | Exists(v, b):
            return free_vars(b) - {v}


def all_vars(a):
    """Every variable appearing anywhere, binders included."""
    match a:
        case Atom(_, args):
            return set().union(*(term_vars(t) for t in args)) if args else set()
        case Implies(l, r) | And(l, r) | Or(l, r):
            return all_vars(l) | all_vars(r)
        case Forall(v, b) | Exists(v, b):
            return all_vars(b) | {v}


def max_index(a):
    vs = all_vars(a)
    return max((v.index for v in vs), default=0)


# substitution

def sub_term(u, x, t):
    match u:
        case VarTerm(v):
            return t if v == x else u
        case FuncTerm(f, args):
            return FuncTerm(f, tuple(sub_term(s, x, t) for s in args))


def naive_sub(a, x, t):
    """a[x/t], or None when some free occurrence of x sits under a binder
    of a variable of t."""
    tv = term_vars(t)

    def go(b):
        match b:
            case Atom(r, args):
                return Atom(r, tuple(sub_term(s, x, t) for s in args))
            case Implies(l, r) | And(l, r) | Or(l, r):
                gl, gr = go(l), go(r)
                return None if gl is None or gr is None else type(b)(gl, gr)
            case Forall(v, body) | Exists(v, body):
                if v == x or x not in free_vars(body):
                    return b
                if v in tv:
                    return None
                g = go(body)
                return None if g is None else type(b)(v, g)

    return go(a)


@functools.lru_cache(maxsize=None)
def all_evidence(a, x, t, limit=64):
    """Substitution-evidence trees for a[x/t] (at most ``limit``), one per
    admissible choice of constructor at each node, built without the
    library's substitution code."""
    out = []
    if t == VarTerm(x):
        out.append(Sub("ident", a, x, t, a))
    if x not in free_vars(a):
        out.append(Sub("notfree", a, x, t, a, (_nf(x, a),)))
    match a:
        case Atom(r, args):
            subs = tuple(_term_sub(s, x, t) for s in args)
            out.append(Sub("atom", a, x, t, Atom(r, tuple(s.result for s in subs)), subs))
        case Implies(l, r) | And(l, r) | Or(l, r):
            rule = {Implies: "imp", And: "and", Or: "or"}[type(a)]
            for el, er in itertools.product(all_evidence(l, x, t, limit),
                                            all_evidence(r, x, t, limit)):
                out.append(Sub(rule, a, x, t, type(a)(el.result, er.result), (el, er)))
                if len(out) >= limit:
                    break
        case Forall(v, body) | Exists(v, body):
            if v == x:
                out.append(Sub("bound", a, x, t, a))
            elif v not in term_vars(t):
                for e in all_evidence(body, x, t, limit):
                    out.append(Sub("under", a, x, t, type(a)(v, e.result), (_nit(v, t), e)))
    return tuple(out[:limit])


@functools.lru_cache(maxsize=None)
def evidence_results(a, x, t):
    """The set of results over every evidence tree for a[x/t], without a
    cap: a node's results are the union over its applicable constructors
    of the products of its premises' results."""
    out = set()
    if t == VarTerm(x):
        out.add(a)
    if x not in free_vars(a):
        out.add(a)
    match a:
        case Atom(r, args):
            out.add(Atom(r, tuple(sub_term(s, x, t) for s in args)))
        case Implies(l, r) | And(l, r) | Or(l, r):
            for rl in evidence_results(l, x, t):
                for rr in evidence_results(r, x, t):
                    out.add(type(a)(rl, rr))
        case Forall(v, body) | Exists(v, body):
            if v == x:
                out.add(a)
            elif v not in term_vars(t):
                out.update(type(a)(v, b) for b in evidence_results(body, x, t))
    return frozenset(out)


def _term_sub(u, x, t):
    match u:
        case VarTerm(v) if v == x:
            return TermSub("var_eq", u, x, t, t)
        case VarTerm(_):
            return TermSub("var_ne", u, x, t, u)
        case FuncTerm(f, args):
            ps = tuple(_term_sub(s, x, t) for s in args)
            return TermSub("func", u, x, t, FuncTerm(f, tuple(p.result for p in ps)), ps)


def _nit(x, t):
    match t:
        case VarTerm(_):
            return NotInTerm(x, t)
        case FuncTerm(_, args):
            return NotInTerm(x, t, tuple(_nit(x, u) for u in args))


def _nf(x, a):
    match a:
        case Atom(_, args):
            return NotFree("atom", x, a, tuple(_nit(x, u) for u in args))
        case Implies(l, r) | And(l, r) | Or(l, r):
            rule = {Implies: "imp", And: "and", Or: "or"}[type(a)]
            return NotFree(rule, x, a, (_nf(x, l), _nf(x, r)))
        case Forall(v, b) | Exists(v, b):
            if v == x:
                return NotFree("bound", x, a)
            return NotFree("under", x, a, (_nf(x, b),))


# contexts

def denotation(g):
    match g:
        case Empty():
            return frozenset()
        case Singleton(a):
            return frozenset([a])
        case Union(l, r):
            return denotation(l) | denotation(r)
        case Remove(inner, a):
            return denotation(inner) - {a}


def contexts(max_nodes, alphabet):
    """All context trees with at most ``max_nodes`` nodes."""
    by_size = {1: [Empty()] + [Singleton(a) for a in alphabet]}
    for n in range(2, max_nodes + 1):
        level = [Remove(g, a) for g in by_size[n - 1] for a in alphabet]
        for k in range(1, n - 1):
            level += [Union(l, r) for l in by_size[k] for r in by_size[n - 1 - k]]
        by_size[n] = level
    return [g for n in range(1, max_nodes + 1) for g in by_size[n]]


def random_context(rng: random.Random, alphabet, depth=4):
    k = rng.random()
    if depth <= 1 or k < 0.2:
        return Empty() if rng.random() < 0.2 else Singleton(rng.choice(alphabet))
    if k < 0.6:
        return Union(random_context(rng, alphabet, depth - 1), random_context(rng, alphabet, depth - 1))
    return Remove(random_context(rng, alphabet, depth - 1), rng.choice(alphabet))


# structural identity, by flattening to nested tuples of plain values

def structure(obj):
    match obj:
        case Var(i):
            return ("var", i)
        case VarTerm(v):
            return ("varterm", v.index)
        case FuncTerm(f, args):
            return ("func", f.index, f.arity, tuple(structure(u) for u in args))
        case Atom(r, args):
            return ("atom", r.index, r.arity, tuple(structure(u) for u in args))
        case Implies(l, r) | And(l, r) | Or(l, r):
            return (type(obj).__name__, structure(l), structure(r))
        case Forall(v, b) | Exists(v, b):
            return (type(obj).__name__, v.index, structure(b))
    raise TypeError(obj)


def mixed_formulas(depth):
    """Formulas over two unary relations, two variables and a function
    symbol in argument position, for equality sweeps."""
    f = Func(0, 1)
    atoms = (Px, Atom(P, (FuncTerm(f, (VarTerm(Y),)),)), Atom(Rel(6, 1), (VarTerm(X),)), A)
    return formulas(depth, atoms)
