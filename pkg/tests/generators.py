"""Random proofs and equivalence witnesses for the rename tests."""
from __future__ import annotations

import random

from natded.binding import not_free_in
from natded.equivalence import Equiv, refl, rename_binder, rename_binder_dual
from natded.kernel import ArrowElim, ArrowIntro, Assume, ConjElim, ConjIntro
from natded.substitution import free_for
from natded.syntax import BINARY, QUANTIFIERS, Atom, Var, VarTerm

from oracles import X, Y, Z, random_formula

VARS = (X, Y, Z)


def random_equiv(a, rng: random.Random, stats=None):
    """A random witness a ≈ a′, picking a renaming at quantifiers whenever
    one applies. ``stats`` counts the constructors used, keyed by rule and
    quantifier, and (``degenerate``, rule) for x = y renamings."""
    stats = stats if stats is not None else {}

    def note(key):
        stats[key] = stats.get(key, 0) + 1

    def go(b):
        match b:
            case Atom():
                return refl(b)
            case _ if isinstance(b, BINARY):
                l, r = go(b.left), go(b.right)
                return Equiv(refl(b).rule, b, type(b)(l.right, r.right), (l, r))
        x, body = b.var, b.body
        options = ["quant"]
        ys = [y for y in VARS if not_free_in(y, body) and free_for(VarTerm(y), x, body)]
        if ys:
            options += ["rename", "rename_dual"]
        rule = rng.choice(options)
        q = type(b).__name__
        if rule == "quant":
            inner = go(body)
            return Equiv("quant", b, type(b)(x, inner.right), (inner,))
        y = rng.choice(ys)
        if y == x:
            note(("degenerate", rule))
        note((rule, q))
        if rule == "rename":
            beta = _subst(body, x, y)
            return rename_binder(b, y, go(beta))
        inner = go(body)
        if not not_free_in(y, inner.right) or not free_for(VarTerm(y), x, inner.right):
            # the inner renaming captured y; keep the body unchanged
            inner = refl(body)
        return rename_binder_dual(b, y, inner)

    return go(a)


def _subst(a, x, y):
    from natded.substitution import apply_substitution
    return apply_substitution(a, x, VarTerm(y)).result


def random_proof(a, rng: random.Random, extra=()):
    """A proof whose conclusion is ``a``, with a few open assumptions."""
    k = rng.random()
    if k < 0.4 or not extra:
        return Assume(a)
    c = rng.choice(extra)
    if k < 0.7:
        # (c ⇒ a) applied to c, context {a} u {c} minus c
        return ArrowElim(ArrowIntro(c, Assume(a)), Assume(c))
    # from a ∧ c take a
    return ConjElim(ConjIntro(Assume(a), Assume(c)), Assume(a))


def rename_cases(n, seed=0):
    """``n`` (proof, witness) pairs; degenerate renamings are forced by
    quantifying over variables that do not occur in the body."""
    rng = random.Random(seed)
    stats = {}
    out = []
    extras = [random_formula(rng, 3) for _ in range(6)]
    while len(out) < n:
        a = random_formula(rng, 5)
        if rng.random() < 0.25:
            # a quantifier whose variable is not free in the body admits x = y
            q = rng.choice(QUANTIFIERS)
            v = Var(rng.choice((0, 1, 2)))
            body = random_formula(rng, 3, variables=tuple(u for u in VARS if u != v))
            a = q(v, body) if rng.random() < 0.5 else q(v, q(v, body))
        if not any(isinstance(s, QUANTIFIERS) for s in _subformulas(a)):
            continue
        w = random_equiv(a, rng, stats)
        out.append((random_proof(a, rng, extras), w))
    return out, stats


def _subformulas(a):
    yield a
    match a:
        case Atom():
            return
        case _ if isinstance(a, BINARY):
            yield from _subformulas(a.left)
            yield from _subformulas(a.right)
        case _:
            yield from _subformulas(a.body)


def random_tree(rng: random.Random, depth=4):
    """A random proof tree built from rules that often check; the caller
    filters with the checker."""
    from natded.context import Remove, Singleton, Union
    from natded.kernel import (Close, DisjIntro1, DisjIntro2, UnivElim, UnivIntro)
    a = random_formula(rng, 3)
    if depth <= 1:
        return Assume(a)
    k = rng.randrange(9)
    sub = random_tree(rng, depth - 1)
    if k == 0:
        return ArrowIntro(a, sub)
    if k == 1:
        return ConjIntro(sub, random_tree(rng, depth - 1))
    if k == 2:
        return DisjIntro1(a, sub)
    if k == 3:
        return DisjIntro2(a, sub)
    if k == 4:
        return UnivIntro(rng.choice(VARS), sub)
    if k == 5:
        return UnivElim(VarTerm(rng.choice(VARS)), UnivIntro(rng.choice(VARS), sub))
    if k == 6:
        return ArrowElim(ArrowIntro(a, sub), Assume(a))
    if k == 7:
        return Close(Union(Singleton(a), Remove(Singleton(a), a)), sub)
    return sub
