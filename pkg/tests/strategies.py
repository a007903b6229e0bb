"""Hypothesis strategies and a seeded generator for concrete syntax tests."""
import random

from hypothesis import strategies as st

from natded.syntax import (BOT, And, Atom, Exists, Forall, Func, FuncTerm, Implies,
                           Or, Rel, Var, VarTerm)

RELS = (Rel(1, 0), Rel(2, 0), Rel(5, 1), Rel(6, 1), Rel(9, 2))
FUNCS = (Func(3, 0), Func(1, 1), Func(2, 2))

variables = st.integers(0, 5).map(Var)

terms = st.recursive(
    variables.map(VarTerm) | st.just(FuncTerm(Func(3, 0))),
    lambda sub: st.one_of(
        sub.map(lambda t: FuncTerm(Func(1, 1), (t,))),
        st.tuples(sub, sub).map(lambda ts: FuncTerm(Func(2, 2), ts))),
    max_leaves=4)


def _atom(rel):
    return st.tuples(*[terms] * rel.arity).map(lambda ts: Atom(rel, ts))


atoms = st.one_of(st.just(BOT), *[_atom(r) for r in RELS])

formulas = st.recursive(
    atoms,
    lambda sub: st.one_of(
        st.builds(Implies, sub, sub), st.builds(And, sub, sub), st.builds(Or, sub, sub),
        st.builds(Forall, variables, sub), st.builds(Exists, variables, sub)),
    max_leaves=8)


def random_term(rng: random.Random, depth=3):
    if depth <= 1 or rng.random() < 0.5:
        return VarTerm(Var(rng.randrange(6))) if rng.random() < 0.8 else FuncTerm(FUNCS[0])
    f = rng.choice(FUNCS[1:])
    return FuncTerm(f, tuple(random_term(rng, depth - 1) for _ in range(f.arity)))


def random_formula(rng: random.Random, depth=5):
    if depth <= 1 or rng.random() < 0.2:
        if rng.random() < 0.1:
            return BOT
        r = rng.choice(RELS)
        return Atom(r, tuple(random_term(rng) for _ in range(r.arity)))
    k = rng.randrange(5)
    if k < 3:
        c = (Implies, And, Or)[k]
        return c(random_formula(rng, depth - 1), random_formula(rng, depth - 1))
    q = (Forall, Exists)[k - 3]
    return q(Var(rng.randrange(6)), random_formula(rng, depth - 1))
