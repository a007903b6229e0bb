"""First-order terms and formulas.

Variables, function symbols and relation symbols are indexed by natural
numbers. A symbol is identified by its index *and* its arity, so ``f/1`` and
``f/2`` with the same index are different symbols. Arity is enforced when a
term or atom is built.

All syntax objects are frozen dataclasses; ``==`` is structural equality and
the ``*_eq`` deciders below add the location of the first mismatch.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Union


class ArityError(ValueError):
    pass


@dataclass(frozen=True)
class Dec:
    """Outcome of a decision procedure.

    ``ok`` says which branch holds. A positive answer carries ``witness``; a
    negative one carries ``reason`` (usually a path to the offending node).
    """

    ok: bool
    witness: Any = None
    reason: Any = None

    def __bool__(self) -> bool:
        return self.ok


_YES = Dec(True, witness=True)


def yes(witness: Any = True) -> Dec:
    # witness-free answers are shared; Dec is immutable
    return _YES if witness is True else Dec(True, witness=witness)


def no(reason: Any = None) -> Dec:
    return Dec(False, reason=reason)


def _cache_hash(cls):
    """Memoise the structural hash; terms and formulas are immutable trees
    that get hashed repeatedly as dictionary keys."""
    structural = cls.__hash__

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = structural(self)
            object.__setattr__(self, "_hash", h)
        return h

    cls.__hash__ = __hash__
    return cls


@dataclass(frozen=True)
class Var:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("variable index must be a natural number")


@dataclass(frozen=True)
class Func:
    index: int
    arity: int


@dataclass(frozen=True)
class Rel:
    index: int
    arity: int


class Term:
    __slots__ = ()


@_cache_hash
@dataclass(frozen=True)
class VarTerm(Term):
    var: Var


@_cache_hash
@dataclass(frozen=True)
class FuncTerm(Term):
    func: Func
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) != self.func.arity:
            raise ArityError(
                f"function {self.func.index}/{self.func.arity} "
                f"applied to {len(self.args)} arguments")


class Formula:
    __slots__ = ()


@_cache_hash
@dataclass(frozen=True)
class Atom(Formula):
    rel: Rel
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) != self.rel.arity:
            raise ArityError(
                f"relation {self.rel.index}/{self.rel.arity} "
                f"applied to {len(self.args)} arguments")


@_cache_hash
@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@_cache_hash
@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@_cache_hash
@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@_cache_hash
@dataclass(frozen=True)
class Forall(Formula):
    var: Var
    body: Formula


@_cache_hash
@dataclass(frozen=True)
class Exists(Formula):
    var: Var
    body: Formula


Binary = Union[Implies, And, Or]
Quantifier = Union[Forall, Exists]
BINARY = (Implies, And, Or)
QUANTIFIERS = (Forall, Exists)

# fixed symbols: bottom is the nullary relation with index 0
BOT = Atom(Rel(0, 0))
X, Y, Z = Var(0), Var(1), Var(2)


def neg(a: Formula) -> Formula:
    return Implies(a, BOT)


def iff(a: Formula, b: Formula) -> Formula:
    return And(Implies(a, b), Implies(b, a))


def var(n: int) -> VarTerm:
    return VarTerm(Var(n))


def same_shape(a: Formula, b: Formula) -> bool:
    """True when ``a`` and ``b`` have the same head constructor."""
    return type(a) is type(b)


# decidable equality

def var_eq(a: Var, b: Var) -> Dec:
    if a.index == b.index:
        return yes()
    return no(())


def func_eq(f: Func, g: Func) -> Dec:
    if f.index == g.index and f.arity == g.arity:
        return yes()
    return no(())


def rel_eq(r: Rel, s: Rel) -> Dec:
    if r.index == s.index and r.arity == s.arity:
        return yes()
    return no(())


def terms_eq(ss, ts) -> Dec:
    if len(ss) != len(ts):
        return no(())
    for i, (s, t) in enumerate(zip(ss, ts)):
        d = term_eq(s, t)
        if not d:
            return no((i,) + d.reason)
    return yes()


def term_eq(s: Term, t: Term) -> Dec:
    """Structural equality of terms; on failure ``reason`` is the path of
    argument positions leading to the first difference."""
    match s, t:
        case VarTerm(a), VarTerm(b):
            return var_eq(a, b)
        case FuncTerm(f, us), FuncTerm(g, vs):
            if not func_eq(f, g):
                return no(())
            return terms_eq(us, vs)
    return no(())


def formula_eq(a: Formula, b: Formula) -> Dec:
    """Structural equality. Bound variable names matter: ``∀x Px`` and
    ``∀y Py`` are different formulas here."""
    if a is b:
        return yes()
    match a, b:
        case Atom(r, ts), Atom(s, us):
            if not rel_eq(r, s):
                return no(())
            d = terms_eq(ts, us)
            return d if d else no(("args",) + d.reason)
        case (Implies(a1, a2), Implies(b1, b2)) | (And(a1, a2), And(b1, b2)) | (Or(a1, a2), Or(b1, b2)):
            d = formula_eq(a1, b1)
            if not d:
                return no(("left",) + d.reason)
            d = formula_eq(a2, b2)
            if not d:
                return no(("right",) + d.reason)
            return yes()
        case (Forall(x, a1), Forall(y, b1)) | (Exists(x, a1), Exists(y, b1)):
            if not var_eq(x, y):
                return no(())
            d = formula_eq(a1, b1)
            return d if d else no(("body",) + d.reason)
    return no(())


def subformula(a: Formula, path) -> Any:
    """Follow a path produced by the deciders in this package."""
    for step in path:
        match step:
            case "left" | "right" | "body":
                a = getattr(a, step)
            case "args":
                a = a.args
            case int(i):
                a = a[i] if isinstance(a, tuple) else a.args[i]
    return a
