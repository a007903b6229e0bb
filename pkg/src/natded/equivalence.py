"""Equivalence of formulas up to renaming bound variables, and the derived
rename rule that turns a proof of Γ ⊢ α into a proof of Γ ⊢ α′.

Witness rules (``Equiv.rule``):

``atom``            identical atoms
``imp/and/or``      premises relate the two components
``quant``           same binder, premise relates the bodies
``rename``          Q x α ≈ Q y β′ from (y not free in α, α[x/y] = β, β ≈ β′)
``rename_dual``     Q x α ≈ Q y β′ from (α ≈ α′, y not free in α′, α′[x/y] = β′)
"""
from __future__ import annotations

from dataclasses import dataclass

from .binding import BINARY_RULE, NotFree, NotInTerm, not_free_in, verify_not_free
from .context import Context, Singleton, Union
from .kernel import (ArrowElim, ArrowIntro, Assume, Close, ConjElim, ConjIntro,
                     DisjElim, DisjIntro1, DisjIntro2, ExistElim, ExistIntro,
                     LogicMode, Proof, UnivElim, UnivIntro, judgement_of)
from .substitution import (Sub, apply_substitution, not_free_sub, sub_inverse,
                           sub_not_free, verify_evidence)
from .syntax import (BINARY, QUANTIFIERS, Atom, Dec, Exists, Forall, Formula,
                     Var, VarTerm, no, yes)


@dataclass(frozen=True)
class Equiv:
    rule: str
    left: Formula
    right: Formula
    premises: tuple = ()


def refl(a: Formula) -> Equiv:
    """The trivial witness a ≈ a."""
    match a:
        case Atom():
            return Equiv("atom", a, a)
        case _ if isinstance(a, BINARY):
            return Equiv(BINARY_RULE[type(a)], a, a, (refl(a.left), refl(a.right)))
        case _:
            return Equiv("quant", a, a, (refl(a.body),))


def rename_binder(a: Formula, y: Var, inner: Equiv | None = None) -> Equiv:
    """Q x α ≈ Q y β′ with β = α[x/y]; ``inner`` relates β to β′ (default:
    reflexivity). Raises if y is free in α or not substitutable."""
    nf = not_free_in(y, a.body)
    if not nf:
        raise ValueError("new binder occurs free in the body")
    beta, e = apply_substitution(a.body, a.var, VarTerm(y))
    inner = inner or refl(beta)
    if inner.left != beta:
        raise ValueError("inner witness does not start at the renamed body")
    return Equiv("rename", a, type(a)(y, inner.right), (nf.witness, e, inner))


def rename_binder_dual(a: Formula, y: Var, inner: Equiv | None = None) -> Equiv:
    """Q x α ≈ Q y β′ with ``inner``: α ≈ α′ first, then β′ = α′[x/y]."""
    inner = inner or refl(a.body)
    if inner.left != a.body:
        raise ValueError("inner witness does not start at the body")
    nf = not_free_in(y, inner.right)
    if not nf:
        raise ValueError("new binder occurs free in the body")
    beta, e = apply_substitution(inner.right, a.var, VarTerm(y))
    return Equiv("rename_dual", a, type(a)(y, beta), (inner, nf.witness, e))


def verify_equiv(w: Equiv, a: Formula, b: Formula, path=()) -> Dec:
    """Yes iff ``w`` is a well-formed derivation of a ≈ b; otherwise the
    reason is the path to the first bad node."""
    if not isinstance(w, Equiv) or w.left != a or w.right != b:
        return no(path)
    match w.rule:
        case "atom":
            return yes() if isinstance(a, Atom) and a == b else no(path)
        case "imp" | "and" | "or":
            if not isinstance(a, BINARY) or type(a) is not type(b) \
                    or BINARY_RULE[type(a)] != w.rule or len(w.premises) != 2:
                return no(path)
            d = verify_equiv(w.premises[0], a.left, b.left, path + ("left",))
            return d if not d else verify_equiv(w.premises[1], a.right, b.right, path + ("right",))
        case "quant":
            if not isinstance(a, QUANTIFIERS) or type(a) is not type(b) \
                    or a.var != b.var or len(w.premises) != 1:
                return no(path)
            return verify_equiv(w.premises[0], a.body, b.body, path + ("body",))
        case "rename":
            if not isinstance(a, QUANTIFIERS) or type(a) is not type(b) or len(w.premises) != 3:
                return no(path)
            nf, e, inner = w.premises
            x, y = a.var, b.var
            if not isinstance(nf, NotFree) or nf.x != y or nf.formula != a.body \
                    or not verify_not_free(nf):
                return no(path)
            if not isinstance(e, Sub) or (e.formula, e.x, e.t) != (a.body, x, VarTerm(y)) \
                    or not verify_evidence(e):
                return no(path)
            return verify_equiv(inner, e.result, b.body, path + ("body",))
        case "rename_dual":
            if not isinstance(a, QUANTIFIERS) or type(a) is not type(b) or len(w.premises) != 3:
                return no(path)
            inner, nf, e = w.premises
            x, y = a.var, b.var
            if not isinstance(inner, Equiv) or inner.left != a.body:
                return no(path + ("body",))
            d = verify_equiv(inner, a.body, inner.right, path + ("body",))
            if not d:
                return d
            if not isinstance(nf, NotFree) or nf.x != y or nf.formula != inner.right \
                    or not verify_not_free(nf):
                return no(path)
            if not isinstance(e, Sub) or (e.formula, e.x, e.t, e.result) != \
                    (inner.right, x, VarTerm(y), b.body) or not verify_evidence(e):
                return no(path)
            return yes()
    return no(path)


def equiv_sym(w: Equiv) -> Equiv:
    """From a ≈ b build b ≈ a. Renamings flip to their dual form; renaming a
    binder to itself collapses to the plain quantifier rule."""
    a, b = w.left, w.right
    match w.rule:
        case "atom":
            return w
        case "imp" | "and" | "or":
            return Equiv(w.rule, b, a, tuple(equiv_sym(p) for p in w.premises))
        case "quant":
            return Equiv("quant", b, a, (equiv_sym(w.premises[0]),))
        case "rename":
            nf, e, inner = w.premises
            x, y = a.var, b.var
            if x == y:
                # renaming by itself leaves the body unchanged
                return Equiv("quant", b, a, (equiv_sym(inner),))
            return Equiv("rename_dual", b, a,
                         (equiv_sym(inner), sub_not_free(NotInTerm(x, VarTerm(y)), e),
                          sub_inverse(nf, e)))
        case "rename_dual":
            inner, nf, e = w.premises
            x, y = a.var, b.var
            if x == y:
                return Equiv("quant", b, a, (equiv_sym(inner),))
            return Equiv("rename", b, a,
                         (sub_not_free(NotInTerm(x, VarTerm(y)), e), sub_inverse(nf, e),
                          equiv_sym(inner)))
    raise ValueError(f"unknown equivalence rule {w.rule!r}")


def equiv_not_free(w: Equiv, nf: NotFree) -> NotFree:
    """Transport 'z not free' across a ≈ a′."""
    z = nf.x
    if nf.formula != w.left:
        raise ValueError("not-free witness is for a different formula")
    b = w.right
    match w.rule:
        case "atom":
            return nf
        case "imp" | "and" | "or":
            return NotFree(w.rule, z, b, tuple(
                equiv_not_free(p, n) for p, n in zip(w.premises, nf.premises)))
        case "quant":
            if nf.rule == "bound":
                return NotFree("bound", z, b)
            return NotFree("under", z, b, (equiv_not_free(w.premises[0], nf.premises[0]),))
        case "rename":
            y_nf, e, inner = w.premises
            if z == b.var:
                return NotFree("bound", z, b)
            # z differs from the new binder, so z is not in the term y
            z_not_y = NotInTerm(z, VarTerm(b.var))
            if nf.rule == "bound":
                in_beta = sub_not_free(z_not_y, e)
            else:
                in_beta = not_free_sub(nf.premises[0], z_not_y, e)
            return NotFree("under", z, b, (equiv_not_free(inner, in_beta),))
        case "rename_dual":
            inner, y_nf, e = w.premises
            if z == b.var:
                return NotFree("bound", z, b)
            z_not_y = NotInTerm(z, VarTerm(b.var))
            if nf.rule == "bound":
                in_beta = sub_not_free(z_not_y, e)
            else:
                in_beta = not_free_sub(equiv_not_free(inner, nf.premises[0]), z_not_y, e)
            return NotFree("under", z, b, (in_beta,))
    raise ValueError(f"unknown equivalence rule {w.rule!r}")


# the rename rule

def _ident(a: Formula, x: Var) -> Sub:
    return Sub("ident", a, x, VarTerm(x), a)


def _detour(g: Context, start: Formula, inner: Proof, p: Proof) -> Proof:
    # close Γ ((start ⇒ ...) applied to p) so Γ is not open when the
    # quantifier is reintroduced
    return Close(g, ArrowElim(ArrowIntro(start, inner), p))


def _forward(w: Equiv, p: Proof, g: Context) -> Proof:
    """p proves Γ ⊢ w.left; return a proof of Γ ⊢ w.right."""
    a, b = w.left, w.right
    match w.rule:
        case "atom":
            return p
        case "imp":
            wa, wb = w.premises
            a2 = b.left
            back = _backward(wa, Assume(a2), Singleton(a2))
            body = _forward(wb, ArrowElim(p, back), Union(g, Singleton(a2)))
            return Close(g, ArrowIntro(a2, body))
        case "and":
            wa, wb = w.premises
            pa = _forward(wa, Assume(a.left), Singleton(a.left))
            pb = _forward(wb, Assume(a.right), Singleton(a.right))
            return Close(g, ConjElim(p, ConjIntro(pa, pb)))
        case "or":
            wa, wb = w.premises
            pa = DisjIntro1(b.right, _forward(wa, Assume(a.left), Singleton(a.left)))
            pb = DisjIntro2(b.left, _forward(wb, Assume(a.right), Singleton(a.right)))
            return Close(g, DisjElim(p, pa, pb))
        case "quant" if isinstance(a, Forall):
            x = a.var
            body = _forward(w.premises[0], UnivElim(VarTerm(x), Assume(a), _ident(a.body, x)),
                            Singleton(a))
            return _detour(g, a, UnivIntro(x, body), p)
        case "quant":
            x = a.var
            inner = _forward(w.premises[0], Assume(a.body), Singleton(a.body))
            return Close(g, ExistElim(x, p, ExistIntro(VarTerm(x), x, b.body, inner,
                                                       _ident(b.body, x))))
        case "rename" if isinstance(a, Forall):
            _, e, inner = w.premises
            y = b.var
            body = _forward(inner, UnivElim(VarTerm(y), Assume(a), e), Singleton(a))
            return _detour(g, a, UnivIntro(y, body), p)
        case "rename":
            nf, e, inner = w.premises
            x, y = a.var, b.var
            beta = e.result
            if x == y:
                moved = _forward(inner, Assume(a.body), Singleton(a.body))
                return Close(g, ExistElim(x, p, ExistIntro(VarTerm(x), x, b.body, moved,
                                                           _ident(b.body, x))))
            reintro = ExistIntro(VarTerm(x), y, beta, Assume(a.body), sub_inverse(nf, e))
            moved = ExistIntro(VarTerm(y), y, b.body,
                               _forward(inner, Assume(beta), Singleton(beta)),
                               _ident(b.body, y))
            return Close(g, ExistElim(x, p, ExistElim(y, reintro, moved)))
        case "rename_dual" if isinstance(a, Forall):
            inner, _, e = w.premises
            x, y = a.var, b.var
            moved = _forward(inner, UnivElim(VarTerm(x), Assume(a), _ident(a.body, x)),
                             Singleton(a))
            return _detour(g, a, UnivIntro(y, UnivElim(VarTerm(y), UnivIntro(x, moved), e)), p)
        case "rename_dual":
            inner, nf, e = w.premises
            x, y = a.var, b.var
            moved = _forward(inner, Assume(a.body), Singleton(a.body))
            if x == y:
                return Close(g, ExistElim(x, p, ExistIntro(VarTerm(x), x, b.body, moved,
                                                           _ident(b.body, x))))
            return Close(g, ExistElim(x, p, ExistIntro(VarTerm(x), y, b.body, moved,
                                                       sub_inverse(nf, e))))
    raise ValueError(f"unknown equivalence rule {w.rule!r}")


def _backward(w: Equiv, p: Proof, g: Context) -> Proof:
    """p proves Γ ⊢ w.right; return a proof of Γ ⊢ w.left."""
    a, b = w.left, w.right
    match w.rule:
        case "atom":
            return p
        case "imp":
            wa, wb = w.premises
            a1 = a.left
            fwd = _forward(wa, Assume(a1), Singleton(a1))
            body = _backward(wb, ArrowElim(p, fwd), Union(g, Singleton(a1)))
            return Close(g, ArrowIntro(a1, body))
        case "and":
            wa, wb = w.premises
            pa = _backward(wa, Assume(b.left), Singleton(b.left))
            pb = _backward(wb, Assume(b.right), Singleton(b.right))
            return Close(g, ConjElim(p, ConjIntro(pa, pb)))
        case "or":
            wa, wb = w.premises
            pa = DisjIntro1(a.right, _backward(wa, Assume(b.left), Singleton(b.left)))
            pb = DisjIntro2(a.left, _backward(wb, Assume(b.right), Singleton(b.right)))
            return Close(g, DisjElim(p, pa, pb))
        case "quant" if isinstance(a, Forall):
            x = a.var
            body = _backward(w.premises[0], UnivElim(VarTerm(x), Assume(b), _ident(b.body, x)),
                             Singleton(b))
            return _detour(g, b, UnivIntro(x, body), p)
        case "quant":
            x = a.var
            inner = _backward(w.premises[0], Assume(b.body), Singleton(b.body))
            return Close(g, ExistElim(x, p, ExistIntro(VarTerm(x), x, a.body, inner,
                                                       _ident(a.body, x))))
        case "rename" if isinstance(a, Forall):
            nf, e, inner = w.premises
            x, y = a.var, b.var
            if x == y:
                moved = _backward(inner, UnivElim(VarTerm(x), Assume(b), _ident(b.body, x)),
                                  Singleton(b))
                return _detour(g, b, UnivIntro(x, moved), p)
            moved = _backward(inner, UnivElim(VarTerm(y), Assume(b), _ident(b.body, y)),
                              Singleton(b))
            back = UnivElim(VarTerm(x), UnivIntro(y, moved), sub_inverse(nf, e))
            return _detour(g, b, UnivIntro(x, back), p)
        case "rename":
            _, e, inner = w.premises
            x, y = a.var, b.var
            moved = _backward(inner, Assume(b.body), Singleton(b.body))
            return Close(g, ExistElim(y, p, ExistIntro(VarTerm(y), x, a.body, moved, e)))
        case "rename_dual" if isinstance(a, Forall):
            inner, nf, e = w.premises
            x, y = a.var, b.var
            if x == y:
                moved = _backward(inner, UnivElim(VarTerm(x), Assume(b), _ident(b.body, x)),
                                  Singleton(b))
                return _detour(g, b, UnivIntro(x, moved), p)
            moved = _backward(inner, UnivElim(VarTerm(x), Assume(b), sub_inverse(nf, e)),
                              Singleton(b))
            return _detour(g, b, UnivIntro(x, moved), p)
        case "rename_dual":
            inner, _, e = w.premises
            x, y = a.var, b.var
            a2 = inner.right
            reintro = ExistIntro(VarTerm(y), x, a2, Assume(b.body), e)
            moved = ExistIntro(VarTerm(x), x, a.body,
                               _backward(inner, Assume(a2), Singleton(a2)),
                               _ident(a.body, x))
            return Close(g, ExistElim(y, p, ExistElim(x, reintro, moved)))
    raise ValueError(f"unknown equivalence rule {w.rule!r}")


def rename(w: Equiv, p: Proof, mode: LogicMode = LogicMode.MINIMAL, library=None) -> Proof:
    """Extend a proof of Γ ⊢ α to a proof of Γ ⊢ α′ for a witness α ≈ α′.

    The two directions are mutually recursive: the implication case needs
    the reverse direction on the antecedent.
    """
    j = judgement_of(p, mode, library)
    if w.left != j.conclusion:
        raise ValueError("equivalence witness does not start at the proof's conclusion")
    d = verify_equiv(w, w.left, w.right)
    if not d:
        raise ValueError(f"invalid equivalence witness at {d.reason}")
    return _forward(w, p, j.context)


def rename_back(w: Equiv, p: Proof, mode: LogicMode = LogicMode.MINIMAL, library=None) -> Proof:
    """The other direction: from Γ ⊢ α′ to Γ ⊢ α."""
    j = judgement_of(p, mode, library)
    if w.right != j.conclusion:
        raise ValueError("equivalence witness does not end at the proof's conclusion")
    d = verify_equiv(w, w.left, w.right)
    if not d:
        raise ValueError(f"invalid equivalence witness at {d.reason}")
    return _backward(w, p, j.context)
