"""A small trusted kernel for first-order natural deduction.

Syntax, variable binding and substitution with checkable evidence,
assumption contexts, the proof checker, renaming of bound variables,
axiom schemes and LaTeX output.
"""
from .syntax import (BOT, X, Y, Z, And, Atom, Dec, Exists, Forall, Formula,
                     Func, FuncTerm, Implies, Or, Rel, Term, Var, VarTerm,
                     formula_eq, neg, term_eq, var, var_eq)
from .binding import fresh, fresh_in, max_var, max_var_terms, not_free_in, not_in_terms
from .substitution import apply_substitution, free_for, substitute, verify_evidence
from .context import EMPTY, Empty, Remove, Singleton, Union, member_of, subset_of
from .kernel import LogicMode, check_proof, conclusion_of, context_of, judgement_of
from .equivalence import Equiv, equiv_sym, rename, verify_equiv
from .concrete import parse_formula, parse_proof, parse_script, show_formula, show_proof

__all__ = [name for name in dir() if not name.startswith("_")]
