"""The acceptance criteria, one test per criterion (run with -s to see the
per-criterion timings)."""
import itertools
import json
import random
import subprocess
import sys
import time
from pathlib import Path

import jsonschema

from natded.binding import (NotInTerm, fresh, fresh_in, fresh_to_not_free, max_var,
                            not_free_in, verify_not_free)
from natded.cli import REPORT_SCHEMA
from natded.concrete import parse_formula, show_formula
from natded.context import (EMPTY, Remove, Singleton, Union, all_implies_members,
                            all_satisfy, member_of, subset_of)
from natded.equivalence import equiv_sym, rename, verify_equiv
from natded.kernel import (ArrowIntro, Assume, Close, LogicMode, UnivIntro, check_proof,
                           judgement_of)
from natded.schemes import (DNE, DNE_FROM_BOT_C, DNE_TO_DP, DP, EFQ, EFQ_FROM_BOT_I, LEM,
                            SAMPLES, WLOG_LEM, FixtureCiter, bot_c_from_dne, bot_i_from_efq,
                            check_reduction)
from natded.substitution import (SubstitutionError, apply_substitution, evidence_functional,
                                 free_for, fresh_free_for, not_free_sub, sub_inverse,
                                 sub_not_free, verify_evidence)
from natded.syntax import BOT, Atom, Forall, Or, Rel, Var, VarTerm, formula_eq, neg, no, yes
from natded.texify import balanced, render_deduction, render_reduction

from generators import rename_cases
from oracles import (A, P, Px, Py, X, Y, Z, all_evidence, all_vars, contexts, denotation,
                     evidence_results, formulas, free_vars, max_index, naive_sub,
                     random_context, term_vars)
from strategies import random_formula as random_concrete_formula

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = Path(__file__).parent / "golden"
MIN, INT, CLA = LogicMode.MINIMAL, LogicMode.INTUITIONISTIC, LogicMode.CLASSICAL


class Clock:
    def __init__(self, name):
        self.name = name

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start
        print(f"{self.name}: {self.seconds:.2f}s")


def same_context(g, members):
    return denotation(g) == set(members)


# 1. corpus reproduction

def test_criterion_1_corpus():
    assert len(SAMPLES) >= 5
    with Clock("criterion 1") as clock:
        # DNE ⊃ DP in minimal logic
        d = check_reduction(DNE_TO_DP, mode=MIN)
        assert d
        for a, j in zip(SAMPLES, d.witness):
            assert formula_eq(j.conclusion, DP.instantiate(a)) and same_context(j.context, ())
        # the classical rule gives DNE, and is rejected without it
        d = check_reduction(DNE_FROM_BOT_C, mode=CLA)
        assert d
        for a, j in zip(SAMPLES, d.witness):
            assert formula_eq(j.conclusion, DNE.instantiate(a)) and same_context(j.context, ())
        d = check_reduction(DNE_FROM_BOT_C, mode=MIN)
        assert not d and d.reason[1].kind == "mode"
        # DNE simulates the classical rule: {⊥} − ¬α ⊢ α
        for a in SAMPLES:
            library = {}
            cite = FixtureCiter([DNE], library)
            j = judgement_of(bot_c_from_dne(a, Assume(BOT), lambda b: cite(DNE, b)), MIN, library)
            assert formula_eq(j.conclusion, a)
            assert j.context == Remove(Singleton(BOT), neg(a))
            assert same_context(j.context, (BOT,))
        # the intuitionistic rule gives EFQ, and EFQ simulates it: {⊥} ⊢ α
        d = check_reduction(EFQ_FROM_BOT_I, mode=INT)
        assert d
        for a, j in zip(SAMPLES, d.witness):
            assert formula_eq(j.conclusion, EFQ.instantiate(a)) and same_context(j.context, ())
        assert not check_reduction(EFQ_FROM_BOT_I, mode=MIN)
        for a in SAMPLES:
            library = {}
            cite = FixtureCiter([EFQ], library)
            j = judgement_of(bot_i_from_efq(a, Assume(BOT), lambda b: cite(EFQ, b)), MIN, library)
            assert formula_eq(j.conclusion, a) and j.context == Singleton(BOT)
        # LEM without loss of generality
        d = check_reduction(WLOG_LEM, mode=MIN)
        assert d
        for a, j in zip(SAMPLES, d.witness):
            assert formula_eq(j.conclusion, LEM.instantiate(a)) and same_context(j.context, ())
    assert clock.seconds < 5


# 2. substitution metatheory

def test_criterion_2_substitution():
    fs = formulas(3)
    assert len(fs) > 10000
    variables = (X, Y)
    pairs = 0
    with Clock("criterion 2") as clock:
        for a in fs:
            for x, t in itertools.product(variables, (VarTerm(X), VarTerm(Y))):
                expected = naive_sub(a, x, t)
                # freeFor is complete: substitution exists iff freeFor says yes
                assert bool(free_for(t, x, a)) == (expected is not None)
                if expected is None:
                    try:
                        apply_substitution(a, x, t)
                        raise AssertionError("substitution should not exist")
                    except SubstitutionError:
                        pass
                    continue
                r, e = apply_substitution(a, x, t)
                assert r == expected
                # functionality: every evidence tree has the same result
                assert evidence_results(a, x, t) == {expected}
                for other in all_evidence(a, x, t, 2):
                    assert evidence_functional(e, other)
                    pairs += 1
                # not-free preservation
                if x not in term_vars(t):
                    nf = sub_not_free(NotInTerm(x, t), e)
                    assert verify_not_free(nf) and x not in free_vars(r)
                for z in variables:
                    if z not in free_vars(a) and z not in term_vars(t):
                        nf = not_free_sub(not_free_in(z, a).witness, NotInTerm(z, t), e)
                        assert verify_not_free(nf)
            # fresh round trip
            w, fw = fresh(a)
            for x in variables:
                beta, e = apply_substitution(a, x, VarTerm(w), fresh_free_for(fw, x))
                inv = sub_inverse(fresh_to_not_free(fw), e)
                assert verify_evidence(inv) and formula_eq(inv.result, a)
                assert naive_sub(beta, w, VarTerm(x)) == a
    print(f"evidence pairs compared: {pairs}")
    assert clock.seconds < 20


# 3. freshness bound

def test_criterion_3_freshness():
    x0, x1, x2, x3 = (Var(i) for i in range(4))
    p0, p2 = Atom(P, (VarTerm(x0),)), Atom(P, (VarTerm(x2),))
    assert fresh(Or(p0, p2))[0] == x3
    fs = formulas(3) + formulas(3, atoms=(Px, Py, Atom(P, (VarTerm(Z),)), A), binders=(X, Y, Z))
    for a in fs:
        m = max_var(a).bound.index
        assert m == max_index(a)
        occurring = all_vars(a)
        for k in range(1, 6):
            v = Var(m + k)
            assert fresh_in(v, a) and v not in occurring


# 4. contexts

def test_criterion_4_contexts():
    alphabet = (Px, Py, A)
    cs = contexts(5, alphabet)
    dens = [denotation(g) for g in cs]
    for g, dg in zip(cs, dens):
        for a in alphabet:
            assert bool(member_of(a, g)) == (a in dg)
        for h, dh in zip(cs, dens):
            assert bool(subset_of(g, h)) == (dg <= dh)
    rng = random.Random(4)
    complete = sound = 0
    while complete < 500 or sound < 500:
        g = random_context(rng, alphabet, 5)
        allowed = {a for a in alphabet if rng.random() < 0.6}
        pred = lambda a: yes(a) if a in allowed else no(a)
        d = all_satisfy(pred, g)
        if denotation(g) <= allowed:
            assert d
            complete += 1
        if d:
            assert all_implies_members(d.witness, pred)
            assert denotation(g) <= allowed
            sound += 1
    qy = Atom(Rel(6, 1), (VarTerm(Y),))
    example = Union(Singleton(Forall(Y, qy)), Singleton(BOT))
    d = all_satisfy(lambda a: not_free_in(Y, a), example)
    assert d and all_implies_members(d.witness, lambda a: not_free_in(Y, a))


# 5. rename soundness

def test_criterion_5_rename():
    with Clock("criterion 5") as clock:
        cases, stats = rename_cases(200)
        assert len(cases) == 200
        for rule in ("rename", "rename_dual"):
            assert stats.get((rule, "Forall")) and stats.get((rule, "Exists"))
            assert stats.get(("degenerate", rule))
        for p, w in cases:
            j = judgement_of(p)
            q = rename(w, p)
            d = check_proof(q)
            assert d and formula_eq(d.witness.conclusion, w.right)
            g = d.witness.context
            assert subset_of(g, j.context) and subset_of(j.context, g)
            s = equiv_sym(w)
            assert verify_equiv(s, w.right, w.left)
            d = check_proof(rename(s, q))
            assert d and formula_eq(d.witness.conclusion, w.left)
            g = d.witness.context
            assert subset_of(g, j.context) and subset_of(j.context, g)
    assert clock.seconds < 10


# 6. kernel rejections

def test_criterion_6_rejections():
    d = check_proof(UnivIntro(X, Assume(Px)))
    assert not d and d.reason.kind == "freedom" and d.reason.detail == Px
    d = check_proof(Close(EMPTY, ArrowIntro(A, Assume(Px))))
    assert not d and d.reason.kind == "subset" and d.reason.detail == Px
    assert not free_for(VarTerm(Y), X, Forall(Y, Px))
    try:
        apply_substitution(Forall(Y, Px), X, VarTerm(Y))
        raise AssertionError("capture was allowed")
    except SubstitutionError:
        pass


# 7. LaTeX goldens

def test_criterion_7_goldens():
    from test_texify import arrow, reorder
    outputs = {"arrow": render_deduction(arrow()),
               "reorder": render_deduction(reorder()),
               "dne_to_dp": render_reduction(DNE_TO_DP, (Px,))}
    for name, text in outputs.items():
        assert text.encode() == (GOLDEN / f"{name}.tex").read_bytes()
        assert balanced(text)


# 8. CLI round trip

def test_criterion_8_cli():
    rng = random.Random(2024)
    for _ in range(1000):
        a = random_concrete_formula(rng)
        assert parse_formula(show_formula(a)) == a
    corpus = ROOT / "corpus" / "classical.nd"
    r = subprocess.run([sys.executable, "-m", "natded", "check", str(corpus)],
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stdout + r.stderr
    r = subprocess.run([sys.executable, "-m", "natded", "check", str(corpus), "--json"],
                       capture_output=True, text=True)
    report = json.loads(r.stdout)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert report and all(x["verdict"] == "PASS" for x in report)
