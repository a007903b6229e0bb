"""Exhaustive substitution sweep: for every formula up to a depth, compare
the checked substitution against a naive capture-checking one, re-verify
the evidence, and run the fresh-variable round trip. Prints counts and
timings; exits non-zero on the first disagreement.

    python3 scripts/sweep_substitution.py --depth 3
"""
import argparse
import itertools
import sys
import time
from dataclasses import dataclass

from natded.binding import NotInTerm, fresh, fresh_to_not_free, verify_not_free
from natded.substitution import (SubstitutionError, apply_substitution, free_for,
                                 fresh_free_for, sub_inverse, sub_not_free, verify_evidence)
from natded.syntax import BOT, And, Atom, Exists, Forall, Implies, Or, Rel, Var, VarTerm


@dataclass
class SweepConfig:
    depth: int = 3
    variables: int = 2  # binders and substitution targets are var 0 .. variables-1


def enumerate_formulas(cfg: SweepConfig):
    vs = [Var(i) for i in range(cfg.variables)]
    p = Rel(5, 1)
    atoms = [Atom(p, (VarTerm(v),)) for v in vs] + [Atom(Rel(1, 0)), BOT]
    level = list(atoms)
    for _ in range(cfg.depth - 1):
        prev = level
        level = list(atoms)
        level += [c(a, b) for c in (Implies, And, Or) for a in prev for b in prev]
        level += [q(v, a) for q in (Forall, Exists) for v in vs for a in prev]
    return level, vs


def free(a):
    match a:
        case Atom(_, args):
            return {u.var for u in args}
        case Implies(l, r) | And(l, r) | Or(l, r):
            return free(l) | free(r)
        case Forall(v, b) | Exists(v, b):
            return free(b) - {v}


def naive(a, x, t):
    """a[x/t] by the textbook definition; None on capture."""
    match a:
        case Atom(r, args):
            return Atom(r, tuple(t if u == VarTerm(x) else u for u in args))
        case Implies(l, r) | And(l, r) | Or(l, r):
            nl, nr = naive(l, x, t), naive(r, x, t)
            return None if nl is None or nr is None else type(a)(nl, nr)
        case Forall(v, b) | Exists(v, b):
            if v == x or x not in free(b):
                return a
            if VarTerm(v) == t:
                return None
            nb = naive(b, x, t)
            return None if nb is None else type(a)(v, nb)


def sweep(cfg: SweepConfig) -> dict:
    fs, vs = enumerate_formulas(cfg)
    counts = {"formulas": len(fs), "substitutions": 0, "captures": 0, "round_trips": 0}
    for a in fs:
        for x, y in itertools.product(vs, vs):
            t = VarTerm(y)
            want = naive(a, x, t)
            if bool(free_for(t, x, a)) != (want is not None):
                raise AssertionError(f"free_for disagrees on {a}[{x}/{t}]")
            if want is None:
                counts["captures"] += 1
                try:
                    apply_substitution(a, x, t)
                except SubstitutionError:
                    continue
                raise AssertionError(f"capture allowed on {a}[{x}/{t}]")
            r, e = apply_substitution(a, x, t)
            if r != want or not verify_evidence(e):
                raise AssertionError(f"bad substitution {a}[{x}/{t}]")
            if x != y and not verify_not_free(sub_not_free(NotInTerm(x, t), e)):
                raise AssertionError(f"not-free preservation fails on {a}[{x}/{t}]")
            counts["substitutions"] += 1
        w, fw = fresh(a)
        for x in vs:
            _, e = apply_substitution(a, x, VarTerm(w), fresh_free_for(fw, x))
            inv = sub_inverse(fresh_to_not_free(fw), e)
            if inv.result != a or not verify_evidence(inv):
                raise AssertionError(f"round trip fails on {a} with {x}")
            counts["round_trips"] += 1
    return counts


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=3)
    ap.add_argument("--variables", type=int, default=2)
    args = ap.parse_args(argv)
    cfg = SweepConfig(args.depth, args.variables)
    start = time.perf_counter()
    try:
        counts = sweep(cfg)
    except AssertionError as err:
        print(f"FAIL {err}", file=sys.stderr)
        return 1
    for k, v in counts.items():
        print(f"{k}: {v}")
    print(f"time: {time.perf_counter() - start:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
