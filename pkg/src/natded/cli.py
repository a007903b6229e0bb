"""Command line driver: check proof scripts and write LaTeX.

    natded check FILE [--mode minimal|int|classical] [--json] [--timeout SEC]
    natded tex FILE -o DIR

Exit status: 0 if everything checks, 1 if anything fails, 2 on a parse
error, 3 on an I/O error.
"""
from __future__ import annotations

import argparse
import json
import signal
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .concrete import (MODES, ParseError, ProofDecl, ReductionDecl, Script,
                       fill, parse_script, show_context, show_formula)
from .context import EMPTY, members, subset_of
from .kernel import Diagnostic, Judgement, LibraryEntry, LogicMode, check_proof
from .schemes import SAMPLES, FixtureCiter, Scheme
from .syntax import formula_eq
from .texify import escape, render_deduction, render_proposition

REPORT_FIELDS = ("name", "verdict", "conclusion", "context-members", "diagnostic")

REPORT_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": list(REPORT_FIELDS),
        "additionalProperties": False,
        "properties": {
            "name": {"type": "string"},
            "verdict": {"enum": ["PASS", "FAIL"]},
            "conclusion": {"type": "string"},
            "context-members": {"type": "array", "items": {"type": "string"}},
            "diagnostic": {"type": ["string", "null"]},
        },
    },
}


@dataclass
class Outcome:
    name: str
    ok: bool
    conclusion: str
    context: list = field(default_factory=list)
    diagnostic: str | None = None
    # what the typesetter needs: (kind, payload)
    render: tuple | None = None

    def as_json(self) -> dict:
        return {"name": self.name, "verdict": "PASS" if self.ok else "FAIL",
                "conclusion": self.conclusion, "context-members": self.context,
                "diagnostic": self.diagnostic}


class Timeout(Exception):
    pass


def _alarm(seconds):
    if not seconds or not hasattr(signal, "setitimer"):
        return None

    def handler(signum, frame):
        raise Timeout()

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    return old


def _disarm(old):
    if old is not None:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _schemes(script: Script) -> dict:
    out = {}
    for name, decl in script.schemes.items():
        def inst(*args, decl=decl):
            return fill(decl.template, dict(zip(decl.params, args)))
        out[name] = Scheme(name, len(decl.params), inst, _tex_name(name))
    return out


def _tex_name(name):
    from .schemes import BUILTIN
    for s in BUILTIN:
        if s.name == name:
            return s.tex_name
    return escape(name)


class Runner:
    def __init__(self, script: Script, mode: LogicMode = LogicMode.MINIMAL, timeout=None):
        self.script = script
        self.mode = mode
        self.timeout = timeout
        self.schemes = _schemes(script)
        self.library = {}

    def run(self) -> list[Outcome]:
        out = []
        for item in self.script.items:
            if not isinstance(item, (ProofDecl, ReductionDecl)):
                continue
            old = _alarm(self.timeout)
            try:
                if isinstance(item, ProofDecl):
                    o = self.proof(item)
                else:
                    o = self.reduction(item)
            except Timeout:
                o = Outcome(item.name, False, "", diagnostic=f"limit: exceeded {self.timeout}s")
            except RecursionError:
                o = Outcome(item.name, False, "", diagnostic="limit: proof too deep")
            finally:
                _disarm(old)
            out.append(o)
        return out

    def _citer(self, names, library):
        citer = FixtureCiter([self.schemes[n] for n in names], library)
        return lambda name, args: citer(name, *args)

    def proof(self, d: ProofDecl) -> Outcome:
        mode = d.mode or self.mode
        library = dict(self.library)
        try:
            p = fill(d.body, {}, self._citer(d.using, library))
        except ValueError as err:
            return Outcome(d.name, False, show_formula(d.conclusion, self.script.signature),
                           diagnostic=f"cite: {err}")
        res = check_proof(p, mode, library)
        sig = self.script.signature
        claimed = show_formula(d.conclusion, sig)
        if not res:
            return Outcome(d.name, False, claimed, diagnostic=str(res.reason))
        j = res.witness
        got = [show_formula(a, sig) for a in members(j.context)]
        if not formula_eq(j.conclusion, d.conclusion):
            diag = Diagnostic("mismatch", f"proves {show_formula(j.conclusion, sig)}, "
                              f"not the declared {claimed}")
            return Outcome(d.name, False, claimed, got, str(diag))
        extra = subset_of(j.context, d.context)
        missing = subset_of(d.context, j.context)
        if not extra or not missing:
            which = extra.reason if not extra else missing.reason
            diag = Diagnostic("subset", "context differs from the declared "
                              f"{show_context(d.context, sig)} at {show_formula(which, sig)}")
            return Outcome(d.name, False, claimed, got, str(diag))
        if subset_of(j.context, EMPTY):
            self.library[d.name] = LibraryEntry(Judgement(EMPTY, j.conclusion))
        return Outcome(d.name, True, claimed, got, render=("proof", p, library))

    def reduction(self, d: ReductionDecl) -> Outcome:
        mode = d.mode or self.mode
        target = self.script.schemes[d.target]
        hyps = ", ".join(d.hypotheses)
        summary = f"{hyps} supset {d.target}({', '.join(d.params)})".strip()
        first = None
        for sample in SAMPLES:
            env = {name: sample for name in d.params}
            want = fill(target.template, dict(zip(target.params, [sample] * len(d.params))))
            library = {}
            try:
                p = fill(d.body, env, self._citer(d.hypotheses, library))
            except ValueError as err:
                return Outcome(d.name, False, summary, diagnostic=f"cite: {err}")
            res = check_proof(p, mode, library)
            where = f"instance {show_formula(sample)}"
            if not res:
                return Outcome(d.name, False, summary, diagnostic=f"{where}: {res.reason}")
            j = res.witness
            if not formula_eq(j.conclusion, want):
                return Outcome(d.name, False, summary, diagnostic=(
                    f"{where}: mismatch: proves {show_formula(j.conclusion)}, "
                    f"not {show_formula(want)}"))
            if not subset_of(j.context, EMPTY):
                return Outcome(d.name, False, summary, diagnostic=(
                    f"{where}: subset: open assumption "
                    f"{show_formula(subset_of(j.context, EMPTY).reason)}"))
            if first is None:
                first = (p, library)
        tex_hyps = [self.schemes[h].tex_name for h in d.hypotheses]
        return Outcome(d.name, True, summary, [],
                       render=("reduction", first[0], first[1], tex_hyps,
                               self.schemes[d.target].tex_name))


def render(o: Outcome) -> str:
    kind = o.render[0]
    if kind == "proof":
        _, p, library = o.render
        return render_deduction(p, library)
    _, p, library, hyps, target = o.render
    return render_proposition(hyps, target, render_deduction(p, library))


def load(path: str) -> Script:
    text = Path(path).read_bytes().decode("utf-8")
    return parse_script(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="natded", description="Check natural deduction proof scripts.")
    sub = ap.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", help="check every proof and reduction in a script")
    c.add_argument("file")
    c.add_argument("--mode", choices=list(MODES), default="minimal",
                   help="logic for declarations without their own mode (default: minimal)")
    c.add_argument("--json", action="store_true", help="print a JSON report")
    c.add_argument("--timeout", type=float, default=None, help="seconds allowed per declaration")
    t = sub.add_parser("tex", help="write one .tex file per proof and reduction")
    t.add_argument("file")
    t.add_argument("-o", "--output", required=True, help="output directory")
    t.add_argument("--mode", choices=list(MODES), default="minimal")
    t.add_argument("--timeout", type=float, default=None)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        script = load(args.file)
    except ParseError as err:
        print(f"{args.file}:{err}", file=sys.stderr)
        return 2
    except (OSError, UnicodeDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    outcomes = Runner(script, MODES[args.mode], args.timeout).run()
    failed = any(not o.ok for o in outcomes)

    if args.command == "check":
        if args.json:
            print(json.dumps([o.as_json() for o in outcomes], indent=2, ensure_ascii=False))
        else:
            for o in outcomes:
                if o.ok and o.render[0] == "reduction":
                    print(f"PASS {o.name}: {o.conclusion} ({len(SAMPLES)} instances)")
                elif o.ok:
                    ctx = ", ".join(o.context)
                    print(f"PASS {o.name}: {ctx} |- {o.conclusion}".replace(":  |-", ": |-"))
                else:
                    print(f"FAIL {o.name}: {o.diagnostic}")
        return 1 if failed else 0

    out = Path(args.output)
    try:
        out.mkdir(parents=True, exist_ok=True)
        for o in outcomes:
            if not o.ok:
                print(f"FAIL {o.name}: {o.diagnostic}", file=sys.stderr)
                continue
            path = out / f"{o.name}.tex"
            path.write_text(render(o), encoding="utf-8", newline="\n")
            print(path)
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
