import json
import random
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from natded.cli import REPORT_FIELDS, REPORT_SCHEMA, Runner, main
from natded.concrete import ProofDecl, Script, parse_script

ROOT = Path(__file__).resolve().parents[1]
CORPUS = ROOT / "corpus" / "classical.nd"
GOLDEN = Path(__file__).parent / "golden"

BAD = """\
proof ok : |- A => A := close {} (arrowintro A (assume A))
proof bad : {P x} |- forall x P x := univintro x (assume P x)
"""


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_corpus_passes(capsys):
    code, out, _ = run(["check", CORPUS], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)
    assert any("dne_to_dp" in line for line in lines)


def test_freedom_violation_is_reported(tmp_path, capsys):
    f = tmp_path / "bad.nd"
    f.write_text(BAD)
    code, out, _ = run(["check", f], capsys)
    assert code == 1
    assert "PASS ok" in out
    (line,) = [x for x in out.splitlines() if x.startswith("FAIL")]
    assert "bad" in line and "freedom" in line and "P x" in line


def test_json_report_validates(tmp_path, capsys):
    f = tmp_path / "bad.nd"
    f.write_text(BAD)
    code, out, _ = run(["check", f, "--json"], capsys)
    report = json.loads(out)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert [set(r) for r in report] == [set(REPORT_FIELDS)] * 2
    assert [r["verdict"] for r in report] == ["PASS", "FAIL"]
    code, out, _ = run(["check", CORPUS, "--json"], capsys)
    jsonschema.validate(json.loads(out), REPORT_SCHEMA)


def test_tex_matches_goldens(tmp_path, capsys):
    code, out, _ = run(["tex", CORPUS, "-o", tmp_path], capsys)
    assert code == 0
    for name in ("arrow", "reorder", "dne_to_dp"):
        assert (tmp_path / f"{name}.tex").read_bytes() == (GOLDEN / f"{name}.tex").read_bytes()


def test_exit_codes(tmp_path, capsys):
    f = tmp_path / "broken.nd"
    f.write_text("proof a : |- A := (assume A")
    code, _, err = run(["check", f], capsys)
    assert code == 2 and "1:" in err
    code, _, _ = run(["check", tmp_path / "missing.nd"], capsys)
    assert code == 3
    with pytest.raises(SystemExit):
        main(["check", str(f), "--mode", "modal"])


def test_mode_flag(tmp_path, capsys):
    f = tmp_path / "c.nd"
    f.write_text("proof dne : |- ~~A => A := close {} (arrowintro ~~A (botc A "
                 "(arrowelim (assume ~~A) (assume ~A))))\n")
    assert run(["check", f], capsys)[0] == 1
    assert run(["check", f, "--mode", "classical"], capsys)[0] == 0


def test_declared_mode_wins(tmp_path, capsys):
    f = tmp_path / "c.nd"
    f.write_text("proof efq [int] : |- bot => A := close {} (arrowintro bot (boti A (assume bot)))\n")
    assert run(["check", f, "--mode", "classical"], capsys)[0] == 0


def test_mismatched_claim(tmp_path, capsys):
    f = tmp_path / "c.nd"
    f.write_text("proof a : |- A => B := close {} (arrowintro A (assume A))\n"
                 "proof b : |- A => A := arrowintro A (assume A)\n"
                 "proof c : {A} |- A => A := close {} (arrowintro A (assume A))\n")
    code, out, _ = run(["check", f], capsys)
    assert code == 1
    fails = [x for x in out.splitlines() if x.startswith("FAIL")]
    assert len(fails) == 2 and "mismatch" in fails[0] and "context" in fails[1]


def test_order_independence():
    script = parse_script(CORPUS.read_text())
    proofs = [i for i in script.items if isinstance(i, ProofDecl)]
    base = {o.name: o.ok for o in Runner(script).run()}
    rng = random.Random(0)
    for _ in range(3):
        items = list(script.items)
        rng.shuffle(items)
        shuffled = Script(script.signature, script.schemes, items)
        got = {o.name: o.ok for o in Runner(shuffled).run()}
        assert got == base
    assert proofs


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "natded", "check", str(CORPUS)],
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
