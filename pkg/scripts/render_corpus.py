"""Check a proof script and typeset every passing item into one LaTeX
document (bussproofs + amsthm), ready for pdflatex.

    python3 scripts/render_corpus.py corpus/classical.nd -o build/classical.tex
"""
import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from natded.cli import Runner, load, render
from natded.concrete import MODES

PREAMBLE = r"""\documentclass{article}
\usepackage{amsmath,amssymb,amsthm}
\usepackage{bussproofs}
\newtheorem{proposition}{Proposition}
\begin{document}
"""


@dataclass
class RenderConfig:
    script: Path
    output: Path
    mode: str = "minimal"
    timeout: float | None = None


def build(cfg: RenderConfig) -> tuple[str, list]:
    outcomes = Runner(load(cfg.script), MODES[cfg.mode], cfg.timeout).run()
    parts = [PREAMBLE]
    for o in outcomes:
        if o.ok:
            parts.append(f"\\section*{{{o.name.replace('_', chr(92) + '_')}}}\n")
            parts.append(render(o))
    parts.append("\\end{document}\n")
    return "".join(parts), [o for o in outcomes if not o.ok]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("script", type=Path)
    ap.add_argument("-o", "--output", type=Path, required=True)
    ap.add_argument("--mode", choices=list(MODES), default="minimal")
    ap.add_argument("--timeout", type=float)
    args = ap.parse_args(argv)
    cfg = RenderConfig(args.script, args.output, args.mode, args.timeout)
    text, failed = build(cfg)
    cfg.output.parent.mkdir(parents=True, exist_ok=True)
    cfg.output.write_text(text, encoding="utf-8", newline="\n")
    for o in failed:
        print(f"FAIL {o.name}: {o.diagnostic}", file=sys.stderr)
    print(cfg.output)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
