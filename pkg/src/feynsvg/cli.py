"""Command line driver with a content-hash output cache.

Each diagram's output is regenerated only when the digest of its source
slice, the config in force at its start, the pixel scale and the tool
version changes.  The index lives next to the outputs as plain text, one
``hash path`` pair per line.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .dsl.parser import parse
from .errors import Diagnostic, FeynError
from .pipeline import compile_diagram, split_diagrams
from .units import DEFAULT_PPC

INDEX_NAME = "fhcache.txt"
DEFAULT_OUT = Path("graphics/fh")


@dataclass
class JobSpec:
    inputs: list[Path]
    out_dir: Path = DEFAULT_OUT
    ppc: float = DEFAULT_PPC
    force_remake: bool = False
    name_override: Optional[str] = None
    check: bool = False


@dataclass
class RunReport:
    """What a run did; handy for tests and for the summary line."""

    written: list[Path] = field(default_factory=list)
    skipped: list[Path] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)
    exit_code: int = 0


def load_index(path: Path) -> dict[str, str]:
    """Map output path to content hash."""
    index: dict[str, str] = {}
    if not path.exists():
        return index
    for line in path.read_text(encoding="utf-8").splitlines():
        parts = line.split(" ", 1)
        if len(parts) == 2:
            index[parts[1]] = parts[0]
    return index


def save_index(path: Path, index: dict[str, str]) -> None:
    lines = [f"{h} {p}" for p, h in sorted(index.items())]
    tmp = path.with_suffix(".tmp")
    tmp.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    tmp.replace(path)


def output_names(stem: str, names: Sequence[Optional[str]]) -> list[str]:
    """``<stem>.svg`` for a lone diagram, ``<stem>-<i>.svg`` otherwise;
    an explicit file name command wins."""
    out = []
    for i, name in enumerate(names):
        if name:
            out.append(f"{name}.svg")
        elif len(names) == 1:
            out.append(f"{stem}.svg")
        else:
            out.append(f"{stem}-{i + 1}.svg")
    return out


def _diag(filename: str, exc: FeynError) -> str:
    return Diagnostic("error", exc.code, exc.message, exc.line, exc.col).format(filename)


def compile_file(src: Path, spec: JobSpec, index: dict[str, str], report: RunReport) -> None:
    try:
        source = src.read_text(encoding="utf-8")
    except OSError as exc:
        report.diagnostics.append(f"{src}:0:0: error: cannot read input: {exc.strerror or exc}")
        report.exit_code = max(report.exit_code, 2)
        return
    try:
        diagrams = split_diagrams(parse(source))
    except FeynError as exc:
        report.diagnostics.append(_diag(str(src), exc))
        report.exit_code = max(report.exit_code, 1)
        return
    stem = spec.name_override or src.stem
    for diagram, fname in zip(diagrams, output_names(stem, [d.name for d in diagrams])):
        target = spec.out_dir / fname
        key = diagram.cache_key(source, spec.ppc)
        if not spec.check and not spec.force_remake and index.get(str(target)) == key and target.exists():
            report.skipped.append(target)
            continue
        try:
            result = compile_diagram(diagram, spec.ppc, emit=not spec.check)
        except FeynError as exc:
            report.diagnostics.append(_diag(str(src), exc))
            report.exit_code = max(report.exit_code, 1)
            continue
        report.diagnostics.extend(w.format(str(src)) for w in result.warnings)
        if spec.check:
            continue
        try:
            target.write_text(result.svg, encoding="utf-8")
        except OSError as exc:
            report.diagnostics.append(f"{target}:0:0: error: cannot write output: {exc.strerror or exc}")
            report.exit_code = max(report.exit_code, 2)
            continue
        index[str(target)] = key
        report.written.append(target)


def run(spec: JobSpec) -> RunReport:
    report = RunReport()
    if not spec.inputs:
        report.diagnostics.append("feynsvg: error: no input files")
        report.exit_code = 2
        return report
    if not spec.ppc > 0:
        report.diagnostics.append("feynsvg: error: --ppc must be positive")
        report.exit_code = 2
        return report
    index: dict[str, str] = {}
    index_path = spec.out_dir / INDEX_NAME
    if not spec.check:
        try:
            spec.out_dir.mkdir(parents=True, exist_ok=True)
            index = load_index(index_path)
        except OSError as exc:
            report.diagnostics.append(f"{spec.out_dir}:0:0: error: cannot prepare output directory: {exc.strerror or exc}")
            report.exit_code = 2
            return report
    for src in spec.inputs:
        compile_file(src, spec, index, report)
    if report.written:
        try:
            save_index(index_path, index)
        except OSError as exc:
            report.diagnostics.append(f"{index_path}:0:0: error: cannot write cache index: {exc.strerror or exc}")
            report.exit_code = max(report.exit_code, 2)
    return report


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="feynsvg", description="Compile Feynman diagram sources to SVG.")
    ap.add_argument("inputs", nargs="+", type=Path, help=".fh source files")
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT, help="output directory (default: %(default)s)")
    ap.add_argument("--ppc", type=float, default=DEFAULT_PPC, help="pixels per cm (default: %(default)s)")
    ap.add_argument("--force-remake", action="store_true", help="ignore the cache and rewrite every output")
    ap.add_argument("--name", help="output stem instead of the input file name")
    ap.add_argument("--check", action="store_true", help="parse and build scenes only, write nothing")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = JobSpec(
        inputs=list(args.inputs),
        out_dir=args.out,
        ppc=args.ppc,
        force_remake=args.force_remake,
        name_override=args.name,
        check=args.check,
    )
    report = run(spec)
    for line in report.diagnostics:
        print(line, file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
