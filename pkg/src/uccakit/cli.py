"""Command-line front end.

Subcommands: evaluate, validate, normalize, stats, convert.  Inputs are
passage XML files or directories of them.  Exit codes: 0 success, 1 usage
error, 2 parse error (offending file named on stderr), 3 token mismatch
between system and gold, 4 validation violations under --strict.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import evaluation, formats, stats, validation
from .errors import TokenMismatch, UccaError
from .graph import Passage

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_TOKEN_MISMATCH = 3
EXIT_VIOLATIONS = 4

#: Environment variable selecting the default output format ("json" or "table").
FORMAT_ENV_VAR = "UCCAKIT_FORMAT"


class _ParseFailure(Exception):
    def __init__(self, path: Path, cause: Exception):
        self.path = path
        self.cause = cause


def _xml_files(path: Path) -> list[Path]:
    if path.is_dir():
        return sorted(path.glob("*.xml"))
    if path.is_file():
        return [path]
    raise _ParseFailure(path, FileNotFoundError(path))


def _load(path: Path) -> Passage:
    try:
        return formats.parse_xml(path.read_bytes())
    except (UccaError, OSError) as exc:
        raise _ParseFailure(path, exc) from exc


def _json_output(args) -> bool:
    if getattr(args, "json", False):
        return True
    return os.environ.get(FORMAT_ENV_VAR, "").lower() == "json"


def _cmd_evaluate(args) -> int:
    gold = {p.stem: p for p in _xml_files(Path(args.gold))}
    system = {p.stem: p for p in _xml_files(Path(args.system))}
    if set(gold) != set(system):
        only_gold = sorted(set(gold) - set(system))
        only_system = sorted(set(system) - set(gold))
        print(
            f"unpaired files (gold only: {only_gold}, system only: {only_system})",
            file=sys.stderr,
        )
        return EXIT_USAGE
    pairs = []
    for stem in sorted(gold):
        out, ref = _load(system[stem]), _load(gold[stem])
        if not args.no_normalize:
            out, ref = validation.normalize(out), validation.normalize(ref)
        pairs.append((out, ref))
    scores = evaluation.score_corpus(pairs, include_punct=not args.exclude_punct)
    if _json_output(args):
        payload = scores.to_dict()
        if not args.fine_grained:
            payload.pop("by_category")
        if args.unlabeled:
            payload.pop("labeled", None)
            payload.pop("by_category", None)
        print(json.dumps(payload, indent=2))
    else:
        print(
            evaluation.render_scores(
                scores, fine_grained=args.fine_grained, unlabeled_only=args.unlabeled
            )
        )
    return EXIT_OK


def _cmd_validate(args) -> int:
    violations = 0
    for path in _xml_files(Path(args.input)):
        report = validation.validate(_load(path))
        violations += len(report.violations)
        if _json_output(args):
            if report.violations:
                print(report.to_json_lines())
        else:
            for v in report.violations:
                print(f"{report.passage_id}\t{v.rule}\t{v.ref}\t{v.message}")
    if violations and args.strict:
        return EXIT_VIOLATIONS
    return EXIT_OK


def _cmd_normalize(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for path in _xml_files(Path(args.input)):
        passage = validation.normalize(_load(path))
        (out_dir / path.name).write_bytes(formats.serialize_xml(passage))
    return EXIT_OK


def _cmd_stats(args) -> int:
    report = stats.corpus_stats(_load(p) for p in _xml_files(Path(args.input)))
    if _json_output(args):
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(stats.render_table(report))
    return EXIT_OK


def _cmd_convert(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for path in _xml_files(Path(args.input)):
        passage = _load(path)
        if args.to == "text":
            (out_dir / f"{path.stem}.txt").write_text(
                formats.export_text(passage) + "\n", encoding="utf-8"
            )
        else:
            rows = formats.export_bilexical(validation.normalize(passage))
            (out_dir / f"{path.stem}.tsv").write_text(
                formats.render_bilexical(rows), encoding="utf-8"
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uccakit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="score system output against gold annotation")
    p.add_argument("--gold", required=True, help="gold XML file or directory")
    p.add_argument("--system", required=True, help="system XML file or directory")
    p.add_argument("--fine-grained", action="store_true", help="add per-category scores")
    p.add_argument("--unlabeled", action="store_true", help="report unlabeled scores only")
    p.add_argument("--exclude-punct", action="store_true", help="drop U edges before matching")
    p.add_argument("--no-normalize", action="store_true", help="skip T/Q relabeling")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("validate", help="check passages against well-formedness rules")
    p.add_argument("input", help="XML file or directory")
    p.add_argument("--strict", action="store_true", help="exit 4 on any violation")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("normalize", help="rewrite legacy T/Q labels and re-serialize")
    p.add_argument("input", help="XML file or directory")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("stats", help="corpus structural statistics")
    p.add_argument("input", help="XML file or directory")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("convert", help="export passages to other formats")
    p.add_argument("input", help="XML file or directory")
    p.add_argument("--to", required=True, choices=["text", "bilexical"])
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_convert)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except _ParseFailure as exc:
        print(f"{exc.path}: {exc.cause}", file=sys.stderr)
        return EXIT_PARSE
    except TokenMismatch as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_TOKEN_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
