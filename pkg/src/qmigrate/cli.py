"""Command-line entry point: ``qmigrate <command>``.

Exit codes: 0 success, 1 task-level failure, 2 unreadable or invalid input.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from qmigrate import corpus as corpus_mod
from qmigrate.evaluation import OverrideKeyUnknown, parse_overrides
from qmigrate.llm_client import (
    API_KEY_ENV,
    DEFAULT_TEMPERATURE,
    ENDPOINT_ENV,
    CredentialMissing,
    LiveProvider,
    ReplayProvider,
    ScriptedProvider,
)
from qmigrate.modes import PromptMode
from qmigrate.pipeline import (
    MissingFindings,
    RunSettings,
    discover_labels,
    reference_cassette_path,
    reference_corpus_path,
    reference_taxonomy_path,
    run_baseline,
    run_corpus,
    score_label,
    write_reports,
)
from qmigrate.taxonomy import TaxonomyError, parse_taxonomy, validate_taxonomy

log = logging.getLogger("qmigrate")

EXIT_OK, EXIT_TASK, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Unreadable or invalid input; maps to exit status 2."""


def _load_taxonomy(path):
    path = Path(path) if path else reference_taxonomy_path()
    try:
        return parse_taxonomy(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read taxonomy {path}: {exc}") from None
    except (TaxonomyError, ValueError) as exc:
        raise InputError(f"invalid taxonomy {path}: {exc}") from None


def _load_corpus(root, t):
    root = Path(root) if root else reference_corpus_path()
    if not root.is_dir():
        raise InputError(f"corpus directory {root} does not exist")
    try:
        return corpus_mod.load_corpus(root, t)
    except (OSError, corpus_mod.CorpusError) as exc:
        raise InputError(str(exc)) from None


def cmd_taxonomy_validate(args) -> int:
    path = Path(args.path)
    try:
        t = parse_taxonomy(path.read_text(encoding="utf-8"))
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TaxonomyError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}")
        return EXIT_TASK
    diags = validate_taxonomy(t)
    for d in diags:
        print(d.message if d.severity == "info" else str(d))
    return EXIT_TASK if any(d.is_error for d in diags) else EXIT_OK


def _provider(args):
    kind = args.provider
    if kind == "replay":
        return ReplayProvider(Path(args.cassettes) if args.cassettes else reference_cassette_path())
    if kind == "scripted":
        if not args.script:
            raise InputError("--provider scripted needs --script <responses.json>")
        try:
            responses = json.loads(Path(args.script).read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read script {args.script}: {exc}") from None
        return ScriptedProvider(responses)
    endpoint = args.endpoint or os.environ.get(ENDPOINT_ENV)
    if not endpoint:
        raise InputError(f"live provider needs --endpoint or {ENDPOINT_ENV}")
    try:
        return LiveProvider(
            endpoint=endpoint,
            record_dir=Path(args.cassettes) if args.record and args.cassettes else None,
            max_in_flight=args.jobs,
        )
    except CredentialMissing:
        raise InputError(f"live provider needs {API_KEY_ENV}") from None


def cmd_run(args) -> int:
    t = _load_taxonomy(args.taxonomy)
    pairs = _load_corpus(args.corpus, t)
    mode = PromptMode(args.mode)
    if mode is PromptMode.WITH_TAXONOMY and t.target_version != args.target_version:
        raise InputError(f"taxonomy targets {t.target_version}, run targets {args.target_version}")
    provider = _provider(args)
    settings = RunSettings(
        mode=mode,
        target_version=args.target_version,
        model_id=args.model,
        temperature=args.temperature,
        template_dir=Path(args.templates) if args.templates else None,
        variant=args.variant,
        jobs=args.jobs,
    )
    manifest = run_corpus(pairs, t, provider, settings, args.out)
    ok = len(manifest["snippets"]) - manifest["failed"]
    print(f"{mode.value}: {ok} ok, {manifest['failed']} failed, {provider.calls} completions")
    for entry in manifest["snippets"]:
        if entry["status"] == "failed":
            print(f"  {entry['id']}: {entry['error']}", file=sys.stderr)
    return EXIT_TASK if manifest["failed"] else EXIT_OK


def cmd_score(args) -> int:
    t = _load_taxonomy(args.taxonomy)
    pairs = _load_corpus(args.corpus, t)
    findings_dir = Path(args.findings)
    overrides = None
    if args.overrides:
        try:
            overrides = parse_overrides(Path(args.overrides).read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read overrides {args.overrides}: {exc}") from None
    labels = args.label or discover_labels(findings_dir)
    if not labels and pairs:
        print(f"error: no findings files in {findings_dir}", file=sys.stderr)
        return EXIT_TASK
    reports = []
    for label in labels:
        try:
            reports.append(score_label(pairs, findings_dir, label, overrides))
        except MissingFindings as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_TASK
        except OverrideKeyUnknown as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return EXIT_TASK
    out = Path(args.out) if args.out else findings_dir
    rendered = write_reports(reports, out)
    sys.stdout.write(rendered["table-text"])
    return EXIT_OK


def cmd_baseline(args) -> int:
    t = _load_taxonomy(args.taxonomy)
    pairs = _load_corpus(args.corpus, t)
    paths = run_baseline(pairs, t, args.out)
    print(f"baseline: wrote {len(paths)} findings files to {args.out}")
    return EXIT_OK


def cmd_annotate(args) -> int:
    try:
        source = Path(args.source).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read {args.source}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(corpus_mod.number_lines(source))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qmigrate", description="Taxonomy-guided LLM migration assistant")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    tax = sub.add_parser("taxonomy", help="taxonomy utilities")
    tax_sub = tax.add_subparsers(dest="taxonomy_command", required=True)
    val = tax_sub.add_parser("validate", help="parse and validate a taxonomy file")
    val.add_argument("path")
    val.set_defaults(func=cmd_taxonomy_validate)

    def common(p):
        p.add_argument("--taxonomy", help="taxonomy file (default: shipped 0.46 taxonomy)")
        p.add_argument("--corpus", help="snippet directory (default: shipped corpus)")

    run = sub.add_parser("run", help="prompt the model for every snippet")
    common(run)
    run.add_argument("--mode", choices=[m.value for m in PromptMode], default=PromptMode.WITH_TAXONOMY.value)
    run.add_argument("--target-version", default="0.46")
    run.add_argument("--model", default="gpt-4-0613")
    run.add_argument("--temperature", type=float, default=DEFAULT_TEMPERATURE)
    run.add_argument("--provider", choices=["live", "replay", "scripted"], default="replay")
    run.add_argument("--endpoint")
    run.add_argument("--cassettes", help="cassette directory (default: shipped cassettes)")
    run.add_argument("--record", action="store_true", help="write cassettes during live runs")
    run.add_argument("--script", help="JSON list of canned responses for --provider scripted")
    run.add_argument("--templates", help="prompt template directory")
    run.add_argument("--variant", help="template variant, e.g. 'strict'")
    run.add_argument("--out", required=True)
    run.add_argument("--jobs", type=int, default=4)
    run.set_defaults(func=cmd_run)

    score = sub.add_parser("score", help="grade findings and write reports")
    common(score)
    score.add_argument("--findings", required=True)
    score.add_argument("--overrides")
    score.add_argument("--label", action="append", help="findings label to score (repeatable)")
    score.add_argument("--out")
    score.set_defaults(func=cmd_score)

    base = sub.add_parser("baseline", help="keyword-scanner findings for every snippet")
    common(base)
    base.add_argument("--out", required=True)
    base.set_defaults(func=cmd_baseline)

    ann = sub.add_parser("annotate", help="print a source file with line numbers")
    ann.add_argument("source")
    ann.set_defaults(func=cmd_annotate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        format="%(levelname)s %(name)s: %(message)s",
        level=logging.DEBUG if args.verbose else logging.WARNING,
    )
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
