"""Run/score orchestration and the on-disk artifacts shared by the CLI steps."""
from __future__ import annotations

import hashlib
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

from qmigrate.baseline import hits_to_findings, scan_snippet
from qmigrate.corpus import CodeSnippet, GroundTruth
from qmigrate.evaluation import ScoreReport, build_report, grade_findings, render_report
from qmigrate.llm_client import DEFAULT_TEMPERATURE, ChatMessage, ChatRequest, LLMError, Provider, _atomic_write
from qmigrate.modes import PromptMode
from qmigrate.prompting import build_prompt
from qmigrate.response_parser import MigrationFinding, NoTableFound, ParseError, parse_findings
from qmigrate.taxonomy import Taxonomy, serialize_taxonomy

log = logging.getLogger(__name__)

BASELINE_LABEL = "baseline"
LABEL_ORDER = (PromptMode.WITH_TAXONOMY.value, PromptMode.WITHOUT_TAXONOMY.value, BASELINE_LABEL)
FINDINGS_SUFFIX = ".findings.json"
RESPONSE_SUFFIX = ".resp.txt"
REPORT_FILES = {"table-text": "report.txt", "csv": "report.csv", "json": "report.json"}


def data_path(*parts: str) -> Path:
    return Path(str(resources.files("qmigrate").joinpath("data", *parts)))


def reference_taxonomy_path() -> Path:
    return data_path("taxonomy-0.46.md")


def reference_corpus_path() -> Path:
    return data_path("corpus")


def reference_cassette_path() -> Path:
    return data_path("cassettes")


def taxonomy_digest(t: Taxonomy) -> str:
    return hashlib.sha256(serialize_taxonomy(t).encode("utf-8")).hexdigest()


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=True) + "\n"


def findings_path(out_dir: Path, snippet_id: str, label: str) -> Path:
    return Path(out_dir) / f"{snippet_id}.{label}{FINDINGS_SUFFIX}"


def write_findings(
    out_dir: str | Path, snippet_id: str, label: str, mode: PromptMode, findings: Sequence[MigrationFinding]
) -> Path:
    path = findings_path(Path(out_dir), snippet_id, label)
    doc = {
        "snippet_id": snippet_id,
        "label": label,
        "mode": PromptMode(mode).value,
        "findings": [f.to_dict() for f in findings],
    }
    _atomic_write(path, _dump(doc))
    return path


def read_findings(path: str | Path) -> tuple[PromptMode, list[MigrationFinding]]:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return PromptMode(doc["mode"]), [MigrationFinding.from_dict(d) for d in doc["findings"]]


def discover_labels(findings_dir: str | Path) -> list[str]:
    found = {p.name[: -len(FINDINGS_SUFFIX)].rsplit(".", 1)[-1] for p in Path(findings_dir).glob(f"*{FINDINGS_SUFFIX}")}
    ordered = [label for label in LABEL_ORDER if label in found]
    return ordered + sorted(found - set(ordered))


@dataclass(frozen=True)
class SnippetRun:
    snippet_id: str
    status: str  # ok | no-table | failed
    findings: int = 0
    error: str = ""


@dataclass(frozen=True)
class RunSettings:
    mode: PromptMode
    target_version: str = "0.46"
    model_id: str = "gpt-4-0613"
    temperature: float = DEFAULT_TEMPERATURE
    template_dir: Path | None = None
    variant: str | None = None
    jobs: int = 4


def run_one(
    snippet: CodeSnippet, t: Taxonomy, provider: Provider, settings: RunSettings, out_dir: Path
) -> SnippetRun:
    mode = settings.mode
    try:
        bundle = build_prompt(
            snippet,
            t if mode is PromptMode.WITH_TAXONOMY else None,
            settings.target_version,
            mode,
            template_dir=settings.template_dir,
            variant=settings.variant,
        )
        req = ChatRequest(
            model_id=settings.model_id,
            temperature=settings.temperature,
            messages=(ChatMessage("system", bundle.system_text), ChatMessage("user", bundle.user_text)),
        )
        resp = provider.complete(req)
    except LLMError as exc:
        log.warning("%s: %s", snippet.id, exc)
        return SnippetRun(snippet.id, "failed", error=f"{type(exc).__name__}: {exc}")
    _atomic_write(out_dir / f"{snippet.id}.{mode.value}{RESPONSE_SUFFIX}", resp.content)
    status = "ok"
    try:
        findings = parse_findings(resp.content, mode)
    except NoTableFound:
        findings, status = [], "no-table"
    except ParseError as exc:
        return SnippetRun(snippet.id, "failed", error=f"{type(exc).__name__}: {exc}")
    write_findings(out_dir, snippet.id, mode.value, mode, findings)
    return SnippetRun(snippet.id, status, findings=len(findings))


def run_corpus(
    pairs: Sequence[tuple[CodeSnippet, GroundTruth]],
    t: Taxonomy,
    provider: Provider,
    settings: RunSettings,
    out_dir: str | Path,
) -> dict:
    """Prompt the model once per snippet and persist responses, findings and a manifest."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    snippets = [s for s, _ in pairs]
    with ThreadPoolExecutor(max_workers=max(1, settings.jobs)) as pool:
        runs = list(pool.map(lambda s: run_one(s, t, provider, settings, out_dir), snippets))
    runs.sort(key=lambda r: r.snippet_id)
    manifest = {
        "mode": settings.mode.value,
        "model_id": settings.model_id,
        "temperature": settings.temperature,
        "target_version": settings.target_version,
        "taxonomy_digest": taxonomy_digest(t),
        "template_variant": settings.variant or "default",
        "snippets": [
            {"id": r.snippet_id, "status": r.status, "findings": r.findings, "error": r.error} for r in runs
        ],
        "failed": sum(r.status == "failed" for r in runs),
    }
    _atomic_write(out_dir / f"manifest.{settings.mode.value}.json", _dump(manifest))
    return manifest


def run_baseline(pairs: Sequence[tuple[CodeSnippet, GroundTruth]], t: Taxonomy, out_dir: str | Path) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for snippet, _ in pairs:
        findings = hits_to_findings(scan_snippet(snippet, t), t, snippet)
        paths.append(write_findings(out_dir, snippet.id, BASELINE_LABEL, PromptMode.WITH_TAXONOMY, findings))
    return paths


class MissingFindings(FileNotFoundError):
    def __init__(self, snippet_id: str, label: str):
        super().__init__(f"no {label} findings file for snippet {snippet_id}")
        self.snippet_id = snippet_id
        self.label = label


STANDARD_NOTES = (
    "Precision = TP / (TP + FP); recall = TP / (TP + FN); decimals rounded half-up to 2 places.",
    "Findings that cite a line range count once per covered line.",
    "Scenario recall for tp=12, fn=3 is 0.80 by the formula; a previously published 0.85 for those counts does not follow from it.",
)


def score_label(
    pairs: Sequence[tuple[CodeSnippet, GroundTruth]],
    findings_dir: str | Path,
    label: str,
    overrides=None,
) -> ScoreReport:
    results = []
    mode = PromptMode.WITH_TAXONOMY
    for snippet, truth in pairs:
        path = findings_path(Path(findings_dir), snippet.id, label)
        if not path.is_file():
            raise MissingFindings(snippet.id, label)
        mode, findings = read_findings(path)
        results.append((truth, grade_findings(findings, truth, overrides)))
    report = build_report(results, mode, label=label)
    return report.with_notes(*STANDARD_NOTES)


def write_reports(reports: Sequence[ScoreReport], out_dir: str | Path) -> dict[str, str]:
    out_dir = Path(out_dir)
    rendered = {}
    for fmt, name in REPORT_FILES.items():
        text = render_report(list(reports), fmt)
        _atomic_write(out_dir / name, text)
        rendered[fmt] = text
    return rendered
