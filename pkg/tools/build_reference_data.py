"""Regenerate the shipped taxonomy, corpus, replay cassettes and score fixtures.

Run from the repository root::

    python3 tools/build_reference_data.py

The replay responses are fabricated from per-snippet plans so that scoring
the shipped corpus reproduces the reference confusion counts. The script
re-scores everything through the package and fails loudly on any drift.
"""
from __future__ import annotations

import re
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tools"))

from reference_corpus import SNIPPETS  # noqa: E402
from reference_taxonomy import SCENARIOS  # noqa: E402

from qmigrate.corpus import CodeSnippet, ExpectedChange, GroundTruth, format_truth, load_corpus  # noqa: E402
from qmigrate.evaluation import RubricGrade, auto_grade, code_tokens  # noqa: E402
from qmigrate.llm_client import ChatMessage, ChatRequest, ChatResponse, ReplayProvider, write_cassette  # noqa: E402
from qmigrate.modes import PromptMode  # noqa: E402
from qmigrate.pipeline import RunSettings, run_corpus, score_label  # noqa: E402
from qmigrate.prompting import build_prompt  # noqa: E402
from qmigrate.response_parser import NO_MATCH_REF, MigrationFinding  # noqa: E402
from qmigrate.tables import escape_cell, format_row, separator_row  # noqa: E402
from qmigrate.taxonomy import (  # noqa: E402
    MigrationFlow,
    MigrationScenario,
    ScenarioCategory,
    Taxonomy,
    scenario_id_for,
    serialize_taxonomy,
)

TARGET = "0.46"
MODEL = "gpt-4-0613"
DATA = ROOT / "src" / "qmigrate" / "data"
FIXTURES = ROOT / "tests" / "fixtures" / "reference_counts"

WT, NT = PromptMode.WITH_TAXONOMY, PromptMode.WITHOUT_TAXONOMY

# (correct, wrong, extra) per snippet. Expected lines are consumed in order:
# the first `correct` get a right rewrite, the next `wrong` a misaligned one,
# the rest are skipped. `extra` rows flag lines that need no change.
PLANS = {
    WT: {
        "s01": (4, 0, 1), "s02": (4, 0, 1), "s03": (0, 2, 0), "s04": (3, 0, 1), "s05": (0, 0, 2),
        "s06": (5, 1, 1), "s07": (5, 0, 1), "s08": (6, 1, 1), "s09": (0, 1, 1), "s10": (3, 1, 1),
        "s11": (0, 0, 2), "s12": (0, 2, 1), "s13": (0, 0, 1), "s14": (4, 1, 1), "s15": (0, 2, 0),
        "s16": (4, 0, 1), "s17": (0, 0, 2), "s18": (3, 1, 1), "s19": (0, 3, 0), "s20": (0, 2, 1),
        "s21": (3, 0, 1), "s22": (0, 0, 1), "s23": (0, 0, 0), "s24": (6, 0, 1), "s25": (0, 0, 0),
    },
    NT: {
        "s01": (3, 1, 1), "s02": (2, 1, 1), "s03": (0, 2, 1), "s04": (3, 0, 1), "s05": (0, 0, 3),
        "s06": (3, 2, 1), "s07": (5, 0, 1), "s08": (3, 3, 1), "s09": (0, 2, 1), "s10": (2, 1, 1),
        "s11": (0, 0, 2), "s12": (0, 2, 1), "s13": (0, 0, 1), "s14": (0, 3, 1), "s15": (0, 2, 1),
        "s16": (2, 2, 1), "s17": (0, 0, 3), "s18": (0, 3, 1), "s19": (0, 2, 1), "s20": (0, 3, 1),
        "s21": (3, 1, 1), "s22": (0, 0, 1), "s23": (0, 0, 0), "s24": (3, 2, 1), "s25": (0, 0, 1),
    },
}

EXPECTED_COUNTS = {
    WT: {"scenario": (12, 9, 3, 1), "lines": (50, 40, 31)},
    NT: {"scenario": (10, 11, 3, 1), "lines": (29, 61, 52)},
}

PREAMBLES = [
    "Here is the analysis of the code against Qiskit {v}.",
    "Below are the lines that need attention when moving this program to Qiskit {v}.",
    "I reviewed the snippet line by line. Findings:",
    "Sure. The following table lists the required migrations.",
]
CLOSINGS = [
    "Apply these changes and re-run your tests.",
    "Lines not listed can stay as they are.",
    "",
    "Note: some suggestions depend on optional packages being installed.",
]


def build_taxonomy() -> tuple[Taxonomy, dict[str, MigrationScenario]]:
    scenarios, by_key = [], {}
    for i, (key, cat, flow, summary, arts, src, tgt, diff, impact, refs) in enumerate(SCENARIOS, start=1):
        s = MigrationScenario(
            id=scenario_id_for(TARGET, i),
            category=ScenarioCategory.parse(cat),
            flow=MigrationFlow.parse(flow),
            summary=summary,
            artifacts=tuple(arts),
            example_source=src,
            example_target=tgt,
            difficulty=diff,
            impact=impact,
            references=tuple(refs),
        )
        scenarios.append(s)
        by_key[key] = s
    return Taxonomy(TARGET, tuple(scenarios)), by_key


def build_corpus(by_key) -> dict[str, tuple[CodeSnippet, GroundTruth]]:
    out = {}
    for sid, rows in SNIPPETS.items():
        lines, changes = [], []
        for n, row in enumerate(rows, start=1):
            if isinstance(row, tuple):
                text, key, expected = row
                changes.append(ExpectedChange(n, by_key[key].id, expected))
            else:
                text = row
            lines.append(text)
        snippet = CodeSnippet(sid, "\n".join(lines) + "\n")
        out[sid] = (snippet, GroundTruth(sid, bool(changes), tuple(changes)))
    return out


def _grade(text: str, line_no: int, truth: GroundTruth) -> RubricGrade:
    probe = MigrationFinding(line_no, "", NO_MATCH_REF, "", False, "", text)
    return auto_grade(probe, truth)


def _renamed(expected: str) -> str | None:
    names = [t.text for t in code_tokens(expected) if t.renameable]
    for name in dict.fromkeys(names):
        alt = {"backend": "sim", "qc": "circuit", "job": "run_job", "psi": "state"}.get(name, f"{name}_new")
        return re.sub(rf"(?<![A-Za-z0-9_]){re.escape(name)}(?![A-Za-z0-9_])", alt, expected)
    return None


def correct_text(change: ExpectedChange, truth: GroundTruth, prefer_minor: bool) -> str:
    if prefer_minor:
        alt = _renamed(change.expected_refactoring)
        if alt is not None and _grade(alt, change.line_no, truth) is RubricGrade.OK_MINOR:
            return alt
    return change.expected_refactoring


def wrong_text(change: ExpectedChange, original: str, scenario: MigrationScenario, truth: GroundTruth) -> str:
    indent = original[: len(original) - len(original.lstrip())]
    candidates = [
        indent + scenario.example_target.splitlines()[-1],
        original.strip() + "  # still valid in " + TARGET,
        indent + "pass",
    ]
    for text in candidates:
        if _grade(text, change.line_no, truth) is RubricGrade.WRONG_VERSION:
            return text
    raise AssertionError(f"no misaligned rewrite for {truth.snippet_id}:{change.line_no}")


def _cell(text: str) -> str:
    return escape_cell(text).replace("\\n", "<br>")


def _code(text: str) -> str:
    return f"`{text.strip()}`" if text.strip() else ""


def _row(mode, line, code, sid, scenario, artifact, refactoring):
    cells = [line, _code(code)]
    if mode is WT:
        cells.append(sid)
    cells += [_cell(scenario), _cell(artifact), _cell(refactoring)]
    return format_row(cells)


def fabricate(mode, index, snippet, truth, scenarios_by_id, taxonomy) -> str:
    correct, wrong, extra = PLANS[mode][snippet.id]
    assert correct + wrong <= len(truth.changes), snippet.id
    rows = []
    for k, change in enumerate(truth.changes[: correct + wrong]):
        s = scenarios_by_id[change.scenario_id]
        original = snippet.line(change.line_no)
        if k < correct:
            refactoring = correct_text(change, truth, prefer_minor=(k + index) % 3 == 2)
            sid = s.id
        else:
            refactoring = wrong_text(change, original, s, truth)
            # every other misaligned row also cites a neighbouring scenario
            sid = s.id if k % 2 else taxonomy.scenarios[(taxonomy.ids().index(s.id) + 1) % len(taxonomy.scenarios)].id
            s = scenarios_by_id[sid]
        label = s.description + (" (optional)" if s.category is ScenarioCategory.NEW_FEATURE else "")
        rows.append((change.line_no, _row(mode, str(change.line_no), original, sid, label, s.artifacts[0], refactoring)))

    expected = set(truth.expected_lines)
    spare = [n for n in range(1, snippet.line_count + 1) if n not in expected and snippet.line(n).strip()]
    offset = (index * 3 + (0 if mode is WT else 1)) % max(1, len(spare))
    picks = sorted((spare[offset:] + spare[:offset])[:extra])
    i = 0
    while i < len(picks):
        n = picks[i]
        if i + 1 < len(picks) and picks[i + 1] == n + 1 and index % 2 == 0:
            # adjacent spurious lines come back as a single range row
            span, code, i = f"{n}–{n + 1}", snippet.line(n) + "\n" + snippet.line(n + 1), i + 2
        else:
            span, code, i = str(n), snippet.line(n), i + 1
        label = "Structural change → no matching scenario; review for " + TARGET
        rows.append((n, _row(mode, span, code.split("\n")[0], "*", label, "n/a", code)))

    if not rows and mode is WT:
        return f"I reviewed the snippet for Qiskit {TARGET} and found nothing that needs to change.\n"
    rows.sort(key=lambda r: r[0])
    columns = list(mode.columns)
    lines = [PREAMBLES[index % len(PREAMBLES)].format(v=TARGET), "", format_row(columns), separator_row(len(columns))]
    lines += [r for _, r in rows]
    closing = CLOSINGS[index % len(CLOSINGS)]
    if closing:
        lines += ["", closing]
    return "\n".join(lines) + "\n"


def _request(snippet, taxonomy, mode) -> ChatRequest:
    bundle = build_prompt(snippet, taxonomy if mode is WT else None, TARGET, mode)
    return ChatRequest(
        model_id=MODEL,
        messages=(ChatMessage("system", bundle.system_text), ChatMessage("user", bundle.user_text)),
    )


def _reset(path: Path) -> None:
    if path.exists():
        shutil.rmtree(path)
    path.mkdir(parents=True)


def main() -> int:
    taxonomy, by_key = build_taxonomy()
    (DATA / "taxonomy-0.46.md").write_text(serialize_taxonomy(taxonomy), encoding="utf-8")
    scenarios_by_id = {s.id: s for s in taxonomy}

    corpus = build_corpus(by_key)
    corpus_dir = DATA / "corpus"
    _reset(corpus_dir)
    for sid, (snippet, truth) in corpus.items():
        (corpus_dir / f"{sid}.src").write_text(snippet.source, encoding="utf-8")
        (corpus_dir / f"{sid}.truth").write_text(format_truth(truth), encoding="utf-8")

    cassette_dir = DATA / "cassettes"
    _reset(cassette_dir)
    for mode in (WT, NT):
        for index, (snippet, truth) in enumerate(corpus.values()):
            content = fabricate(mode, index, snippet, truth, scenarios_by_id, taxonomy)
            resp = ChatResponse(content, MODEL, prompt_tokens=0, completion_tokens=0)
            write_cassette(cassette_dir, _request(snippet, taxonomy, mode), resp)

    pairs = load_corpus(corpus_dir, taxonomy)
    _reset(FIXTURES)
    ok = True
    with tempfile.TemporaryDirectory() as tmp:
        for mode in (WT, NT):
            manifest = run_corpus(pairs, taxonomy, ReplayProvider(cassette_dir), RunSettings(mode=mode, jobs=1), tmp)
            assert manifest["failed"] == 0, manifest
            report = score_label(pairs, tmp, mode.value)
            sc, ln = report.scenario_counts, report.line_counts
            got = {"scenario": (sc.tp, sc.fp, sc.fn, sc.tn), "lines": (ln.tp, ln.fp, ln.fn)}
            status = "ok" if got == EXPECTED_COUNTS[mode] else "MISMATCH"
            ok &= status == "ok"
            print(f"{mode.value}: {got} expected {EXPECTED_COUNTS[mode]} {status}")
        for path in sorted(Path(tmp).glob("*.findings.json")):
            shutil.copy(path, FIXTURES / path.name)
    changes = sum(len(t.changes) for _, t in pairs)
    needs = sum(t.needs_refactoring for _, t in pairs)
    print(f"corpus: {len(pairs)} snippets, {needs} need refactoring, {changes} change lines")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
