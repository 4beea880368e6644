"""Rubric grading, confusion counts, precision/recall and report rendering."""
from __future__ import annotations

import csv
import io
import json
import keyword
import re
from collections import Counter
from dataclasses import dataclass, replace
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum, IntEnum
from typing import Iterable, Mapping, Sequence

from qmigrate.corpus import GroundTruth
from qmigrate.modes import PromptMode
from qmigrate.response_parser import MigrationFinding


class UndefinedMetric(ArithmeticError):
    pass


class OverrideKeyUnknown(KeyError):
    def __init__(self, snippet_id: str, line_no: int):
        super().__init__(f"override for {snippet_id} line {line_no} matches no finding")
        self.snippet_id = snippet_id
        self.line_no = line_no


class RubricGrade(IntEnum):
    INCORRECT = 0
    WRONG_VERSION = 1
    OK_MINOR = 2
    OK = 3

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @property
    def is_correct(self) -> bool:
        return self >= RubricGrade.OK_MINOR

    @classmethod
    def from_symbol(cls, text: str) -> RubricGrade:
        key = text.strip().replace("−", "-").upper()
        for grade, sym in _SYMBOLS.items():
            if key == sym:
                return grade
        raise ValueError(f"unknown rubric grade {text!r}")


_SYMBOLS = {
    RubricGrade.OK: "OK",
    RubricGrade.OK_MINOR: "OK-",
    RubricGrade.WRONG_VERSION: "X+",
    RubricGrade.INCORRECT: "X",
}


class GradeSource(str, Enum):
    AUTO = "auto"
    MANUAL_OVERRIDE = "override"


@dataclass(frozen=True)
class GradedFinding:
    finding: MigrationFinding
    grade: RubricGrade
    grade_source: GradeSource = GradeSource.AUTO


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0
    tn: int = 0

    def __post_init__(self):
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise ValueError(f"negative confusion count in {self}")

    def __add__(self, other: ConfusionCounts) -> ConfusionCounts:
        return ConfusionCounts(self.tp + other.tp, self.fp + other.fp, self.fn + other.fn, self.tn + other.tn)


def precision(c: ConfusionCounts) -> float:
    if c.tp + c.fp == 0:
        raise UndefinedMetric("precision with tp + fp == 0")
    return c.tp / (c.tp + c.fp)


def recall(c: ConfusionCounts) -> float:
    if c.tp + c.fn == 0:
        raise UndefinedMetric("recall with tp + fn == 0")
    return c.tp / (c.tp + c.fn)


def missed_ratio(fn: int, total_expected: int) -> float:
    if total_expected <= 0:
        raise UndefinedMetric("missed-change ratio with no expected changes")
    return fn / total_expected


def round_half_up(value: float, places: int = 2) -> Decimal:
    return Decimal(repr(value)).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def format_metric(value: float | None) -> str:
    return "n/a" if value is None else str(round_half_up(value))


def _safe(fn, *args) -> float | None:
    try:
        return fn(*args)
    except UndefinedMetric:
        return None


# --- auto-grading -----------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""(?P<comment>\#[^\n]*)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<str>"(?:\\.|[^"\\\n])*"|'(?:\\.|[^'\\\n])*')
      | (?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)
      | (?P<op>==|!=|<=|>=|\*\*|//|->|:=|\S)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    text: str
    renameable: bool


def code_tokens(text: str) -> list[_Tok]:
    """Tokenize code, marking which identifiers may be consistently renamed.

    Fixed: keywords, attribute names, called names, keyword-argument names and
    everything on import lines. Comments are dropped.
    """
    out: list[_Tok] = []
    for line in text.split("\n"):
        raw = [(m.lastgroup, m.group()) for m in _TOKEN_RE.finditer(line) if m.lastgroup != "comment"]
        on_import = bool(raw) and raw[0][1] in ("import", "from")
        depth = 0
        for i, (kind, tok) in enumerate(raw):
            if tok in "([{":
                depth += 1
            elif tok in ")]}":
                depth = max(0, depth - 1)
            renameable = False
            if kind == "name" and not on_import and not keyword.iskeyword(tok):
                prev = raw[i - 1][1] if i else ""
                nxt = raw[i + 1][1] if i + 1 < len(raw) else ""
                kwarg = nxt == "=" and depth > 0
                renameable = prev != "." and nxt != "(" and not kwarg
            out.append(_Tok(tok, renameable))
    return out


def same_code(a: str, b: str) -> bool:
    return [t.text for t in code_tokens(a)] == [t.text for t in code_tokens(b)]


def same_up_to_renaming(a: str, b: str) -> bool:
    ta, tb = code_tokens(a), code_tokens(b)
    if len(ta) != len(tb):
        return False
    fwd: dict[str, str] = {}
    back: dict[str, str] = {}
    for x, y in zip(ta, tb):
        if x.renameable and y.renameable:
            if fwd.setdefault(x.text, y.text) != y.text or back.setdefault(y.text, x.text) != x.text:
                return False
        elif x.text != y.text:
            return False
    return True


def auto_grade(finding: MigrationFinding, truth: GroundTruth) -> RubricGrade:
    changes = truth.changes_at(finding.line_no)
    if not changes:
        return RubricGrade.INCORRECT
    best = RubricGrade.WRONG_VERSION
    for change in changes:
        if same_code(finding.refactoring, change.expected_refactoring):
            return RubricGrade.OK
        if same_up_to_renaming(finding.refactoring, change.expected_refactoring):
            best = RubricGrade.OK_MINOR
    return best


def parse_overrides(text: str) -> dict[tuple[str, int], RubricGrade]:
    """Read ``override: <snippet_id> | <line_no> | OK|OK-|X+|X`` lines."""
    out = {}
    for idx, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        parts = [p.strip() for p in value.split("|")]
        if key.strip() != "override" or not sep or len(parts) != 3:
            raise ValueError(f"override line {idx}: expected 'override: <snippet> | <line> | <grade>'")
        out[(parts[0], int(parts[1]))] = RubricGrade.from_symbol(parts[2])
    return out


def grade_findings(
    findings: Sequence[MigrationFinding],
    truth: GroundTruth,
    overrides: Mapping[tuple[str, int], RubricGrade] | None = None,
) -> list[GradedFinding]:
    mine = {line: g for (sid, line), g in (overrides or {}).items() if sid == truth.snippet_id}
    flagged = {f.line_no for f in findings}
    for line in mine:
        if line not in flagged:
            raise OverrideKeyUnknown(truth.snippet_id, line)
    graded = []
    for f in findings:
        if f.line_no in mine:
            graded.append(GradedFinding(f, mine[f.line_no], GradeSource.MANUAL_OVERRIDE))
        else:
            graded.append(GradedFinding(f, auto_grade(f, truth)))
    return graded


# --- scoring ----------------------------------------------------------------

Results = Iterable[tuple[GroundTruth, Sequence[GradedFinding]]]


@dataclass(frozen=True)
class SnippetOutcome:
    snippet_id: str
    needs_refactoring: bool
    outcome: str  # TP / FP / FN / TN at scenario level
    expected_lines: int
    correct_lines: int
    findings: int
    false_positive_findings: int
    grades: tuple[tuple[str, int], ...] = ()


def _line_counts(truth: GroundTruth, graded: Sequence[GradedFinding]) -> ConfusionCounts:
    expected = set(truth.expected_lines)
    correct = {g.finding.line_no for g in graded if g.grade.is_correct and g.finding.line_no in expected}
    fp = sum(1 for g in graded if g.finding.line_no not in expected or not g.grade.is_correct)
    return ConfusionCounts(tp=len(correct), fp=fp, fn=len(expected) - len(correct))


def scenario_outcome(truth: GroundTruth, graded: Sequence[GradedFinding]) -> str:
    expected = set(truth.expected_lines)
    if not truth.needs_refactoring:
        return "FP" if graded else "TN"
    if any(g.grade.is_correct and g.finding.line_no in expected for g in graded):
        return "TP"
    if not any(g.finding.line_no in expected for g in graded):
        return "FN"
    return "FP"


def snippet_outcome(truth: GroundTruth, graded: Sequence[GradedFinding]) -> SnippetOutcome:
    lines = _line_counts(truth, graded)
    grades = Counter(g.grade.symbol for g in graded)
    return SnippetOutcome(
        snippet_id=truth.snippet_id,
        needs_refactoring=truth.needs_refactoring,
        outcome=scenario_outcome(truth, graded),
        expected_lines=lines.tp + lines.fn,
        correct_lines=lines.tp,
        findings=len(graded),
        false_positive_findings=lines.fp,
        grades=tuple((sym, grades[sym]) for sym in ("OK", "OK-", "X+", "X") if grades[sym]),
    )


def score_scenarios(results: Results) -> ConfusionCounts:
    tally = Counter(scenario_outcome(truth, graded) for truth, graded in results)
    return ConfusionCounts(tp=tally["TP"], fp=tally["FP"], fn=tally["FN"], tn=tally["TN"])


def score_lines(results: Results) -> ConfusionCounts:
    total = ConfusionCounts()
    for truth, graded in results:
        total = total + _line_counts(truth, graded)
    return total


@dataclass(frozen=True)
class ScoreReport:
    mode: PromptMode
    scenario_counts: ConfusionCounts
    line_counts: ConfusionCounts
    per_snippet: tuple[SnippetOutcome, ...] = ()
    label: str = ""
    notes: tuple[str, ...] = ()

    @property
    def column(self) -> str:
        return self.label or PromptMode(self.mode).label

    @property
    def total_expected(self) -> int:
        return self.line_counts.tp + self.line_counts.fn

    @property
    def scenario_precision(self) -> float | None:
        return _safe(precision, self.scenario_counts)

    @property
    def scenario_recall(self) -> float | None:
        return _safe(recall, self.scenario_counts)

    @property
    def line_precision(self) -> float | None:
        return _safe(precision, self.line_counts)

    @property
    def line_recall(self) -> float | None:
        return _safe(recall, self.line_counts)

    @property
    def missed_change_ratio(self) -> float | None:
        return _safe(missed_ratio, self.line_counts.fn, self.total_expected)

    def with_notes(self, *notes: str) -> ScoreReport:
        return replace(self, notes=self.notes + notes)


def build_report(
    results: Sequence[tuple[GroundTruth, Sequence[GradedFinding]]],
    mode: PromptMode,
    label: str = "",
) -> ScoreReport:
    ordered = sorted(results, key=lambda r: r[0].snippet_id)
    return ScoreReport(
        mode=PromptMode(mode),
        scenario_counts=score_scenarios(ordered),
        line_counts=score_lines(ordered),
        per_snippet=tuple(snippet_outcome(t, g) for t, g in ordered),
        label=label,
    )


# --- rendering --------------------------------------------------------------

SCENARIO_SECTION = "Scenario Identification"
LINE_SECTION = "Refactoring Suggestions"
FORMATS = ("table-text", "csv", "json")


def _metric_rows(r: ScoreReport) -> list[tuple[str, str, int | str]]:
    s, ln = r.scenario_counts, r.line_counts
    return [
        (SCENARIO_SECTION, "TP", s.tp),
        (SCENARIO_SECTION, "TN", s.tn),
        (SCENARIO_SECTION, "FP", s.fp),
        (SCENARIO_SECTION, "FN", s.fn),
        (SCENARIO_SECTION, "Precision", format_metric(r.scenario_precision)),
        (SCENARIO_SECTION, "Recall", format_metric(r.scenario_recall)),
        (LINE_SECTION, "TP", ln.tp),
        (LINE_SECTION, "FP", ln.fp),
        (LINE_SECTION, "FN", ln.fn),
        (LINE_SECTION, "Precision", format_metric(r.line_precision)),
        (LINE_SECTION, "Recall", format_metric(r.line_recall)),
        (LINE_SECTION, "Missed-change ratio", format_metric(r.missed_change_ratio)),
        (LINE_SECTION, "Expected lines", r.total_expected),
    ]


def _snippet_cell(o: SnippetOutcome) -> str:
    return f"{o.outcome} ({o.correct_lines}/{o.expected_lines} lines, {o.false_positive_findings} FP)"


def _json_value(v: int | str) -> int | float | None:
    if isinstance(v, int):
        return v
    return None if v == "n/a" else float(v)


def _per_snippet_table(reports: Sequence[ScoreReport]) -> list[tuple[str, list[SnippetOutcome | None]]]:
    ids = sorted({o.snippet_id for r in reports for o in r.per_snippet})
    by_report = [{o.snippet_id: o for o in r.per_snippet} for r in reports]
    return [(sid, [m.get(sid) for m in by_report]) for sid in ids]


def render_report(reports: ScoreReport | Sequence[ScoreReport], fmt: str = "table-text") -> str:
    """Render one or more reports side by side (one column per report)."""
    if isinstance(reports, ScoreReport):
        reports = [reports]
    if fmt not in FORMATS:
        raise ValueError(f"unknown report format {fmt!r}")
    columns = [r.column for r in reports]
    rows_by_report = [_metric_rows(r) for r in reports]
    notes = list(dict.fromkeys(n for r in reports for n in r.notes))
    per_snippet = _per_snippet_table(reports)

    if fmt == "table-text":
        out = ["Metric | " + " | ".join(columns)]
        section = None
        for i, (sec, metric, _) in enumerate(rows_by_report[0] if reports else _metric_rows(_EMPTY)):
            if sec != section:
                out.append(sec)
                section = sec
            values = [str(rows[i][2]) for rows in rows_by_report]
            out.append(f"{metric} | " + " | ".join(values))
        if per_snippet:
            out.append("")
            out.append("Per-snippet outcomes")
            out.append("Snippet | Needs refactoring | " + " | ".join(columns))
            for sid, outcomes in per_snippet:
                needs = next(o.needs_refactoring for o in outcomes if o is not None)
                cells = [_snippet_cell(o) if o else "-" for o in outcomes]
                out.append(f"{sid} | {'yes' if needs else 'no'} | " + " | ".join(cells))
        if notes:
            out.append("")
            out.append("Notes")
            out.extend(f"- {n}" for n in notes)
        return "\n".join(out) + "\n"

    records = []
    for col, rows in zip(columns, rows_by_report):
        for sec, metric, value in rows:
            records.append((sec, metric, col, value))
    snippet_records = []
    for sid, outcomes in per_snippet:
        for col, o in zip(columns, outcomes):
            if o is None:
                continue
            for metric, value in (
                ("outcome", o.outcome),
                ("needs_refactoring", int(o.needs_refactoring)),
                ("expected_lines", o.expected_lines),
                ("correct_lines", o.correct_lines),
                ("findings", o.findings),
                ("false_positive_findings", o.false_positive_findings),
            ):
                snippet_records.append((f"snippet:{sid}", metric, col, value))

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["section", "metric", "column", "value"])
        writer.writerows(records)
        writer.writerows(snippet_records)
        for n in notes:
            writer.writerow(["notes", "note", "", n])
        return buf.getvalue()

    doc = {
        "columns": columns,
        "metrics": [
            {"section": s, "metric": m, "column": c, "value": _json_value(v)} for s, m, c, v in records
        ],
        "per_snippet": [
            {"section": s, "metric": m, "column": c, "value": v} for s, m, c, v in snippet_records
        ],
        "notes": notes,
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


_EMPTY = ScoreReport(PromptMode.WITH_TAXONOMY, ConfusionCounts(), ConfusionCounts())
