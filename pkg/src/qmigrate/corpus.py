"""Code snippets, their ground-truth sidecars, and line-number preprocessing."""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from qmigrate.tables import escape_cell, split_row, unescape_cell
from qmigrate.taxonomy import Taxonomy

SOURCE_SUFFIX = ".src"
TRUTH_SUFFIX = ".truth"

_NUMBERED_RE = re.compile(r"^([0-9]+): ")


class CorpusError(ValueError):
    pass


class MalformedNumberedLine(CorpusError):
    def __init__(self, line_index: int):
        super().__init__(f"line {line_index} lacks a '<n>: ' prefix")
        self.line_index = line_index


class MissingSidecar(CorpusError):
    def __init__(self, snippet_id: str):
        super().__init__(f"no {TRUTH_SUFFIX} sidecar for snippet {snippet_id!r}")
        self.snippet_id = snippet_id


class DanglingScenarioId(CorpusError):
    def __init__(self, snippet_id: str, scenario_id: str):
        super().__init__(f"{snippet_id}: scenario {scenario_id!r} is not in the taxonomy")
        self.snippet_id = snippet_id
        self.scenario_id = scenario_id


class LineOutOfRange(CorpusError):
    def __init__(self, snippet_id: str, line_no: int):
        super().__init__(f"{snippet_id}: line {line_no} is outside the snippet")
        self.snippet_id = snippet_id
        self.line_no = line_no


class MalformedSidecar(CorpusError):
    def __init__(self, snippet_id: str, line_index: int, detail: str):
        super().__init__(f"{snippet_id}{TRUTH_SUFFIX}:{line_index}: {detail}")
        self.snippet_id = snippet_id
        self.line_index = line_index


def _split_lines(text: str) -> tuple[list[str], bool]:
    if text == "":
        return [], False
    lines = text.split("\n")
    trailing = text.endswith("\n")
    if trailing:
        lines.pop()
    return lines, trailing


def count_lines(text: str) -> int:
    return len(_split_lines(text)[0])


@dataclass(frozen=True)
class CodeSnippet:
    id: str
    source: str

    @property
    def line_count(self) -> int:
        return count_lines(self.source)

    def line(self, line_no: int) -> str:
        return _split_lines(self.source)[0][line_no - 1]

    def lines(self) -> list[str]:
        return _split_lines(self.source)[0]


@dataclass(frozen=True)
class ExpectedChange:
    line_no: int
    scenario_id: str
    expected_refactoring: str = ""


@dataclass(frozen=True)
class GroundTruth:
    snippet_id: str
    needs_refactoring: bool
    changes: tuple[ExpectedChange, ...] = ()

    def __post_init__(self):
        if self.needs_refactoring != bool(self.changes):
            raise CorpusError(
                f"{self.snippet_id}: needs_refactoring={self.needs_refactoring} "
                f"with {len(self.changes)} expected changes"
            )

    @property
    def expected_lines(self) -> list[int]:
        return sorted({c.line_no for c in self.changes})

    def changes_at(self, line_no: int) -> list[ExpectedChange]:
        return [c for c in self.changes if c.line_no == line_no]


def number_lines(source: str) -> str:
    lines, trailing = _split_lines(source)
    body = "\n".join(f"{i}: {line}" for i, line in enumerate(lines, start=1))
    return body + ("\n" if trailing else "")


def strip_line_numbers(numbered: str) -> str:
    lines, trailing = _split_lines(numbered)
    out = []
    for i, line in enumerate(lines, start=1):
        m = _NUMBERED_RE.match(line)
        if m is None or int(m.group(1)) != i:
            raise MalformedNumberedLine(i)
        out.append(line[m.end() :])
    return "\n".join(out) + ("\n" if trailing else "")


def parse_truth(snippet_id: str, text: str) -> GroundTruth:
    needs: bool | None = None
    changes = []
    for idx, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, value = stripped.partition(":")
        if not sep:
            raise MalformedSidecar(snippet_id, idx, "expected '<key>: <value>'")
        key = key.strip()
        if key == "needs_refactoring":
            flag = value.strip().lower()
            if flag not in ("true", "false"):
                raise MalformedSidecar(snippet_id, idx, f"bad flag {value.strip()!r}")
            needs = flag == "true"
        elif key == "change":
            cells = split_row(value)
            if cells is None or len(cells) != 3:
                raise MalformedSidecar(snippet_id, idx, "change needs 'line | scenario | refactoring'")
            try:
                line_no = int(cells[0])
            except ValueError:
                raise MalformedSidecar(snippet_id, idx, f"bad line number {cells[0]!r}") from None
            changes.append(ExpectedChange(line_no, unescape_cell(cells[1]), unescape_cell(cells[2])))
        else:
            raise MalformedSidecar(snippet_id, idx, f"unknown key {key!r}")
    if needs is None:
        # an empty sidecar is the explicit marker for a clean snippet
        needs = bool(changes)
    try:
        return GroundTruth(snippet_id, needs, tuple(changes))
    except CorpusError as exc:
        raise MalformedSidecar(snippet_id, 1, str(exc)) from None


def format_truth(truth: GroundTruth) -> str:
    if not truth.needs_refactoring:
        return ""
    out = ["needs_refactoring: true"]
    for c in truth.changes:
        # a bare trailing pipe keeps an empty refactoring cell visible
        out.append(f"change: {c.line_no} | {escape_cell(c.scenario_id)} | {escape_cell(c.expected_refactoring)} |")
    return "\n".join(out) + "\n"


def check_truth(snippet: CodeSnippet, truth: GroundTruth, t: Taxonomy | None) -> None:
    known = set(t.ids()) if t is not None else None
    for c in truth.changes:
        if not 1 <= c.line_no <= snippet.line_count:
            raise LineOutOfRange(snippet.id, c.line_no)
        if known is not None and c.scenario_id not in known:
            raise DanglingScenarioId(snippet.id, c.scenario_id)


def load_corpus(root: str | Path, t: Taxonomy | None) -> list[tuple[CodeSnippet, GroundTruth]]:
    root = Path(root)
    pairs = []
    for src in sorted(root.glob(f"*{SOURCE_SUFFIX}"), key=lambda p: p.stem):
        snippet_id = src.stem
        truth_path = src.with_suffix(TRUTH_SUFFIX)
        if not truth_path.is_file():
            raise MissingSidecar(snippet_id)
        snippet = CodeSnippet(snippet_id, src.read_text(encoding="utf-8"))
        truth = parse_truth(snippet_id, truth_path.read_text(encoding="utf-8"))
        check_truth(snippet, truth, t)
        pairs.append((snippet, truth))
    return pairs
