"""Turn a model's markdown answer into typed migration findings."""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from qmigrate.modes import PromptMode
from qmigrate.tables import is_separator_row, split_row, strip_code_fence, unescape_cell
from qmigrate.taxonomy import NO_MATCH, Diagnostic, Taxonomy

_OPTIONAL_RE = re.compile(r"\s*\(optional\)\s*", re.IGNORECASE)
_RANGE_RE = re.compile(r"^([0-9]+)\s*[-\u2013\u2014]\s*([0-9]+)$")
MAX_RANGE = 500
_BR_RE = re.compile(r"<br\s*/?>", re.IGNORECASE)


class ParseError(ValueError):
    pass


class NoTableFound(ParseError):
    def __init__(self):
        super().__init__("no pipe table in model output")


class HeaderMismatch(ParseError):
    def __init__(self, expected: tuple[str, ...], found: tuple[str, ...]):
        super().__init__(f"expected header {list(expected)}, found {list(found)}")
        self.expected = expected
        self.found = found


class RowArity(ParseError):
    def __init__(self, row_index: int, expected: int, found: int):
        super().__init__(f"row {row_index}: expected {expected} cells, found {found}")
        self.row_index = row_index
        self.expected = expected
        self.found = found


class BadLineNumber(ParseError):
    def __init__(self, row_index: int, cell_text: str):
        super().__init__(f"row {row_index}: bad line number {cell_text!r}")
        self.row_index = row_index
        self.cell_text = cell_text


class RefKind(str, Enum):
    MATCHED = "matched"
    NO_MATCH = "no-match"
    UNREFERENCED = "unreferenced"


@dataclass(frozen=True)
class ScenarioRef:
    kind: RefKind
    scenario_id: str | None = None

    def __post_init__(self):
        if self.kind is RefKind.MATCHED:
            if not self.scenario_id or NO_MATCH in self.scenario_id:
                raise ValueError(f"bad matched scenario id {self.scenario_id!r}")
        elif self.scenario_id is not None:
            raise ValueError(f"{self.kind.value} reference carries an id")

    @classmethod
    def matched(cls, scenario_id: str) -> ScenarioRef:
        return cls(RefKind.MATCHED, scenario_id)

    def to_cell(self) -> str | None:
        """JSON form: the id, ``"*"`` for no match, ``None`` when unreferenced."""
        if self.kind is RefKind.MATCHED:
            return self.scenario_id
        return NO_MATCH if self.kind is RefKind.NO_MATCH else None

    @classmethod
    def from_cell(cls, value: str | None) -> ScenarioRef:
        if value is None:
            return UNREFERENCED
        if NO_MATCH in value or not value.strip():
            return NO_MATCH_REF
        return cls.matched(value)


NO_MATCH_REF = ScenarioRef(RefKind.NO_MATCH)
UNREFERENCED = ScenarioRef(RefKind.UNREFERENCED)


@dataclass(frozen=True)
class MigrationFinding:
    line_no: int
    code_text: str
    scenario_ref: ScenarioRef
    scenario_description: str
    optional_flag: bool
    artifact: str
    refactoring: str = ""

    def __post_init__(self):
        if self.line_no < 1:
            raise ValueError(f"line_no must be >= 1, got {self.line_no}")

    def to_dict(self) -> dict:
        return {
            "line_no": self.line_no,
            "code": self.code_text,
            "scenario_id": self.scenario_ref.to_cell(),
            "scenario": self.scenario_description,
            "optional": self.optional_flag,
            "artifact": self.artifact,
            "refactoring": self.refactoring,
        }

    @classmethod
    def from_dict(cls, d: dict) -> MigrationFinding:
        return cls(
            line_no=int(d["line_no"]),
            code_text=d.get("code", ""),
            scenario_ref=ScenarioRef.from_cell(d.get("scenario_id")),
            scenario_description=d.get("scenario", ""),
            optional_flag=bool(d.get("optional", False)),
            artifact=d.get("artifact", ""),
            refactoring=d.get("refactoring", ""),
        )


def _norm_header(cell: str) -> str:
    return unescape_cell(cell).strip().lower()


def _clean(cell: str) -> str:
    text = unescape_cell(cell, decode_newlines=False).strip()
    text = _BR_RE.sub("\n", text)
    return strip_code_fence(text).strip()


def _find_tables(lines: list[str]) -> list[tuple[list[str], list[list[str]]]]:
    tables = []
    in_fence = False
    i = 0
    while i < len(lines):
        line = lines[i]
        if line.lstrip().startswith("```"):
            in_fence = not in_fence
            i += 1
            continue
        header = None if in_fence else split_row(line)
        if header is not None and i + 1 < len(lines):
            sep = split_row(lines[i + 1])
            if sep is not None and is_separator_row(sep):
                rows = []
                j = i + 2
                while j < len(lines):
                    cells = split_row(lines[j])
                    if cells is None or not lines[j].strip():
                        break
                    rows.append(cells)
                    j += 1
                tables.append((header, rows))
                i = j
                continue
        i += 1
    return tables


def _line_numbers(cell: str, row_index: int) -> list[int]:
    text = strip_code_fence(cell.strip()).strip()
    if re.fullmatch(r"[0-9]+", text):
        n = int(text)
        if n >= 1:
            return [n]
    m = _RANGE_RE.match(text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if 1 <= lo <= hi and hi - lo < MAX_RANGE:
            return list(range(lo, hi + 1))
    raise BadLineNumber(row_index, cell)


def parse_findings(raw: str, mode: PromptMode) -> list[MigrationFinding]:
    """Parse the first table whose header matches ``mode``'s column set.

    Range cells such as ``3–5`` expand to one finding per line.
    """
    mode = PromptMode(mode)
    expected = tuple(c.lower() for c in mode.columns)
    tables = _find_tables(raw.replace("\r\n", "\n").split("\n"))
    if not tables:
        raise NoTableFound()
    chosen = None
    for header, rows in tables:
        if tuple(_norm_header(c) for c in header) == expected:
            chosen = rows
            break
    if chosen is None:
        found = tuple(unescape_cell(c).strip() for c in tables[0][0])
        raise HeaderMismatch(mode.columns, found)

    width = len(expected)
    with_ids = mode is PromptMode.WITH_TAXONOMY
    findings = []
    for row_index, cells in enumerate(chosen, start=1):
        if len(cells) != width:
            raise RowArity(row_index, width, len(cells))
        line_nos = _line_numbers(unescape_cell(cells[0]), row_index)
        rest = [_clean(c) for c in cells[1:]]
        if with_ids:
            code, ref_cell, scenario, artifact, refactoring = rest
            ref = NO_MATCH_REF if not ref_cell or NO_MATCH in ref_cell else ScenarioRef.matched(ref_cell)
        else:
            code, scenario, artifact, refactoring = rest
            ref = UNREFERENCED
        optional = bool(_OPTIONAL_RE.search(scenario))
        if optional:
            scenario = re.sub(r"\s{2,}", " ", _OPTIONAL_RE.sub(" ", scenario)).strip()
        for n in line_nos:
            findings.append(MigrationFinding(n, code, ref, scenario, optional, artifact, refactoring))
    return findings


def resolve_findings(findings: list[MigrationFinding], t: Taxonomy) -> list[Diagnostic]:
    known = set(t.ids())
    diags = []
    for f in findings:
        ref = f.scenario_ref
        if ref.kind is RefKind.MATCHED and ref.scenario_id not in known:
            diags.append(
                Diagnostic("error", "UnknownScenarioId", f"line {f.line_no} cites an unknown id", ref.scenario_id)
            )
        elif ref.kind is RefKind.NO_MATCH:
            diags.append(
                Diagnostic(
                    "info",
                    "TaxonomyGapCandidate",
                    f"line {f.line_no}: {f.scenario_description or f.artifact} has no taxonomy match",
                )
            )
    return diags
