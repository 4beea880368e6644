"""Migration-scenario taxonomy: data model, table reader/writer and validator."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from urllib.parse import urlparse

from qmigrate.tables import (
    escape_cell,
    fence_code,
    format_row,
    is_separator_row,
    separator_row,
    split_row,
    strip_code_fence,
    unescape_cell,
)

ID_COLUMN = "Id"
TABLE_COLUMNS = (
    "Category",
    "Migration Flow",
    "Summary",
    "Artifacts",
    "Example code in source version",
    "Example code in target version",
    "Degree of Difficulty",
    "Degree of impact in SE/QSE",
    "References",
)
HEADER = (ID_COLUMN,) + TABLE_COLUMNS
REQUIRED_CELLS = (
    ID_COLUMN,
    "Category",
    "Migration Flow",
    "Summary",
    "Artifacts",
    "Example code in source version",
    "Example code in target version",
)
NO_MATCH = "*"

_VERSION_RE = re.compile(r"^\d+(\.\d+)*$")
_TARGET_COMMENT_RE = re.compile(r"^<!--\s*target_version:\s*(\S+)\s*-->$")


class TaxonomyError(ValueError):
    """Base class for taxonomy parse failures."""


class MissingColumn(TaxonomyError):
    def __init__(self, name: str):
        super().__init__(f"missing column: {name!r}")
        self.name = name


class DuplicateId(TaxonomyError):
    def __init__(self, scenario_id: str):
        super().__init__(f"duplicate scenario id: {scenario_id!r}")
        self.scenario_id = scenario_id


class UnknownCategory(TaxonomyError):
    def __init__(self, text: str):
        super().__init__(f"unknown category: {text!r}")
        self.text = text


class EmptyRequiredCell(TaxonomyError):
    def __init__(self, row: int, column: str):
        super().__init__(f"row {row}: empty required cell {column!r}")
        self.row = row
        self.column = column


class BadMigrationFlow(TaxonomyError):
    def __init__(self, row: int, text: str):
        super().__init__(f"row {row}: cannot parse migration flow {text!r}")
        self.row = row
        self.text = text


class ScenarioCategory(str, Enum):
    DEPRECATION = "Deprecation"
    NEW_FEATURE = "New feature"
    STRUCTURAL_CHANGE = "Structural change"

    @classmethod
    def parse(cls, text: str) -> ScenarioCategory:
        key = re.sub(r"[\s_-]+", "", text).lower()
        for member in cls:
            if key == member.value.replace(" ", "").lower():
                return member
        raise UnknownCategory(text)


def parse_version(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not _VERSION_RE.match(text):
        raise ValueError(f"not a dotted numeric version: {text!r}")
    return tuple(int(p) for p in text.split("."))


def compare_versions(a: str, b: str) -> int:
    """Component-wise numeric comparison; missing components count as zero."""
    va, vb = parse_version(a), parse_version(b)
    width = max(len(va), len(vb))
    va = va + (0,) * (width - len(va))
    vb = vb + (0,) * (width - len(vb))
    return (va > vb) - (va < vb)


def scenario_id_for(target_version: str, ordinal: int) -> str:
    return f"QSK-{target_version.replace('.', '')}-{ordinal:03d}"


@dataclass(frozen=True)
class MigrationFlow:
    source_version: str
    target_version: str

    def __post_init__(self):
        parse_version(self.source_version)
        parse_version(self.target_version)

    @classmethod
    def parse(cls, text: str) -> MigrationFlow:
        parts = re.split(r"\s*(?:->|→)\s*", text.strip())
        if len(parts) != 2:
            raise ValueError(text)
        return cls(parts[0], parts[1])

    def __str__(self) -> str:
        return f"{self.source_version} -> {self.target_version}"


@dataclass(frozen=True)
class MigrationScenario:
    id: str
    category: ScenarioCategory
    flow: MigrationFlow
    summary: str
    artifacts: tuple[str, ...]
    example_source: str
    example_target: str
    difficulty: str | None = None
    impact: str | None = None
    references: tuple[str, ...] = ()

    @property
    def description(self) -> str:
        """Category and summary joined the way findings tables render them."""
        return f"{self.category.value} → {self.summary}"


@dataclass(frozen=True)
class Taxonomy:
    target_version: str
    scenarios: tuple[MigrationScenario, ...] = ()

    def __iter__(self):
        return iter(self.scenarios)

    def __len__(self) -> int:
        return len(self.scenarios)

    def ids(self) -> list[str]:
        return [s.id for s in self.scenarios]

    def category_counts(self) -> dict[ScenarioCategory, int]:
        counts = Counter(s.category for s in self.scenarios)
        return {cat: counts.get(cat, 0) for cat in ScenarioCategory}


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" | "warning" | "info"
    code: str
    message: str
    scenario_id: str | None = None

    @property
    def is_error(self) -> bool:
        return self.severity == "error"

    def __str__(self) -> str:
        where = f" [{self.scenario_id}]" if self.scenario_id else ""
        return f"{self.severity}: {self.code}{where}: {self.message}"


def _split_list(text: str) -> tuple[str, ...]:
    items = []
    for raw in text.split(","):
        item = strip_code_fence(raw.strip()).strip()
        if item:
            items.append(item)
    return tuple(items)


def _split_references(text: str) -> tuple[str, ...]:
    return tuple(part.strip("<>") for part in re.split(r"[\s,]+", text) if part.strip("<>"))


def parse_taxonomy(text: str, target_version: str | None = None) -> Taxonomy:
    """Read a pipe-table taxonomy document.

    The target version comes from the argument, else from a leading
    ``<!-- target_version: X -->`` comment, else from the highest flow target.
    A missing ``Id`` column means ids are assigned from row order.
    """
    lines = text.replace("\r\n", "\n").split("\n")
    header_idx = None
    header: list[str] = []
    for i, line in enumerate(lines):
        m = _TARGET_COMMENT_RE.match(line.strip())
        if m and target_version is None:
            target_version = m.group(1)
            continue
        cells = split_row(line)
        if cells is None:
            continue
        nxt = split_row(lines[i + 1]) if i + 1 < len(lines) else None
        if nxt is not None and is_separator_row(nxt):
            header_idx = i
            header = [unescape_cell(c) for c in cells]
            break
    if header_idx is None:
        raise MissingColumn(TABLE_COLUMNS[0])
    for name in TABLE_COLUMNS:
        if name not in header:
            raise MissingColumn(name)
    col = {name: header.index(name) for name in HEADER if name in header}

    rows: list[list[str]] = []
    for line in lines[header_idx + 2 :]:
        cells = split_row(line)
        if cells is None:
            break
        rows.append(cells + [""] * (len(header) - len(cells)))

    parsed = []
    seen: set[str] = set()
    for row_no, cells in enumerate(rows, start=1):
        get = lambda name: unescape_cell(cells[col[name]]).strip() if name in col else ""
        for name in REQUIRED_CELLS:
            if name == ID_COLUMN and ID_COLUMN not in col:
                continue
            if not get(name):
                raise EmptyRequiredCell(row_no, name)
        category = ScenarioCategory.parse(get("Category"))
        try:
            flow = MigrationFlow.parse(get("Migration Flow"))
        except ValueError:
            raise BadMigrationFlow(row_no, get("Migration Flow")) from None
        artifacts = _split_list(get("Artifacts"))
        if not artifacts:
            raise EmptyRequiredCell(row_no, "Artifacts")
        parsed.append(
            dict(
                id=get(ID_COLUMN) or None,
                category=category,
                flow=flow,
                summary=get("Summary"),
                artifacts=artifacts,
                example_source=strip_code_fence(get("Example code in source version")),
                example_target=strip_code_fence(get("Example code in target version")),
                difficulty=get("Degree of Difficulty") or None,
                impact=get("Degree of impact in SE/QSE") or None,
                references=_split_references(get("References")),
            )
        )

    if target_version is None:
        if not parsed:
            raise TaxonomyError("cannot infer target version from an empty taxonomy")
        best = parsed[0]["flow"].target_version
        for item in parsed[1:]:
            if compare_versions(item["flow"].target_version, best) > 0:
                best = item["flow"].target_version
        target_version = best
    parse_version(target_version)

    scenarios = []
    for ordinal, item in enumerate(parsed, start=1):
        if item["id"] is None:
            item["id"] = scenario_id_for(target_version, ordinal)
        if item["id"] in seen:
            raise DuplicateId(item["id"])
        seen.add(item["id"])
        scenarios.append(MigrationScenario(**item))
    return Taxonomy(target_version=target_version, scenarios=tuple(scenarios))


def serialize_taxonomy(t: Taxonomy) -> str:
    out = [f"<!-- target_version: {t.target_version} -->", format_row(list(HEADER)), separator_row(len(HEADER))]
    for s in t.scenarios:
        cells = [
            s.id,
            s.category.value,
            str(s.flow),
            s.summary,
            ", ".join(s.artifacts),
            fence_code(s.example_source),
            fence_code(s.example_target),
            s.difficulty or "",
            s.impact or "",
            ", ".join(s.references),
        ]
        out.append(format_row([escape_cell(c) for c in cells]))
    return "\n".join(out) + "\n"


def _reference_ok(url: str) -> bool:
    parsed = urlparse(url)
    return parsed.scheme in ("http", "https") and "." in parsed.netloc and " " not in url


def validate_taxonomy(t: Taxonomy) -> list[Diagnostic]:
    diags: list[Diagnostic] = []
    counts = Counter(s.id for s in t.scenarios)
    for sid, n in counts.items():
        if not sid:
            diags.append(Diagnostic("error", "EmptyId", "scenario id is empty"))
        elif n > 1:
            diags.append(Diagnostic("error", "DuplicateId", f"id used by {n} scenarios", sid))
    try:
        parse_version(t.target_version)
        target_ok = True
    except ValueError:
        diags.append(Diagnostic("error", "BadVersion", f"target version {t.target_version!r}"))
        target_ok = False
    for s in t.scenarios:
        if not s.artifacts or not all(a.strip() for a in s.artifacts):
            diags.append(Diagnostic("error", "EmptyArtifacts", "scenario names no artifact", s.id))
        if not s.example_source.strip():
            diags.append(Diagnostic("error", "EmptyExample", "source-version example is empty", s.id))
        if not s.example_target.strip():
            diags.append(Diagnostic("error", "EmptyExample", "target-version example is empty", s.id))
        if compare_versions(s.flow.source_version, s.flow.target_version) >= 0:
            diags.append(Diagnostic("error", "VersionOrder", f"flow {s.flow} does not move forward", s.id))
        if target_ok and compare_versions(s.flow.target_version, t.target_version) > 0:
            diags.append(
                Diagnostic("error", "FlowBeyondTarget", f"flow {s.flow} exceeds {t.target_version}", s.id)
            )
        for url in s.references:
            if not _reference_ok(url):
                diags.append(Diagnostic("warning", "BadReference", f"malformed URL {url!r}", s.id))
    diags.append(Diagnostic("info", "CategoryCounts", census_line(t)))
    return diags


def census_line(t: Taxonomy) -> str:
    c = t.category_counts()
    return (
        f"scenarios: {len(t.scenarios)} "
        f"(deprecation {c[ScenarioCategory.DEPRECATION]}, "
        f"new-feature {c[ScenarioCategory.NEW_FEATURE]}, "
        f"structural {c[ScenarioCategory.STRUCTURAL_CHANGE]})"
    )


def scenario_by_id(t: Taxonomy, scenario_id: str) -> MigrationScenario | None:
    if not scenario_id or scenario_id == NO_MATCH:
        return None
    matches = [s for s in t.scenarios if s.id == scenario_id]
    return matches[0] if len(matches) == 1 else None
