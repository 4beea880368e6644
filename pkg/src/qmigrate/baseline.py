"""Keyword scanner that flags candidate migration lines without a model.

Matching is lexical: a keyword hits when it appears as a whole identifier
token, i.e. not glued to a longer identifier. Aliased imports are missed by
design.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from qmigrate.corpus import CodeSnippet
from qmigrate.response_parser import MigrationFinding, ScenarioRef
from qmigrate.taxonomy import ScenarioCategory, Taxonomy, scenario_by_id

_IMPORT_RE = re.compile(r"^\s*(import|from)\s")


class HitKind(str, Enum):
    IMPORT_LINE = "import"
    USAGE_LINE = "usage"


@dataclass(frozen=True)
class KeywordHit:
    line_no: int
    scenario_id: str
    matched_keyword: str
    hit_kind: HitKind


def keyword_pattern(keyword: str) -> re.Pattern:
    return re.compile(r"(?<![A-Za-z0-9_])" + re.escape(keyword) + r"(?![A-Za-z0-9_])")


def is_import_line(line: str) -> bool:
    return bool(_IMPORT_RE.match(line))


def scan_snippet(snippet: CodeSnippet, t: Taxonomy) -> list[KeywordHit]:
    hits = []
    lines = snippet.lines()
    for scenario in t.scenarios:
        for keyword in dict.fromkeys(scenario.artifacts):
            pattern = keyword_pattern(keyword)
            for line_no, line in enumerate(lines, start=1):
                if pattern.search(line):
                    kind = HitKind.IMPORT_LINE if is_import_line(line) else HitKind.USAGE_LINE
                    hits.append(KeywordHit(line_no, scenario.id, keyword, kind))
    hits.sort(key=lambda h: (h.line_no, h.scenario_id, h.matched_keyword))
    return hits


def hits_to_findings(
    hits: list[KeywordHit], t: Taxonomy, snippet: CodeSnippet | None = None
) -> list[MigrationFinding]:
    """One finding per hit, citing the scenario and proposing its target example."""
    findings = []
    for hit in hits:
        scenario = scenario_by_id(t, hit.scenario_id)
        if scenario is None:
            continue
        code = snippet.line(hit.line_no) if snippet is not None else ""
        findings.append(
            MigrationFinding(
                line_no=hit.line_no,
                code_text=code.strip(),
                scenario_ref=ScenarioRef.matched(scenario.id),
                scenario_description=scenario.description,
                optional_flag=scenario.category is ScenarioCategory.NEW_FEATURE,
                artifact=hit.matched_keyword,
                refactoring=scenario.example_target,
            )
        )
    return findings
