import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmigrate.modes import PromptMode
from qmigrate.response_parser import (
    NO_MATCH_REF,
    UNREFERENCED,
    BadLineNumber,
    HeaderMismatch,
    MigrationFinding,
    NoTableFound,
    ParseError,
    RefKind,
    RowArity,
    ScenarioRef,
    parse_findings,
    resolve_findings,
)

WT, NT = PromptMode.WITH_TAXONOMY, PromptMode.WITHOUT_TAXONOMY
H6 = "| Line | Code | Scenario ID | Scenario | Artifact | Refactoring |\n|---|---|---|---|---|---|\n"
H5 = "| Line | Code | Scenario | Artifact | Refactoring |\n|---|---|---|---|---|\n"


def _summary(findings):
    """(line, scenario_id cell, optional, scenario, refactoring) multiset."""
    return Counter(
        (f.line_no, f.scenario_ref.to_cell(), f.optional_flag, f.scenario_description, f.refactoring)
        for f in findings
    )


D = "Deprecation → execute() deprecated"
N = "New feature → primitives available"

# name, raw text, mode, expected rows as (line, id, optional, scenario, refactoring)
WELL_FORMED = [
    ("clean-six", H6 + "| 2 | execute(qc, backend) | QSK-046-003 | " + D + " | qiskit.execute | backend.run(...) |\n",
     WT, [(2, "QSK-046-003", False, D, "backend.run(...)")]),
    ("clean-five", H5 + "| 2 | `execute(qc)` | " + D + " | execute | `backend.run(qc)` |\n",
     NT, [(2, None, False, D, "backend.run(qc)")]),
    ("prose-wrapped", "Sure! Here you go:\n\n" + H6 + "| 1 | x | QSK-046-001 | " + D + " | a | y |\n\nHope it helps.",
     WT, [(1, "QSK-046-001", False, D, "y")]),
    ("asterisk", H6 + "| 4 | foo() | * | Structural change → moved | foo | bar() |\n",
     WT, [(4, "*", False, "Structural change → moved", "bar()")]),
    ("empty-id-is-no-match", H6 + "| 4 | foo() |  | s | foo | bar() |\n", WT, [(4, "*", False, "s", "bar()")]),
    ("optional-suffix", H6 + "| 3 | q | QSK-046-030 | " + N + " (optional) | Sampler | s |\n",
     WT, [(3, "QSK-046-030", True, N, "s")]),
    ("optional-inline", H6 + "| 3 | q | QSK-046-030 | New feature (optional) → primitives available | Sampler | s |\n",
     WT, [(3, "QSK-046-030", True, N, "s")]),
    ("optional-case", H5 + "| 3 | q | " + N + " (Optional) | Sampler | s |\n", NT, [(3, None, True, N, "s")]),
    ("range-hyphen", H6 + "| 3-5 | a | QSK-046-001 | s | a | b |\n",
     WT, [(n, "QSK-046-001", False, "s", "b") for n in (3, 4, 5)]),
    ("range-en-dash", H5 + "| 7–8 | a | s | a | b |\n", NT, [(7, None, False, "s", "b"), (8, None, False, "s", "b")]),
    ("range-em-dash-spaced", H5 + "| 7 \u2014 7 | a | s | a | b |\n", NT, [(7, None, False, "s", "b")]),
    ("escaped-pipe", H5 + "| 1 | a \\| b | s | x | `c \\| d` |\n", NT, [(1, None, False, "s", "c | d")]),
    ("br-multiline", H5 + "| 1 | a | s | x | import a<br>b = a.c |\n", NT, [(1, None, False, "s", "import a\nb = a.c")]),
    ("header-case-insensitive", "| line | CODE | scenario id | Scenario | artifact | refactoring |\n|:--|--|--|--|--|--:|\n"
     "| 9 | z | QSK-046-002 | s | a | r |\n", WT, [(9, "QSK-046-002", False, "s", "r")]),
    ("first-matching-table-wins", "| A | B |\n|---|---|\n| 1 | 2 |\n\n" + H5 + "| 2 | a | s | x | y |\n\n" + H5 + "| 3 | a | s | x | y |\n",
     NT, [(2, None, False, "s", "y")]),
    ("header-only", H6, WT, []),
    ("backticked-line-number", H5 + "| `12` | a | s | x | y |\n", NT, [(12, None, False, "s", "y")]),
    ("no-outer-pipes", "Line | Code | Scenario | Artifact | Refactoring\n---|---|---|---|---\n5 | a | s | x | y\n",
     NT, [(5, None, False, "s", "y")]),
    ("crlf", (H5 + "| 6 | a | s | x | y |\n").replace("\n", "\r\n"), NT, [(6, None, False, "s", "y")]),
    ("table-in-code-fence-ignored", "```\n" + H5 + "| 1 | a | s | x | y |\n```\n" + H5 + "| 2 | a | s | x | y |\n",
     NT, [(2, None, False, "s", "y")]),
    ("empty-refactoring", H6 + "| 2 | import x | QSK-046-010 | s | x |  |\n", WT, [(2, "QSK-046-010", False, "s", "")]),
    ("multiple-rows", H6 + "| 1 | a | QSK-046-001 | s | a | b |\n| 2 | c | * | t | c | d |\n",
     WT, [(1, "QSK-046-001", False, "s", "b"), (2, "*", False, "t", "d")]),
]

MALFORMED = [
    ("prose-only", "The code is already compatible with Qiskit 0.46.", WT, NoTableFound),
    ("empty", "", NT, NoTableFound),
    ("five-cols-in-six-mode", H5 + "| 1 | a | s | x | y |\n", WT, HeaderMismatch),
    ("six-cols-in-five-mode", H6 + "| 1 | a | * | s | x | y |\n", NT, HeaderMismatch),
    ("reordered-header", "| Line | Code | Artifact | Scenario | Refactoring |\n|---|---|---|---|---|\n", NT, HeaderMismatch),
    ("short-row", H6 + "| 1 | a | * | s | x |\n", WT, RowArity),
    ("long-row", H5 + "| 1 | a | s | x | y | z |\n", NT, RowArity),
    ("word-line", H5 + "| line one | a | s | x | y |\n", NT, BadLineNumber),
    ("zero-line", H5 + "| 0 | a | s | x | y |\n", NT, BadLineNumber),
    ("backwards-range", H5 + "| 5-3 | a | s | x | y |\n", NT, BadLineNumber),
    ("huge-range", H5 + "| 1-100000 | a | s | x | y |\n", NT, BadLineNumber),
    ("negative-line", H5 + "| -2 | a | s | x | y |\n", NT, BadLineNumber),
]


@pytest.mark.parametrize("name,raw,mode,expected", WELL_FORMED, ids=[c[0] for c in WELL_FORMED])
def test_well_formed(name, raw, mode, expected):
    assert _summary(parse_findings(raw, mode)) == Counter(expected)


@pytest.mark.parametrize("name,raw,mode,error", MALFORMED, ids=[c[0] for c in MALFORMED])
def test_malformed(name, raw, mode, error):
    with pytest.raises(error):
        parse_findings(raw, mode)


def test_corpus_size():
    assert len(WELL_FORMED) + len(MALFORMED) >= 20


def test_error_details():
    with pytest.raises(RowArity) as exc:
        parse_findings(H6 + "| 1 | a | * | s | x | y |\n| 2 | a |\n", WT)
    assert (exc.value.row_index, exc.value.expected, exc.value.found) == (2, 6, 2)
    with pytest.raises(BadLineNumber) as exc:
        parse_findings(H5 + "| ten | a | s | x | y |\n", NT)
    assert exc.value.cell_text == "ten"
    with pytest.raises(HeaderMismatch) as exc:
        parse_findings(H5, WT)
    assert exc.value.found == ("Line", "Code", "Scenario", "Artifact", "Refactoring")


def test_code_text_kept():
    (f,) = parse_findings(H6 + "| 2 | `execute(qc, backend)` | QSK-046-001 | s | execute | r |\n", WT)
    assert f.code_text == "execute(qc, backend)"
    assert f.artifact == "execute"


# --- properties -----------------------------------------------------------

_cell = st.text(alphabet=st.characters(blacklist_categories=("Cs", "Cc"), blacklist_characters="|\\`\n\r<>*"), max_size=15).map(str.strip)
_row = st.tuples(st.integers(1, 500), _cell, _cell, _cell, _cell)
_prose = st.text(alphabet=st.characters(blacklist_categories=("Cs",), blacklist_characters="|`\r"), max_size=80)


def _render(rows):
    return H5 + "".join(f"| {n} | {a} | {b} | {c} | {d} |\n" for n, a, b, c, d in rows)


@settings(max_examples=200, deadline=None)
@given(st.lists(_row, max_size=8), _prose, _prose)
def test_prose_tolerance_and_row_conservation(rows, before, after):
    table = _render(rows)
    plain = parse_findings(table, NT)
    wrapped = parse_findings(before + "\n\n" + table + "\n" + after, NT)
    assert plain == wrapped
    assert len(plain) == len(rows)
    assert all(f.scenario_ref == UNREFERENCED for f in plain)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 99), st.sampled_from(["QSK-046-001", "*", "", "QSK-9*"])), max_size=6))
def test_mode_discipline(rows):
    raw = H6 + "".join(f"| {n} | c | {sid} | s | a | r |\n" for n, sid in rows)
    kinds = {f.scenario_ref.kind for f in parse_findings(raw, WT)}
    assert RefKind.UNREFERENCED not in kinds


def test_fuzz_ten_thousand():
    rng = random.Random(20240213)
    atoms = ["|", "\\|", "---", "|---|", "\n", " ", "`", "```", "<br>", "-", "–", "*", "(optional)",
             "Line", "Code", "Scenario ID", "Scenario", "Artifact", "Refactoring", "0", "7", "99999999999",
             "١٢", "x", "→", "\\", "\\n", "\r\n", ":--", "QSK-046-001"]
    header_atoms = [H5, H6]
    outcomes = Counter()
    for i in range(10_000):
        parts = [rng.choice(atoms) for _ in range(rng.randint(0, 40))]
        if i % 3 == 0:
            parts.insert(0, rng.choice(header_atoms))
        if i % 7 == 0:
            parts = [chr(rng.randint(0, 0x2FFF)) for _ in range(rng.randint(0, 60))]
        raw = "".join(parts)
        for mode in (WT, NT):
            try:
                findings = parse_findings(raw, mode)
            except ParseError as exc:
                outcomes[type(exc).__name__] += 1
            else:
                assert all(isinstance(f, MigrationFinding) and f.line_no >= 1 for f in findings)
                outcomes["ok"] += 1
    assert sum(outcomes.values()) == 20_000
    assert outcomes["ok"] > 0 and outcomes["NoTableFound"] > 0


# --- refs and resolution --------------------------------------------------

def test_scenario_ref_cells():
    assert ScenarioRef.from_cell("QSK-046-001") == ScenarioRef.matched("QSK-046-001")
    assert ScenarioRef.from_cell("*") == NO_MATCH_REF
    assert ScenarioRef.from_cell(None) == UNREFERENCED
    with pytest.raises(ValueError):
        ScenarioRef.matched("*")


def test_finding_dict_round_trip():
    f = MigrationFinding(3, "c", ScenarioRef.matched("QSK-046-001"), "s", True, "a", "r")
    assert MigrationFinding.from_dict(f.to_dict()) == f
    with pytest.raises(ValueError):
        MigrationFinding(0, "c", NO_MATCH_REF, "s", False, "a")


def test_resolve_findings(taxonomy):
    ok = MigrationFinding(1, "c", ScenarioRef.matched("QSK-046-001"), "s", False, "a")
    bad = MigrationFinding(2, "c", ScenarioRef.matched("QSK-046-999"), "s", False, "a")
    gap = MigrationFinding(3, "c", NO_MATCH_REF, "s", False, "a")
    assert resolve_findings([ok], taxonomy) == []
    (d,) = resolve_findings([bad], taxonomy)
    assert (d.code, d.severity, d.scenario_id) == ("UnknownScenarioId", "error", "QSK-046-999")
    (d,) = resolve_findings([gap], taxonomy)
    assert (d.code, d.severity) == ("TaxonomyGapCandidate", "info")
