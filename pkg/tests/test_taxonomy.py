import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmigrate.tables import format_row, separator_row
from qmigrate.taxonomy import (
    HEADER,
    BadMigrationFlow,
    DuplicateId,
    EmptyRequiredCell,
    MigrationFlow,
    MigrationScenario,
    MissingColumn,
    ScenarioCategory,
    Taxonomy,
    UnknownCategory,
    census_line,
    compare_versions,
    parse_taxonomy,
    parse_version,
    scenario_by_id,
    scenario_id_for,
    serialize_taxonomy,
    validate_taxonomy,
)


def _scenario(sid="QSK-046-001", **kw):
    base = dict(
        id=sid,
        category=ScenarioCategory.DEPRECATION,
        flow=MigrationFlow("0.45", "0.46"),
        summary="execute() deprecated",
        artifacts=("execute",),
        example_source="execute(qc, backend)",
        example_target="backend.run(qc)",
        references=("https://example.org/notes",),
    )
    base.update(kw)
    return MigrationScenario(**base)


def _table(rows, header=HEADER):
    lines = [format_row(list(header)), separator_row(len(header))]
    lines += [format_row(r) for r in rows]
    return "\n".join(lines) + "\n"


ROW = ["QSK-046-001", "Deprecation", "0.45 -> 0.46", "execute() deprecated", "execute", "`execute(qc)`",
       "`backend.run(qc)`", "Low", "SE", "https://example.org"]


# --- reference taxonomy ---------------------------------------------------

def test_reference_census(taxonomy):
    counts = taxonomy.category_counts()
    assert len(taxonomy) == 43
    assert counts[ScenarioCategory.DEPRECATION] == 29
    assert counts[ScenarioCategory.NEW_FEATURE] == 6
    assert counts[ScenarioCategory.STRUCTURAL_CHANGE] == 8
    assert census_line(taxonomy) == "scenarios: 43 (deprecation 29, new-feature 6, structural 8)"


def test_reference_validates_clean(taxonomy):
    diags = validate_taxonomy(taxonomy)
    assert [d for d in diags if d.severity != "info"] == []
    assert [d.message for d in diags if d.code == "CategoryCounts"] == [census_line(taxonomy)]


def test_reference_round_trip_and_byte_stable(taxonomy):
    text = serialize_taxonomy(taxonomy)
    assert parse_taxonomy(text) == taxonomy
    assert serialize_taxonomy(parse_taxonomy(text)) == text
    assert serialize_taxonomy(taxonomy) == text


def test_reference_ids_follow_scheme(taxonomy):
    assert taxonomy.ids() == [scenario_id_for("0.46", i) for i in range(1, 44)]
    assert taxonomy.target_version == "0.46"


# --- parse ----------------------------------------------------------------

def test_parse_single_row():
    t = parse_taxonomy(_table([ROW]), "0.46")
    (s,) = t.scenarios
    assert s.id == "QSK-046-001"
    assert s.category is ScenarioCategory.DEPRECATION
    assert str(s.flow) == "0.45 -> 0.46"
    assert s.example_source == "execute(qc)"
    assert s.references == ("https://example.org",)


def test_header_only_is_empty():
    t = parse_taxonomy(_table([]), "0.46")
    assert t.scenarios == ()


@pytest.mark.parametrize("cat", ["Removal", "Bugfix", "deprecated", ""])
def test_unknown_category(cat):
    row = list(ROW)
    row[1] = cat
    with pytest.raises((UnknownCategory, EmptyRequiredCell)):
        parse_taxonomy(_table([row]), "0.46")
    if cat:
        with pytest.raises(UnknownCategory):
            parse_taxonomy(_table([row]), "0.46")


@pytest.mark.parametrize("text", ["Deprecation", "new feature", "NEW_FEATURE", "structural-change", "Structural Change"])
def test_category_spellings(text):
    assert ScenarioCategory.parse(text) in set(ScenarioCategory)


def test_missing_column():
    header = [h for h in HEADER if h != "Artifacts"]
    row = [c for h, c in zip(HEADER, ROW) if h != "Artifacts"]
    with pytest.raises(MissingColumn) as exc:
        parse_taxonomy(_table([row], header), "0.46")
    assert exc.value.name == "Artifacts"


def test_duplicate_id():
    with pytest.raises(DuplicateId):
        parse_taxonomy(_table([ROW, ROW]), "0.46")


def test_empty_required_cell():
    row = list(ROW)
    row[3] = " "
    with pytest.raises(EmptyRequiredCell) as exc:
        parse_taxonomy(_table([row]), "0.46")
    assert (exc.value.row, exc.value.column) == (1, "Summary")


def test_bad_flow():
    row = list(ROW)
    row[2] = "0.45 to 0.46"
    with pytest.raises(BadMigrationFlow):
        parse_taxonomy(_table([row]), "0.46")


def test_ids_assigned_when_column_absent():
    header = HEADER[1:]
    rows = [ROW[1:], ROW[1:]]
    t = parse_taxonomy(_table(rows, header), "0.46")
    assert t.ids() == ["QSK-046-001", "QSK-046-002"]


def test_target_version_inferred_from_flows():
    row2 = list(ROW)
    row2[0], row2[2] = "QSK-x", "0.44 -> 0.45"
    assert parse_taxonomy(_table([row2, ROW])).target_version == "0.46"


def test_arrow_flow_and_multiline_cells():
    row = list(ROW)
    row[2] = "0.45 → 0.46"
    row[5] = "`from qiskit import execute\\nexecute(qc)`"
    s = parse_taxonomy(_table([row]), "0.46").scenarios[0]
    assert s.flow == MigrationFlow("0.45", "0.46")
    assert s.example_source == "from qiskit import execute\nexecute(qc)"


def test_parse_deterministic(taxonomy):
    text = serialize_taxonomy(taxonomy)
    assert parse_taxonomy(text) == parse_taxonomy(text)


# --- serialize ------------------------------------------------------------

def test_empty_taxonomy_serializes_to_header_and_separator():
    text = serialize_taxonomy(Taxonomy("0.46"))
    lines = text.splitlines()
    # a leading comment carries the target version; the table itself is two lines
    assert lines[0] == "<!-- target_version: 0.46 -->"
    assert lines[1:] == [format_row(list(HEADER)), separator_row(len(HEADER))]
    assert parse_taxonomy(text) == Taxonomy("0.46")


def test_delimiter_in_summary_round_trips():
    t = Taxonomy("0.46", (_scenario(summary="a | b and `x|y`"),))
    text = serialize_taxonomy(t)
    assert "a \\| b" in text
    assert parse_taxonomy(text) == t


# --- round-trip property --------------------------------------------------

_plain = st.text(
    alphabet=st.characters(blacklist_categories=("Cs", "Cc", "Zl", "Zp"), blacklist_characters="\n\r"),
    min_size=1,
    max_size=30,
).map(str.strip).filter(bool)
_code = st.text(alphabet=st.characters(blacklist_categories=("Cs",)), min_size=1, max_size=60).filter(
    lambda s: s.strip() and s == s.strip()
)
_artifact = _plain.filter(lambda s: "," not in s and not s.startswith("`") and not s.endswith("`"))
_url = st.from_regex(r"https://[a-z]{1,8}\.org/[a-z0-9/]{0,12}", fullmatch=True)
_version = st.tuples(st.integers(0, 3), st.integers(0, 60))


@st.composite
def taxonomies(draw):
    n = draw(st.integers(0, 5))
    scenarios = []
    for i in range(1, n + 1):
        a, b = sorted(draw(st.tuples(_version, _version).filter(lambda p: p[0] != p[1])))
        scenarios.append(
            MigrationScenario(
                id=scenario_id_for("9.99", i),
                category=draw(st.sampled_from(list(ScenarioCategory))),
                flow=MigrationFlow(f"{a[0]}.{a[1]}", f"{b[0]}.{b[1]}"),
                summary=draw(_plain),
                artifacts=tuple(draw(st.lists(_artifact, min_size=1, max_size=3))),
                example_source=draw(_code),
                example_target=draw(_code),
                difficulty=draw(st.none() | _plain),
                impact=draw(st.none() | _plain),
                references=tuple(draw(st.lists(_url, max_size=2))),
            )
        )
    return Taxonomy("9.99", tuple(scenarios))


@settings(max_examples=200, deadline=None)
@given(taxonomies())
def test_round_trip_property(t):
    assert parse_taxonomy(serialize_taxonomy(t)) == t


@given(taxonomies())
def test_category_partition(t):
    assert sum(t.category_counts().values()) == len(t)


# --- validate -------------------------------------------------------------

def _codes(t):
    return [d.code for d in validate_taxonomy(t) if d.severity != "info"]


def test_duplicate_id_diagnostic():
    t = Taxonomy("0.46", (_scenario(), _scenario(summary="other")))
    assert _codes(t) == ["DuplicateId"]


def test_version_order_diagnostic():
    t = Taxonomy("0.46", (_scenario(flow=MigrationFlow("0.46", "0.45")),))
    assert _codes(t) == ["VersionOrder"]


def test_flow_beyond_target():
    t = Taxonomy("0.46", (_scenario(flow=MigrationFlow("0.46", "1.0")),))
    assert _codes(t) == ["FlowBeyondTarget"]


def test_empty_artifacts_and_examples():
    t = Taxonomy("0.46", (_scenario(artifacts=(), example_target=" "),))
    assert sorted(_codes(t)) == ["EmptyArtifacts", "EmptyExample"]


def test_bad_reference_is_warning():
    t = Taxonomy("0.46", (_scenario(references=("not a url",)),))
    diags = [d for d in validate_taxonomy(t) if d.code == "BadReference"]
    assert len(diags) == 1 and not diags[0].is_error


def test_bad_target_version():
    assert "BadVersion" in _codes(dataclasses.replace(Taxonomy("0.46"), target_version="v0.46"))


# --- lookup and versions --------------------------------------------------

def test_scenario_by_id(taxonomy):
    assert scenario_by_id(taxonomy, "QSK-046-001").id == "QSK-046-001"
    assert scenario_by_id(taxonomy, "QSK-046-999") is None
    assert scenario_by_id(taxonomy, "*") is None


def test_versions():
    assert parse_version("0.46") == (0, 46)
    assert compare_versions("0.5", "0.46") < 0
    assert compare_versions("1.0", "1") == 0
    with pytest.raises(ValueError):
        parse_version("0.46a")
    assert scenario_id_for("0.46", 17) == "QSK-046-017"
