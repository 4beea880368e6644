"""
From snippet to findings
========================

Builds the prompt for a single snippet, feeds a hand-written answer through
the parser, and grades each finding against the ground truth.
"""

from qmigrate.corpus import load_corpus
from qmigrate.evaluation import grade_findings
from qmigrate.modes import PromptMode
from qmigrate.pipeline import reference_corpus_path, reference_taxonomy_path
from qmigrate.prompting import build_prompt
from qmigrate.response_parser import parse_findings, resolve_findings
from qmigrate.taxonomy import parse_taxonomy

taxonomy = parse_taxonomy(reference_taxonomy_path().read_text(encoding="utf-8"))
pairs = dict((s.id, (s, t)) for s, t in load_corpus(reference_corpus_path(), taxonomy))
snippet, truth = pairs["s01"]

bundle = build_prompt(snippet, taxonomy, "0.46", PromptMode.WITH_TAXONOMY)
print(bundle.system_text)
# the user message is long because it carries the whole taxonomy; show its tail
print("...", bundle.user_text[-700:])

# what a model might send back: prose, a table, a range row and an unmatched line
answer = """Here is what needs to change for 0.46.

| Line | Code | Scenario ID | Scenario | Artifact | Refactoring |
|---|---|---|---|---|---|
| 3 | `from qiskit import execute` | QSK-046-001 | Deprecation → execute() deprecated | execute | from qiskit import transpile |
| 10 | `backend = BasicAer.get_backend("qasm_simulator")` | QSK-046-002 | Deprecation → BasicAer deprecated | BasicAer | sim = BasicProvider().get_backend("basic_simulator") |
| 11 | `job = execute(qc, backend, shots=2048)` | QSK-046-001 | Deprecation → execute() deprecated | execute | job = execute(qc, backend) |
| 12–13 | `counts = job.result().get_counts()` | * | Structural change → result access | Result | unchanged |
"""
findings = parse_findings(answer, PromptMode.WITH_TAXONOMY)
for d in resolve_findings(findings, taxonomy):
    print(d)

for g in grade_findings(findings, truth):
    print(g.finding.line_no, g.grade.symbol, g.grade_source.value)
