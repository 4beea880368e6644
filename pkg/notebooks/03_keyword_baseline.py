"""
A keyword baseline
==================

Scans the corpus for taxonomy artifact names without any model, to show how
far plain lexical matching gets and where it over-reports.
"""

from collections import Counter

from qmigrate.baseline import hits_to_findings, scan_snippet
from qmigrate.corpus import load_corpus
from qmigrate.evaluation import build_report, grade_findings, render_report
from qmigrate.modes import PromptMode
from qmigrate.pipeline import reference_corpus_path, reference_taxonomy_path
from qmigrate.taxonomy import parse_taxonomy

taxonomy = parse_taxonomy(reference_taxonomy_path().read_text(encoding="utf-8"))
pairs = load_corpus(reference_corpus_path(), taxonomy)

results, kinds = [], Counter()
for snippet, truth in pairs:
    hits = scan_snippet(snippet, taxonomy)
    kinds.update(h.hit_kind.value for h in hits)
    findings = hits_to_findings(hits, taxonomy, snippet)
    results.append((truth, grade_findings(findings, truth)))

print("hits by kind:", dict(kinds))
# the scanner proposes each scenario's generic example, so most hits grade X+ or X
print(render_report(build_report(results, PromptMode.WITH_TAXONOMY, label="baseline")))
