"""
Replaying the two-mode experiment
=================================

Runs every shipped snippet through the recorded model answers, once with the
taxonomy in the prompt and once without, then scores both runs side by side.
Nothing here touches the network.
"""

import tempfile
from pathlib import Path

from qmigrate.corpus import load_corpus
from qmigrate.evaluation import render_report
from qmigrate.llm_client import ReplayProvider
from qmigrate.modes import PromptMode
from qmigrate.pipeline import (
    RunSettings,
    reference_cassette_path,
    reference_corpus_path,
    reference_taxonomy_path,
    run_corpus,
    score_label,
)
from qmigrate.taxonomy import parse_taxonomy

# load the 0.46 taxonomy and the annotated corpus
taxonomy = parse_taxonomy(reference_taxonomy_path().read_text(encoding="utf-8"))
pairs = load_corpus(reference_corpus_path(), taxonomy)
print(len(taxonomy), "scenarios,", len(pairs), "snippets")

# one provider for both modes so we can count completions
provider = ReplayProvider(reference_cassette_path())
out = Path(tempfile.mkdtemp(prefix="qmigrate-"))
for mode in PromptMode:
    manifest = run_corpus(pairs, taxonomy, provider, RunSettings(mode=mode), out)
    print(mode.value, "failed:", manifest["failed"])
print("completions:", provider.calls)

# grade against the sidecars and print the side-by-side table
reports = [score_label(pairs, out, mode.value) for mode in PromptMode]
print(render_report(reports))
